#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fpcyc/aut_verify.hpp"
#include "fpcyc/bass_serre.hpp"
#include "support.hpp"

using namespace fpcyc;
using fpcyc::testing::all_words;
using fpcyc::testing::random_word;

namespace {

std::set<std::string> neighbour_labels(const TreeBall& ball, int v) {
  std::set<std::string> out;
  for (int w : ball.tree()->neighbors(v)) out.insert(ball.label(w));
  return out;
}

std::set<std::string> labels_at_depth(const TreeBall& ball, int d) {
  std::set<std::string> out;
  for (int v = 0; v < static_cast<int>(ball.size()); ++v) {
    if (ball.depth()[static_cast<std::size_t>(v)] == d) out.insert(ball.label(v));
  }
  return out;
}

// Oracle: edges from the coset definition, scanning group elements w and
// joining the cosets that contain w.
std::set<std::pair<std::string, std::string>> oracle_edges(const TreeBall& ball, int max_len) {
  std::set<std::pair<std::string, std::string>> out;
  auto add = [&](const CosetVertex& x, const CosetVertex& y) {
    auto ix = ball.find(canonical(x));
    auto iy = ball.find(canonical(y));
    if (!ix || !iy) return;
    std::string lx = ball.label(*ix), ly = ball.label(*iy);
    out.insert(std::minmax(lx, ly));
  };
  for (const Word& w : all_words(ball.signature(), max_len)) {
    if (ball.mode() == TreeMode::M2) {
      add({w, 0}, {w, 1});
    } else {
      for (int i = 0; i < 3; ++i) add({w, std::nullopt}, {w, i});
    }
  }
  return out;
}

std::set<std::pair<std::string, std::string>> ball_edges(const TreeBall& ball) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [u, v] : ball.tree()->edges()) out.insert(std::minmax(ball.label(u), ball.label(v)));
  return out;
}

int mod_inverse(int e, int n) {
  for (int x = 1; x < n; ++x) {
    if ((e * x) % n == 1) return x;
  }
  throw std::logic_error("not a unit");
}

ActionGenerator inverse_generator(const ActionGenerator& g, int n) {
  if (const auto* e = std::get_if<FactorAuto>(&g)) {
    FactorAuto inv = *e;
    for (int& x : inv.exponents) x = mod_inverse(x, n);
    return inv;
  }
  const auto& p = std::get<Permutation>(g);
  Permutation inv = p;
  for (std::size_t i = 0; i < p.images.size(); ++i) inv.images[static_cast<std::size_t>(p.images[i])] = static_cast<int>(i);
  return inv;
}

Word automorphic_image(TreeMode mode, const ActionGenerator& h, const Word& w) {
  if (mode == TreeMode::M2) {
    Generator g = std::holds_alternative<FactorAuto>(h) ? Generator{std::get<FactorAuto>(h)}
                                                        : Generator{std::get<Permutation>(h)};
    return Automorphism::from_generator(w.signature(), g).apply(w);
  }
  OuterGenerator g = std::holds_alternative<FactorAuto>(h) ? OuterGenerator{std::get<FactorAuto>(h)}
                                                           : OuterGenerator{std::get<Permutation>(h)};
  return outer_conjugation_action(g, w);
}

std::vector<ActionGenerator> automorphic_generators(const Signature& sig) {
  std::vector<ActionGenerator> out;
  for (const auto& e : all_factor_automorphisms(sig)) out.emplace_back(e);
  for (const auto& p : admissible_permutations(sig)) out.emplace_back(p);
  return out;
}

}  // namespace

TEST_CASE("m2 ball around A") {
  TreeBall b1 = build_ball_m2(3, 1);
  CHECK(b1.label(0) == "A");
  CHECK(neighbour_labels(b1, 0) == std::set<std::string>{"B", "aB", "a^2B"});

  TreeBall b2 = build_ball_m2(3, 2);
  CHECK(b2.size() == 10);
  CHECK(labels_at_depth(b2, 2) ==
        std::set<std::string>{"bA", "b^2A", "abA", "ab^2A", "a^2bA", "a^2b^2A"});
  CHECK(build_ball_m2(2, 0).size() == 1);
  CHECK(build_ball_m2(2, 0).boundary(0));

  TreeBall b4 = build_ball_m2(3, 4);
  CHECK(degree_violations(b4).empty());
  // 1 + 3 + 6 + 12 + 24
  CHECK(b4.size() == 46);
  CHECK(ball_edges(b4) == oracle_edges(b4, 5));
}

TEST_CASE("m3 outer ball around 1") {
  TreeBall b1 = build_ball_m3_outer(2, 1);
  CHECK(b1.label(0) == "1");
  CHECK(neighbour_labels(b1, 0) == std::set<std::string>{"A1", "A2", "A3"});
  TreeBall b2 = build_ball_m3_outer(2, 2);
  CHECK(labels_at_depth(b2, 2) == std::set<std::string>{"y1", "y2", "y3"});
  CHECK(build_ball_m3_outer(3, 0).size() == 1);
  for (int n = 2; n <= 4; ++n) {
    TreeBall b = build_ball_m3_outer(n, 4);
    CHECK(degree_violations(b).empty());
    CHECK(ball_edges(b) == oracle_edges(b, 3));
  }
}

TEST_CASE("extended action examples") {
  TreeBall b = build_ball_m2(3, 2);
  const Signature& sig = b.signature();
  int vb = *b.find(CosetVertex{Word(sig), 1});
  int va = *b.find(CosetVertex{Word(sig), 0});
  auto img = b.image(LeftMultiply{Word::generator(sig, 0)}, vb);
  REQUIRE(img);
  CHECK(b.label(*img) == "aB");
  img = b.image(Permutation{{1, 0}}, va);
  REQUIRE(img);
  CHECK(b.label(*img) == "B");

  TreeBall m3 = build_ball_m3_outer(2, 2);
  const Signature& osig = m3.signature();
  int a1 = *m3.find(CosetVertex{Word(osig), 0});
  img = m3.image(Permutation{{1, 0, 2}}, a1);
  REQUIRE(img);
  CHECK(m3.label(*img) == "A3");
  int y1 = *m3.find(CosetVertex{Word::generator(osig, 0), std::nullopt});
  img = m3.image(Permutation{{1, 0, 2}}, y1);
  REQUIRE(img);
  CHECK(m3.label(*img) == "y3");

  CHECK_THROWS_AS(b.image(Permutation{{1, 0, 2}}, va), std::invalid_argument);
  CHECK_THROWS_AS(b.image(LeftMultiply{Word::generator(osig, 0)}, va), SignatureMismatch);
}

TEST_CASE("edges are preserved and M3 is type-preserving") {
  for (TreeMode mode : {TreeMode::M2, TreeMode::M3}) {
    for (int n = 2; n <= 4; ++n) {
      TreeBall ball = build_ball(mode, n, 3);
      std::vector<ActionGenerator> gens = automorphic_generators(ball.signature());
      for (int f = 0; f < ball.signature().rank(); ++f) {
        gens.emplace_back(LeftMultiply{Word::generator(ball.signature(), f)});
      }
      for (const auto& g : gens) {
        PartialMap m = extend_action(ball, g);
        REQUIRE(m.broken_edges.empty());
        REQUIRE(m.injective);
        REQUIRE(m.type_preserving);
        if (mode == TreeMode::M3) REQUIRE(m.inversions.empty());
        // the base vertex is moved only by left multiplication
        if (!std::holds_alternative<LeftMultiply>(g)) {
          if (mode == TreeMode::M3) REQUIRE(m.image[0] == 0);
        }
      }
    }
  }
}

TEST_CASE("no global fixed point") {
  TreeBall b = build_ball_m2(3, 2);
  const Signature& sig = b.signature();
  ActionGenerator a = LeftMultiply{Word::generator(sig, 0)};
  ActionGenerator bb = LeftMultiply{Word::generator(sig, 1)};
  auto r = verify_no_global_fixed_point(b, {a, bb});
  CHECK(r.no_global_fixed_point());

  TreeBall b4 = build_ball_m2(3, 4);
  r = verify_no_global_fixed_point(b4, {a});
  REQUIRE(r.fixed_by[0].size() == 1);
  CHECK(b4.label(r.fixed_by[0][0]) == "A");
  CHECK(verify_no_global_fixed_point(b4, {a, bb}).no_global_fixed_point());

  TreeBall m3 = build_ball_m3_outer(2, 2);
  std::vector<ActionGenerator> letters;
  for (int i = 0; i < 3; ++i) letters.emplace_back(LeftMultiply{Word::generator(m3.signature(), i)});
  auto r3 = verify_no_global_fixed_point(m3, letters);
  CHECK(r3.no_global_fixed_point());
  // y1 fixes exactly A1 in the ball
  REQUIRE(r3.fixed_by[0].size() == 1);
  CHECK(m3.label(r3.fixed_by[0][0]) == "A1");
}

TEST_CASE("barycentric subdivision") {
  TreeBall b = build_ball_m2(3, 2);
  TreeBall sd = barycentric_subdivide(b);
  CHECK(sd.size() == b.size() + b.tree()->edges().size());
  CHECK(sd.tree()->edges().size() == 2 * b.tree()->edges().size());
  CHECK(degree_violations(sd).empty());
  ActionGenerator sigma = Permutation{{1, 0}};
  PartialMap before = extend_action(b, sigma);
  CHECK(before.inversions.size() == 1);
  PartialMap after = extend_action(sd, sigma);
  CHECK(after.inversions.empty());
  CHECK(after.broken_edges.empty());
  const Signature& sig = b.signature();
  BallVertex mid{CosetVertex{Word(sig), 0}, CosetVertex{Word(sig), 1}};
  int vm = *sd.find(mid);
  CHECK(sd.label(vm) == "{A,B}");
  CHECK(after.image[static_cast<std::size_t>(vm)] == vm);
  CHECK_THROWS_AS(barycentric_subdivide(sd), std::invalid_argument);

  ActionGenerator a = LeftMultiply{Word::generator(sig, 0)};
  CHECK(extend_action(b, a).inversions.empty());
  CHECK(extend_action(sd, a).inversions.empty());
}

TEST_CASE("extended action is well defined and compatible, fuzzed") {
  std::mt19937_64 rng(61);
  for (TreeMode mode : {TreeMode::M2, TreeMode::M3}) {
    for (int n = 2; n <= 5; ++n) {
      Signature sig = tree_signature(mode, n);
      auto autos = automorphic_generators(sig);
      for (int trial = 0; trial < 150; ++trial) {
        int rank = sig.rank();
        std::optional<int> sub;
        if (mode == TreeMode::M2 || rng() % 4 != 0) sub = static_cast<int>(rng() % static_cast<unsigned>(rank));
        Word x = random_word(rng, sig, 6);
        Word u = sub ? Word::generator(sig, *sub, static_cast<int>(rng() % static_cast<unsigned>(n))) : Word(sig);
        const ActionGenerator& h = autos[rng() % autos.size()];
        // independent of the coset representative
        REQUIRE(act(mode, h, {x * u, sub}) == act(mode, h, {x, sub}));
        // h(n)^-1 h n h^-1 acts trivially
        Word nn = random_word(rng, sig, 4);
        CosetVertex v = canonical({x, sub});
        CosetVertex w = act(mode, inverse_generator(h, n), v);
        w = act(mode, LeftMultiply{nn}, w);
        w = act(mode, h, w);
        w = act(mode, LeftMultiply{invert(automorphic_image(mode, h, nn))}, w);
        REQUIRE(w == v);
      }
    }
  }
}

TEST_CASE("action table and generator text") {
  TreeBall b = build_ball_m2(3, 1);
  auto lines = action_table(b, parse_action_generator(TreeMode::M2, 3, "a"));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "GEN a MAPS A -> A");
  CHECK(std::count(lines.begin(), lines.end(), "GEN a MAPS B -> aB") == 1);
  CHECK(std::count(lines.begin(), lines.end(), "GEN a MAPS a^2B -> B") == 1);
  auto sigma_lines = action_table(b, parse_action_generator(TreeMode::M2, 3, "perm:(1 2)"));
  CHECK(std::count(sigma_lines.begin(), sigma_lines.end(), "GEN perm:(1 2) MAPS A -> B") == 1);
  CHECK(std::count(sigma_lines.begin(), sigma_lines.end(), "GEN perm:(1 2) MAPS aB -> *") == 1);

  Signature s3 = tree_signature(TreeMode::M2, 3);
  auto g = parse_action_generator(TreeMode::M2, 3, "a^2b^-1");
  CHECK(std::get<LeftMultiply>(g).by == parse_word(s3, "x1^2*x2^2"));
  CHECK(to_string(g, TreeMode::M2) == "a^2b^2");
  CHECK(to_string(parse_action_generator(TreeMode::M3, 3, "y2y1^2"), TreeMode::M3) == "y2y1^2");
  CHECK(std::holds_alternative<FactorAuto>(parse_action_generator(TreeMode::M3, 3, "factor:1,2,1")));
  CHECK_THROWS_AS(parse_action_generator(TreeMode::M2, 3, "ac"), ParseError);
  CHECK_THROWS_AS(parse_action_generator(TreeMode::M3, 3, "y4"), ParseError);
}

TEST_CASE("amalgam m2") {
  for (int n = 2; n <= 4; ++n) {
    AmalgamReport r = amalgam_report_m2(n, 4);
    INFO(r.checks.to_lines());
    CHECK(r.all_passed());
    int phi = euler_phi(n);
    CHECK(r.vertex_group_1 == static_cast<std::size_t>(n * phi * phi));
    CHECK(r.vertex_group_2 == static_cast<std::size_t>(2 * phi * phi));
    CHECK(r.edge_group == static_cast<std::size_t>(phi * phi));
  }
  AmalgamReport r3 = amalgam_report_m2(3, 4);
  CHECK(r3.vertex_group_1 == 12);
  CHECK(r3.vertex_group_2 == 8);
  CHECK(r3.edge_group == 4);
  CHECK(amalgam_report_m2(2, 2).edge_group == 1);
}

TEST_CASE("amalgam m3") {
  AmalgamReport r2 = amalgam_report_m3(2, 4);
  INFO(r2.checks.to_lines());
  CHECK(r2.all_passed());
  CHECK(r2.vertex_group_1 == 6);
  CHECK(r2.vertex_group_2 == 4);
  CHECK(r2.edge_group == 2);
  AmalgamReport r3 = amalgam_report_m3(3, 4);
  CHECK(r3.all_passed());
  CHECK(r3.edge_group == 16);
  AmalgamReport r4 = amalgam_report_m3(4, 3);
  CHECK(r4.all_passed());
  CHECK(r4.vertex_group_2 == 64);
}
