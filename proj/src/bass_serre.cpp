#include "fpcyc/bass_serre.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "fpcyc/aut_verify.hpp"

namespace fpcyc {

namespace {

int subgroup_code(const CosetVertex& v) { return v.subgroup.value_or(-1); }

void require_mode_signature(TreeMode mode, const Word& w) {
  int rank = mode == TreeMode::M2 ? 2 : 3;
  if (w.signature().rank() != rank) throw SignatureMismatch();
  for (int i = 1; i < rank; ++i) {
    if (w.signature().order(i) != w.signature().order(0)) {
      throw SignatureMismatch();
    }
  }
}

/// Applies eps * pi (or one of them) to a coset.
CosetVertex act_automorphic(TreeMode mode, const std::variant<FactorAuto, Permutation>& g,
                            const CosetVertex& v) {
  const Signature& sig = v.rep.signature();
  CosetVertex out = v;
  if (mode == TreeMode::M2) {
    Generator gen = std::visit([](const auto& x) -> Generator { return x; }, g);
    Automorphism h = Automorphism::from_generator(sig, gen);
    out.rep = h.apply(v.rep);
    if (v.subgroup) {
      const auto* pi = std::get_if<Permutation>(&g);
      out.subgroup = pi ? pi->images.at(static_cast<std::size_t>(*v.subgroup)) : *v.subgroup;
    }
  } else {
    OuterGenerator og = std::visit([](const auto& x) -> OuterGenerator { return x; }, g);
    if (const auto* eps = std::get_if<FactorAuto>(&og)) {
      Automorphism::from_generator(sig, *eps);  // validates
    }
    Automorphism h = outer_action_automorphism(sig, og);
    out.rep = h.apply(v.rep);
    if (v.subgroup) {
      out.subgroup = h.images().at(static_cast<std::size_t>(*v.subgroup)).syllables().front().factor;
    }
  }
  return out;
}

BallVertex sorted(BallVertex v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<CosetVertex> neighbours(TreeMode mode, const CosetVertex& v) {
  const Signature& sig = v.rep.signature();
  int n = sig.order(0);
  std::vector<CosetVertex> out;
  if (mode == TreeMode::M2) {
    int i = *v.subgroup;
    for (int k = 0; k < n; ++k) {
      out.push_back(canonical({v.rep * Word::generator(sig, i, k), 1 - i}));
    }
  } else if (!v.subgroup) {
    for (int i = 0; i < 3; ++i) out.push_back(canonical({v.rep, i}));
  } else {
    for (int k = 0; k < n; ++k) {
      out.push_back(canonical({v.rep * Word::generator(sig, *v.subgroup, k), std::nullopt}));
    }
  }
  return out;
}

void short_words(const Signature& sig, int syllables, int last, Word prefix, std::vector<Word>& out) {
  out.push_back(prefix);
  if (syllables == 0) return;
  for (int f = 0; f < sig.rank(); ++f) {
    if (f == last) continue;
    for (int e = 1; e < sig.order(f); ++e) {
      short_words(sig, syllables - 1, f, prefix * Word::generator(sig, f, e), out);
    }
  }
}

struct Element {
  Word g;
  FactorAuto eps;
  Permutation pi;

  auto key() const { return std::tie(g, eps.exponents, pi.images); }
  bool operator<(const Element& o) const { return key() < o.key(); }
  bool operator==(const Element& o) const { return key() == o.key(); }
};

BallVertex act_element(TreeMode mode, const Element& e, const BallVertex& v) {
  BallVertex out;
  for (const auto& c : v) {
    CosetVertex x = act_automorphic(mode, e.pi, c);
    x = act_automorphic(mode, e.eps, x);
    x.rep = e.g * x.rep;
    out.push_back(canonical(std::move(x)));
  }
  return sorted(std::move(out));
}

bool fixes(const TreeBall& ball, const Element& e, int v) {
  return act_element(ball.mode(), e, ball.vertices()[static_cast<std::size_t>(v)]) ==
         ball.vertices()[static_cast<std::size_t>(v)];
}

std::vector<Element> candidates(const Signature& sig) {
  std::vector<Word> words;
  short_words(sig, 2, -1, Word(sig), words);
  std::vector<Element> out;
  for (const auto& g : words) {
    for (const auto& eps : all_factor_automorphisms(sig)) {
      for (const auto& pi : admissible_permutations(sig)) out.push_back({g, eps, pi});
    }
  }
  return out;
}

Automorphism realize(TreeMode mode, const Element& e) {
  const Signature& sig = e.g.signature();
  Automorphism phi = Automorphism::from_generator(sig, e.eps) * Automorphism::from_generator(sig, e.pi);
  return (mode == TreeMode::M2 ? inner(e.g) : realize_outer(sig, e.g)) * phi;
}

/// Number of distinct automorphisms (M2) or outer classes (M3) among the
/// realisations of a set of elements.
std::size_t distinct_realizations(TreeMode mode, const std::vector<Element>& elems) {
  std::vector<Automorphism> reps;
  for (const auto& e : elems) {
    Automorphism f = realize(mode, e);
    bool seen = std::any_of(reps.begin(), reps.end(), [&](const Automorphism& r) {
      return mode == TreeMode::M2 ? r == f : inner_conjugator(f * inverse(r)).has_value();
    });
    if (!seen) reps.push_back(std::move(f));
  }
  return reps.size();
}

std::set<Element> stabilizer(const TreeBall& ball, const std::vector<Element>& cands,
                             const std::vector<int>& vertices) {
  std::set<Element> out;
  for (const auto& e : cands) {
    if (std::all_of(vertices.begin(), vertices.end(), [&](int v) { return fixes(ball, e, v); })) {
      out.insert(e);
    }
  }
  return out;
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Breadth-first search over ball edges from `start`, applying generators on
/// the left, up to `max_length` steps.
std::size_t reachable_edges(const TreeBall& ball, const std::vector<ActionGenerator>& gens, Edge start,
                            int max_length) {
  std::set<Edge> seen{start};
  std::vector<Edge> frontier{start};
  std::vector<std::vector<std::optional<int>>> maps;
  for (const auto& g : gens) maps.push_back(extend_action(ball, g).image);
  for (int step = 0; step < max_length && !frontier.empty(); ++step) {
    std::vector<Edge> next;
    for (const auto& [u, v] : frontier) {
      for (const auto& m : maps) {
        auto iu = m[static_cast<std::size_t>(u)];
        auto iv = m[static_cast<std::size_t>(v)];
        if (!iu || !iv) continue;
        Edge e{std::min(*iu, *iv), std::max(*iu, *iv)};
        if (seen.insert(e).second) next.push_back(e);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

std::vector<ActionGenerator> standard_generators(const Signature& sig) {
  std::vector<ActionGenerator> gens;
  for (int f = 0; f < sig.rank(); ++f) {
    for (int e = 1; e < sig.order(f); ++e) gens.emplace_back(LeftMultiply{Word::generator(sig, f, e)});
  }
  for (const auto& eps : all_factor_automorphisms(sig)) gens.emplace_back(eps);
  for (const auto& pi : admissible_permutations(sig)) gens.emplace_back(pi);
  return gens;
}

void check_count(Report& r, const std::string& name, std::size_t got, std::size_t expected) {
  r.add(name + "=" + std::to_string(expected), got == expected,
        got == expected ? std::string{} : "found " + std::to_string(got));
}

std::string perm_text(const Permutation& p) { return to_string(Generator{p}).substr(5); }

}  // namespace

bool CosetVertex::operator<(const CosetVertex& other) const {
  if (subgroup_code(*this) != subgroup_code(other)) return subgroup_code(*this) < subgroup_code(other);
  return rep < other.rep;
}

CosetVertex canonical(CosetVertex v) {
  if (v.subgroup) {
    auto s = v.rep.syllables();
    if (!s.empty() && s.back().factor == *v.subgroup) {
      v.rep = Word(v.rep.signature(), s.first(s.size() - 1));
    }
  }
  return v;
}

std::string letters(const Word& w, TreeMode mode) {
  std::string out;
  for (const Syllable& s : w.syllables()) {
    out += mode == TreeMode::M2 ? std::string(1, static_cast<char>('a' + s.factor))
                                : "y" + std::to_string(s.factor + 1);
    if (s.exponent > 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

std::string label(const CosetVertex& v, TreeMode mode) {
  std::string rep = letters(v.rep, mode);
  if (!v.subgroup) return rep.empty() ? "1" : rep;
  if (mode == TreeMode::M2) return rep + static_cast<char>('A' + *v.subgroup);
  return rep + "A" + std::to_string(*v.subgroup + 1);
}

std::string to_string(const ActionGenerator& g, TreeMode mode) {
  if (const auto* l = std::get_if<LeftMultiply>(&g)) {
    std::string s = letters(l->by, mode);
    return s.empty() ? "1" : s;
  }
  if (const auto* e = std::get_if<FactorAuto>(&g)) return to_string(Generator{*e});
  return to_string(Generator{std::get<Permutation>(g)});
}

Signature tree_signature(TreeMode mode, int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  return Signature(std::vector<int>(mode == TreeMode::M2 ? 2 : 3, n));
}

ActionGenerator parse_action_generator(TreeMode mode, int n, const std::string& text) {
  Signature sig = tree_signature(mode, n);
  if (text.rfind("factor:", 0) == 0 || text.rfind("perm:", 0) == 0) {
    Automorphism f = parse_automorphism(sig, text);
    const auto& f_tag = f.tag();
    if (const auto* e = std::get_if<FactorAuto>(&f_tag)) return *e;
    if (const auto* p = std::get_if<Permutation>(&f_tag)) return *p;
    throw ParseError("not a single generator", 0);
  }
  Word w(sig);
  std::size_t i = 0;
  if (text == "1" || text == "e") return LeftMultiply{w};
  if (text.empty()) throw ParseError("empty generator", 0);
  while (i < text.size()) {
    std::size_t start = i;
    int factor = -1;
    if (mode == TreeMode::M2 && (text[i] == 'a' || text[i] == 'b')) {
      factor = text[i] - 'a';
      ++i;
    } else if (mode == TreeMode::M3 && text[i] == 'y' && i + 1 < text.size() && text[i + 1] >= '1' &&
               text[i + 1] <= '3') {
      factor = text[i + 1] - '1';
      i += 2;
    } else {
      throw ParseError(mode == TreeMode::M2 ? "expected a or b" : "expected y1, y2 or y3", start);
    }
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool negative = i < text.size() && text[i] == '-';
      if (negative) ++i;
      std::size_t digits = i;
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) && value < 1000000) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      if (i == digits) throw ParseError("expected exponent", i);
      exponent = negative ? -value : value;
    }
    w = w * power(Word::generator(sig, factor), exponent);
  }
  return LeftMultiply{w};
}

CosetVertex act(TreeMode mode, const ActionGenerator& g, const CosetVertex& v) {
  require_mode_signature(mode, v.rep);
  if (v.subgroup && (*v.subgroup < 0 || *v.subgroup >= v.rep.signature().rank())) {
    throw std::invalid_argument("subgroup index out of range");
  }
  if (mode == TreeMode::M2 && !v.subgroup) throw std::invalid_argument("M2 has no element vertices");
  if (const auto* l = std::get_if<LeftMultiply>(&g)) {
    if (!(l->by.signature() == v.rep.signature())) throw SignatureMismatch();
    return canonical({l->by * v.rep, v.subgroup});
  }
  if (const auto* e = std::get_if<FactorAuto>(&g)) return canonical(act_automorphic(mode, *e, v));
  return canonical(act_automorphic(mode, std::get<Permutation>(g), v));
}

std::optional<int> TreeBall::find(const BallVertex& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string TreeBall::label(int v) const {
  const BallVertex& b = vertices_.at(static_cast<std::size_t>(v));
  if (b.size() == 1) return fpcyc::label(b[0], mode_);
  return "{" + fpcyc::label(b[0], mode_) + "," + fpcyc::label(b[1], mode_) + "}";
}

std::optional<int> TreeBall::image(const ActionGenerator& g, int v) const {
  BallVertex out;
  for (const auto& c : vertices_.at(static_cast<std::size_t>(v))) out.push_back(act(mode_, g, c));
  return find(sorted(std::move(out)));
}

TreeBall build_ball(TreeMode mode, int n, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  TreeBall ball;
  ball.mode_ = mode;
  ball.n_ = n;
  ball.radius_ = radius;
  ball.sig_ = tree_signature(mode, n);
  CosetVertex base{Word(ball.sig_), mode == TreeMode::M2 ? std::optional<int>(0) : std::nullopt};

  std::vector<Edge> edges;
  ball.vertices_.push_back({base});
  ball.depth_.push_back(0);
  ball.index_[{base}] = 0;
  for (std::size_t head = 0; head < ball.vertices_.size(); ++head) {
    int d = ball.depth_[head];
    if (d == radius) continue;
    for (auto& nb : neighbours(mode, ball.vertices_[head][0])) {
      BallVertex key{nb};
      if (ball.index_.count(key)) continue;
      int id = static_cast<int>(ball.vertices_.size());
      ball.index_[key] = id;
      ball.vertices_.push_back(std::move(key));
      ball.depth_.push_back(d + 1);
      edges.emplace_back(static_cast<int>(head), id);
    }
  }
  for (int d : ball.depth_) ball.boundary_.push_back(d == radius);
  ball.tree_ = make_tree(static_cast<int>(ball.vertices_.size()), std::move(edges));
  return ball;
}

TreeBall build_ball_m2(int n, int radius) { return build_ball(TreeMode::M2, n, radius); }

TreeBall build_ball_m3_outer(int n, int radius) { return build_ball(TreeMode::M3, n, radius); }

TreeBall barycentric_subdivide(const TreeBall& ball) {
  if (ball.subdivided_) throw std::invalid_argument("ball is already subdivided");
  TreeBall sd = ball;
  sd.subdivided_ = true;
  for (int& d : sd.depth_) d *= 2;
  for (const auto& [u, v] : ball.tree_->edges()) {
    BallVertex mid = sorted({ball.vertices_[static_cast<std::size_t>(u)][0],
                             ball.vertices_[static_cast<std::size_t>(v)][0]});
    sd.index_[mid] = static_cast<int>(sd.vertices_.size());
    sd.vertices_.push_back(std::move(mid));
    sd.depth_.push_back(std::min(sd.depth_[static_cast<std::size_t>(u)], sd.depth_[static_cast<std::size_t>(v)]) + 1);
    sd.boundary_.push_back(false);
  }
  sd.tree_ = barycentric_subdivision(*ball.tree_);
  return sd;
}

std::vector<int> degree_violations(const TreeBall& ball) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(ball.size()); ++v) {
    if (ball.boundary(v)) continue;
    const BallVertex& b = ball.vertices()[static_cast<std::size_t>(v)];
    std::size_t expected = b.size() == 2                ? 2
                           : ball.mode() == TreeMode::M2 ? static_cast<std::size_t>(ball.n())
                           : b[0].subgroup             ? static_cast<std::size_t>(ball.n())
                                                       : 3;
    if (ball.tree()->neighbors(v).size() != expected) out.push_back(v);
  }
  return out;
}

PartialMap extend_action(const TreeBall& ball, const ActionGenerator& g) {
  PartialMap m{g, {}, {}, {}, true, true};
  for (int v = 0; v < static_cast<int>(ball.size()); ++v) m.image.push_back(ball.image(g, v));
  std::vector<int> hits(ball.size(), 0);
  for (int v = 0; v < static_cast<int>(ball.size()); ++v) {
    auto w = m.image[static_cast<std::size_t>(v)];
    if (!w) continue;
    if (++hits[static_cast<std::size_t>(*w)] > 1) m.injective = false;
    const auto& a = ball.vertices()[static_cast<std::size_t>(v)];
    const auto& b = ball.vertices()[static_cast<std::size_t>(*w)];
    if (a.size() != b.size() || a[0].subgroup.has_value() != b[0].subgroup.has_value()) {
      m.type_preserving = false;
    }
  }
  for (const auto& [u, v] : ball.tree()->edges()) {
    auto iu = m.image[static_cast<std::size_t>(u)];
    auto iv = m.image[static_cast<std::size_t>(v)];
    if (!iu || !iv) continue;
    if (!ball.tree()->has_edge(*iu, *iv)) m.broken_edges.emplace_back(u, v);
    if (*iu == v && *iv == u) m.inversions.emplace_back(u, v);
  }
  return m;
}

FixedPointReport verify_no_global_fixed_point(const TreeBall& ball,
                                              const std::vector<ActionGenerator>& generators) {
  FixedPointReport r;
  std::vector<int> count(ball.size(), 0);
  for (const auto& g : generators) {
    PartialMap m = extend_action(ball, g);
    std::vector<int> fixed;
    for (int v = 0; v < static_cast<int>(ball.size()); ++v) {
      if (m.image[static_cast<std::size_t>(v)] == v) {
        fixed.push_back(v);
        ++count[static_cast<std::size_t>(v)];
      }
    }
    r.fixed_by.push_back(std::move(fixed));
  }
  for (int v = 0; v < static_cast<int>(ball.size()); ++v) {
    if (count[static_cast<std::size_t>(v)] == static_cast<int>(generators.size())) r.fixed_by_all.push_back(v);
  }
  return r;
}

std::vector<std::string> action_table(const TreeBall& ball, const ActionGenerator& g) {
  PartialMap m = extend_action(ball, g);
  std::string name = to_string(g, ball.mode());
  std::vector<std::string> out;
  for (int v = 0; v < static_cast<int>(ball.size()); ++v) {
    auto w = m.image[static_cast<std::size_t>(v)];
    out.push_back("GEN " + name + " MAPS " + ball.label(v) + " -> " + (w ? ball.label(*w) : "*"));
  }
  return out;
}

AmalgamReport amalgam_report_m2(int n, int radius) {
  if (radius < 1) throw std::invalid_argument("amalgam check needs radius >= 1");
  AmalgamReport rep;
  rep.n = n;
  rep.mode = TreeMode::M2;
  TreeBall sd = barycentric_subdivide(build_ball_m2(n, radius));
  const Signature& sig = sd.signature();
  std::size_t phi = static_cast<std::size_t>(euler_phi(n));
  rep.expected_1 = static_cast<std::size_t>(n) * phi * phi;
  rep.expected_2 = 2 * phi * phi;
  rep.expected_edge = phi * phi;

  CosetVertex a{Word(sig), 0}, b{Word(sig), 1};
  int va = *sd.find(a);
  int vab = *sd.find(sorted({a, b}));

  auto cands = candidates(sig);
  rep.candidates = cands.size();
  auto stab_a = stabilizer(sd, cands, {va});
  auto stab_ab = stabilizer(sd, cands, {vab});
  auto stab_edge = stabilizer(sd, cands, {va, vab});
  rep.vertex_group_1 = stab_a.size();
  rep.vertex_group_2 = stab_ab.size();
  rep.edge_group = stab_edge.size();
  Report& r = rep.checks;
  check_count(r, "order:Aut_A", stab_a.size(), rep.expected_1);
  check_count(r, "order:Aut_{A,B}", stab_ab.size(), rep.expected_2);
  check_count(r, "order:edge", stab_edge.size(), rep.expected_edge);
  check_count(r, "distinct:Aut_A", distinct_realizations(TreeMode::M2, {stab_a.begin(), stab_a.end()}),
              stab_a.size());
  check_count(r, "distinct:Aut_{A,B}",
              distinct_realizations(TreeMode::M2, {stab_ab.begin(), stab_ab.end()}), stab_ab.size());

  std::set<Element> claimed_a, claimed_ab, claimed_f;
  Permutation id{{0, 1}}, swap{{1, 0}};
  for (const auto& eps : all_factor_automorphisms(sig)) {
    for (int k = 0; k < n; ++k) claimed_a.insert({Word::generator(sig, 0, k), eps, id});
    claimed_ab.insert({Word(sig), eps, id});
    claimed_ab.insert({Word(sig), eps, swap});
    claimed_f.insert({Word(sig), eps, id});
  }
  r.add("stabilizer:A=A.F", stab_a == claimed_a);
  r.add("stabilizer:{A,B}=F.Sym2", stab_ab == claimed_ab);
  std::set<Element> meet;
  std::set_intersection(stab_a.begin(), stab_a.end(), stab_ab.begin(), stab_ab.end(),
                        std::inserter(meet, meet.begin()));
  r.add("edge=intersection", meet == stab_edge && stab_edge == claimed_f);
  bool fix_ok = std::all_of(claimed_a.begin(), claimed_a.end(), [&](const Element& e) { return fixes(sd, e, va); }) &&
                std::all_of(claimed_ab.begin(), claimed_ab.end(), [&](const Element& e) { return fixes(sd, e, vab); }) &&
                std::all_of(claimed_f.begin(), claimed_f.end(),
                            [&](const Element& e) { return fixes(sd, e, va) && fixes(sd, e, vab); });
  r.add("fixes:listed-elements", fix_ok);

  std::vector<ActionGenerator> gens = standard_generators(sig);
  rep.edges_total = sd.tree()->edges().size();
  rep.edges_reached = reachable_edges(sd, gens, {std::min(va, vab), std::max(va, vab)}, 2 * radius);
  r.add("edge-transitive:L=" + std::to_string(2 * radius), rep.edges_reached == rep.edges_total,
        std::to_string(rep.edges_reached) + "/" + std::to_string(rep.edges_total));
  bool inversion_free = true;
  for (const auto& g : gens) inversion_free = inversion_free && extend_action(sd, g).inversions.empty();
  r.add("sd:inversion-free", inversion_free);
  return rep;
}

AmalgamReport amalgam_report_m3(int n, int radius) {
  if (radius < 1) throw std::invalid_argument("amalgam check needs radius >= 1");
  AmalgamReport rep;
  rep.n = n;
  rep.mode = TreeMode::M3;
  TreeBall ball = build_ball_m3_outer(n, radius);
  const Signature& sig = ball.signature();
  std::size_t phi3 = ipow(static_cast<std::size_t>(euler_phi(n)), 3);
  rep.expected_1 = 6 * phi3;
  rep.expected_2 = 2 * static_cast<std::size_t>(n) * phi3;
  rep.expected_edge = 2 * phi3;

  CosetVertex one{Word(sig), std::nullopt}, a1{Word(sig), 0};
  int v1 = *ball.find(one);
  int va1 = *ball.find(a1);

  auto cands = candidates(sig);
  rep.candidates = cands.size();
  auto stab_1 = stabilizer(ball, cands, {v1});
  auto stab_a1 = stabilizer(ball, cands, {va1});
  auto stab_edge = stabilizer(ball, cands, {v1, va1});
  rep.vertex_group_1 = stab_1.size();
  rep.vertex_group_2 = stab_a1.size();
  rep.edge_group = stab_edge.size();
  Report& r = rep.checks;
  check_count(r, "order:Out_1", stab_1.size(), rep.expected_1);
  check_count(r, "order:Out_A1", stab_a1.size(), rep.expected_2);
  check_count(r, "order:edge", stab_edge.size(), rep.expected_edge);
  check_count(r, "distinct-mod-Inn:Out_1",
              distinct_realizations(TreeMode::M3, {stab_1.begin(), stab_1.end()}), stab_1.size());
  check_count(r, "distinct-mod-Inn:Out_A1",
              distinct_realizations(TreeMode::M3, {stab_a1.begin(), stab_a1.end()}), stab_a1.size());

  // The transposition fixing A_1 = <y_1> under the signed-permutation action.
  std::vector<Permutation> fixing_a1;
  for (const auto& pi : admissible_permutations(sig)) {
    OuterWord y1 = Word::generator(sig, 0);
    if (outer_conjugation_action(pi, y1).syllables().front().factor == 0) fixing_a1.push_back(pi);
  }
  std::string sym2;
  for (const auto& p : fixing_a1) sym2 += (sym2.empty() ? "" : ",") + perm_text(p);
  r.notes.push_back("permutations fixing A1: " + sym2);

  std::set<Element> claimed_1, claimed_a1, claimed_edge;
  for (const auto& eps : all_factor_automorphisms(sig)) {
    for (const auto& pi : admissible_permutations(sig)) claimed_1.insert({Word(sig), eps, pi});
    for (const auto& pi : fixing_a1) {
      claimed_edge.insert({Word(sig), eps, pi});
      for (int k = 0; k < n; ++k) claimed_a1.insert({Word::generator(sig, 0, k), eps, pi});
    }
  }
  r.add("stabilizer:1=F.Sym3", stab_1 == claimed_1);
  r.add("stabilizer:A1=A1.(F.Sym2)", stab_a1 == claimed_a1);
  std::set<Element> meet;
  std::set_intersection(stab_1.begin(), stab_1.end(), stab_a1.begin(), stab_a1.end(),
                        std::inserter(meet, meet.begin()));
  r.add("edge=intersection", meet == stab_edge && stab_edge == claimed_edge);
  bool fix_ok = std::all_of(claimed_1.begin(), claimed_1.end(), [&](const Element& e) { return fixes(ball, e, v1); }) &&
                std::all_of(claimed_a1.begin(), claimed_a1.end(), [&](const Element& e) { return fixes(ball, e, va1); });
  r.add("fixes:listed-elements", fix_ok);

  std::vector<ActionGenerator> gens = standard_generators(sig);
  rep.edges_total = ball.tree()->edges().size();
  rep.edges_reached = reachable_edges(ball, gens, {std::min(v1, va1), std::max(v1, va1)}, 2 * radius);
  r.add("fundamental-domain:L=" + std::to_string(2 * radius), rep.edges_reached == rep.edges_total,
        std::to_string(rep.edges_reached) + "/" + std::to_string(rep.edges_total));
  bool type_ok = true;
  for (const auto& g : gens) {
    PartialMap m = extend_action(ball, g);
    type_ok = type_ok && m.type_preserving && m.inversions.empty() && m.broken_edges.empty();
  }
  r.add("type-preserving", type_ok);
  return rep;
}

}  // namespace fpcyc
