// Acceptance run: one PASS/FAIL line per criterion, with timings.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fpcyc/aut_verify.hpp"
#include "fpcyc/bass_serre.hpp"
#include "fpcyc/invariants.hpp"
#include "fpcyc/tree.hpp"
#include "support.hpp"

using namespace fpcyc;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

int failed = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Result()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Result o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = limit_s <= 0 || s < limit_s;
  bool pass = o.pass && in_time;
  if (!pass) ++failed;
  char timing[64];
  if (limit_s > 0) std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", s, limit_s);
  else std::snprintf(timing, sizeof timing, "%.2f s", s);
  std::cout << "CRITERION " << id << ' ' << (pass ? "PASS" : "FAIL") << ' ' << name << ": " << o.detail << " ("
            << timing << (in_time ? "" : ", too slow") << ")" << std::endl;
}

/// Free reduction of a raw syllable string with a stack; independent of Word.
std::vector<Syllable> oracle_reduce(const Signature& sig, const std::vector<Syllable>& raw) {
  std::vector<Syllable> st;
  for (Syllable s : raw) {
    s.exponent %= sig.order(s.factor);
    if (s.exponent == 0) continue;
    if (!st.empty() && st.back().factor == s.factor) {
      int e = (st.back().exponent + s.exponent) % sig.order(s.factor);
      st.pop_back();
      if (e) st.push_back({s.factor, e});
    } else {
      st.push_back(s);
    }
  }
  return st;
}

std::vector<Syllable> raw(const Word& w) { return {w.syllables().begin(), w.syllables().end()}; }

std::vector<Syllable> concat(std::vector<Syllable> a, const std::vector<Syllable>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Every ordered signature with `m` factors drawn from [lo, hi].
std::vector<Signature> signatures(int m, int lo, int hi) {
  std::vector<Signature> out;
  std::vector<int> v(static_cast<std::size_t>(m), lo);
  while (true) {
    out.emplace_back(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == hi) v[i++] = lo;
    if (i == v.size()) break;
    ++v[i];
  }
  return out;
}

std::string count_text(long count, const char* what) {
  std::ostringstream s;
  s << count << ' ' << what;
  return s.str();
}

bool meet(const Subtree& a, const Subtree& b) { return !intersect(a, b).empty(); }

// ---------------------------------------------------------------------------

Result group_axioms() {
  std::mt19937_64 rng(1);
  long bad = 0;
  for (int t = 0; t < 10000; ++t) {
    Signature sig = testing::random_signature(rng, 5, 6);
    Word a = testing::random_word(rng, sig, 8), b = testing::random_word(rng, sig, 8),
         c = testing::random_word(rng, sig, 8);
    Word e(sig);
    bool ok = (a * b) * c == a * (b * c) && a * invert(a) == e && invert(a) * a == e && a * e == a && e * a == a;
    ok = ok && raw(a * b) == oracle_reduce(sig, concat(raw(a), raw(b)));
    ok = ok && raw((a * b) * c) == oracle_reduce(sig, concat(concat(raw(a), raw(b)), raw(c)));
    bad += !ok;
  }
  return {bad == 0, "10000 triples, " + count_text(bad, "failures")};
}

Result conjugacy_oracle() {
  long pairs = 0, bad = 0;
  for (auto orders : {std::vector<int>{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}}) {
    Signature sig(orders);
    auto words = testing::all_words(sig, 3);
    auto conjugators = testing::all_words(sig, 6);
    for (const Word& a : words) {
      for (const Word& b : words) {
        ++pairs;
        bad += is_conjugate(a, b) != testing::brute_force_conjugate(a, b, conjugators);
      }
    }
  }
  return {bad == 0, count_text(pairs, "pairs, ") + count_text(bad, "disagreements")};
}

Result generator_relations() {
  long sigs = 0, checks = 0, bad = 0;
  for (int m = 2; m <= 4; ++m) {
    for (const Signature& sig : signatures(m, 2, 5)) {
      ++sigs;
      Report r = verify_generator_relations(sig);
      checks += static_cast<long>(r.checks.size());
      bad += static_cast<long>(r.failures());
      // eps alpha_i^j eps^-1 = (alpha_i^j)^{eps_j}, composed directly
      for (const FactorAuto& eps : all_factor_automorphisms(sig)) {
        Automorphism fe = Automorphism::from_generator(sig, eps);
        Automorphism fe_inv = inverse(fe);
        for (const PartialConj& pc : all_partial_conjugations(sig)) {
          Automorphism a = Automorphism::from_generator(sig, pc);
          ++checks;
          bad += !(fe * a * fe_inv == power(a, eps.exponents[static_cast<std::size_t>(pc.conjugator)]));
        }
      }
    }
  }
  return {bad == 0, count_text(sigs, "signatures, ") + count_text(checks, "checks, ") + count_text(bad, "failures")};
}

Result presentation_m3() {
  long checks = 0, bad = 0, chain = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const Report& r : {verify_fr_presentation_m3(n), verify_phi_psi_m3(n)}) {
      checks += static_cast<long>(r.checks.size());
      bad += static_cast<long>(r.failures());
      for (const auto& c : r.checks) chain += c.name.rfind("chain:", 0) == 0;
    }
  }
  bool ok = bad == 0 && chain >= 4;
  return {ok, count_text(checks, "checks, ") + count_text(chain, "chain steps, ") + count_text(bad, "failures")};
}

Result product_is_inner() {
  long cases = 0, bad = 0;
  for (int m = 2; m <= 4; ++m) {
    for (const Signature& sig : signatures(m, 2, 4)) {
      for (int j = 0; j < m; ++j) {
        Automorphism prod = Automorphism::identity(sig);
        for (int k = 0; k < m; ++k) {
          if (k != j) prod = partial_conjugation(sig, k, j) * prod;
        }
        Word xj = Word::generator(sig, j);
        bool ok = true;
        for (int i = 0; i < m; ++i) {
          Word xi = Word::generator(sig, i);
          Word expected(sig, oracle_reduce(sig, concat(concat(raw(xj), raw(xi)), raw(invert(xj)))));
          ok = ok && prod.apply(xi) == expected;
        }
        ok = ok && prod == inner(xj);
        ++cases;
        bad += !ok;
      }
    }
  }
  return {bad == 0, count_text(cases, "(signature, j) cases, ") + count_text(bad, "failures")};
}

/// Library campaign plus an independent brute-force pass over the same
/// generators.
Result tree_campaign(FuzzKind kind, FamilyMode mode, int k_min, int k_max) {
  FuzzOptions opts;
  opts.seed = 2024;
  opts.trials = 10000;
  opts.max_vertices = 50;
  opts.k_min = k_min;
  opts.k_max = k_max;
  FuzzReport rep = run_fuzz(kind, opts);

  long oracle_bad = 0;
  std::mt19937_64 rng(99);
  for (int t = 0; t < 10000; ++t) {
    int v = std::uniform_int_distribution<int>(1, 50)(rng);
    int k = std::uniform_int_distribution<int>(k_min, k_max)(rng);
    TreePtr tree = random_tree(rng(), v);
    auto fam = random_subtree_family(rng(), tree, k, mode);
    bool hypothesis = true;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        bool needed = mode == FamilyMode::Pairwise || cyclic_distance(i + 1, j + 1, k) == 1;
        if (needed && !meet(fam[static_cast<std::size_t>(i)], fam[static_cast<std::size_t>(j)])) hypothesis = false;
      }
    }
    bool conclusion = false;
    if (mode == FamilyMode::Pairwise) {
      for (int x = 0; x < v && !conclusion; ++x) {
        conclusion = std::all_of(fam.begin(), fam.end(), [&](const Subtree& s) { return s.contains(x); });
      }
      HellyVerdict hv = check_helly(fam);
      if ((hv.outcome == fpcyc::Outcome::Holds) != conclusion) ++oracle_bad;
    } else {
      for (int i = 0; i < k && !conclusion; ++i) {
        for (int j = i + 1; j < k && !conclusion; ++j) {
          conclusion = cyclic_distance(i + 1, j + 1, k) >= 2 &&
                       meet(fam[static_cast<std::size_t>(i)], fam[static_cast<std::size_t>(j)]);
        }
      }
      CycleVerdict cv = check_subtree_cycle(fam);
      if ((cv.outcome == fpcyc::Outcome::Holds) != conclusion) ++oracle_bad;
    }
    if (!hypothesis || !conclusion) ++oracle_bad;
  }
  bool ok = rep.failures == 0 && rep.trials == 10000 && oracle_bad == 0;
  return {ok, rep.summary() + ", brute-force pass: 10000 families, " + count_text(oracle_bad, "failures")};
}

Result bass_serre_m2() {
  const int n = 3;
  std::vector<std::string> issues;
  TreeBall r1 = build_ball_m2(n, 1);
  std::set<std::string> nbrs;
  int a_vertex = *r1.find(CosetVertex{Word(r1.signature()), 0});
  for (int v : r1.tree()->neighbors(a_vertex)) nbrs.insert(r1.label(v));
  if (nbrs != std::set<std::string>{"B", "aB", "a^2B"}) issues.push_back("radius-1 neighbourhood");

  // 1 + n + n(n-1) vertices within distance 2 of A
  TreeBall r2 = build_ball_m2(n, 2);
  if (r2.size() != static_cast<std::size_t>(1 + n + n * (n - 1))) issues.push_back("radius-2 size");

  TreeBall r4 = build_ball_m2(n, 4);
  TreeBall sd = barycentric_subdivide(r4);
  std::vector<ActionGenerator> gens = {parse_action_generator(TreeMode::M2, n, "a"),
                                       parse_action_generator(TreeMode::M2, n, "b"),
                                       parse_action_generator(TreeMode::M2, n, "perm:(1 2)")};
  for (const auto& g : gens) {
    PartialMap m = extend_action(r4, g);
    if (!m.broken_edges.empty()) issues.push_back("edge broken by " + to_string(g, TreeMode::M2));
    // edges with both endpoints inside the ball, checked without extend_action
    for (auto [u, v] : r4.tree()->edges()) {
      auto iu = r4.image(g, u), iv = r4.image(g, v);
      if (iu && iv && !r4.tree()->has_edge(*iu, *iv)) issues.push_back("edge image");
    }
    PartialMap ms = extend_action(sd, g);
    if (!ms.inversions.empty()) issues.push_back("inversion after subdivision");
  }
  long both = 0;
  for (int v = 0; v < static_cast<int>(r4.size()); ++v) {
    const CosetVertex& c = r4.vertices()[static_cast<std::size_t>(v)][0];
    both += act(TreeMode::M2, gens[0], c) == c && act(TreeMode::M2, gens[1], c) == c;
  }
  if (both) issues.push_back("common fixed vertex");
  std::string detail = "neighbours of A {" + [&] {
    std::string s;
    for (const auto& x : nbrs) s += (s.empty() ? "" : ",") + x;
    return s;
  }() + "}, radius-2 ball " + std::to_string(r2.size()) + " vertices, " + count_text(both, "vertices fixed by a and b");
  for (const auto& i : issues) detail += "; " + i;
  return {issues.empty(), detail};
}

Result amalgams() {
  std::string detail;
  bool ok = true;
  for (int n = 2; n <= 4; ++n) {
    std::size_t phi = static_cast<std::size_t>(euler_phi(n));
    AmalgamReport m2 = amalgam_report_m2(n);
    AmalgamReport m3 = amalgam_report_m3(n);
    bool this_ok = m2.all_passed() && m3.all_passed() && m2.vertex_group_1 == n * phi * phi &&
                   m2.vertex_group_2 == 2 * phi * phi && m2.edge_group == phi * phi &&
                   m3.vertex_group_1 == 6 * phi * phi * phi && m3.vertex_group_2 == 2 * n * phi * phi * phi &&
                   m3.edge_group == 2 * phi * phi * phi;
    ok = ok && this_ok;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%sn=%d m2 %zu/%zu/%zu m3 %zu/%zu/%zu", n == 2 ? "" : "; ", n, m2.vertex_group_1,
                  m2.vertex_group_2, m2.edge_group, m3.vertex_group_1, m3.vertex_group_2, m3.edge_group);
    detail += buf;
  }
  return {ok, detail};
}

Result occurrence_invariant() {
  std::mt19937_64 rng(10);
  long bad = 0;
  for (int t = 0; t < 200; ++t) {
    Signature sig = testing::random_signature(rng, 6, 12);
    ConjugacyCensus c = conjugacy_census(sig);
    std::map<int, long> recovered, actual;
    for (int k = 2; k <= 12; ++k) {
      long o = occurrences(c, k).corrected;
      if (o) recovered[k] = o;
    }
    for (int n : sig.orders()) ++actual[n];
    bad += recovered != actual;
  }
  Occurrences o = occurrences(Signature({4, 2}), 2);
  bool mismatch = o.corrected == 1 && o.literal == 0 && o.mismatch();
  return {bad == 0 && mismatch, "200 signatures, " + count_text(bad, "wrong multisets") +
                                    "; (4,2) k=2 corrected " + std::to_string(o.corrected) + " literal " +
                                    std::to_string(o.literal) + (o.mismatch() ? " PAPER-FORMULA-MISMATCH" : "")};
}

Result characteristic() {
  long sigs = 0, classes = 0, bad = 0;
  for (int m = 1; m <= 5; ++m) {
    for (const Signature& sig : signatures(m, 2, 6)) {
      ++sigs;
      for (int k : std::set<int>(sig.orders().begin(), sig.orders().end())) {
        ++classes;
        bad += !is_characteristic_Nk(sig, k).all_passed();
      }
    }
  }
  // functoriality, both as maps and on random words
  std::mt19937_64 rng(12);
  long trials = 0, fbad = 0;
  while (trials < 1000) {
    Signature sig = testing::random_signature(rng, 5, 6, 2);
    std::set<int> present(sig.orders().begin(), sig.orders().end());
    if (present.size() < 2) continue;
    int keep = *std::next(present.begin(), static_cast<long>(rng() % present.size()));
    std::set<int> kill;
    for (int i = 0; i < sig.rank(); ++i) {
      if (sig.order(i) != keep) kill.insert(i);
    }
    std::vector<Generator> gens;
    for (auto& p : admissible_permutations(sig)) gens.emplace_back(p);
    for (auto& c : all_partial_conjugations(sig)) gens.emplace_back(c);
    auto eps = all_factor_automorphisms(sig);
    gens.emplace_back(eps[rng() % eps.size()]);
    auto random_aut = [&] {
      Automorphism f = Automorphism::identity(sig);
      int len = static_cast<int>(rng() % 6);
      for (int i = 0; i < len; ++i) f = Automorphism::from_generator(sig, gens[rng() % gens.size()]) * f;
      return f;
    };
    Automorphism f = random_aut(), g = random_aut();
    Signature q = quotient_signature(sig, kill);
    Automorphism ff = induced_automorphism(f, kill), fg = induced_automorphism(g, kill);
    bool ok = induced_automorphism(f * g, kill) == ff * fg;
    Word w = testing::random_word(rng, sig, 6);
    ok = ok && ff.apply(to_quotient(w, kill, q)) == to_quotient(f.apply(w), kill, q);
    fbad += !ok;
    ++trials;
  }
  return {bad == 0 && fbad == 0, count_text(sigs, "signatures, ") + count_text(classes, "order classes, ") +
                                     count_text(bad, "failures; ") + count_text(trials, "functoriality trials, ") +
                                     count_text(fbad, "failures")};
}

Result fa_certificates() {
  std::string detail;
  bool ok = true;
  for (auto orders : {std::vector<int>{2, 2, 2, 2}, {3, 3, 3, 3}, {2, 2, 2, 2, 3, 3, 3, 3}}) {
    Signature sig(orders);
    FACaseCertificate cert = fa_case_certificate(sig);
    std::size_t m = static_cast<std::size_t>(sig.rank());
    std::size_t npc = m * (m - 1);
    long recheck_bad = 0;
    auto commute = [&](const PartialConj& a, const PartialConj& b) {
      Automorphism fa = partial_conjugation(sig, a.target, a.conjugator);
      Automorphism fb = partial_conjugation(sig, b.target, b.conjugator);
      return fa * fb == fb * fa;
    };
    for (const auto& p : cert.pairs) {
      if (p.label == FACase::Commuting) {
        recheck_bad += !commute(p.first, p.second);
        continue;
      }
      recheck_bad += commute(p.first, p.second);
      const auto& c = p.corners;
      std::vector<std::pair<int, int>> claimed = {{0, 3}, {1, 2}, {1, 3}};
      if (p.label != FACase::Case3) claimed.push_back({0, 2});
      for (auto [u, v] : claimed) recheck_bad += !commute(c[static_cast<std::size_t>(u)], c[static_cast<std::size_t>(v)]);
      Automorphism pi = Automorphism::from_generator(sig, p.swap);
      for (int k = 0; k < 2; ++k) {
        const auto& a = c[static_cast<std::size_t>(k)];
        const auto& b = c[static_cast<std::size_t>(k + 2)];
        recheck_bad += !(pi * partial_conjugation(sig, a.target, a.conjugator) * inverse(pi) ==
                         partial_conjugation(sig, b.target, b.conjugator));
      }
    }
    bool this_ok = cert.all_verified() && cert.pairs.size() == npc * (npc - 1) / 2 && recheck_bad == 0;
    ok = ok && this_ok;
    detail += (detail.empty() ? "" : "; ") + sig.to_string() + ": " + std::to_string(cert.pairs.size()) +
              " pairs (" + std::to_string(cert.count(FACase::Commuting)) + " commuting, " +
              std::to_string(cert.count(FACase::Case1)) + "/" + std::to_string(cert.count(FACase::Case2)) + "/" +
              std::to_string(cert.count(FACase::Case3)) + " case 1/2/3), " +
              count_text(recheck_bad, "recheck failures");
  }
  try {
    fa_case_certificate(Signature({2, 2, 3, 3, 3, 3}));
    ok = false;
    detail += "; 2,2,3,3,3,3 accepted";
  } catch (const FAHypothesisError& e) {
    ok = ok && e.order() == 2;
    detail += std::string("; 2,2,3,3,3,3 rejected: ") + e.what();
  }
  return {ok, detail};
}

}  // namespace

int main() {
  criterion(1, "group axioms", 5, group_axioms);
  criterion(2, "conjugacy vs brute force", 30, conjugacy_oracle);
  criterion(3, "factor/permutation/partial-conjugation relations, m<=4, n in 2..5", 10, generator_relations);
  criterion(4, "rank-3 presentation and phi/psi inverses, n in 2..5", 5, presentation_m3);
  criterion(5, "product of partial conjugations by x_j is inner", 0, product_is_inner);
  criterion(6, "Helly fuzz", 10, [] { return tree_campaign(FuzzKind::Helly, FamilyMode::Pairwise, 2, 8); });
  criterion(7, "subtree cycle fuzz", 20, [] { return tree_campaign(FuzzKind::Cycle, FamilyMode::Cyclic, 4, 8); });
  criterion(8, "Bass-Serre ball m=2, n=3", 0, bass_serre_m2);
  criterion(9, "amalgam stabiliser orders, n in 2..4", 0, amalgams);
  criterion(10, "occurrence invariant", 0, occurrence_invariant);
  criterion(11, "N(k) characteristic and induced-map functoriality", 0, characteristic);
  criterion(12, "FA pair certificates", 0, fa_certificates);
  std::cout << (failed ? "ACCEPTANCE FAIL " : "ACCEPTANCE PASS ") << (12 - failed) << "/12" << std::endl;
  return failed ? 1 : 0;
}
