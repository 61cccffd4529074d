#include "fpcyc/aut_verify.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace fpcyc {

namespace {

std::string pc_name(const PartialConj& pc) {
  return "pc(" + std::to_string(pc.target + 1) + "," + std::to_string(pc.conjugator + 1) + ")";
}

std::string join(const std::vector<int>& v, int offset = 0) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i] + offset);
  }
  return out;
}

std::string perm_name(const Permutation& p) {
  std::string s = to_string(Generator{p}).substr(5);
  for (char& c : s) {
    if (c == ' ') c = '_';
  }
  return s;
}

std::string differ(const Automorphism& lhs, const Automorphism& rhs) {
  for (std::size_t i = 0; i < lhs.images().size(); ++i) {
    if (!(lhs.images()[i] == rhs.images()[i])) {
      return "x" + std::to_string(i + 1) + ":" + lhs.images()[i].to_string() +
             "!=" + rhs.images()[i].to_string();
    }
  }
  return {};
}

void check_equal(Report& r, std::string name, const Automorphism& lhs, const Automorphism& rhs) {
  bool ok = lhs == rhs;
  r.add(std::move(name), ok, ok ? std::string{} : differ(lhs, rhs));
}

bool is_identity(const Automorphism& f) { return f == Automorphism::identity(f.signature()); }

// Words in abstract generators, used to transport relations along phi/psi.
struct Letter {
  int symbol;
  int exponent;
};
using GenWord = std::vector<Letter>;

GenWord inverse(const GenWord& w) {
  GenWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->symbol, -it->exponent});
  return out;
}

GenWord concat(std::initializer_list<GenWord> parts) {
  GenWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

GenWord substitute(const GenWord& w, const std::vector<GenWord>& images) {
  GenWord out;
  for (const Letter& l : w) {
    const GenWord piece = l.exponent > 0 ? images[l.symbol] : inverse(images[l.symbol]);
    for (int k = 0; k < std::abs(l.exponent); ++k) out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

Automorphism evaluate(const GenWord& w, const std::vector<Automorphism>& gens,
                      const std::vector<Automorphism>& gens_inv) {
  Automorphism out = Automorphism::identity(gens.front().signature());
  for (const Letter& l : w) {
    const Automorphism& g = l.exponent > 0 ? gens[l.symbol] : gens_inv[l.symbol];
    for (int k = 0; k < std::abs(l.exponent); ++k) out = compose(out, g);
  }
  return out;
}

GenWord commutator_word(const GenWord& a, const GenWord& b) {
  return concat({a, b, inverse(a), inverse(b)});
}

}  // namespace

Report verify_generator_relations(const Signature& sig) {
  if (sig.rank() < 2) throw std::invalid_argument("rank must be at least 2");
  Report r;
  const auto pcs = all_partial_conjugations(sig);
  std::vector<Automorphism> alpha;
  for (const auto& pc : pcs) alpha.push_back(Automorphism::from_generator(sig, pc));

  for (const FactorAuto& eps : all_factor_automorphisms(sig)) {
    Automorphism e = Automorphism::from_generator(sig, eps);
    Automorphism e_inv = inverse(e);
    for (std::size_t k = 0; k < pcs.size(); ++k) {
      int ej = eps.exponents[pcs[k].conjugator];
      check_equal(r,
                  "factor-conj:eps=" + join(eps.exponents) + ":" + pc_name(pcs[k]) + "^" +
                      std::to_string(ej),
                  e * alpha[k] * e_inv, power(alpha[k], ej));
    }
  }

  for (const Permutation& pi : admissible_permutations(sig)) {
    Automorphism p = Automorphism::from_generator(sig, pi);
    Automorphism p_inv = inverse(p);
    for (std::size_t k = 0; k < pcs.size(); ++k) {
      PartialConj moved{pi.images[pcs[k].target], pi.images[pcs[k].conjugator]};
      check_equal(r, "perm-conj:pi=" + perm_name(pi) + ":" + pc_name(pcs[k]) + "->" + pc_name(moved),
                  p * alpha[k] * p_inv, Automorphism::from_generator(sig, moved));
    }
  }

  for (std::size_t k = 0; k < pcs.size(); ++k) {
    const int n = sig.order(pcs[k].conjugator);
    Automorphism acc = Automorphism::identity(sig);
    int first_identity = 0;
    for (int e = 1; e <= n; ++e) {
      acc = compose(acc, alpha[k]);
      if (is_identity(acc)) {
        first_identity = e;
        break;
      }
    }
    r.add("order:" + pc_name(pcs[k]) + "=" + std::to_string(n), first_identity == n,
          first_identity == n ? std::string{} : "order=" + std::to_string(first_identity));
  }
  return r;
}

Report verify_fr_presentation_m3(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  Signature sig({n, n, n});
  Report r;
  auto a = [&](int i, int j) { return partial_conjugation(sig, i, j); };

  for (const auto& pc : all_partial_conjugations(sig)) {
    r.add("i:" + pc_name(pc) + "^" + std::to_string(n), is_identity(power(a(pc.target, pc.conjugator), n)));
  }
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      for (int k = i + 1; k < 3; ++k) {
        if (i == j || k == j) continue;
        PartialConj x{i, j}, y{k, j};
        Automorphism c = commutator(a(i, j), a(k, j));
        r.add("ii:[" + pc_name(x) + "," + pc_name(y) + "]", is_identity(c),
              is_identity(c) ? std::string{} : c.to_string());
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        if (i == j || j == k || i == k) continue;
        Automorphism c = commutator(a(i, j) * a(k, j), a(i, k));
        r.add("iii:[" + pc_name({i, j}) + pc_name({k, j}) + "," + pc_name({i, k}) + "]",
              is_identity(c), is_identity(c) ? std::string{} : c.to_string());
      }
    }
  }
  r.notes.push_back(
      "relation family i uses exponent n, the order of each partial conjugation");
  return r;
}

Report verify_phi_psi_m3(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  Signature sig({n, n, n});
  Report r;

  // Partial-conjugation symbols: (X_i, x_j) <-> alpha_i^j.
  std::vector<PartialConj> pcs = all_partial_conjugations(sig);
  auto pc_sym = [&](int i, int j) {
    for (std::size_t k = 0; k < pcs.size(); ++k) {
      if (pcs[k].target == i && pcs[k].conjugator == j) return static_cast<int>(k);
    }
    throw std::logic_error("bad partial conjugation");
  };
  // Symbols of the semidirect presentation: c_1, c_2, c_3, alpha_1^2,
  // alpha_2^3, alpha_3^1.
  enum { C1, C2, C3, Y1, Y2, Y3 };
  const std::array<std::string, 6> fr_names{"c1", "c2", "c3", "a12", "a23", "a31"};

  std::vector<Automorphism> pc_eval, pc_eval_inv;
  for (const auto& pc : pcs) {
    pc_eval.push_back(Automorphism::from_generator(sig, pc));
    pc_eval_inv.push_back(inverse(pc_eval.back()));
  }
  std::vector<Automorphism> fr_eval;
  for (int i = 0; i < 3; ++i) fr_eval.push_back(inner(Word::generator(sig, i)));
  for (int i = 0; i < 3; ++i) fr_eval.push_back(outer_letter(sig, i));
  std::vector<Automorphism> fr_eval_inv;
  for (const auto& f : fr_eval) fr_eval_inv.push_back(inverse(f));

  auto P = [&](int i, int j, int e = 1) { return GenWord{{pc_sym(i, j), e}}; };
  auto F = [&](int s, int e = 1) { return GenWord{{s, e}}; };

  // phi: semidirect generators -> partial conjugations
  std::vector<GenWord> phi(6);
  phi[C1] = concat({P(1, 0), P(2, 0)});
  phi[C2] = concat({P(0, 1), P(2, 1)});
  phi[C3] = concat({P(0, 2), P(1, 2)});
  phi[Y1] = P(0, 1);
  phi[Y2] = P(1, 2);
  phi[Y3] = P(2, 0);

  // psi: partial conjugations -> semidirect generators
  std::vector<GenWord> psi(pcs.size());
  psi[pc_sym(0, 1)] = F(Y1);
  psi[pc_sym(0, 2)] = concat({F(C3), F(Y2, -1)});
  psi[pc_sym(1, 0)] = concat({F(C1), F(Y3, -1)});
  psi[pc_sym(1, 2)] = F(Y2);
  psi[pc_sym(2, 0)] = F(Y3);
  psi[pc_sym(2, 1)] = concat({F(C2), F(Y1, -1)});
  r.notes.push_back(
      "psi(X2,x1) = c1*(alpha_3^1)^-1; c1*(alpha_1^3)^-1 does not evaluate to alpha_2^1");

  auto eval_pc = [&](const GenWord& w) { return evaluate(w, pc_eval, pc_eval_inv); };
  auto eval_fr = [&](const GenWord& w) { return evaluate(w, fr_eval, fr_eval_inv); };

  // Both generating sets realize the same automorphisms.
  for (int s = 0; s < 6; ++s) {
    check_equal(r, "phi-realizes:" + fr_names[s], eval_pc(phi[s]), fr_eval[s]);
  }
  for (std::size_t k = 0; k < pcs.size(); ++k) {
    check_equal(r, "psi-realizes:" + pc_name(pcs[k]), eval_fr(psi[k]), pc_eval[k]);
  }

  // psi preserves the partial-conjugation presentation.
  std::vector<std::pair<std::string, GenWord>> pc_relations;
  for (const auto& pc : pcs) {
    GenWord w;
    for (int e = 0; e < n; ++e) w.push_back({pc_sym(pc.target, pc.conjugator), 1});
    pc_relations.emplace_back("i:" + pc_name(pc), w);
  }
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      for (int k = i + 1; k < 3; ++k) {
        if (i == j || k == j) continue;
        pc_relations.emplace_back("ii:[" + pc_name({i, j}) + "," + pc_name({k, j}) + "]",
                                  commutator_word(P(i, j), P(k, j)));
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        if (i == j || j == k || i == k) continue;
        pc_relations.emplace_back(
            "iii:[" + pc_name({i, j}) + pc_name({k, j}) + "," + pc_name({i, k}) + "]",
            commutator_word(concat({P(i, j), P(k, j)}), P(i, k)));
      }
    }
  }
  for (const auto& [name, rel] : pc_relations) {
    Automorphism v = eval_fr(substitute(rel, psi));
    r.add("psi-preserves:" + name, is_identity(v), is_identity(v) ? std::string{} : v.to_string());
  }

  // phi preserves the semidirect presentation: x^n = 1 and
  // alpha c_k alpha^-1 = c_{alpha(x_k)}.
  std::vector<std::pair<std::string, GenWord>> fr_relations;
  for (int s = 0; s < 6; ++s) {
    GenWord w;
    for (int e = 0; e < n; ++e) w.push_back({s, 1});
    fr_relations.emplace_back("order:" + fr_names[s], w);
  }
  for (int y = 0; y < 3; ++y) {
    for (int k = 0; k < 3; ++k) {
      Word image = fr_eval[Y1 + y].apply(Word::generator(sig, k));
      GenWord rhs;
      for (const Syllable& s : image.syllables()) rhs.push_back({C1 + s.factor, s.exponent});
      fr_relations.emplace_back(
          "action:" + fr_names[Y1 + y] + "~" + fr_names[k],
          concat({F(Y1 + y), F(C1 + k), F(Y1 + y, -1), inverse(rhs)}));
    }
  }
  for (const auto& [name, rel] : fr_relations) {
    Automorphism v = eval_pc(substitute(rel, phi));
    r.add("phi-preserves:" + name, is_identity(v), is_identity(v) ? std::string{} : v.to_string());
  }

  // Mutual inverseness, computed through the substitutions.
  for (std::size_t k = 0; k < pcs.size(); ++k) {
    check_equal(r, "phi-psi-id:" + pc_name(pcs[k]), eval_pc(substitute(psi[k], phi)), pc_eval[k]);
  }
  for (int s = 0; s < 6; ++s) {
    check_equal(r, "psi-phi-id:" + fr_names[s], eval_fr(substitute(phi[s], psi)), fr_eval[s]);
  }

  // The commutation chain for relation iii with (i,j,k) = (1,2,3).
  const GenWord a = F(Y1), c2 = F(C2), c3 = F(C3), b = F(Y2);
  const std::vector<GenWord> chain{
      concat({substitute(P(0, 1), psi), substitute(P(2, 1), psi), substitute(P(0, 2), psi)}),
      concat({a, c2, inverse(a), c3, inverse(b)}),
      concat({c2, c3, inverse(b)}),
      concat({c2, inverse(b), c3}),
      concat({inverse(b), b, c2, inverse(b), c3}),
      concat({inverse(b), c3, c2, inverse(c3), c3}),
      concat({inverse(b), c3, c2}),
      concat({c3, inverse(b), c2}),
      concat({c3, inverse(b), a, c2, inverse(a)}),
      concat({substitute(P(0, 2), psi), substitute(P(0, 1), psi), substitute(P(2, 1), psi)}),
  };
  const Automorphism start = eval_fr(chain.front());
  for (std::size_t step = 1; step < chain.size(); ++step) {
    check_equal(r, "chain:step" + std::to_string(step), eval_fr(chain[step]), start);
  }
  return r;
}

Automorphism outer_letter(const Signature& sig, int i) {
  return partial_conjugation(sig, i, (i + 1) % 3);
}

Automorphism realize_outer(const Signature& sig, const OuterWord& w) {
  Automorphism out = Automorphism::identity(sig);
  for (const Syllable& s : w.syllables()) {
    out = compose(out, power(outer_letter(sig, s.factor), s.exponent));
  }
  return out;
}

Automorphism outer_action_automorphism(const Signature& outer_sig, const OuterGenerator& g) {
  if (outer_sig.rank() != 3) throw std::invalid_argument("outer action needs rank 3");
  std::vector<Word> images;
  if (const auto* eps = std::get_if<FactorAuto>(&g)) {
    if (eps->exponents.size() != 3) throw std::invalid_argument("factor automorphism needs 3 exponents");
    for (int i = 0; i < 3; ++i) {
      images.push_back(Word::generator(outer_sig, i, eps->exponents[(i + 1) % 3]));
    }
  } else {
    const auto& pi = std::get<Permutation>(g);
    if (pi.images.size() != 3) throw std::invalid_argument("permutation needs 3 images");
    for (int i = 0; i < 3; ++i) {
      // pi alpha_i^{i+1} pi^-1 = alpha_a^b; modulo Inn(G), alpha_a^{a-1}
      // equals the inverse of alpha_{a+1}^{a-1} = y_{a+1}.
      int a = pi.images[i];
      int b = pi.images[(i + 1) % 3];
      images.push_back(b == (a + 1) % 3 ? Word::generator(outer_sig, a)
                                        : Word::generator(outer_sig, (a + 1) % 3, -1));
    }
  }
  return Automorphism::from_images(outer_sig, std::move(images));
}

OuterWord outer_conjugation_action(const OuterGenerator& g, const OuterWord& w) {
  return outer_action_automorphism(w.signature(), g).apply(w);
}

bool commutation_condition(const PartialConj& a, const PartialConj& b) {
  if (a.conjugator == b.conjugator) return true;
  auto in = [](int v, const PartialConj& p) { return v == p.target || v == p.conjugator; };
  return !in(a.target, b) && !in(a.conjugator, b);
}

std::vector<CommutationEntry> CommutationTable::disagreements() const {
  std::vector<CommutationEntry> out;
  for (const auto& e : entries) {
    if (e.condition && !e.commute) out.push_back(e);
  }
  return out;
}

CommutationTable partial_conj_commutation_table(const Signature& sig) {
  if (sig.rank() < 2) throw std::invalid_argument("rank must be at least 2");
  CommutationTable t;
  const auto pcs = all_partial_conjugations(sig);
  std::vector<Automorphism> alpha;
  for (const auto& pc : pcs) alpha.push_back(Automorphism::from_generator(sig, pc));
  for (std::size_t x = 0; x < pcs.size(); ++x) {
    for (std::size_t y = 0; y < pcs.size(); ++y) {
      if (x == y) continue;
      t.entries.push_back({pcs[x], pcs[y], alpha[x] * alpha[y] == alpha[y] * alpha[x],
                           commutation_condition(pcs[x], pcs[y])});
    }
  }
  return t;
}

}  // namespace fpcyc
