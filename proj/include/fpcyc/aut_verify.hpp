#pragma once

// Machine checks of the relations satisfied by the standard generators of
// Aut(G), a finite presentation of the partial-conjugation
// subgroup for m = 3, and the outer action of F x| Sym(3) on
// <alpha_1^2, alpha_2^3, alpha_3^1>.

#include <variant>
#include <vector>

#include "fpcyc/automorphism.hpp"
#include "fpcyc/report.hpp"

namespace fpcyc {

/// Conjugation of partial conjugations by factor automorphisms and by
/// admissible permutations, and the order of every partial conjugation.
/// Requires rank >= 2.
Report verify_generator_relations(const Signature& sig);

/// Relation families (alpha_i^j)^n, [alpha_i^j, alpha_k^j] and
/// [alpha_i^j alpha_k^j, alpha_i^k] on the signature (n,n,n).
Report verify_fr_presentation_m3(int n);

/// The maps between the partial-conjugation presentation and the
/// Inn(G) x| <alpha_1^2, alpha_2^3, alpha_3^1> presentation: relation
/// preservation, mutual inverseness, and the displayed commutation chain.
Report verify_phi_psi_m3(int n);

// --- outer action, m = 3 ---------------------------------------------------

/// Words over the outer signature (n,n,n); letter y_i stands for the class of
/// alpha_i^{i+1} (indices mod 3) in Out(G).
using OuterWord = Word;
using OuterGenerator = std::variant<FactorAuto, Permutation>;

/// alpha_i^{i+1} as an automorphism of G = (n,n,n).
Automorphism outer_letter(const Signature& sig, int i);

/// Evaluates an outer word as a product of partial conjugations of G.
Automorphism realize_outer(const Signature& sig, const OuterWord& w);

/// The induced automorphism of <y_1,y_2,y_3>: factor automorphisms raise y_i
/// to eps_{i+1}, permutations act by signed permutations.
Automorphism outer_action_automorphism(const Signature& outer_sig, const OuterGenerator& g);

OuterWord outer_conjugation_action(const OuterGenerator& g, const OuterWord& w);

// --- commutation of partial conjugations ------------------------------------

/// s == j or {i,j} and {r,s} disjoint, for alpha_i^j and alpha_r^s.
bool commutation_condition(const PartialConj& a, const PartialConj& b);

struct CommutationEntry {
  PartialConj a;
  PartialConj b;
  bool commute = false;
  bool condition = false;
};

struct CommutationTable {
  std::vector<CommutationEntry> entries;

  /// Pairs where the condition holds but the computed composition disagrees.
  std::vector<CommutationEntry> disagreements() const;
};

CommutationTable partial_conj_commutation_table(const Signature& sig);

}  // namespace fpcyc
