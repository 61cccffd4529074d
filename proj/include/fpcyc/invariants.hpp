#pragma once

// Isomorphism invariants of free products of finite cyclic groups: counts of
// conjugacy classes of torsion elements, occurrence numbers, the
// characteristic subgroups N(k) and induced maps on quotients, and the pair
// certificates behind property FA when every order occurs at least 4 times.

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpcyc/automorphism.hpp"
#include "fpcyc/report.hpp"

namespace fpcyc {

class CensusBudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Number of conjugacy classes of elements of each order k >= 2.
struct ConjugacyCensus {
  Signature signature;
  std::map<int, long> classes;

  long c(int k) const;
  bool operator==(const ConjugacyCensus& other) const { return classes == other.classes; }
  /// "c(2)=2 c(4)=2"
  std::string to_string() const;
};

/// phi(k) * #{i : k | n_i}.
ConjugacyCensus conjugacy_census(const Signature& sig);

/// Enumerates every word with at most `max_length` syllables, computes orders
/// by repeated multiplication and groups torsion elements by is_conjugate.
/// Throws CensusBudgetExceeded when more than `budget` words would be needed.
ConjugacyCensus conjugacy_census_brute_force(const Signature& sig, int max_length,
                                             std::size_t budget = 10000);

struct Occurrences {
  int k = 0;
  /// c(k)/phi(k) - sum_{a>=2} occ(ak).
  long corrected = 0;
  /// c(k) - sum_{a>=2} c(ak).
  long literal = 0;

  bool mismatch() const { return corrected != literal; }
};

Occurrences occurrences(const ConjugacyCensus& census, int k);
Occurrences occurrences(const Signature& sig, int k);

/// Indices i with n_i = k.
std::set<int> order_class(const Signature& sig, int k);

/// phi(x_i) in N(k) for every standard generator phi of Aut(G) and every x_i
/// of order k. Throws invalid_argument when k does not occur.
Report is_characteristic_Nk(const Signature& sig, int k);

/// Orders of the surviving factors, in their original order.
Signature quotient_signature(const Signature& sig, const std::set<int>& kill);

/// Deletes the killed factors and renumbers the rest.
Word to_quotient(const Word& w, const std::set<int>& kill, const Signature& quotient);

/// The automorphism of G / <<x_i : i in kill>>. The kill set must be a union
/// of order classes and leave at least one factor.
Automorphism induced_automorphism(const Automorphism& f, const std::set<int>& kill);

/// Every standard generator of Aut of the quotient keeping exactly the
/// factors whose order lies in `keep_orders` has a standard generator of
/// Aut(G) mapping onto it.
Report surjectivity_check(const Signature& sig, const std::set<int>& keep_orders);

// --- FA certificates ---------------------------------------------------------

class FAHypothesisError : public std::invalid_argument {
 public:
  FAHypothesisError(int order, int count);
  int order() const { return order_; }
  int count() const { return count_; }

 private:
  int order_;
  int count_;
};

enum class FACase { Commuting, Case1, Case2, Case3 };

std::string to_string(FACase c);

struct FAPairCertificate {
  /// Oriented so that the case condition reads off directly: Case 1 has equal
  /// targets, Case 2 and 3 have first.conjugator == second.target.
  PartialConj first;
  PartialConj second;
  FACase label = FACase::Commuting;
  /// l for Cases 1 and 3, (k, l) for Case 2.
  std::vector<int> aux;
  /// a1, a2, b1, b2.
  std::array<PartialConj, 4> corners{};
  /// Swap with b_k = pi a_k pi^-1.
  Permutation swap;
  /// Case 3 only: the (a1, b1) pair, which is a Case 1 pair.
  std::optional<std::pair<PartialConj, PartialConj>> depends_on;
  Report checks;
};

struct FACaseCertificate {
  Signature signature;
  std::vector<FAPairCertificate> pairs;

  bool all_verified() const;
  std::size_t count(FACase c) const;
};

/// Throws FAHypothesisError naming the smallest order that occurs fewer than
/// 4 times.
FACaseCertificate fa_case_certificate(const Signature& sig);

std::string pc_label(const PartialConj& pc);

}  // namespace fpcyc
