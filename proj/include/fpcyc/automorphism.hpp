#pragma once

// Automorphisms of G = *_i Z/n_i, stored extensionally by the images of the
// generators x_1..x_m. Products of the standard generators (factor
// automorphisms, admissible permutations, partial conjugations) also carry
// their factorization, which is what makes them invertible.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fpcyc/word.hpp"

namespace fpcyc {

/// x_i -> x_i^{exponents[i]}, each exponent a unit mod n_i.
struct FactorAuto {
  std::vector<int> exponents;
  bool operator==(const FactorAuto&) const = default;
};

/// x_i -> x_{images[i]}; only admissible when n_{images[i]} == n_i.
struct Permutation {
  std::vector<int> images;
  bool operator==(const Permutation&) const = default;
};

/// alpha_target^conjugator: x_target -> x_c x_target x_c^-1, other x_k fixed.
/// The conjugating generator x_c is the "operating letter".
struct PartialConj {
  int target = 0;
  int conjugator = 1;
  bool operator==(const PartialConj&) const = default;
};

struct Composite {
  bool operator==(const Composite&) const = default;
};

using Generator = std::variant<FactorAuto, Permutation, PartialConj>;
using Tag = std::variant<FactorAuto, Permutation, PartialConj, Composite>;

std::string to_string(const Generator& g);

class Automorphism {
 public:
  static Automorphism identity(const Signature& sig);
  static Automorphism from_generator(const Signature& sig, const Generator& g);

  /// Images must have orders dividing n_i. The result carries no
  /// factorization unless it matches a standard generator.
  static Automorphism from_images(const Signature& sig, std::vector<Word> images);

  const Signature& signature() const { return signature_; }
  const std::vector<Word>& images() const { return images_; }
  const Tag& tag() const { return tag_; }

  /// Product of standard generators (applied right to left) equal to this
  /// automorphism, when known.
  const std::optional<std::vector<Generator>>& factorization() const { return factorization_; }

  Word apply(const Word& w) const;

  bool operator==(const Automorphism& other) const {
    return signature_ == other.signature_ && images_ == other.images_;
  }

  /// `x1->x2^1*x1^1*x2^2, x2->x2^1, ...`
  std::string to_string() const;

 private:
  Automorphism(Signature sig, std::vector<Word> images, Tag tag,
               std::optional<std::vector<Generator>> factorization);

  friend Automorphism compose(const Automorphism&, const Automorphism&);

  Signature signature_;
  std::vector<Word> images_;
  Tag tag_;
  std::optional<std::vector<Generator>> factorization_;
};

/// f o g, i.e. apply g first.
Automorphism compose(const Automorphism& f, const Automorphism& g);
inline Automorphism operator*(const Automorphism& f, const Automorphism& g) {
  return compose(f, g);
}

/// Requires a known factorization; throws std::domain_error otherwise.
Automorphism inverse(const Automorphism& f);
Automorphism power(const Automorphism& f, long k);

/// a b a^-1 b^-1
Automorphism commutator(const Automorphism& a, const Automorphism& b);

Automorphism partial_conjugation(const Signature& sig, int target, int conjugator);

/// w -> c w c^-1, factored through partial conjugations.
Automorphism inner(const Word& c);

/// Returns c with f(w) == c w c^-1 for all w, if f is inner.
std::optional<Word> inner_conjugator(const Automorphism& f);

/// Matches f == eps o sigma where every image is a single syllable
/// x_{sigma(i)}^{k_i}; then eps has exponent k_i at position sigma(i).
std::optional<std::pair<FactorAuto, Permutation>> is_factor_times_sym(const Automorphism& f);

std::vector<FactorAuto> all_factor_automorphisms(const Signature& sig);
std::vector<Permutation> admissible_permutations(const Signature& sig);
std::vector<PartialConj> all_partial_conjugations(const Signature& sig);

/// `factor:2,1,1`, `perm:(1 2)`, `pc:i,j`, `id`, joined by `*` as function
/// composition (rightmost applied first).
Automorphism parse_automorphism(const Signature& sig, std::string_view text);

}  // namespace fpcyc
