#pragma once

// Elements of a free product of finite cyclic groups
//
//   G = <x_1, ..., x_m | x_i^{n_i}>
//
// stored in syllable normal form. Factor indices are 0-based in code and
// 1-based in the text grammar (`x1^2*x3`).

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fpcyc {

class SignatureMismatch : public std::invalid_argument {
 public:
  SignatureMismatch() : std::invalid_argument("signature mismatch") {}
};

class WordOverflow : public std::length_error {
 public:
  explicit WordOverflow(std::size_t length);
};

/// Error raised by the text parsers; `position` is a 0-based column.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The ordered list of factor orders (n_1, ..., n_m). Cheap to copy.
class Signature {
 public:
  explicit Signature(std::vector<int> orders);

  int rank() const { return static_cast<int>(orders_->size()); }
  int order(int factor) const { return (*orders_)[factor]; }
  const std::vector<int>& orders() const { return *orders_; }

  /// Number of factors of order exactly k.
  int occurrences(int k) const;

  bool operator==(const Signature& other) const {
    return orders_ == other.orders_ || *orders_ == *other.orders_;
  }

  /// Rendered as `2,2,3`.
  std::string to_string() const;

 private:
  std::shared_ptr<const std::vector<int>> orders_;
};

struct Syllable {
  int factor = 0;
  int exponent = 1;  // in 1..n_factor-1

  bool operator==(const Syllable&) const = default;
};

/// Maximum number of syllables a word may hold. Defaults to 10^6 and can be
/// overridden with the FPCYC_MAX_WORD_LEN environment variable.
std::size_t max_word_length();

class Word {
 public:
  /// The identity element.
  explicit Word(Signature signature);

  /// Normalizes an arbitrary syllable sequence; exponents may be any integer.
  Word(Signature signature, std::span<const Syllable> syllables);

  static Word generator(const Signature& signature, int factor, int exponent = 1);

  const Signature& signature() const { return signature_; }
  std::span<const Syllable> syllables() const { return syllables_; }
  std::size_t length() const { return syllables_.size(); }
  bool is_identity() const { return syllables_.empty(); }

  bool operator==(const Word& other) const;

  /// Shortlex: shorter words first, then by (factor, exponent) per syllable.
  bool operator<(const Word& other) const;

  /// `e` for the identity, otherwise `x<i>^<e>` joined by `*`.
  std::string to_string() const;

 private:
  friend Word multiply(const Word&, const Word&);
  friend Word invert(const Word&);

  void push(Syllable s);

  Signature signature_;
  std::vector<Syllable> syllables_;
};

Word multiply(const Word& a, const Word& b);
inline Word operator*(const Word& a, const Word& b) { return multiply(a, b); }
Word invert(const Word& a);
Word power(const Word& a, long k);

struct CyclicReduction {
  Word core;
  Word conjugator;  // a == conjugator * core * conjugator^-1
};

CyclicReduction cyclically_reduce(const Word& a);

/// Element order; std::nullopt stands for infinite order.
using ElementOrder = std::optional<int>;

ElementOrder order(const Word& a);
bool is_conjugate(const Word& a, const Word& b);

/// Exponent sum of `factor` syllables mod n_factor.
int project_to_factor(const Word& a, int factor);

/// Image in G / <<x_k : k in kill>>, written over the same signature.
Word delete_factors(const Word& a, const std::set<int>& kill);

Signature parse_signature(std::string_view text);
Word parse_word(const Signature& signature, std::string_view text);

int euler_phi(int n);

}  // namespace fpcyc

template <>
struct std::hash<fpcyc::Word> {
  std::size_t operator()(const fpcyc::Word& w) const noexcept;
};
