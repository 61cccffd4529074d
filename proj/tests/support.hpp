#pragma once

// Random generators and brute-force oracles shared by the test suites.

#include <random>
#include <vector>

#include "fpcyc/word.hpp"

namespace fpcyc::testing {

inline Signature random_signature(std::mt19937_64& rng, int max_rank, int max_order,
                                  int min_rank = 1) {
  std::uniform_int_distribution<int> rank(min_rank, max_rank);
  std::uniform_int_distribution<int> order(2, max_order);
  std::vector<int> orders(static_cast<std::size_t>(rank(rng)));
  for (int& n : orders) n = order(rng);
  return Signature(orders);
}

/// A random syllable sequence, not necessarily reduced.
inline Word random_word(std::mt19937_64& rng, const Signature& sig, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> factor(0, sig.rank() - 1);
  std::vector<Syllable> s;
  int n = len(rng);
  for (int k = 0; k < n; ++k) {
    int f = factor(rng);
    std::uniform_int_distribution<int> e(1, sig.order(f) - 1);
    s.push_back({f, e(rng)});
  }
  return Word(sig, s);
}

/// Every normal-form word with at most `max_len` syllables.
inline std::vector<Word> all_words(const Signature& sig, int max_len) {
  std::vector<Word> out{Word(sig)};
  std::vector<std::vector<Syllable>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Syllable>> next;
    for (const auto& w : frontier) {
      for (int f = 0; f < sig.rank(); ++f) {
        if (!w.empty() && w.back().factor == f) continue;
        for (int e = 1; e < sig.order(f); ++e) {
          auto v = w;
          v.push_back({f, e});
          out.emplace_back(sig, v);
          next.push_back(std::move(v));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

/// Conjugacy by exhaustive search over conjugators.
inline bool brute_force_conjugate(const Word& a, const Word& b,
                                  const std::vector<Word>& conjugators) {
  for (const Word& c : conjugators) {
    if (c * a * invert(c) == b) return true;
  }
  return false;
}

}  // namespace fpcyc::testing
