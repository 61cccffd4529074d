#include <random>

#include "doctest.h"
#include "fpcyc/automorphism.hpp"
#include "support.hpp"

using namespace fpcyc;
using fpcyc::testing::random_signature;
using fpcyc::testing::random_word;

namespace {

Word w(const Signature& sig, const char* text) { return parse_word(sig, text); }

Automorphism gen(const Signature& sig, Generator g) { return Automorphism::from_generator(sig, g); }

/// A random product of up to `max_len` standard generators.
Automorphism random_automorphism(std::mt19937_64& rng, const Signature& sig, int max_len) {
  auto factors = all_factor_automorphisms(sig);
  auto perms = admissible_permutations(sig);
  auto pcs = all_partial_conjugations(sig);
  Automorphism out = Automorphism::identity(sig);
  int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  for (int k = 0; k < len; ++k) {
    switch (rng() % 3) {
      case 0: out = out * gen(sig, factors[rng() % factors.size()]); break;
      case 1: out = out * gen(sig, perms[rng() % perms.size()]); break;
      default:
        if (!pcs.empty()) out = out * gen(sig, pcs[rng() % pcs.size()]);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("apply partial conjugations") {
  Signature sig({3, 3, 3});
  Automorphism a12 = partial_conjugation(sig, 0, 1);
  CHECK(a12.apply(w(sig, "x1")) == w(sig, "x2*x1*x2^2"));
  CHECK(a12.apply(w(sig, "x3")) == w(sig, "x3"));
  Word v = w(sig, "x1*x3^2*x2");
  CHECK(Automorphism::identity(sig).apply(v) == v);
}

TEST_CASE("compose") {
  Signature sig({3, 3, 3});
  Automorphism a12 = partial_conjugation(sig, 0, 1);
  CHECK(a12 * Automorphism::identity(sig) == a12);

  Automorphism c1 = partial_conjugation(sig, 1, 0) * partial_conjugation(sig, 2, 0);
  CHECK(c1.images()[0] == w(sig, "x1"));
  CHECK(c1.images()[1] == w(sig, "x1*x2*x1^2"));
  CHECK(c1.images()[2] == w(sig, "x1*x3*x1^2"));
  CHECK(c1 == inner(w(sig, "x1")));
  CHECK(std::holds_alternative<Composite>(c1.tag()));

  Automorphism t = gen(sig, Permutation{{1, 0, 2}});
  CHECK(t * t == Automorphism::identity(sig));
  CHECK(std::holds_alternative<FactorAuto>((t * t).tag()));
}

TEST_CASE("conjugation relations between generators") {
  Signature sig({3, 3, 3});
  Automorphism a12 = partial_conjugation(sig, 0, 1);
  Automorphism eps = gen(sig, FactorAuto{{1, 2, 1}});
  CHECK(eps * a12 * inverse(eps) == power(a12, 2));

  Automorphism pi = gen(sig, Permutation{{1, 2, 0}});  // (1 2 3)
  CHECK(pi * a12 * inverse(pi) == partial_conjugation(sig, 1, 2));
  CHECK_FALSE(a12 == partial_conjugation(sig, 1, 2));
}

TEST_CASE("is_factor_times_sym") {
  Signature s3({3, 3, 3});
  auto id = is_factor_times_sym(Automorphism::identity(s3));
  REQUIRE(id);
  CHECK(id->first.exponents == std::vector<int>{1, 1, 1});
  CHECK(id->second.images == std::vector<int>{0, 1, 2});
  CHECK_FALSE(is_factor_times_sym(partial_conjugation(s3, 0, 1)));

  Signature s55({5, 5});
  Automorphism f = Automorphism::from_images(s55, {w(s55, "x2^2"), w(s55, "x1")});
  auto pair = is_factor_times_sym(f);
  REQUIRE(pair);
  CHECK(pair->second.images == std::vector<int>{1, 0});
  CHECK(pair->first.exponents == std::vector<int>{1, 2});
  CHECK(gen(s55, pair->first) * gen(s55, pair->second) == f);
}

TEST_CASE("from_images validation") {
  Signature sig({2, 3});
  CHECK_THROWS_AS(Automorphism::from_images(sig, {w(sig, "x2"), w(sig, "x2")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Automorphism::from_images(sig, {w(sig, "x1*x2"), w(sig, "x2")}),
                  std::invalid_argument);
  Automorphism ok = Automorphism::from_images(sig, {w(sig, "x2*x1*x2^2"), w(sig, "x2")});
  CHECK(std::holds_alternative<PartialConj>(ok.tag()));
  CHECK_THROWS_AS(gen(sig, Permutation{{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(gen(sig, FactorAuto{{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(gen(sig, PartialConj{1, 1}), std::invalid_argument);
}

TEST_CASE("inverse needs a factorization") {
  Signature sig({3, 3, 3});
  Automorphism f = gen(sig, PartialConj{0, 1}) * gen(sig, FactorAuto{{2, 1, 2}}) *
                   gen(sig, Permutation{{0, 2, 1}});
  CHECK(f * inverse(f) == Automorphism::identity(sig));
  CHECK(inverse(f) * f == Automorphism::identity(sig));
  Automorphism raw = Automorphism::from_images(sig, f.images());
  CHECK_FALSE(raw.factorization().has_value());
  CHECK_THROWS_AS(inverse(raw), std::domain_error);
}

TEST_CASE("inner_conjugator") {
  Signature sig({3, 2, 4});
  Word c = w(sig, "x1*x3^3*x2");
  auto found = inner_conjugator(inner(c));
  REQUIRE(found);
  CHECK(*found == c);
  CHECK_FALSE(inner_conjugator(partial_conjugation(sig, 0, 1)));
  CHECK(inner_conjugator(Automorphism::identity(sig)) == Word(sig));
}

TEST_CASE("text format") {
  Signature sig({3, 3, 3});
  CHECK(parse_automorphism(sig, "pc:1,2") == partial_conjugation(sig, 0, 1));
  CHECK(parse_automorphism(sig, "pc:2,1*pc:3,1") == inner(w(sig, "x1")));
  CHECK(parse_automorphism(sig, "perm:(1 2 3)").images()[0] == w(sig, "x2"));
  CHECK(parse_automorphism(sig, "factor:1,2,1*pc:1,2*factor:1,2,1") ==
        power(partial_conjugation(sig, 0, 1), 2));
  CHECK(parse_automorphism(sig, "id") == Automorphism::identity(sig));
  CHECK(to_string(Generator{Permutation{{1, 2, 0}}}) == "perm:(1 2 3)");
  CHECK(to_string(Generator{PartialConj{0, 2}}) == "pc:1,3");

  auto position_of = [&](const char* text) -> std::size_t {
    try {
      parse_automorphism(sig, text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(position_of("pc:1,1") == 0);
  CHECK(position_of("pc:1,2*bogus") == 7);
  CHECK(position_of("factor:1,x,1") == 9);
  CHECK(position_of("perm:(1 4)") == 8);
}

TEST_CASE("apply is a homomorphism, fuzzed") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    Signature sig = random_signature(rng, 4, 5, 2);
    Automorphism f = random_automorphism(rng, sig, 5);
    Word a = random_word(rng, sig, 8), b = random_word(rng, sig, 8);
    REQUIRE(f.apply(a * b) == f.apply(a) * f.apply(b));
  }
}

TEST_CASE("compose is associative and equality is a congruence, fuzzed") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    Signature sig = random_signature(rng, 4, 5, 2);
    Automorphism f = random_automorphism(rng, sig, 4);
    Automorphism g = random_automorphism(rng, sig, 4);
    Automorphism h = random_automorphism(rng, sig, 4);
    REQUIRE((f * g) * h == f * (g * h));
    Automorphism g2 = Automorphism::from_images(sig, g.images());
    REQUIRE(f * g2 == f * g);
    REQUIRE(g2 * h == g * h);
  }
}

TEST_CASE("partial-conjugation products meet F x| Sym only in the identity") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    Signature sig = random_signature(rng, 4, 4, 2);
    auto pcs = all_partial_conjugations(sig);
    Automorphism f = Automorphism::identity(sig);
    int len = static_cast<int>(rng() % 7);
    for (int k = 0; k < len; ++k) f = f * gen(sig, pcs[rng() % pcs.size()]);
    bool identity = f == Automorphism::identity(sig);
    REQUIRE(is_factor_times_sym(f).has_value() == identity);
  }
}

TEST_CASE("full products of partial conjugations are inner") {
  for (int m = 2; m <= 4; ++m) {
    std::vector<int> orders(static_cast<std::size_t>(m), 2);
    // every signature with entries in 2..4
    while (true) {
      Signature sig(orders);
      for (int j = 0; j < m; ++j) {
        Automorphism prod = Automorphism::identity(sig);
        for (int k = 0; k < m; ++k) {
          if (k != j) prod = prod * partial_conjugation(sig, k, j);
        }
        REQUIRE(prod == inner(Word::generator(sig, j)));
        Word x = Word::generator(sig, j);
        for (int i = 0; i < m; ++i) {
          Word xi = Word::generator(sig, i);
          REQUIRE(prod.apply(xi) == x * xi * invert(x));
        }
      }
      int pos = 0;
      while (pos < m && ++orders[pos] > 4) orders[pos++] = 2;
      if (pos == m) break;
    }
  }
}
