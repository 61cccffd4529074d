#include "fpcyc/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fpcyc {

namespace {

int mod_inverse(int a, int n) {
  for (int b = 1; b < n; ++b) {
    if ((a * b) % n == 1) return b;
  }
  throw std::domain_error("not a unit");
}

Word x(const Signature& sig, int i, int e = 1) { return Word::generator(sig, i, e); }

void check_generator(const Signature& sig, const Generator& g) {
  const int m = sig.rank();
  if (const auto* f = std::get_if<FactorAuto>(&g)) {
    if (static_cast<int>(f->exponents.size()) != m) {
      throw std::invalid_argument("factor automorphism needs " + std::to_string(m) + " exponents");
    }
    for (int i = 0; i < m; ++i) {
      if (std::gcd(f->exponents[i], sig.order(i)) != 1) {
        throw std::invalid_argument("exponent " + std::to_string(f->exponents[i]) +
                                    " is not a unit mod " + std::to_string(sig.order(i)));
      }
    }
  } else if (const auto* p = std::get_if<Permutation>(&g)) {
    if (static_cast<int>(p->images.size()) != m) {
      throw std::invalid_argument("permutation needs " + std::to_string(m) + " images");
    }
    std::vector<bool> seen(m, false);
    for (int i = 0; i < m; ++i) {
      int t = p->images[i];
      if (t < 0 || t >= m || seen[t]) throw std::invalid_argument("not a permutation");
      seen[t] = true;
      if (sig.order(t) != sig.order(i)) {
        throw std::invalid_argument("permutation does not preserve factor orders");
      }
    }
  } else {
    const auto& pc = std::get<PartialConj>(g);
    if (pc.target < 0 || pc.target >= m || pc.conjugator < 0 || pc.conjugator >= m ||
        pc.target == pc.conjugator) {
      throw std::invalid_argument("partial conjugation needs distinct indices in 1.." +
                                  std::to_string(m));
    }
  }
}

std::vector<Word> generator_images(const Signature& sig, const Generator& g) {
  std::vector<Word> images;
  const int m = sig.rank();
  images.reserve(m);
  if (const auto* f = std::get_if<FactorAuto>(&g)) {
    for (int i = 0; i < m; ++i) images.push_back(x(sig, i, f->exponents[i]));
  } else if (const auto* p = std::get_if<Permutation>(&g)) {
    for (int i = 0; i < m; ++i) images.push_back(x(sig, p->images[i]));
  } else {
    const auto& pc = std::get<PartialConj>(g);
    for (int i = 0; i < m; ++i) images.push_back(x(sig, i));
    images[pc.target] = x(sig, pc.conjugator) * x(sig, pc.target) * x(sig, pc.conjugator, -1);
  }
  return images;
}

// Recognizes images that coincide with a standard generator.
Tag classify(const Signature& sig, const std::vector<Word>& images) {
  const int m = sig.rank();
  bool diagonal = true;
  for (int i = 0; i < m && diagonal; ++i) {
    diagonal = images[i].length() == 1 && images[i].syllables()[0].factor == i;
  }
  if (diagonal) {
    FactorAuto f;
    for (int i = 0; i < m; ++i) f.exponents.push_back(images[i].syllables()[0].exponent);
    bool units = true;
    for (int i = 0; i < m; ++i) units = units && std::gcd(f.exponents[i], sig.order(i)) == 1;
    if (units) return f;
  }
  bool letters = true;
  Permutation p;
  for (int i = 0; i < m && letters; ++i) {
    letters = images[i].length() == 1 && images[i].syllables()[0].exponent == 1;
    if (letters) p.images.push_back(images[i].syllables()[0].factor);
  }
  if (letters) {
    try {
      check_generator(sig, p);
      return p;
    } catch (const std::invalid_argument&) {
    }
  }
  int moved = -1;
  for (int i = 0; i < m; ++i) {
    if (!(images[i] == x(sig, i))) {
      if (moved >= 0) return Composite{};
      moved = i;
    }
  }
  if (moved >= 0 && images[moved].length() == 3) {
    auto s = images[moved].syllables();
    int c = s[0].factor;
    if (s[1].factor == moved && s[1].exponent == 1 && s[2].factor == c && s[0].exponent == 1 &&
        s[2].exponent == sig.order(c) - 1) {
      return PartialConj{moved, c};
    }
  }
  return Composite{};
}

std::optional<Generator> as_generator(const Tag& tag) {
  if (const auto* f = std::get_if<FactorAuto>(&tag)) return *f;
  if (const auto* p = std::get_if<Permutation>(&tag)) return *p;
  if (const auto* pc = std::get_if<PartialConj>(&tag)) return *pc;
  return std::nullopt;
}

std::vector<Generator> inverse_factors(const Signature& sig, const Generator& g) {
  if (const auto* f = std::get_if<FactorAuto>(&g)) {
    FactorAuto inv;
    for (int i = 0; i < sig.rank(); ++i) {
      inv.exponents.push_back(mod_inverse(f->exponents[i] % sig.order(i), sig.order(i)));
    }
    return {inv};
  }
  if (const auto* p = std::get_if<Permutation>(&g)) {
    Permutation inv;
    inv.images.assign(p->images.size(), 0);
    for (std::size_t i = 0; i < p->images.size(); ++i) inv.images[p->images[i]] = static_cast<int>(i);
    return {inv};
  }
  // alpha^-1 = alpha^{n_c - 1}
  const auto& pc = std::get<PartialConj>(g);
  return std::vector<Generator>(static_cast<std::size_t>(sig.order(pc.conjugator) - 1), pc);
}

}  // namespace

std::string to_string(const Generator& g) {
  if (const auto* f = std::get_if<FactorAuto>(&g)) {
    std::string out = "factor:";
    for (std::size_t i = 0; i < f->exponents.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(f->exponents[i]);
    }
    return out;
  }
  if (const auto* p = std::get_if<Permutation>(&g)) {
    std::string out = "perm:";
    std::vector<bool> seen(p->images.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < p->images.size(); ++i) {
      if (seen[i] || p->images[i] == static_cast<int>(i)) continue;
      out += '(';
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) out += ' ';
        out += std::to_string(j + 1);
        first = false;
        j = static_cast<std::size_t>(p->images[j]);
      }
      out += ')';
      any = true;
    }
    if (!any) out += "()";
    return out;
  }
  const auto& pc = std::get<PartialConj>(g);
  return "pc:" + std::to_string(pc.target + 1) + "," + std::to_string(pc.conjugator + 1);
}

Automorphism::Automorphism(Signature sig, std::vector<Word> images, Tag tag,
                           std::optional<std::vector<Generator>> factorization)
    : signature_(std::move(sig)),
      images_(std::move(images)),
      tag_(std::move(tag)),
      factorization_(std::move(factorization)) {}

Automorphism Automorphism::identity(const Signature& sig) {
  FactorAuto ones{std::vector<int>(static_cast<std::size_t>(sig.rank()), 1)};
  return Automorphism(sig, generator_images(sig, ones), ones, std::vector<Generator>{});
}

Automorphism Automorphism::from_generator(const Signature& sig, const Generator& g) {
  check_generator(sig, g);
  Generator normalized = g;
  if (auto* f = std::get_if<FactorAuto>(&normalized)) {
    for (int i = 0; i < sig.rank(); ++i) {
      int n = sig.order(i);
      f->exponents[i] = ((f->exponents[i] % n) + n) % n;
    }
  }
  auto images = generator_images(sig, normalized);
  Tag tag = std::visit([](const auto& v) -> Tag { return v; }, normalized);
  return Automorphism(sig, std::move(images), std::move(tag), std::vector<Generator>{normalized});
}

Automorphism Automorphism::from_images(const Signature& sig, std::vector<Word> images) {
  if (static_cast<int>(images.size()) != sig.rank()) {
    throw std::invalid_argument("expected " + std::to_string(sig.rank()) + " images");
  }
  for (int i = 0; i < sig.rank(); ++i) {
    if (!(images[i].signature() == sig)) throw SignatureMismatch();
    ElementOrder o = order(images[i]);
    if (!o || sig.order(i) % *o != 0) {
      throw std::invalid_argument("image of x" + std::to_string(i + 1) +
                                  " has order not dividing " + std::to_string(sig.order(i)));
    }
  }
  Tag tag = classify(sig, images);
  std::optional<std::vector<Generator>> factors;
  if (auto g = as_generator(tag)) factors = std::vector<Generator>{*g};
  return Automorphism(sig, std::move(images), std::move(tag), std::move(factors));
}

Word Automorphism::apply(const Word& w) const {
  if (!(w.signature() == signature_)) throw SignatureMismatch();
  // Powers of each image are computed at most once per call.
  std::vector<std::vector<std::optional<Word>>> cache(images_.size());
  Word out(signature_);
  for (const Syllable& s : w.syllables()) {
    auto& slot = cache[s.factor];
    if (slot.empty()) slot.resize(static_cast<std::size_t>(signature_.order(s.factor)));
    auto& p = slot[s.exponent];
    if (!p) p = power(images_[s.factor], s.exponent);
    out = multiply(out, *p);
  }
  return out;
}

std::string Automorphism::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ", ";
    out += "x" + std::to_string(i + 1) + "->" + images_[i].to_string();
  }
  return out;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (!(f.signature() == g.signature())) throw SignatureMismatch();
  std::vector<Word> images;
  images.reserve(g.images().size());
  for (const Word& w : g.images()) images.push_back(f.apply(w));
  std::optional<std::vector<Generator>> factors;
  if (f.factorization() && g.factorization()) {
    factors = *f.factorization();
    factors->insert(factors->end(), g.factorization()->begin(), g.factorization()->end());
  }
  Tag tag = classify(f.signature(), images);
  return Automorphism(f.signature(), std::move(images), std::move(tag), std::move(factors));
}

Automorphism inverse(const Automorphism& f) {
  if (!f.factorization()) {
    throw std::domain_error("inverse needs a factorization into standard generators");
  }
  const Signature& sig = f.signature();
  Automorphism out = Automorphism::identity(sig);
  for (const Generator& g : *f.factorization()) {
    for (const Generator& h : inverse_factors(sig, g)) {
      out = compose(Automorphism::from_generator(sig, h), out);
    }
  }
  return out;
}

Automorphism power(const Automorphism& f, long k) {
  Automorphism base = k < 0 ? inverse(f) : f;
  long e = k < 0 ? -k : k;
  Automorphism out = Automorphism::identity(f.signature());
  for (long i = 0; i < e; ++i) out = compose(out, base);
  return out;
}

Automorphism commutator(const Automorphism& a, const Automorphism& b) {
  return a * b * inverse(a) * inverse(b);
}

Automorphism partial_conjugation(const Signature& sig, int target, int conjugator) {
  return Automorphism::from_generator(sig, PartialConj{target, conjugator});
}

Automorphism inner(const Word& c) {
  const Signature& sig = c.signature();
  // c_{x_j} is the product of alpha_k^j over k != j.
  Automorphism out = Automorphism::identity(sig);
  for (const Syllable& s : c.syllables()) {
    for (int e = 0; e < s.exponent; ++e) {
      for (int k = 0; k < sig.rank(); ++k) {
        if (k != s.factor) out = compose(out, partial_conjugation(sig, k, s.factor));
      }
    }
  }
  return out;
}

std::optional<Word> inner_conjugator(const Automorphism& f) {
  const Signature& sig = f.signature();
  auto [core, c] = cyclically_reduce(f.images()[0]);
  if (!(core == x(sig, 0))) return std::nullopt;
  for (int t = 0; t < sig.order(0); ++t) {
    Word w = c * x(sig, 0, t);
    Word w_inv = invert(w);
    bool ok = true;
    for (int i = 0; i < sig.rank() && ok; ++i) ok = f.images()[i] == w * x(sig, i) * w_inv;
    if (ok) return w;
  }
  return std::nullopt;
}

std::optional<std::pair<FactorAuto, Permutation>> is_factor_times_sym(const Automorphism& f) {
  const Signature& sig = f.signature();
  const int m = sig.rank();
  FactorAuto eps{std::vector<int>(static_cast<std::size_t>(m), 1)};
  Permutation sigma;
  for (int i = 0; i < m; ++i) {
    const Word& img = f.images()[i];
    if (img.length() != 1) return std::nullopt;
    const Syllable& s = img.syllables()[0];
    sigma.images.push_back(s.factor);
    eps.exponents[s.factor] = s.exponent;
  }
  try {
    check_generator(sig, sigma);
    check_generator(sig, eps);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return std::make_pair(eps, sigma);
}

std::vector<FactorAuto> all_factor_automorphisms(const Signature& sig) {
  std::vector<std::vector<int>> units(static_cast<std::size_t>(sig.rank()));
  for (int i = 0; i < sig.rank(); ++i) {
    for (int k = 1; k < sig.order(i); ++k) {
      if (std::gcd(k, sig.order(i)) == 1) units[i].push_back(k);
    }
  }
  std::vector<FactorAuto> out;
  std::vector<std::size_t> idx(units.size(), 0);
  while (true) {
    FactorAuto f;
    for (std::size_t i = 0; i < units.size(); ++i) f.exponents.push_back(units[i][idx[i]]);
    out.push_back(std::move(f));
    std::size_t pos = units.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < units[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (units.empty()) return out;
  }
}

std::vector<Permutation> admissible_permutations(const Signature& sig) {
  std::vector<int> p(static_cast<std::size_t>(sig.rank()));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (int i = 0; i < sig.rank() && ok; ++i) ok = sig.order(p[i]) == sig.order(i);
    if (ok) out.push_back(Permutation{p});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<PartialConj> all_partial_conjugations(const Signature& sig) {
  std::vector<PartialConj> out;
  for (int i = 0; i < sig.rank(); ++i) {
    for (int j = 0; j < sig.rank(); ++j) {
      if (i != j) out.push_back({i, j});
    }
  }
  return out;
}

namespace {

Generator parse_generator(const Signature& sig, std::string_view tok, std::size_t offset) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  std::size_t lead = tok.find_first_not_of(' ');
  if (lead == std::string_view::npos) throw ParseError("empty automorphism factor", offset);
  offset += lead;
  tok = strip(tok);
  auto ints = [&](std::string_view body, std::size_t at) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (true) {
      while (pos < body.size() && body[pos] == ' ') ++pos;
      std::size_t start = pos;
      bool neg = pos < body.size() && body[pos] == '-';
      if (neg) ++pos;
      long v = 0;
      std::size_t digits = 0;
      while (pos < body.size() && body[pos] >= '0' && body[pos] <= '9') {
        v = v * 10 + (body[pos] - '0');
        ++pos;
        ++digits;
        if (v > 1'000'000) throw ParseError("integer too large", at + start);
      }
      if (digits == 0) throw ParseError("expected integer", at + start);
      out.push_back(static_cast<int>(neg ? -v : v));
      while (pos < body.size() && body[pos] == ' ') ++pos;
      if (pos == body.size()) return out;
      if (body[pos] != ',') throw ParseError("expected ','", at + pos);
      ++pos;
    }
  };

  try {
    if (tok == "id") return FactorAuto{std::vector<int>(static_cast<std::size_t>(sig.rank()), 1)};
    if (tok.starts_with("factor:")) {
      auto v = ints(tok.substr(7), offset + 7);
      if (static_cast<int>(v.size()) != sig.rank()) {
        throw ParseError("expected " + std::to_string(sig.rank()) + " exponents", offset + 7);
      }
      FactorAuto f{v};
      check_generator(sig, f);
      return f;
    }
    if (tok.starts_with("pc:")) {
      auto v = ints(tok.substr(3), offset + 3);
      if (v.size() != 2) throw ParseError("expected pc:i,j", offset + 3);
      PartialConj pc{v[0] - 1, v[1] - 1};
      check_generator(sig, pc);
      return pc;
    }
    if (tok.starts_with("perm:")) {
      Permutation p;
      p.images.resize(static_cast<std::size_t>(sig.rank()));
      std::iota(p.images.begin(), p.images.end(), 0);
      std::vector<bool> used(static_cast<std::size_t>(sig.rank()), false);
      std::size_t pos = 5;
      while (pos < tok.size()) {
        if (tok[pos] == ' ') {
          ++pos;
          continue;
        }
        if (tok[pos] != '(') throw ParseError("expected '('", offset + pos);
        std::size_t close = tok.find(')', pos);
        if (close == std::string_view::npos) throw ParseError("unclosed cycle", offset + pos);
        std::string_view body = tok.substr(pos + 1, close - pos - 1);
        std::vector<int> cycle;
        std::size_t q = 0;
        while (q < body.size()) {
          if (body[q] == ' ' || body[q] == ',') {
            ++q;
            continue;
          }
          std::size_t start = q;
          int v = 0;
          while (q < body.size() && body[q] >= '0' && body[q] <= '9') v = v * 10 + (body[q++] - '0');
          if (q == start) throw ParseError("expected integer", offset + pos + 1 + start);
          if (v < 1 || v > sig.rank()) {
            throw ParseError("index out of range", offset + pos + 1 + start);
          }
          if (used[v - 1]) throw ParseError("repeated index", offset + pos + 1 + start);
          used[v - 1] = true;
          cycle.push_back(v - 1);
        }
        // Cycles compose left to right as disjoint cycles.
        for (std::size_t c = 0; c < cycle.size(); ++c) {
          p.images[cycle[c]] = cycle[(c + 1) % cycle.size()];
        }
        pos = close + 1;
      }
      check_generator(sig, p);
      return p;
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), offset);
  }
  throw ParseError("unknown automorphism '" + std::string(tok) + "'", offset);
}

}  // namespace

Automorphism parse_automorphism(const Signature& sig, std::string_view text) {
  Automorphism out = Automorphism::identity(sig);
  std::size_t start = 0;
  while (true) {
    std::size_t star = text.find('*', start);
    std::string_view tok = text.substr(start, star == std::string_view::npos ? text.size() - start
                                                                             : star - start);
    out = compose(out, Automorphism::from_generator(sig, parse_generator(sig, tok, start)));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return out;
}

}  // namespace fpcyc
