#include "fpcyc/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace fpcyc {

namespace {

int mod(long value, int n) {
  long r = value % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

WordOverflow::WordOverflow(std::size_t length)
    : std::length_error("word length " + std::to_string(length) +
                        " exceeds cap " + std::to_string(max_word_length())) {}

ParseError::ParseError(std::string message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)),
      position_(position) {}

Signature::Signature(std::vector<int> orders) {
  if (orders.empty()) throw std::invalid_argument("signature must have at least one factor");
  for (int n : orders) {
    if (n < 2) throw std::invalid_argument("factor order " + std::to_string(n) + " < 2");
  }
  orders_ = std::make_shared<const std::vector<int>>(std::move(orders));
}

int Signature::occurrences(int k) const {
  return static_cast<int>(std::count(orders_->begin(), orders_->end(), k));
}

std::string Signature::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < orders_->size(); ++i) {
    if (i) out += ',';
    out += std::to_string((*orders_)[i]);
  }
  return out;
}

std::size_t max_word_length() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("FPCYC_MAX_WORD_LEN")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(1'000'000);
  }();
  return cap;
}

Word::Word(Signature signature) : signature_(std::move(signature)) {}

Word::Word(Signature signature, std::span<const Syllable> syllables)
    : signature_(std::move(signature)) {
  syllables_.reserve(syllables.size());
  for (const Syllable& s : syllables) {
    if (s.factor < 0 || s.factor >= signature_.rank()) {
      throw std::out_of_range("factor index " + std::to_string(s.factor + 1) + " out of range");
    }
    push(s);
  }
}

Word Word::generator(const Signature& signature, int factor, int exponent) {
  Syllable s{factor, exponent};
  return Word(signature, std::span<const Syllable>(&s, 1));
}

// Stack-based free reduction: merge with the top syllable when the factor
// agrees, dropping it when the exponent vanishes.
void Word::push(Syllable s) {
  const int n = signature_.order(s.factor);
  s.exponent = mod(s.exponent, n);
  if (s.exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().factor == s.factor) {
    int e = (syllables_.back().exponent + s.exponent) % n;
    if (e == 0) {
      syllables_.pop_back();
    } else {
      syllables_.back().exponent = e;
    }
    return;
  }
  if (syllables_.size() >= max_word_length()) throw WordOverflow(syllables_.size() + 1);
  syllables_.push_back(s);
}

bool Word::operator==(const Word& other) const {
  return syllables_ == other.syllables_ && signature_ == other.signature_;
}

bool Word::operator<(const Word& other) const {
  if (syllables_.size() != other.syllables_.size()) {
    return syllables_.size() < other.syllables_.size();
  }
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    const Syllable& a = syllables_[i];
    const Syllable& b = other.syllables_[i];
    if (a.factor != b.factor) return a.factor < b.factor;
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
  }
  return false;
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    if (i) out += '*';
    out += 'x';
    out += std::to_string(syllables_[i].factor + 1);
    out += '^';
    out += std::to_string(syllables_[i].exponent);
  }
  return out;
}

Word multiply(const Word& a, const Word& b) {
  if (!(a.signature() == b.signature())) throw SignatureMismatch();
  Word out = a;
  for (const Syllable& s : b.syllables_) out.push(s);
  return out;
}

Word invert(const Word& a) {
  Word out(a.signature());
  out.syllables_.reserve(a.length());
  for (auto it = a.syllables_.rbegin(); it != a.syllables_.rend(); ++it) {
    out.syllables_.push_back({it->factor, a.signature().order(it->factor) - it->exponent});
  }
  return out;
}

Word power(const Word& a, long k) {
  Word base = k < 0 ? invert(a) : a;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Word result(a.signature());
  while (e) {
    if (e & 1UL) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

CyclicReduction cyclically_reduce(const Word& a) {
  const Signature& sig = a.signature();
  auto syl = a.syllables();
  std::size_t lo = 0;
  std::size_t hi = syl.size();  // core is syl[lo, hi) plus the merged tail
  std::vector<Syllable> peeled;
  std::optional<Syllable> tail;

  // Conjugating by the first syllable moves it to the back, where it merges
  // with the last syllable of the same factor. A non-trivial merge leaves a
  // cyclically reduced core.
  while (hi - lo >= 2 && syl[lo].factor == syl[hi - 1].factor) {
    const Syllable first = syl[lo];
    int e = (first.exponent + syl[hi - 1].exponent) % sig.order(first.factor);
    peeled.push_back(first);
    ++lo;
    --hi;
    if (e != 0) {
      tail = Syllable{first.factor, e};
      break;
    }
  }

  std::vector<Syllable> core(syl.begin() + static_cast<std::ptrdiff_t>(lo),
                             syl.begin() + static_cast<std::ptrdiff_t>(hi));
  if (tail) core.push_back(*tail);
  return {Word(sig, core), Word(sig, peeled)};
}

ElementOrder order(const Word& a) {
  Word core = cyclically_reduce(a).core;
  if (core.is_identity()) return 1;
  if (core.length() >= 2) return std::nullopt;
  const Syllable& s = core.syllables()[0];
  int n = a.signature().order(s.factor);
  return n / std::gcd(s.exponent, n);
}

bool is_conjugate(const Word& a, const Word& b) {
  if (!(a.signature() == b.signature())) throw SignatureMismatch();
  Word ca = cyclically_reduce(a).core;
  Word cb = cyclically_reduce(b).core;
  if (ca.length() != cb.length()) return false;
  if (ca.length() <= 1) return ca == cb;
  auto x = ca.syllables();
  auto y = cb.syllables();
  const std::size_t len = x.size();
  for (std::size_t shift = 0; shift < len; ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < len && match; ++i) match = x[(i + shift) % len] == y[i];
    if (match) return true;
  }
  return false;
}

int project_to_factor(const Word& a, int factor) {
  if (factor < 0 || factor >= a.signature().rank()) {
    throw std::out_of_range("factor index " + std::to_string(factor + 1) + " out of range");
  }
  long sum = 0;
  for (const Syllable& s : a.syllables()) {
    if (s.factor == factor) sum += s.exponent;
  }
  return mod(sum, a.signature().order(factor));
}

Word delete_factors(const Word& a, const std::set<int>& kill) {
  if (kill.empty()) return a;
  std::vector<Syllable> kept;
  kept.reserve(a.length());
  for (const Syllable& s : a.syllables()) {
    if (!kill.contains(s.factor)) kept.push_back(s);
  }
  return Word(a.signature(), kept);
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  long integer(bool allow_sign) {
    std::size_t start = pos_;
    if (allow_sign && peek() == '-') ++pos_;
    long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + pos_) {
      throw ParseError("expected integer", start);
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    if (allow_sign && text_[start] == '-') value = -value;
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Signature parse_signature(std::string_view text) {
  Cursor c(text);
  std::vector<int> orders;
  c.skip_space();
  while (true) {
    std::size_t at = c.pos();
    long n = c.integer(false);
    if (n < 2 || n > 1'000'000) throw ParseError("factor order must be >= 2", at);
    orders.push_back(static_cast<int>(n));
    c.skip_space();
    if (c.done()) break;
    if (c.peek() != ',') throw ParseError("expected ','", c.pos());
    c.advance();
    c.skip_space();
  }
  return Signature(std::move(orders));
}

Word parse_word(const Signature& signature, std::string_view text) {
  Cursor c(text);
  c.skip_space();
  if (c.peek() == 'e') {
    c.advance();
    c.skip_space();
    if (!c.done()) throw ParseError("unexpected trailing input", c.pos());
    return Word(signature);
  }
  std::vector<Syllable> syllables;
  while (true) {
    c.skip_space();
    if (c.peek() != 'x') throw ParseError("expected 'x'", c.pos());
    c.advance();
    std::size_t at = c.pos();
    long factor = c.integer(false);
    if (factor < 1 || factor > signature.rank()) {
      throw ParseError("factor index out of range 1.." + std::to_string(signature.rank()), at);
    }
    long exponent = 1;
    c.skip_space();
    if (c.peek() == '^') {
      c.advance();
      exponent = c.integer(true);
    }
    syllables.push_back({static_cast<int>(factor - 1),
                         mod(exponent, signature.order(static_cast<int>(factor - 1)))});
    if (syllables.size() > max_word_length()) throw WordOverflow(syllables.size());
    c.skip_space();
    if (c.done()) break;
    if (c.peek() != '*') throw ParseError("expected '*'", c.pos());
    c.advance();
  }
  return Word(signature, syllables);
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace fpcyc

std::size_t std::hash<fpcyc::Word>::operator()(const fpcyc::Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& s : w.syllables()) {
    h ^= static_cast<std::size_t>(s.factor * 131 + s.exponent);
    h *= 1099511628211ULL;
  }
  return h;
}
