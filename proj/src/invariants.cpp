#include <algorithm>
#include <numeric>

#include "fpcyc/invariants.hpp"

namespace fpcyc {

namespace {

int max_order(const Signature& sig) {
  return *std::max_element(sig.orders().begin(), sig.orders().end());
}

/// Order by repeated multiplication; a torsion element has order at most
/// max n_i, so anything surviving that many steps is reported as infinite.
std::optional<int> order_by_powering(const Word& w, int bound) {
  Word p = w;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = p * w;
  }
  return std::nullopt;
}

void enumerate(const Signature& sig, int syllables, int last, const Word& prefix, std::vector<Word>& out,
               std::size_t budget) {
  out.push_back(prefix);
  if (out.size() > budget) {
    throw CensusBudgetExceeded("brute-force census needs more than " + std::to_string(budget) + " words");
  }
  if (syllables == 0) return;
  for (int f = 0; f < sig.rank(); ++f) {
    if (f == last) continue;
    for (int e = 1; e < sig.order(f); ++e) {
      enumerate(sig, syllables - 1, f, prefix * Word::generator(sig, f, e), out, budget);
    }
  }
}

std::vector<Generator> standard_generators(const Signature& sig) {
  std::vector<Generator> out;
  for (const auto& e : all_factor_automorphisms(sig)) out.emplace_back(e);
  for (const auto& p : admissible_permutations(sig)) out.emplace_back(p);
  for (const auto& c : all_partial_conjugations(sig)) out.emplace_back(c);
  return out;
}

}  // namespace

long ConjugacyCensus::c(int k) const {
  auto it = classes.find(k);
  return it == classes.end() ? 0 : it->second;
}

std::string ConjugacyCensus::to_string() const {
  std::string out;
  for (const auto& [k, count] : classes) {
    if (!out.empty()) out += ' ';
    out += "c(" + std::to_string(k) + ")=" + std::to_string(count);
  }
  return out;
}

ConjugacyCensus conjugacy_census(const Signature& sig) {
  ConjugacyCensus census{sig, {}};
  for (int k = 2; k <= max_order(sig); ++k) {
    long dividing = 0;
    for (int n : sig.orders()) dividing += n % k == 0;
    if (dividing) census.classes[k] = euler_phi(k) * dividing;
  }
  return census;
}

ConjugacyCensus conjugacy_census_brute_force(const Signature& sig, int max_length, std::size_t budget) {
  if (max_length < 0) throw std::invalid_argument("negative length");
  std::vector<Word> words;
  enumerate(sig, max_length, -1, Word(sig), words, budget);
  int bound = max_order(sig);
  std::map<int, std::vector<Word>> reps;
  for (const Word& w : words) {
    auto o = order_by_powering(w, bound);
    if (!o || *o == 1) continue;
    auto& classes = reps[*o];
    bool known = std::any_of(classes.begin(), classes.end(), [&](const Word& r) { return is_conjugate(r, w); });
    if (!known) classes.push_back(w);
  }
  ConjugacyCensus census{sig, {}};
  for (const auto& [k, classes] : reps) census.classes[k] = static_cast<long>(classes.size());
  return census;
}

Occurrences occurrences(const ConjugacyCensus& census, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  int top = census.classes.empty() ? 0 : census.classes.rbegin()->first;
  Occurrences out{k, 0, 0};
  if (k > top) return out;
  // occ(j) for j = top down to k
  std::map<int, long> occ;
  for (int j = top; j >= k; --j) {
    long v = census.c(j) / euler_phi(j);
    for (int m = 2 * j; m <= top; m += j) v -= occ[m];
    occ[j] = v;
  }
  out.corrected = occ[k];
  out.literal = census.c(k);
  for (int m = 2 * k; m <= top; m += k) out.literal -= census.c(m);
  return out;
}

Occurrences occurrences(const Signature& sig, int k) { return occurrences(conjugacy_census(sig), k); }

std::set<int> order_class(const Signature& sig, int k) {
  std::set<int> out;
  for (int i = 0; i < sig.rank(); ++i) {
    if (sig.order(i) == k) out.insert(i);
  }
  return out;
}

Report is_characteristic_Nk(const Signature& sig, int k) {
  std::set<int> cls = order_class(sig, k);
  if (cls.empty()) throw std::invalid_argument("order " + std::to_string(k) + " does not occur");
  Report r;
  for (const Generator& g : standard_generators(sig)) {
    Automorphism f = Automorphism::from_generator(sig, g);
    bool ok = true;
    std::string witness;
    for (int i : cls) {
      const Word& image = f.images()[static_cast<std::size_t>(i)];
      if (!delete_factors(image, cls).is_identity()) {
        ok = false;
        witness = "x" + std::to_string(i + 1) + "->" + image.to_string();
        break;
      }
    }
    r.add("N(" + std::to_string(k) + "):" + to_string(g), ok, witness);
  }
  return r;
}

Signature quotient_signature(const Signature& sig, const std::set<int>& kill) {
  std::vector<int> orders;
  for (int i = 0; i < sig.rank(); ++i) {
    if (!kill.count(i)) orders.push_back(sig.order(i));
  }
  if (orders.empty()) throw std::invalid_argument("every factor would be killed");
  return Signature(std::move(orders));
}

Word to_quotient(const Word& w, const std::set<int>& kill, const Signature& quotient) {
  std::vector<int> renumber(static_cast<std::size_t>(w.signature().rank()), -1);
  int next = 0;
  for (int i = 0; i < w.signature().rank(); ++i) {
    if (!kill.count(i)) renumber[static_cast<std::size_t>(i)] = next++;
  }
  std::vector<Syllable> out;
  for (const Syllable& s : w.syllables()) {
    int j = renumber[static_cast<std::size_t>(s.factor)];
    if (j >= 0) out.push_back({j, s.exponent});
  }
  return Word(quotient, out);
}

Automorphism induced_automorphism(const Automorphism& f, const std::set<int>& kill) {
  const Signature& sig = f.signature();
  for (int i : kill) {
    if (i < 0 || i >= sig.rank()) throw std::out_of_range("factor index out of range");
    for (int j : order_class(sig, sig.order(i))) {
      if (!kill.count(j)) {
        throw std::invalid_argument("kill set is not a union of order classes: x" + std::to_string(i + 1) +
                                    " and x" + std::to_string(j + 1) + " have the same order");
      }
    }
  }
  Signature q = quotient_signature(sig, kill);
  std::vector<Word> images;
  for (int i = 0; i < sig.rank(); ++i) {
    if (!kill.count(i)) images.push_back(to_quotient(f.images()[static_cast<std::size_t>(i)], kill, q));
  }
  return Automorphism::from_images(q, std::move(images));
}

Report surjectivity_check(const Signature& sig, const std::set<int>& keep_orders) {
  std::set<int> kill;
  for (int i = 0; i < sig.rank(); ++i) {
    if (!keep_orders.count(sig.order(i))) kill.insert(i);
  }
  Signature q = quotient_signature(sig, kill);
  std::vector<std::pair<Generator, Automorphism>> induced;
  for (const Generator& g : standard_generators(sig)) {
    induced.emplace_back(g, induced_automorphism(Automorphism::from_generator(sig, g), kill));
  }
  Report r;
  for (const Generator& target : standard_generators(q)) {
    Automorphism t = Automorphism::from_generator(q, target);
    auto it = std::find_if(induced.begin(), induced.end(), [&](const auto& p) { return p.second == t; });
    r.add("preimage:" + to_string(target), it != induced.end(),
          it != induced.end() ? to_string(it->first) : std::string{});
  }
  return r;
}

}  // namespace fpcyc
