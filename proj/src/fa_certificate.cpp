#include <algorithm>

#include "fpcyc/invariants.hpp"

namespace fpcyc {

namespace {

Automorphism eval(const Signature& sig, const PartialConj& p) {
  return partial_conjugation(sig, p.target, p.conjugator);
}

bool commute(const Signature& sig, const PartialConj& a, const PartialConj& b) {
  Automorphism fa = eval(sig, a);
  Automorphism fb = eval(sig, b);
  return fa * fb == fb * fa;
}

/// Smallest index outside `avoid` with order n; present whenever every order
/// occurs at least 4 times and |avoid| <= 3.
int pick(const Signature& sig, int n, std::initializer_list<int> avoid) {
  for (int l = 0; l < sig.rank(); ++l) {
    if (sig.order(l) == n && std::find(avoid.begin(), avoid.end(), l) == avoid.end()) return l;
  }
  throw std::logic_error("no auxiliary index of order " + std::to_string(n));
}

Permutation swap_of(int rank, std::initializer_list<std::pair<int, int>> transpositions) {
  Permutation p;
  p.images.resize(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) p.images[static_cast<std::size_t>(i)] = i;
  for (auto [u, v] : transpositions) std::swap(p.images[static_cast<std::size_t>(u)], p.images[static_cast<std::size_t>(v)]);
  return p;
}

FACase classify(const PartialConj& a, const PartialConj& b) {
  if (a.conjugator == b.conjugator) return FACase::Commuting;
  if (a.target != b.target && a.target != b.conjugator && a.conjugator != b.target) return FACase::Commuting;
  if (a.target == b.target) return FACase::Case1;
  if (a.conjugator == b.target && b.conjugator == a.target) return FACase::Case2;
  return FACase::Case3;
}

void check_corners(const Signature& sig, FAPairCertificate& cert,
                   std::initializer_list<std::pair<int, int>> commuting) {
  for (auto [u, v] : commuting) {
    const auto& x = cert.corners[static_cast<std::size_t>(u)];
    const auto& y = cert.corners[static_cast<std::size_t>(v)];
    cert.checks.add("commute:" + pc_label(x) + "," + pc_label(y), commute(sig, x, y));
  }
  Automorphism pi = Automorphism::from_generator(sig, cert.swap);
  for (int k = 0; k < 2; ++k) {
    const auto& a = cert.corners[static_cast<std::size_t>(k)];
    const auto& b = cert.corners[static_cast<std::size_t>(k + 2)];
    // a swap is an involution
    Automorphism conj = pi * eval(sig, a) * pi;
    cert.checks.add("conjugate:" + pc_label(a) + "->" + pc_label(b), conj == eval(sig, b),
                    conj == eval(sig, b) ? std::string{} : conj.to_string());
  }
}

FAPairCertificate certify(const Signature& sig, PartialConj a, PartialConj b) {
  FAPairCertificate cert;
  cert.label = classify(a, b);
  if (cert.label == FACase::Case3 && a.target == b.conjugator) std::swap(a, b);
  cert.first = a;
  cert.second = b;
  const int m = sig.rank();
  switch (cert.label) {
    case FACase::Commuting:
      cert.checks.add("commute:" + pc_label(a) + "," + pc_label(b), commute(sig, a, b));
      return cert;
    case FACase::Case1: {
      int i = a.target, j = a.conjugator, s = b.conjugator;
      int l = pick(sig, sig.order(i), {i, j, s});
      cert.aux = {l};
      cert.corners = {a, b, PartialConj{l, j}, PartialConj{l, s}};
      cert.swap = swap_of(m, {{i, l}});
      check_corners(sig, cert, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
      break;
    }
    case FACase::Case2: {
      int i = a.target, j = a.conjugator;
      int k = pick(sig, sig.order(i), {i, j});
      int l = pick(sig, sig.order(j), {i, j, k});
      cert.aux = {k, l};
      cert.corners = {a, b, PartialConj{k, l}, PartialConj{l, k}};
      cert.swap = swap_of(m, {{i, k}, {j, l}});
      check_corners(sig, cert, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
      break;
    }
    case FACase::Case3: {
      int i = a.target, j = a.conjugator, s = b.conjugator;
      int l = pick(sig, sig.order(j), {i, j, s});
      cert.aux = {l};
      cert.corners = {a, b, PartialConj{i, l}, PartialConj{l, s}};
      cert.swap = swap_of(m, {{j, l}});
      check_corners(sig, cert, {{0, 3}, {1, 2}, {1, 3}});
      cert.depends_on = std::pair{cert.corners[0], cert.corners[2]};
      cert.checks.add("depends:" + pc_label(cert.corners[0]) + "," + pc_label(cert.corners[2]) + "=case1",
                      classify(cert.corners[0], cert.corners[2]) == FACase::Case1);
      break;
    }
  }
  cert.checks.add("noncommuting:" + pc_label(a) + "," + pc_label(b), !commute(sig, a, b));
  return cert;
}

}  // namespace

FAHypothesisError::FAHypothesisError(int order, int count)
    : std::invalid_argument("order " + std::to_string(order) + " occurs " + std::to_string(count) +
                            " times; at least 4 are needed"),
      order_(order),
      count_(count) {}

std::string to_string(FACase c) {
  switch (c) {
    case FACase::Commuting: return "commuting";
    case FACase::Case1: return "case1";
    case FACase::Case2: return "case2";
    case FACase::Case3: return "case3";
  }
  return "?";
}

std::string pc_label(const PartialConj& pc) {
  return "pc(" + std::to_string(pc.target + 1) + "," + std::to_string(pc.conjugator + 1) + ")";
}

bool FACaseCertificate::all_verified() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.checks.all_passed(); });
}

std::size_t FACaseCertificate::count(FACase c) const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [c](const auto& p) { return p.label == c; }));
}

FACaseCertificate fa_case_certificate(const Signature& sig) {
  std::set<int> orders(sig.orders().begin(), sig.orders().end());
  for (int n : orders) {
    int count = sig.occurrences(n);
    if (count < 4) throw FAHypothesisError(n, count);
  }
  FACaseCertificate out{sig, {}};
  auto pcs = all_partial_conjugations(sig);
  for (std::size_t u = 0; u < pcs.size(); ++u) {
    for (std::size_t v = u + 1; v < pcs.size(); ++v) out.pairs.push_back(certify(sig, pcs[u], pcs[v]));
  }
  return out;
}

}  // namespace fpcyc
