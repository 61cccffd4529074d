#include <algorithm>
#include <future>
#include <queue>
#include <random>
#include <thread>

#include "fpcyc/tree.hpp"

namespace fpcyc {

namespace {

using Rng = std::mt19937_64;

int below(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::vector<Edge> pruefer_edges(Rng& rng, int n) {
  std::vector<Edge> edges;
  if (n == 2) edges.emplace_back(0, 1);
  if (n <= 2) return edges;
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int& s : seq) {
    s = below(rng, n);
    ++degree[static_cast<std::size_t>(s)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  for (int s : seq) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, s);
    if (--degree[static_cast<std::size_t>(s)] == 1) leaves.push(s);
  }
  int u = leaves.top();
  leaves.pop();
  edges.emplace_back(u, leaves.top());
  return edges;
}

Subtree grow(Rng& rng, const Subtree& start, int steps) {
  const FiniteTree& t = *start.tree();
  std::vector<int> verts = start.vertices();
  std::vector<char> inside(static_cast<std::size_t>(t.vertex_count()), 0);
  for (int v : verts) inside[static_cast<std::size_t>(v)] = 1;
  for (int s = 0; s < steps; ++s) {
    int from = verts[static_cast<std::size_t>(below(rng, static_cast<int>(verts.size())))];
    const auto& nb = t.neighbors(from);
    if (nb.empty()) break;
    int to = nb[static_cast<std::size_t>(below(rng, static_cast<int>(nb.size())))];
    if (!inside[static_cast<std::size_t>(to)]) {
      inside[static_cast<std::size_t>(to)] = 1;
      verts.push_back(to);
    }
  }
  return Subtree(start.tree(), std::move(verts));
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(below(rng, i + 1))]);
  return p;
}

struct TrialResult {
  bool failed = false;
  std::optional<FuzzCounterexample> example;
};

TrialResult run_trial(FuzzKind kind, const FuzzOptions& o, int trial) {
  std::uint64_t seed = trial_seed(o.seed, trial);
  Rng rng(seed);
  TrialResult result;
  auto fail = [&](TreePtr tree, std::vector<Subtree> family, std::string detail) {
    result.failed = true;
    result.example = FuzzCounterexample{trial, seed, std::move(tree), std::move(family), std::move(detail)};
  };

  if (kind == FuzzKind::Fixed) {
    int copies = 2 + below(rng, 3);
    bool joined = copies == 2 && below(rng, 2) == 1;
    SymmetricTree sym = random_symmetric_tree(rng(), copies, 1 + below(rng, 12), joined);
    TreeAutomorphism g = sym.branch_permutation(random_permutation(rng, copies));
    TreeAutomorphism h = sym.branch_permutation(random_permutation(rng, copies));
    try {
      FixedSet fg = fixed_subtree(g);
      FixedSet fh = fixed_subtree(h);
      FixedSet fgh = fixed_subtree(g * h);
      Subtree both = intersect(fg.vertices, fh.vertices);
      for (int v : both.vertices()) {
        if (!fgh.vertices.contains(v)) {
          fail(sym.tree, {fg.vertices, fh.vertices, fgh.vertices},
               "Fix(g) and Fix(h) share a vertex not fixed by gh");
          return result;
        }
      }
      TreePtr sd = barycentric_subdivision(*sym.tree);
      FixedSet sg = fixed_subtree(subdivide(g, sd));
      if (!sg.inversions.empty() || (!fg.inversions.empty() && sg.vertices.empty())) {
        fail(sym.tree, {fg.vertices}, "subdivision did not remove an inversion");
      }
    } catch (const std::logic_error& e) {
      fail(sym.tree, {}, e.what());
    }
    return result;
  }

  TreePtr tree = random_tree(rng(), 1 + below(rng, o.max_vertices));
  int k_lo = o.k_min;
  int k_hi = o.k_max;
  if (kind == FuzzKind::Diagonal) k_lo = k_hi = 4;
  if (kind == FuzzKind::Cycle) k_lo = std::max(k_lo, 4);
  if (kind == FuzzKind::Helly) k_lo = std::max(k_lo, 1);
  int k = k_lo + below(rng, std::max(1, k_hi - k_lo + 1));
  FamilyMode mode = kind == FuzzKind::Helly ? FamilyMode::Pairwise : FamilyMode::Cyclic;
  auto family = random_subtree_family(rng(), tree, k, mode);

  switch (kind) {
    case FuzzKind::Helly: {
      auto v = check_helly(family);
      if (v.outcome != Outcome::Holds) fail(tree, family, "helly: " + to_string(v.outcome));
      break;
    }
    case FuzzKind::Cycle: {
      auto v = check_subtree_cycle(family);
      if (v.outcome != Outcome::Holds) fail(tree, family, "cycle: " + to_string(v.outcome));
      break;
    }
    case FuzzKind::Diagonal: {
      const auto& a1 = family[0];
      const auto& b1 = family[1];
      const auto& a2 = family[2];
      const auto& b2 = family[3];
      try {
        auto d = check_diagonal(a1, a2, b1, b2);
        auto c = check_subtree_cycle(family);
        bool agree = c.outcome == Outcome::Holds &&
                     (d.a_diagonal ? c.pair == std::pair{1, 3} : c.pair == std::pair{2, 4});
        if (d.counterexample()) {
          fail(tree, family, "diagonal: neither");
        } else if (!agree) {
          fail(tree, family, "diagonal and cycle checks disagree");
        }
      } catch (const HypothesisError& e) {
        fail(tree, family, std::string("generator: ") + e.what());
      }
      break;
    }
    case FuzzKind::Fixed: break;
  }
  return result;
}

}  // namespace

TreePtr random_tree(std::uint64_t seed, int vertices) {
  if (vertices < 1) throw std::invalid_argument("a tree needs at least one vertex");
  Rng rng(seed);
  return make_tree(vertices, pruefer_edges(rng, vertices));
}

std::vector<Subtree> random_subtree_family(std::uint64_t seed, const TreePtr& tree, int k,
                                           FamilyMode mode) {
  if (k < 1) throw std::invalid_argument("family size must be positive");
  Rng rng(seed);
  int n = tree->vertex_count();
  std::vector<std::vector<int>> planted(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (mode == FamilyMode::Pairwise || cyclic_distance(i + 1, j + 1, k) == 1) {
        int v = below(rng, n);
        planted[static_cast<std::size_t>(i)].push_back(v);
        planted[static_cast<std::size_t>(j)].push_back(v);
      }
    }
  }
  std::vector<Subtree> family;
  for (auto& p : planted) {
    if (p.empty()) p.push_back(below(rng, n));
    family.push_back(grow(rng, Subtree::hull(tree, p), below(rng, 4)));
  }
  return family;
}

TreeAutomorphism SymmetricTree::branch_permutation(const std::vector<int>& perm) const {
  if (perm.size() != static_cast<std::size_t>(copies)) throw std::invalid_argument("wrong permutation size");
  int offset = joined ? 0 : 1;
  std::vector<int> images(static_cast<std::size_t>(tree->vertex_count()));
  if (!joined) images[0] = 0;
  for (int b = 0; b < copies; ++b) {
    for (int x = 0; x < branch_size; ++x) {
      images[static_cast<std::size_t>(offset + b * branch_size + x)] =
          offset + perm[static_cast<std::size_t>(b)] * branch_size + x;
    }
  }
  return TreeAutomorphism(tree, std::move(images));
}

SymmetricTree random_symmetric_tree(std::uint64_t seed, int copies, int branch_size, bool joined) {
  if (copies < 1 || branch_size < 1) throw std::invalid_argument("bad symmetric tree shape");
  if (joined && copies != 2) throw std::invalid_argument("only two branches can be joined");
  Rng rng(seed);
  auto branch = pruefer_edges(rng, branch_size);
  int offset = joined ? 0 : 1;
  std::vector<Edge> edges;
  for (int b = 0; b < copies; ++b) {
    int base = offset + b * branch_size;
    for (const auto& [u, v] : branch) edges.emplace_back(base + u, base + v);
    if (!joined) edges.emplace_back(0, base);
  }
  if (joined) edges.emplace_back(0, branch_size);
  SymmetricTree out;
  out.tree = make_tree(offset + copies * branch_size, std::move(edges));
  out.copies = copies;
  out.branch_size = branch_size;
  out.joined = joined;
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return splitmix64(splitmix64(seed) + static_cast<std::uint64_t>(trial));
}

std::string FuzzReport::summary() const {
  return "TRIALS " + std::to_string(trials) + " FAILURES " + std::to_string(failures);
}

FuzzReport run_fuzz(FuzzKind kind, const FuzzOptions& options) {
  if (options.trials < 0) throw std::invalid_argument("negative trial count");
  if (options.max_vertices < 1) throw std::invalid_argument("max_vertices must be positive");
  if (options.k_min > options.k_max) throw std::invalid_argument("empty k range");
  if (kind == FuzzKind::Cycle && options.k_max < 4) throw std::invalid_argument("cycle fuzzing needs k >= 4");

  int tasks = static_cast<int>(std::max(1u, std::min(std::thread::hardware_concurrency(), 8u)));
  tasks = std::min(tasks, std::max(1, options.trials));
  std::vector<std::future<FuzzReport>> parts;
  for (int t = 0; t < tasks; ++t) {
    parts.push_back(std::async(std::launch::async, [&, t] {
      FuzzReport part;
      for (int trial = t; trial < options.trials; trial += tasks) {
        TrialResult r = run_trial(kind, options, trial);
        ++part.trials;
        if (r.failed) {
          ++part.failures;
          if (!part.first_failure || r.example->trial < part.first_failure->trial) {
            part.first_failure = std::move(r.example);
          }
        }
      }
      return part;
    }));
  }
  FuzzReport report;
  for (auto& f : parts) {
    FuzzReport part = f.get();
    report.trials += part.trials;
    report.failures += part.failures;
    if (part.first_failure &&
        (!report.first_failure || part.first_failure->trial < report.first_failure->trial)) {
      report.first_failure = std::move(part.first_failure);
    }
  }
  return report;
}

}  // namespace fpcyc
