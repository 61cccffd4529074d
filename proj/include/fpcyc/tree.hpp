#pragma once

// Finite simplicial trees, vertex-set subtrees, and checkers for the Helly
// property, the subtree cycle lemma and its four-subtree diagonal case.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fpcyc {

using Edge = std::pair<int, int>;

/// Raised when two subtrees or an automorphism refer to different trees.
class TreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a lemma checker's hypothesis does not hold and the operation
/// has no "hypothesis not met" verdict to return instead.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vertices are 0..V-1. Edges are stored with u < v, sorted.
class FiniteTree {
 public:
  FiniteTree(int vertices, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  bool has_edge(int u, int v) const;

  /// Vertices on the unique path from u to v, both ends included.
  std::vector<int> path(int u, int v) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

using TreePtr = std::shared_ptr<const FiniteTree>;

TreePtr make_tree(int vertices, std::vector<Edge> edges);

/// A connected vertex set of a tree, or the empty set.
class Subtree {
 public:
  Subtree(TreePtr tree, std::vector<int> vertices);

  static Subtree empty(TreePtr tree);
  static Subtree whole(TreePtr tree);
  /// Smallest subtree containing the given vertices.
  static Subtree hull(TreePtr tree, const std::vector<int>& vertices);

  const TreePtr& tree() const { return tree_; }
  const std::vector<int>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }
  bool contains(int v) const;

  bool operator==(const Subtree& other) const {
    return tree_ == other.tree_ && vertices_ == other.vertices_;
  }

  std::string to_string() const;

 private:
  Subtree(TreePtr tree, std::vector<int> sorted, bool);

  TreePtr tree_;
  std::vector<int> vertices_;
};

Subtree intersect(const Subtree& a, const Subtree& b);

/// min |x - y| over x in i + kZ, y in j + kZ, for 1 <= i, j <= k.
int cyclic_distance(int i, int j, int k);

// --- lemma checkers ---------------------------------------------------------

enum class Outcome { Holds, HypothesisNotMet, Counterexample };

std::string to_string(Outcome o);

struct HellyVerdict {
  Outcome outcome = Outcome::HypothesisNotMet;
  /// Smallest vertex in the common intersection when the conclusion holds.
  std::optional<int> common_vertex;
  /// First disjoint pair (1-based) when the hypothesis fails.
  std::optional<std::pair<int, int>> disjoint_pair;
};

HellyVerdict check_helly(const std::vector<Subtree>& family);

struct CycleVerdict {
  Outcome outcome = Outcome::HypothesisNotMet;
  /// Lexicographically first pair (1-based, i < j) with d_c >= 2 and
  /// non-empty intersection, or the first d_c = 1 pair that is disjoint.
  std::optional<std::pair<int, int>> pair;
};

CycleVerdict check_subtree_cycle(const std::vector<Subtree>& family);

struct DiagonalVerdict {
  bool a_diagonal = false;
  bool b_diagonal = false;

  bool counterexample() const { return !a_diagonal && !b_diagonal; }
  std::string to_string() const;
};

/// Requires a_i and b_j to meet for all i, j.
DiagonalVerdict check_diagonal(const Subtree& a1, const Subtree& a2, const Subtree& b1,
                               const Subtree& b2);

// --- automorphisms ------------------------------------------------------------

class TreeAutomorphism {
 public:
  TreeAutomorphism(TreePtr tree, std::vector<int> images);

  static TreeAutomorphism identity(TreePtr tree);

  const TreePtr& tree() const { return tree_; }
  const std::vector<int>& images() const { return images_; }
  int operator()(int v) const { return images_.at(static_cast<std::size_t>(v)); }

  bool operator==(const TreeAutomorphism& other) const {
    return tree_ == other.tree_ && images_ == other.images_;
  }

 private:
  TreePtr tree_;
  std::vector<int> images_;
};

/// (g * h)(v) = g(h(v)).
TreeAutomorphism compose(const TreeAutomorphism& g, const TreeAutomorphism& h);
TreeAutomorphism operator*(const TreeAutomorphism& g, const TreeAutomorphism& h);
TreeAutomorphism inverse(const TreeAutomorphism& g);

struct FixedSet {
  Subtree vertices;
  /// Edges whose endpoints are swapped.
  std::vector<Edge> inversions;
};

FixedSet fixed_subtree(const TreeAutomorphism& g);

/// Subdivided tree: vertex V + e is the midpoint of edges()[e].
TreePtr barycentric_subdivision(const FiniteTree& tree);
TreeAutomorphism subdivide(const TreeAutomorphism& g, TreePtr subdivided);

// --- random generation and fuzzing ------------------------------------------

/// Uniform labelled tree on V vertices from a Pruefer sequence.
TreePtr random_tree(std::uint64_t seed, int vertices);

enum class FamilyMode { Pairwise, Cyclic };

/// k subtrees satisfying the chosen hypothesis: every pair meets (Pairwise)
/// or every cyclically adjacent pair meets (Cyclic).
std::vector<Subtree> random_subtree_family(std::uint64_t seed, const TreePtr& tree, int k,
                                           FamilyMode mode);

/// A tree built from `copies` identical branches around a centre vertex, or
/// joined by an edge when `copies` is 2 and `joined` is set, with the
/// automorphism group permuting the branches.
struct SymmetricTree {
  TreePtr tree;
  int copies = 0;
  int branch_size = 0;
  bool joined = false;

  /// Automorphism moving branch b to branch perm[b].
  TreeAutomorphism branch_permutation(const std::vector<int>& perm) const;
};

SymmetricTree random_symmetric_tree(std::uint64_t seed, int copies, int branch_size, bool joined);

enum class FuzzKind { Helly, Cycle, Diagonal, Fixed };

struct FuzzOptions {
  std::uint64_t seed = 0;
  int trials = 1000;
  int max_vertices = 50;
  int k_min = 2;
  int k_max = 8;
};

struct FuzzCounterexample {
  int trial = 0;
  std::uint64_t seed = 0;
  TreePtr tree;
  std::vector<Subtree> family;
  std::string detail;
};

struct FuzzReport {
  int trials = 0;
  int failures = 0;
  std::optional<FuzzCounterexample> first_failure;

  std::string summary() const;
};

/// Seed of trial t in a campaign started from `seed`.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

FuzzReport run_fuzz(FuzzKind kind, const FuzzOptions& options);

}  // namespace fpcyc
