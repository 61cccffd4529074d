#pragma once

// Finite balls in the Bass-Serre trees of Z/n * Z/n (cosets of A = <a> and
// B = <b>) and of the outer group <y1,y2,y3> = Z/n * Z/n * Z/n (elements and
// cosets of A_i = <y_i>), with the extended actions of the factor
// automorphisms and permutations.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fpcyc/automorphism.hpp"
#include "fpcyc/report.hpp"
#include "fpcyc/tree.hpp"

namespace fpcyc {

enum class TreeMode { M2, M3 };

/// rep * U with U the trivial group (subgroup == nullopt) or factor i.
struct CosetVertex {
  Word rep;
  std::optional<int> subgroup;

  bool operator==(const CosetVertex&) const = default;
  bool operator<(const CosetVertex& other) const;
};

/// Shortlex-least representative of the coset.
CosetVertex canonical(CosetVertex v);

/// Letters a, b in M2 and y1, y2, y3 in M3; the identity prints as "" in a
/// coset and as "1" for an element vertex.
std::string letters(const Word& w, TreeMode mode);
std::string label(const CosetVertex& v, TreeMode mode);

struct LeftMultiply {
  Word by;
};

/// Left multiplication, or a factor automorphism / permutation acting by
/// h(xU) = h(x) h(U).
using ActionGenerator = std::variant<LeftMultiply, FactorAuto, Permutation>;

std::string to_string(const ActionGenerator& g, TreeMode mode);

/// Parses "a^2b", "y1", "factor:1,2" or "perm:(1 2)".
ActionGenerator parse_action_generator(TreeMode mode, int n, const std::string& text);

/// The group the tree is built from: (n,n) in M2, the outer signature (n,n,n)
/// in M3.
Signature tree_signature(TreeMode mode, int n);

/// Exact action on a coset, with no truncation. Throws invalid_argument when
/// the generator does not fit the mode.
CosetVertex act(TreeMode mode, const ActionGenerator& g, const CosetVertex& v);

/// A vertex of a ball: one coset, or for a subdivision midpoint the two
/// cosets of its edge (sorted).
using BallVertex = std::vector<CosetVertex>;

class TreeBall {
 public:
  TreeMode mode() const { return mode_; }
  int n() const { return n_; }
  int radius() const { return radius_; }
  bool subdivided() const { return subdivided_; }
  const Signature& signature() const { return sig_; }

  const std::vector<BallVertex>& vertices() const { return vertices_; }
  const std::vector<int>& depth() const { return depth_; }
  const TreePtr& tree() const { return tree_; }
  std::size_t size() const { return vertices_.size(); }

  /// Vertices at the truncation radius; their neighbourhoods are incomplete.
  bool boundary(int v) const { return boundary_.at(static_cast<std::size_t>(v)); }

  std::optional<int> find(const BallVertex& v) const;
  std::optional<int> find(const CosetVertex& v) const { return find(BallVertex{v}); }

  std::string label(int v) const;

  /// Image of a vertex under a generator, if it lies in the ball.
  std::optional<int> image(const ActionGenerator& g, int v) const;

 private:
  friend TreeBall build_ball_m2(int, int);
  friend TreeBall build_ball_m3_outer(int, int);
  friend TreeBall barycentric_subdivide(const TreeBall&);
  friend TreeBall build_ball(TreeMode, int, int);

  TreeMode mode_ = TreeMode::M2;
  int n_ = 2;
  int radius_ = 0;
  bool subdivided_ = false;
  Signature sig_{std::vector<int>{2, 2}};
  std::vector<BallVertex> vertices_;
  std::vector<int> depth_;
  std::vector<bool> boundary_;
  std::map<BallVertex, int> index_;
  TreePtr tree_;
};

/// Ball of radius R around A.
TreeBall build_ball_m2(int n, int radius);
/// Ball of radius R around the element vertex 1.
TreeBall build_ball_m3_outer(int n, int radius);
TreeBall build_ball(TreeMode mode, int n, int radius);

/// Midpoint of each edge becomes a vertex labelled {u,v}.
TreeBall barycentric_subdivide(const TreeBall& ball);

/// Interior vertices whose degree differs from the full tree's.
std::vector<int> degree_violations(const TreeBall& ball);

struct PartialMap {
  ActionGenerator generator;
  std::vector<std::optional<int>> image;
  /// Edges with both endpoints mapped whose images are not adjacent.
  std::vector<Edge> broken_edges;
  /// Edges whose endpoints are swapped.
  std::vector<Edge> inversions;
  bool type_preserving = true;
  bool injective = true;
};

PartialMap extend_action(const TreeBall& ball, const ActionGenerator& g);

/// Fixed points of each generator restricted to the ball, and the common ones.
struct FixedPointReport {
  std::vector<std::vector<int>> fixed_by;
  std::vector<int> fixed_by_all;

  bool no_global_fixed_point() const { return fixed_by_all.empty(); }
};

FixedPointReport verify_no_global_fixed_point(const TreeBall& ball,
                                              const std::vector<ActionGenerator>& generators);

/// One line per vertex: GEN <g> MAPS <v> -> <w>, with * for images outside
/// the ball.
std::vector<std::string> action_table(const TreeBall& ball, const ActionGenerator& g);

/// Stabilisers are found by searching pairs (g, eps*pi) with g of syllable
/// length <= 2, acting by x U -> g eps(pi(x)) eps(pi(U)), and deduplicated
/// as automorphisms (M2) or outer classes (M3).
struct AmalgamReport {
  int n = 0;
  TreeMode mode = TreeMode::M2;
  std::size_t vertex_group_1 = 0;
  std::size_t vertex_group_2 = 0;
  std::size_t edge_group = 0;
  std::size_t expected_1 = 0;
  std::size_t expected_2 = 0;
  std::size_t expected_edge = 0;
  std::size_t candidates = 0;
  std::size_t edges_reached = 0;
  std::size_t edges_total = 0;
  Report checks;

  bool all_passed() const { return checks.all_passed(); }
};

/// Aut(Z/n * Z/n)_A, Aut_{A,B} and the edge group on the subdivided ball.
AmalgamReport amalgam_report_m2(int n, int radius = 4);
/// Out(Z/n * Z/n * Z/n)_1, Out_{A_1} and the edge group on the outer ball.
AmalgamReport amalgam_report_m3(int n, int radius = 4);

}  // namespace fpcyc
