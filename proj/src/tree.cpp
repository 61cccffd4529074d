#include "fpcyc/tree.hpp"

#include <algorithm>
#include <deque>

namespace fpcyc {

namespace {

Edge ordered(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

void require_same_tree(const TreePtr& a, const TreePtr& b) {
  if (a != b) throw TreeMismatch("subtrees belong to different trees");
}

void require_family(const std::vector<Subtree>& family) {
  if (family.empty()) throw std::invalid_argument("empty family");
  for (std::size_t i = 0; i < family.size(); ++i) {
    require_same_tree(family[0].tree(), family[i].tree());
    if (family[i].empty()) {
      throw std::invalid_argument("family member " + std::to_string(i + 1) + " is empty");
    }
  }
}

bool meets(const Subtree& a, const Subtree& b) {
  const auto& x = a.vertices();
  const auto& y = b.vertices();
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

}  // namespace

FiniteTree::FiniteTree(int vertices, std::vector<Edge> edges) {
  if (vertices < 1) throw std::invalid_argument("a tree needs at least one vertex");
  if (edges.size() != static_cast<std::size_t>(vertices - 1)) {
    throw std::invalid_argument("a tree on " + std::to_string(vertices) + " vertices has " +
                                std::to_string(vertices - 1) + " edges, got " +
                                std::to_string(edges.size()));
  }
  adjacency_.resize(static_cast<std::size_t>(vertices));
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    std::tie(u, v) = ordered(u, v);
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::sort(edges.begin(), edges.end());
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  edges_ = std::move(edges);

  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adjacency_[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != vertices) throw std::invalid_argument("edges do not form a connected graph");
}

bool FiniteTree::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), ordered(u, v));
}

std::vector<int> FiniteTree::path(int u, int v) const {
  int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("vertex out of range");
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::deque<int> queue{u};
  parent[static_cast<std::size_t>(u)] = u;
  while (!queue.empty() && parent[static_cast<std::size_t>(v)] < 0) {
    int x = queue.front();
    queue.pop_front();
    for (int y : neighbors(x)) {
      if (parent[static_cast<std::size_t>(y)] < 0) {
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> out{v};
  while (out.back() != u) out.push_back(parent[static_cast<std::size_t>(out.back())]);
  std::reverse(out.begin(), out.end());
  return out;
}

TreePtr make_tree(int vertices, std::vector<Edge> edges) {
  return std::make_shared<const FiniteTree>(vertices, std::move(edges));
}

Subtree::Subtree(TreePtr tree, std::vector<int> sorted, bool) : tree_(std::move(tree)), vertices_(std::move(sorted)) {}

Subtree::Subtree(TreePtr tree, std::vector<int> vertices) : tree_(std::move(tree)) {
  if (!tree_) throw std::invalid_argument("null tree");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (int v : vertices) {
    if (v < 0 || v >= tree_->vertex_count()) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }
  }
  vertices_ = std::move(vertices);
  if (vertices_.empty()) return;

  std::vector<char> inside(static_cast<std::size_t>(tree_->vertex_count()), 0);
  for (int v : vertices_) inside[static_cast<std::size_t>(v)] = 1;
  std::vector<int> stack{vertices_.front()};
  inside[static_cast<std::size_t>(vertices_.front())] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : tree_->neighbors(u)) {
      if (inside[static_cast<std::size_t>(w)] == 1) {
        inside[static_cast<std::size_t>(w)] = 2;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertices_.size()) throw std::invalid_argument("vertex set is not connected");
}

Subtree Subtree::empty(TreePtr tree) { return Subtree(std::move(tree), {}, true); }

Subtree Subtree::whole(TreePtr tree) {
  std::vector<int> all(static_cast<std::size_t>(tree->vertex_count()));
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<int>(v);
  return Subtree(std::move(tree), std::move(all), true);
}

Subtree Subtree::hull(TreePtr tree, const std::vector<int>& vertices) {
  if (vertices.empty()) return empty(std::move(tree));
  std::vector<int> out;
  for (int v : vertices) {
    auto p = tree->path(vertices.front(), v);
    out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Subtree(std::move(tree), std::move(out), true);
}

bool Subtree::contains(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

std::string Subtree::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vertices_[i]);
  }
  return out + "}";
}

Subtree intersect(const Subtree& a, const Subtree& b) {
  require_same_tree(a.tree(), b.tree());
  std::vector<int> out;
  std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                        b.vertices().end(), std::back_inserter(out));
  return Subtree(a.tree(), std::move(out));
}

int cyclic_distance(int i, int j, int k) {
  if (k < 1 || i < 1 || j < 1 || i > k || j > k) {
    throw std::out_of_range("cyclic distance needs 1 <= i, j <= k");
  }
  int d = i > j ? i - j : j - i;
  return std::min(d, k - d);
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::HypothesisNotMet: return "hypothesis not met";
    case Outcome::Counterexample: return "counterexample";
  }
  return {};
}

HellyVerdict check_helly(const std::vector<Subtree>& family) {
  require_family(family);
  HellyVerdict verdict;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!meets(family[i], family[j])) {
        verdict.disjoint_pair = {static_cast<int>(i + 1), static_cast<int>(j + 1)};
        return verdict;
      }
    }
  }
  Subtree common = family.front();
  for (const auto& s : family) common = intersect(common, s);
  if (common.empty()) {
    verdict.outcome = Outcome::Counterexample;
  } else {
    verdict.outcome = Outcome::Holds;
    verdict.common_vertex = common.vertices().front();
  }
  return verdict;
}

CycleVerdict check_subtree_cycle(const std::vector<Subtree>& family) {
  int k = static_cast<int>(family.size());
  if (k < 4) throw std::invalid_argument("the subtree cycle check needs at least 4 subtrees");
  require_family(family);
  CycleVerdict verdict;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      if (cyclic_distance(i, j, k) == 1 && !meets(family[static_cast<std::size_t>(i - 1)],
                                                  family[static_cast<std::size_t>(j - 1)])) {
        verdict.pair = {i, j};
        return verdict;
      }
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      if (cyclic_distance(i, j, k) >= 2 && meets(family[static_cast<std::size_t>(i - 1)],
                                                 family[static_cast<std::size_t>(j - 1)])) {
        verdict.outcome = Outcome::Holds;
        verdict.pair = {i, j};
        return verdict;
      }
    }
  }
  verdict.outcome = Outcome::Counterexample;
  return verdict;
}

std::string DiagonalVerdict::to_string() const {
  if (a_diagonal && b_diagonal) return "both";
  if (a_diagonal) return "A";
  if (b_diagonal) return "B";
  return "neither";
}

DiagonalVerdict check_diagonal(const Subtree& a1, const Subtree& a2, const Subtree& b1,
                               const Subtree& b2) {
  require_family({a1, a2, b1, b2});
  const std::pair<const Subtree*, const char*> as[] = {{&a1, "A1"}, {&a2, "A2"}};
  const std::pair<const Subtree*, const char*> bs[] = {{&b1, "B1"}, {&b2, "B2"}};
  for (const auto& [a, an] : as) {
    for (const auto& [b, bn] : bs) {
      if (!meets(*a, *b)) throw HypothesisError(std::string(an) + " and " + bn + " are disjoint");
    }
  }
  return {meets(a1, a2), meets(b1, b2)};
}

TreeAutomorphism::TreeAutomorphism(TreePtr tree, std::vector<int> images)
    : tree_(std::move(tree)), images_(std::move(images)) {
  if (!tree_) throw std::invalid_argument("null tree");
  int n = tree_->vertex_count();
  if (images_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("automorphism needs one image per vertex");
  }
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int v : images_) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("vertex map is not a permutation");
    }
    hit[static_cast<std::size_t>(v)] = 1;
  }
  for (const auto& [u, v] : tree_->edges()) {
    if (!tree_->has_edge((*this)(u), (*this)(v))) {
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} is not mapped to an edge");
    }
  }
}

TreeAutomorphism TreeAutomorphism::identity(TreePtr tree) {
  std::vector<int> id(static_cast<std::size_t>(tree->vertex_count()));
  for (std::size_t v = 0; v < id.size(); ++v) id[v] = static_cast<int>(v);
  return TreeAutomorphism(std::move(tree), std::move(id));
}

TreeAutomorphism compose(const TreeAutomorphism& g, const TreeAutomorphism& h) {
  if (g.tree() != h.tree()) throw TreeMismatch("automorphisms act on different trees");
  std::vector<int> out(h.images().size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = g(h.images()[v]);
  return TreeAutomorphism(g.tree(), std::move(out));
}

TreeAutomorphism operator*(const TreeAutomorphism& g, const TreeAutomorphism& h) { return compose(g, h); }

TreeAutomorphism inverse(const TreeAutomorphism& g) {
  std::vector<int> out(g.images().size());
  for (std::size_t v = 0; v < out.size(); ++v) out[static_cast<std::size_t>(g.images()[v])] = static_cast<int>(v);
  return TreeAutomorphism(g.tree(), std::move(out));
}

FixedSet fixed_subtree(const TreeAutomorphism& g) {
  std::vector<int> fixed;
  for (int v = 0; v < g.tree()->vertex_count(); ++v) {
    if (g(v) == v) fixed.push_back(v);
  }
  std::vector<Edge> inversions;
  for (const auto& [u, v] : g.tree()->edges()) {
    if (g(u) == v && g(v) == u) inversions.emplace_back(u, v);
  }
  try {
    return {Subtree(g.tree(), std::move(fixed)), std::move(inversions)};
  } catch (const std::invalid_argument&) {
    throw std::logic_error("fixed-point set of a tree automorphism is disconnected");
  }
}

TreePtr barycentric_subdivision(const FiniteTree& tree) {
  int n = tree.vertex_count();
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < tree.edges().size(); ++e) {
    int mid = n + static_cast<int>(e);
    edges.emplace_back(tree.edges()[e].first, mid);
    edges.emplace_back(tree.edges()[e].second, mid);
  }
  return make_tree(n + static_cast<int>(tree.edges().size()), std::move(edges));
}

TreeAutomorphism subdivide(const TreeAutomorphism& g, TreePtr subdivided) {
  const FiniteTree& t = *g.tree();
  int n = t.vertex_count();
  int e_count = static_cast<int>(t.edges().size());
  if (subdivided->vertex_count() != n + e_count) throw TreeMismatch("not the subdivision of this tree");
  std::vector<int> out(static_cast<std::size_t>(n + e_count));
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = g(v);
  for (int e = 0; e < e_count; ++e) {
    const auto& [u, v] = t.edges()[static_cast<std::size_t>(e)];
    Edge image = ordered(g(u), g(v));
    auto it = std::lower_bound(t.edges().begin(), t.edges().end(), image);
    out[static_cast<std::size_t>(n + e)] = n + static_cast<int>(it - t.edges().begin());
  }
  return TreeAutomorphism(std::move(subdivided), std::move(out));
}

}  // namespace fpcyc
