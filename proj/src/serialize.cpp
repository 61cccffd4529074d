#include "fpcyc/serialize.hpp"

namespace fpcyc {

namespace {

Json with_schema(const char* kind) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

Json pc_json(const PartialConj& p) { return Json::array({p.target + 1, p.conjugator + 1}); }

}  // namespace

Json to_json(const FiniteTree& tree) {
  Json j;
  j["vertices"] = tree.vertex_count();
  j["edges"] = Json::array();
  for (auto [u, v] : tree.edges()) j["edges"].push_back({u, v});
  return j;
}

TreePtr tree_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw std::invalid_argument("tree JSON needs \"vertices\" and \"edges\"");
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair [u,v]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return make_tree(j.at("vertices").get<int>(), std::move(edges));
}

Json to_json(const std::vector<Subtree>& family) {
  Json j = Json::array();
  for (const auto& s : family) j.push_back(s.vertices());
  return j;
}

std::vector<Subtree> family_from_json(const TreePtr& tree, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("family must be an array of vertex lists");
  std::vector<Subtree> out;
  for (const auto& s : j) out.emplace_back(tree, s.get<std::vector<int>>());
  return out;
}

TreeProblem tree_problem_from_json(const Json& j) {
  TreeProblem p{tree_from_json(j), {}};
  if (j.contains("family")) p.family = family_from_json(p.tree, j.at("family"));
  return p;
}

Json to_json(const TreeProblem& problem) {
  Json j = to_json(*problem.tree);
  j["family"] = to_json(problem.family);
  return j;
}

std::string to_dot(const FiniteTree& tree, const std::vector<std::string>& labels) {
  std::string out = "graph T {\n";
  for (int v = 0; v < tree.vertex_count(); ++v) {
    out += "  " + std::to_string(v);
    if (static_cast<std::size_t>(v) < labels.size()) out += " [label=" + quoted(labels[static_cast<std::size_t>(v)]) + "]";
    out += ";\n";
  }
  for (auto [u, v] : tree.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

Json to_json(const TreeBall& ball) {
  Json j = with_schema("ball");
  j["mode"] = ball.mode() == TreeMode::M2 ? "m2" : "m3";
  j["n"] = ball.n();
  j["radius"] = ball.radius();
  j["subdivided"] = ball.subdivided();
  Json tree = to_json(*ball.tree());
  j["vertices"] = tree["vertices"];
  j["edges"] = tree["edges"];
  j["labels"] = Json::array();
  for (int v = 0; v < static_cast<int>(ball.size()); ++v) j["labels"].push_back(ball.label(v));
  j["depth"] = ball.depth();
  j["boundary"] = Json::array();
  for (int v = 0; v < static_cast<int>(ball.size()); ++v) {
    if (ball.boundary(v)) j["boundary"].push_back(v);
  }
  return j;
}

std::string to_dot(const TreeBall& ball) {
  std::vector<std::string> labels;
  for (int v = 0; v < static_cast<int>(ball.size()); ++v) labels.push_back(ball.label(v));
  return to_dot(*ball.tree(), labels);
}

Json to_json(const Report& report) {
  Json j = with_schema("report");
  j["passed"] = report.all_passed();
  j["failures"] = report.failures();
  j["checks"] = Json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  }
  j["notes"] = report.notes;
  return j;
}

std::string to_string(FuzzKind kind) {
  switch (kind) {
    case FuzzKind::Helly: return "helly";
    case FuzzKind::Cycle: return "cycle";
    case FuzzKind::Diagonal: return "diagonal";
    case FuzzKind::Fixed: return "fixed";
  }
  return "?";
}

Json to_json(const FuzzCounterexample& c, FuzzKind kind) {
  Json j = with_schema("counterexample");
  j["lemma"] = to_string(kind);
  j["trial"] = c.trial;
  j["seed"] = c.seed;
  j["tree"] = c.tree ? to_json(*c.tree) : Json();
  j["family"] = to_json(c.family);
  j["detail"] = c.detail;
  return j;
}

Json to_json(const FACaseCertificate& cert) {
  Json j = with_schema("fa-certificate");
  j["signature"] = cert.signature.orders();
  j["verified"] = cert.all_verified();
  j["pairs"] = Json::array();
  for (const auto& p : cert.pairs) {
    Json e;
    e["first"] = pc_json(p.first);
    e["second"] = pc_json(p.second);
    e["label"] = to_string(p.label);
    if (p.label != FACase::Commuting) {
      Json aux = Json::array();
      for (int a : p.aux) aux.push_back(a + 1);
      e["aux"] = aux;
      e["corners"] = Json::array();
      for (const auto& c : p.corners) e["corners"].push_back(pc_json(c));
      Json swap = Json::array();
      for (int v : p.swap.images) swap.push_back(v + 1);
      e["swap"] = swap;
    }
    if (p.depends_on) e["depends_on"] = {pc_json(p.depends_on->first), pc_json(p.depends_on->second)};
    e["verified"] = p.checks.all_passed();
    e["checks"] = Json::array();
    for (const auto& c : p.checks.checks) e["checks"].push_back({{"name", c.name}, {"passed", c.passed}});
    j["pairs"].push_back(std::move(e));
  }
  return j;
}

Json to_json(const ConjugacyCensus& census) {
  Json j = with_schema("census");
  j["signature"] = census.signature.orders();
  Json classes = Json::object();
  for (const auto& [k, c] : census.classes) classes[std::to_string(k)] = c;
  j["classes"] = classes;
  return j;
}

}  // namespace fpcyc
