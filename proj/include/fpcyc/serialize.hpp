#pragma once

// JSON and DOT encodings. Every top-level JSON document carries "schema": 1.

#include <string>
#include <vector>

#include "json.hpp"

#include "fpcyc/bass_serre.hpp"
#include "fpcyc/invariants.hpp"
#include "fpcyc/report.hpp"
#include "fpcyc/tree.hpp"

namespace fpcyc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"vertices": V, "edges": [[u,v],...]}
Json to_json(const FiniteTree& tree);
TreePtr tree_from_json(const Json& j);

/// [[v,...],...]
Json to_json(const std::vector<Subtree>& family);
std::vector<Subtree> family_from_json(const TreePtr& tree, const Json& j);

/// A tree plus a subtree family, as read from `--input`:
/// {"vertices": V, "edges": [...], "family": [[...], ...]}.
struct TreeProblem {
  TreePtr tree;
  std::vector<Subtree> family;
};

TreeProblem tree_problem_from_json(const Json& j);
Json to_json(const TreeProblem& problem);

std::string to_dot(const FiniteTree& tree, const std::vector<std::string>& labels = {});

Json to_json(const TreeBall& ball);
std::string to_dot(const TreeBall& ball);

Json to_json(const Report& report);
Json to_json(const FuzzCounterexample& c, FuzzKind kind);
Json to_json(const FACaseCertificate& cert);
Json to_json(const ConjugacyCensus& census);

std::string to_string(FuzzKind kind);

}  // namespace fpcyc
