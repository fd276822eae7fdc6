#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "reeb/assignment.hpp"
#include "reeb/graph.hpp"

namespace reeb {

using Json = nlohmann::ordered_json;

/// {"lo", "hi", "vertices": [{"id", "level", "kind"}],
///  "edges": [{"id", "lower", "upper", "label", "witness"?}]}
/// Extra top-level keys (such as "meta") pass through to_graph untouched.
Json to_json(const ReebGraph& graph);
ReebGraph graph_from_json(const Json& json);
ReebGraph parse_graph(std::string_view text);

Json to_json(const ValidationReport& report);

/// {"edges": {id: int}, "trace"?: [...], "n_min", "bound"}. The bound keys
/// are present only when the assignment is complete and the upper boundary
/// is nonempty.
Json assignment_to_json(const EssentialSubgraph& g, const PartialAssignment& p,
                        bool with_trace);

Json to_json(const EssentialSubgraph& g, const DistanceBoundReport& report);

}  // namespace reeb
