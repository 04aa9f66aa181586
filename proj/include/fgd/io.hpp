#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "fgd/graph.hpp"
#include "fgd/rational.hpp"

namespace fgd {

// {"vertices": N, "edges": [{"id":0,"src":0,"dst":1}, ...]}
// Structural problems (bad ids, bad endpoints, disconnection) are left to
// validate_graph; this only rejects malformed JSON.
MultiGraph graph_from_json(const nlohmann::json& j);
MultiGraph load_graph(const std::string& path);

// {"base_point": 0, "sigma": {"0": "1/2", ...}} or the same with "nu".
// sigma supplies square-root weights (nu = sigma^2) and enables the
// *-isomorphism checks; "nu" supplies the base measure directly.
struct MeasureInput {
  VertexId base_point = 0;
  std::optional<std::vector<Rational>> sigma;
  std::optional<std::vector<Rational>> nu;
};

MeasureInput measure_from_json(const nlohmann::json& j);
MeasureInput load_measure(const std::string& path);

nlohmann::json read_json_file(const std::string& path);

}  // namespace fgd
