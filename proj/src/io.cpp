#include "fgd/io.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

namespace fgd {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

MultiGraph graph_from_json(const json& j) {
  MultiGraph g;
  g.vertex_count = j.at("vertices").get<VertexId>();
  for (const json& ej : j.at("edges")) {
    g.edges.push_back({ej.at("id").get<EdgeId>(), ej.at("src").get<VertexId>(),
                       ej.at("dst").get<VertexId>()});
  }
  return g;
}

MultiGraph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

namespace {

std::vector<Rational> weight_table(const json& j) {
  std::map<long, Rational> byVertex;
  long max_key = -1;
  for (const auto& [key, value] : j.items()) {
    const long u = std::stol(key);
    if (u < 0) throw std::runtime_error("negative vertex key in measure file");
    byVertex[u] = Rational::parse(value.get<std::string>());
    max_key = std::max(max_key, u);
  }
  if (static_cast<long>(byVertex.size()) != max_key + 1)
    throw std::runtime_error("measure file must list every vertex 0..N-1");
  std::vector<Rational> out;
  out.reserve(byVertex.size());
  for (const auto& [u, w] : byVertex) out.push_back(w);
  return out;
}

}  // namespace

MeasureInput measure_from_json(const json& j) {
  MeasureInput m;
  m.base_point = j.value("base_point", 0);
  if (j.contains("sigma")) m.sigma = weight_table(j.at("sigma"));
  if (j.contains("nu")) m.nu = weight_table(j.at("nu"));
  if (!m.sigma && !m.nu)
    throw std::runtime_error("measure file needs a \"sigma\" or \"nu\" table");
  return m;
}

MeasureInput load_measure(const std::string& path) {
  return measure_from_json(read_json_file(path));
}

}  // namespace fgd
