#pragma once

#include <json.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "morsegraph/errors.hpp"
#include "morsegraph/graph.hpp"
#include "morsegraph/morse.hpp"
#include "morsegraph/persistence.hpp"
#include "morsegraph/rational.hpp"

namespace morsegraph {

/// Malformed JSON or a document that does not match the expected schema;
/// the message carries a JSON-path-style location.
class FormatError : public InputError {
 public:
  explicit FormatError(const std::string& what) : InputError(what) {}
};

namespace detail {

inline nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

inline void require_keys(const nlohmann::json& j,
                         const std::vector<std::string>& keys) {
  if (!j.is_object()) throw FormatError("$: expected an object");
  for (const std::string& key : keys)
    if (!j.contains(key)) throw FormatError("$." + key + ": missing");
  for (const auto& [key, value] : j.items())
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw FormatError("$." + key + ": unknown key");
}

inline long long as_integer(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw FormatError(where + ": expected an integer");
  return j.get<long long>();
}

inline Rational as_rational(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string())
    throw FormatError(where + ": expected a rational as a \"p\" or \"p/q\" string");
  auto parsed = Rational::parse(j.get<std::string>());
  if (!parsed)
    throw FormatError(where + ": cannot parse rational \"" +
                      j.get<std::string>() + "\"");
  return *parsed;
}

inline VertexId parse_vertex_key(const std::string& key,
                                 const std::string& where) {
  if (key.empty() ||
      key.find_first_not_of("0123456789") != std::string::npos)
    throw FormatError(where + ": bad vertex key \"" + key + "\"");
  return static_cast<VertexId>(std::stol(key));
}

inline std::pair<VertexId, VertexId> parse_edge_key(const std::string& key,
                                                    const std::string& where) {
  auto dash = key.find('-');
  if (dash == std::string::npos)
    throw FormatError(where + ": bad edge key \"" + key +
                      "\", expected \"u-v\"");
  return {parse_vertex_key(key.substr(0, dash), where),
          parse_vertex_key(key.substr(dash + 1), where)};
}

}  // namespace detail

inline Graph parse_graph(const std::string& text) {
  nlohmann::json j = detail::parse_json(text);
  detail::require_keys(j, {"vertices", "edges"});
  if (!j["vertices"].is_array())
    throw FormatError("$.vertices: expected an array");
  std::vector<VertexId> vertices;
  for (size_t i = 0; i < j["vertices"].size(); ++i)
    vertices.push_back(static_cast<VertexId>(detail::as_integer(
        j["vertices"][i], "$.vertices[" + std::to_string(i) + "]")));
  if (!j["edges"].is_array()) throw FormatError("$.edges: expected an array");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (size_t i = 0; i < j["edges"].size(); ++i) {
    const auto& e = j["edges"][i];
    std::string where = "$.edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2)
      throw FormatError(where + ": expected a [u, v] pair");
    edges.emplace_back(
        static_cast<VertexId>(detail::as_integer(e[0], where + "[0]")),
        static_cast<VertexId>(detail::as_integer(e[1], where + "[1]")));
  }
  try {
    return Graph::build(std::move(vertices), edges);
  } catch (const GraphError& e) {
    throw FormatError(std::string("$: ") + e.what());
  }
}

inline std::string serialize_graph(const Graph& g, int indent = 2) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertices();
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j.dump(indent) + "\n";
}

/// Raw simplex-value assignment; validate with MorseFunction::validate.
inline std::map<Simplex, Rational> parse_function_values(
    const std::string& text) {
  nlohmann::json j = detail::parse_json(text);
  detail::require_keys(j, {"vertex_values", "edge_values"});
  std::map<Simplex, Rational> values;
  if (!j["vertex_values"].is_object())
    throw FormatError("$.vertex_values: expected an object");
  for (const auto& [key, value] : j["vertex_values"].items()) {
    std::string where = "$.vertex_values[\"" + key + "\"]";
    Simplex s = Simplex::vertex(detail::parse_vertex_key(key, where));
    if (!values.emplace(s, detail::as_rational(value, where)).second)
      throw FormatError(where + ": duplicate simplex");
  }
  if (!j["edge_values"].is_object())
    throw FormatError("$.edge_values: expected an object");
  for (const auto& [key, value] : j["edge_values"].items()) {
    std::string where = "$.edge_values[\"" + key + "\"]";
    auto [u, v] = detail::parse_edge_key(key, where);
    if (u == v) throw FormatError(where + ": loop edge");
    Simplex s = Simplex::edge(u, v);
    if (!values.emplace(s, detail::as_rational(value, where)).second)
      throw FormatError(where + ": duplicate simplex");
  }
  return values;
}

inline std::string serialize_function(const MorseFunction& f, int indent = 2) {
  nlohmann::ordered_json j;
  j["vertex_values"] = nlohmann::ordered_json::object();
  j["edge_values"] = nlohmann::ordered_json::object();
  for (const auto& [simplex, value] : f.values()) {
    if (simplex.dimension() == 0)
      j["vertex_values"][simplex.str()] = value.str();
    else
      j["edge_values"][simplex.str()] = value.str();
  }
  return j.dump(indent) + "\n";
}

inline PersistenceDiagram parse_diagram(const std::string& text) {
  nlohmann::json j = detail::parse_json(text);
  detail::require_keys(j, {"finite_pairs", "essential_h0", "essential_h1"});
  PersistenceDiagram d;
  if (!j["finite_pairs"].is_array())
    throw FormatError("$.finite_pairs: expected an array");
  for (size_t i = 0; i < j["finite_pairs"].size(); ++i) {
    const auto& p = j["finite_pairs"][i];
    std::string where = "$.finite_pairs[" + std::to_string(i) + "]";
    if (!p.is_array() || p.size() != 2)
      throw FormatError(where + ": expected a [birth, death] pair");
    d.finite_pairs.emplace_back(detail::as_integer(p[0], where + "[0]"),
                                detail::as_integer(p[1], where + "[1]"));
  }
  for (const char* key : {"essential_h0", "essential_h1"}) {
    if (!j[key].is_array())
      throw FormatError(std::string("$.") + key + ": expected an array");
    auto& target = key == std::string("essential_h0") ? d.essential_h0
                                                      : d.essential_h1;
    for (size_t i = 0; i < j[key].size(); ++i)
      target.push_back(detail::as_integer(
          j[key][i], "$." + std::string(key) + "[" + std::to_string(i) + "]"));
  }
  d.canonicalize();
  return d;
}

inline std::string serialize_diagram(const PersistenceDiagram& diagram,
                                     int indent = 2) {
  PersistenceDiagram d = diagram;
  d.canonicalize();
  nlohmann::ordered_json j;
  j["finite_pairs"] = nlohmann::ordered_json::array();
  for (auto [birth, death] : d.finite_pairs)
    j["finite_pairs"].push_back({birth, death});
  j["essential_h0"] = d.essential_h0;
  j["essential_h1"] = d.essential_h1;
  return j.dump(indent) + "\n";
}

}  // namespace morsegraph
