#pragma once

#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "morsegraph/morsegraph.hpp"

namespace testsupport {

using namespace morsegraph;

inline std::string fixture_text(const std::string& name) {
  std::string path = std::string(MORSEGRAPH_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline Graph fixture_graph(const std::string& name) {
  return parse_graph(fixture_text(name));
}

inline MorseFunction fixture_function(const std::string& graph_name,
                                      const std::string& function_name) {
  Graph g = fixture_graph(graph_name);
  return MorseFunction::validate(g,
                                 parse_function_values(fixture_text(function_name)));
}

inline PersistenceDiagram fixture_diagram(const std::string& name) {
  return parse_diagram(fixture_text(name));
}

inline PersistenceDiagram make_diagram(
    std::vector<std::pair<long long, long long>> finite,
    std::vector<long long> h0 = {0}, std::vector<long long> h1 = {}) {
  PersistenceDiagram d;
  d.finite_pairs = std::move(finite);
  d.essential_h0 = std::move(h0);
  d.essential_h1 = std::move(h1);
  d.canonicalize();
  return d;
}

/// Random connected graph with the requested first Betti number and at
/// most max_simplices simplices: a random increasing-attachment tree
/// plus b1 extra edges.
inline Graph random_connected_graph(std::mt19937_64& rng, int b1,
                                    size_t max_simplices = 14) {
  int min_vertices = b1 == 0 ? 1 : (b1 == 1 ? 3 : 4);
  int max_vertices = static_cast<int>((max_simplices + 1 - b1) / 2);
  std::uniform_int_distribution<int> vertex_count(min_vertices, max_vertices);
  int v = vertex_count(rng);
  while (v * (v - 1) / 2 < v - 1 + b1) ++v;

  std::vector<VertexId> vertices(v);
  for (int i = 0; i < v; ++i) vertices[i] = i;
  std::set<std::pair<VertexId, VertexId>> edges;
  for (int i = 1; i < v; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    int p = parent(rng);
    edges.emplace(std::min(p, i), std::max(p, i));
  }
  std::uniform_int_distribution<int> any(0, v - 1);
  while (static_cast<int>(edges.size()) < v - 1 + b1) {
    int a = any(rng), b = any(rng);
    if (a != b) edges.emplace(std::min(a, b), std::max(a, b));
  }
  return Graph::build(vertices,
                      {edges.begin(), edges.end()});
}

namespace detail {

struct Unit {
  Simplex simplex;  // the critical simplex, or the pair's edge
  bool pair;
  VertexId pair_vertex;
};

/// One attempt: random matching, then a random subcomplex-preserving
/// order of its units.  Fails (empty) when the matching admits no order,
/// e.g. a cyclic matching leaving no critical vertex.
inline std::vector<Unit> random_unit_sequence(std::mt19937_64& rng,
                                              const Graph& g) {
  std::vector<VertexId> order = g.vertices();
  std::shuffle(order.begin(), order.end(), rng);
  std::set<Edge> matched_edges;
  std::map<VertexId, Edge> match;
  for (VertexId v : order) {
    std::uniform_int_distribution<int> coin(0, 2);
    if (coin(rng) == 0) continue;
    std::vector<Edge> free;
    for (VertexId w : g.neighbors(v))
      if (!matched_edges.count(Edge(v, w))) free.emplace_back(v, w);
    if (free.empty()) continue;
    std::uniform_int_distribution<size_t> pick(0, free.size() - 1);
    Edge e = free[pick(rng)];
    matched_edges.insert(e);
    match.emplace(v, e);
  }

  std::vector<Unit> pending;
  for (VertexId v : g.vertices())
    if (!match.count(v)) pending.push_back({Simplex::vertex(v), false, 0});
  std::map<Edge, VertexId> edge_pair;
  for (const auto& [v, e] : match) edge_pair.emplace(e, v);
  for (const Edge& e : g.edges()) {
    auto it = edge_pair.find(e);
    if (it == edge_pair.end())
      pending.push_back({Simplex::edge(e), false, 0});
    else
      pending.push_back({Simplex::edge(e), true, it->second});
  }

  std::set<VertexId> present;
  std::vector<Unit> sequence;
  while (!pending.empty()) {
    std::vector<size_t> addable;
    for (size_t i = 0; i < pending.size(); ++i) {
      const Unit& u = pending[i];
      if (u.simplex.dimension() == 0) {
        addable.push_back(i);
      } else {
        Edge e = u.simplex.as_edge();
        if (u.pair) {
          if (present.count(e.other(u.pair_vertex))) addable.push_back(i);
        } else if (present.count(e.u) && present.count(e.v)) {
          addable.push_back(i);
        }
      }
    }
    if (addable.empty()) return {};
    std::uniform_int_distribution<size_t> pick(0, addable.size() - 1);
    size_t chosen = addable[pick(rng)];
    const Unit& u = pending[chosen];
    if (u.simplex.dimension() == 0)
      present.insert(u.simplex.vertex_id());
    else if (u.pair)
      present.insert(u.pair_vertex);
    sequence.push_back(u);
    pending.erase(pending.begin() + chosen);
  }
  return sequence;
}

}  // namespace detail

/// Random valid function on g: a random vertex-edge matching, a random
/// order of adding critical simplices and regular pairs that keeps each
/// prefix a subcomplex, random distinct integer critical values, and
/// midpoint rationals for the pairs in between.
inline MorseFunction random_function(std::mt19937_64& rng, const Graph& g) {
  std::vector<detail::Unit> sequence;
  while (sequence.empty()) sequence = detail::random_unit_sequence(rng, g);

  // Critical values: 0 then a random ascending subset of {1..n-1};
  // pair values: midpoints walking toward the next critical value.
  const long long n = static_cast<long long>(g.simplex_count());
  size_t m = 0;
  for (const detail::Unit& u : sequence)
    if (!u.pair) ++m;
  std::vector<long long> all(n - 1);
  for (long long i = 0; i < n - 1; ++i) all[i] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<long long> criticals(all.begin(), all.begin() + (m - 1));
  std::sort(criticals.begin(), criticals.end());
  criticals.insert(criticals.begin(), 0);

  std::map<Simplex, Rational> values;
  size_t slot = 0;
  Rational prev(0);
  for (const detail::Unit& u : sequence) {
    if (!u.pair) {
      prev = Rational(criticals[slot]);
      values.emplace(u.simplex, prev);
      ++slot;
    } else {
      Rational bound = slot < m ? Rational(criticals[slot]) : Rational(n);
      prev = (prev + bound) / Rational(2);
      values.emplace(u.simplex, prev);
      values.emplace(Simplex::vertex(u.pair_vertex), prev);
    }
  }
  return MorseFunction::validate(g, values);
}

}  // namespace testsupport
