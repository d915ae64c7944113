#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "morsegraph/errors.hpp"
#include "morsegraph/graph.hpp"
#include "morsegraph/morse.hpp"
#include "morsegraph/persistence.hpp"
#include "morsegraph/rational.hpp"

namespace morsegraph {

class RealizationError : public InputError {
 public:
  explicit RealizationError(const std::string& what) : InputError(what) {}
};

class InconsistentDiagramError : public InputError {
 public:
  explicit InconsistentDiagramError(const std::string& what)
      : InputError(what) {}
};

/// Values for one subtree: BFS from v (children in ascending id order)
/// assigning alpha_0 = base to v and alpha_i = (n0 + alpha_{i-1}) / 2 to
/// the i-th discovered vertex; each edge gets the larger endpoint value.
/// The alphas increase strictly and stay below n0, so v is the unique
/// critical simplex of the fragment and every other vertex is paired
/// with the edge to its BFS parent.
inline std::map<Simplex, Rational> extend_from_vertex(const Graph& tree,
                                                      VertexId v,
                                                      const Rational& base,
                                                      const Rational& n0) {
  if (!is_tree(tree)) throw RealizationError("extension requires a tree");
  if (!tree.has_vertex(v))
    throw RealizationError("extension base vertex " + std::to_string(v) +
                           " not in tree");
  if (base < Rational(0) || !(base < n0))
    throw RealizationError("extension needs 0 <= base < bound, got base " +
                           base.str() + ", bound " + n0.str());

  std::map<Simplex, Rational> values;
  std::map<VertexId, Rational> vertex_value;
  Rational alpha = base;
  std::queue<VertexId> queue;
  queue.push(v);
  vertex_value.emplace(v, alpha);
  values.emplace(Simplex::vertex(v), alpha);
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop();
    for (VertexId w : tree.neighbors(u)) {
      if (vertex_value.count(w)) continue;
      Rational prev = alpha;
      alpha = (n0 + alpha) / Rational(2);
      if (!(prev < alpha && alpha < n0))
        throw RealizationError("extension values failed to increase below " +
                               n0.str());
      vertex_value.emplace(w, alpha);
      values.emplace(Simplex::vertex(w), alpha);
      queue.push(w);
    }
  }
  for (const Edge& e : tree.edges())
    values.emplace(Simplex::edge(e),
                   std::max(vertex_value.at(e.u), vertex_value.at(e.v)));
  return values;
}

/// Lexicographically smallest removed edge with exactly one endpoint in
/// the labeled component.
inline Edge find_bridge(const Graph& tree, const std::vector<Edge>& removed,
                        const std::set<VertexId>& labeled_component) {
  std::vector<Edge> sorted(removed);
  std::sort(sorted.begin(), sorted.end());
  for (const Edge& e : sorted) {
    if (!tree.has_edge(e))
      throw RealizationError("removed edge " + Simplex::edge(e).str() +
                             " not in tree");
    if (labeled_component.count(e.u) + labeled_component.count(e.v) == 1)
      return e;
  }
  throw RealizationError("no removed edge crosses the labeled component");
}

struct RealizationStage {
  long long birth;
  long long death;     // -1 for the base stage
  bool has_bridge;
  Edge bridge;
  VertexId base_vertex;
  Rational bound;      // extension bound n0
  std::vector<VertexId> tree;
};

struct RealizationPlan {
  std::vector<Edge> removed_edges;
  std::vector<RealizationStage> stages;
};

struct RealizationResult {
  MorseFunction function;
  RealizationPlan plan;
};

struct RealizeOptions {
  /// When set, every stage choice (removed edges, components, base
  /// vertices, bridges) is drawn uniformly from the legal alternatives
  /// instead of the canonical smallest one.  The resulting function
  /// still realizes the requested diagram.
  std::optional<uint64_t> randomize_seed;
};

namespace detail {

template <typename T>
const T& pick(const std::vector<T>& options, std::mt19937_64* rng) {
  if (!rng) return options.front();
  std::uniform_int_distribution<size_t> dist(0, options.size() - 1);
  return options[dist(*rng)];
}

}  // namespace detail

/// Builds a function on the tree whose diagram is exactly d: removes one
/// edge per finite pair, fills the component of the smallest vertex id
/// starting at value 0, then reattaches one component per pair (c, d) in
/// ascending birth order, rooting it at value c and valuing the bridge
/// edge d.
inline RealizationResult realize_with_plan(const Graph& t,
                                           const PersistenceDiagram& d,
                                           const RealizeOptions& options = {}) {
  if (!is_tree(t)) throw RealizationError("realization requires a tree");
  const long long n = static_cast<long long>(t.simplex_count());
  if (!is_consistent(d, n))
    throw InconsistentDiagramError(
        "diagram is not consistent for a tree with " + std::to_string(n) +
        " simplices");
  const size_t k = d.finite_pairs.size();
  if (k > t.edge_count())
    throw RealizationError("diagram has more finite pairs than tree edges");

  std::mt19937_64 rng_storage;
  std::mt19937_64* rng = nullptr;
  if (options.randomize_seed) {
    rng_storage.seed(*options.randomize_seed);
    rng = &rng_storage;
  }

  std::vector<long long> events{0};
  for (auto [birth, death] : d.finite_pairs) {
    events.push_back(birth);
    events.push_back(death);
  }
  std::sort(events.begin(), events.end());

  std::vector<Edge> removed;
  if (rng) {
    std::vector<Edge> pool = t.edges();
    std::shuffle(pool.begin(), pool.end(), *rng);
    removed.assign(pool.begin(), pool.begin() + k);
    std::sort(removed.begin(), removed.end());
  } else {
    removed.assign(t.edges().begin(), t.edges().begin() + k);
  }
  std::set<Edge> removed_set(removed.begin(), removed.end());

  // Components of the cut tree, and the subtree each one spans.
  std::vector<std::pair<VertexId, VertexId>> kept;
  for (const Edge& e : t.edges())
    if (!removed_set.count(e)) kept.emplace_back(e.u, e.v);
  Graph cut = Graph::build(t.vertices(), kept);
  std::vector<std::vector<VertexId>> components = connected_components(cut);
  auto component_subtree = [&](const std::vector<VertexId>& verts) {
    std::set<VertexId> in(verts.begin(), verts.end());
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto [u, v] : kept)
      if (in.count(u) && in.count(v)) edges.emplace_back(u, v);
    return Graph::build(verts, edges);
  };
  auto component_index_of = [&](VertexId v) {
    for (size_t c = 0; c < components.size(); ++c)
      if (std::binary_search(components[c].begin(), components[c].end(), v))
        return c;
    throw RealizationError("vertex outside every component");
  };

  RealizationPlan plan;
  plan.removed_edges = removed;
  std::map<Simplex, Rational> values;
  std::set<VertexId> labeled;

  size_t first;
  if (rng) {
    std::uniform_int_distribution<size_t> dist(0, components.size() - 1);
    first = dist(*rng);
  } else {
    first = component_index_of(t.vertices().front());
  }
  VertexId v0 = detail::pick(components[first], rng);
  Rational bound0 = k == 0 ? Rational(n) : Rational(events[1]);
  auto merge_values = [&](std::map<Simplex, Rational> fragment) {
    for (auto& [simplex, value] : fragment) values.emplace(simplex, value);
  };
  merge_values(
      extend_from_vertex(component_subtree(components[first]), v0, Rational(0),
                         bound0));
  labeled.insert(components[first].begin(), components[first].end());
  plan.stages.push_back({0, -1, false, Edge(0, 1), v0, bound0,
                         components[first]});

  std::vector<std::pair<long long, long long>> pairs = d.finite_pairs;
  std::sort(pairs.begin(), pairs.end());
  std::set<Edge> unused_removed(removed.begin(), removed.end());
  for (auto [birth, death] : pairs) {
    Edge bridge = Edge(0, 1);
    if (rng) {
      std::vector<Edge> eligible;
      for (const Edge& e : unused_removed)
        if (labeled.count(e.u) + labeled.count(e.v) == 1) eligible.push_back(e);
      if (eligible.empty())
        throw RealizationError("no removed edge crosses the labeled component");
      bridge = detail::pick(eligible, rng);
    } else {
      bridge = find_bridge(t, {unused_removed.begin(), unused_removed.end()},
                           labeled);
    }
    unused_removed.erase(bridge);

    VertexId outside = labeled.count(bridge.u) ? bridge.v : bridge.u;
    const std::vector<VertexId>& tree_i = components[component_index_of(outside)];
    VertexId vi = detail::pick(tree_i, rng);
    auto at = std::lower_bound(events.begin(), events.end(), birth);
    Rational bound(*(at + 1));
    merge_values(
        extend_from_vertex(component_subtree(tree_i), vi, Rational(birth),
                           bound));
    values.emplace(Simplex::edge(bridge), Rational(death));
    labeled.insert(tree_i.begin(), tree_i.end());
    plan.stages.push_back({birth, death, true, bridge, vi, bound, tree_i});
  }

  return {MorseFunction::validate(t, values), std::move(plan)};
}

inline MorseFunction realize(const Graph& t, const PersistenceDiagram& d,
                             const RealizeOptions& options = {}) {
  return realize_with_plan(t, d, options).function;
}

}  // namespace morsegraph
