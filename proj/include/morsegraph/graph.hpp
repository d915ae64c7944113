#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "morsegraph/errors.hpp"

namespace morsegraph {

using VertexId = int;

/// Undirected edge, stored with u < v.
struct Edge {
  VertexId u;
  VertexId v;

  Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool has_endpoint(VertexId w) const { return w == u || w == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A cell of a graph complex: a vertex or an edge.
class Simplex {
 public:
  static Simplex vertex(VertexId v) { return Simplex(v, kNone); }
  static Simplex edge(Edge e) { return Simplex(e.u, e.v); }
  static Simplex edge(VertexId a, VertexId b) { return edge(Edge(a, b)); }

  int dimension() const { return b_ == kNone ? 0 : 1; }
  VertexId vertex_id() const { return a_; }
  Edge as_edge() const { return Edge(a_, b_); }

  bool incident_to(const Simplex& other) const {
    if (dimension() == other.dimension()) return false;
    const Simplex& v = dimension() == 0 ? *this : other;
    const Simplex& e = dimension() == 0 ? other : *this;
    return e.as_edge().has_endpoint(v.vertex_id());
  }

  /// "3" for a vertex, "1-4" for an edge; matches the JSON key format.
  std::string str() const {
    if (dimension() == 0) return std::to_string(a_);
    return std::to_string(a_) + "-" + std::to_string(b_);
  }

  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  static constexpr VertexId kNone = -1;
  Simplex(VertexId a, VertexId b) : a_(a), b_(b) {}

  VertexId a_;
  VertexId b_;
};

class GraphError : public InputError {
 public:
  explicit GraphError(const std::string& what) : InputError(what) {}
};

/// Finite undirected simple graph with non-negative integer vertex ids.
/// Vertices and edges are kept sorted, so equal graphs compare equal
/// memberwise and all iteration orders are deterministic.
class Graph {
 public:
  static Graph build(std::vector<VertexId> vertices,
                     const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
      throw GraphError("duplicate vertex id");
    for (VertexId v : vertices)
      if (v < 0) throw GraphError("negative vertex id " + std::to_string(v));

    Graph g;
    g.vertices_ = std::move(vertices);
    for (auto [a, b] : edges) {
      if (a == b) throw GraphError("loop edge at vertex " + std::to_string(a));
      if (!g.has_vertex(a) || !g.has_vertex(b))
        throw GraphError("edge (" + std::to_string(a) + "," +
                         std::to_string(b) + ") references unknown vertex");
      g.edges_.emplace_back(a, b);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
      throw GraphError("duplicate edge");

    g.adjacency_.resize(g.vertices_.size());
    for (const Edge& e : g.edges_) {
      g.adjacency_[g.index_of(e.u)].push_back(e.v);
      g.adjacency_[g.index_of(e.v)].push_back(e.u);
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return g;
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  size_t vertex_count() const { return vertices_.size(); }
  size_t edge_count() const { return edges_.size(); }
  size_t simplex_count() const { return vertices_.size() + edges_.size(); }

  bool has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  bool has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  /// Neighbors of v in ascending id order.
  const std::vector<VertexId>& neighbors(VertexId v) const {
    return adjacency_[index_of(v)];
  }

  /// Position of v in the sorted vertex list.
  size_t index_of(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
      throw GraphError("unknown vertex " + std::to_string(v));
    return static_cast<size_t>(it - vertices_.begin());
  }

  /// All simplices: vertices in ascending order, then edges.
  std::vector<Simplex> simplices() const {
    std::vector<Simplex> out;
    out.reserve(simplex_count());
    for (VertexId v : vertices_) out.push_back(Simplex::vertex(v));
    for (const Edge& e : edges_) out.push_back(Simplex::edge(e));
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

/// Vertex sets of the connected components, each ascending, ordered by
/// smallest member.
inline std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<std::vector<VertexId>> components;
  std::vector<bool> seen(g.vertex_count(), false);
  for (VertexId start : g.vertices()) {
    if (seen[g.index_of(start)]) continue;
    std::vector<VertexId> component;
    std::queue<VertexId> queue;
    queue.push(start);
    seen[g.index_of(start)] = true;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop();
      component.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[g.index_of(w)]) {
          seen[g.index_of(w)] = true;
          queue.push(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

inline bool is_connected(const Graph& g) {
  return connected_components(g).size() == 1;
}

/// (b0, b1): component count and independent cycle count.
inline std::pair<int, int> betti_numbers(const Graph& g) {
  int b0 = static_cast<int>(connected_components(g).size());
  int b1 = static_cast<int>(g.edge_count()) -
           static_cast<int>(g.vertex_count()) + b0;
  return {b0, b1};
}

inline bool is_tree(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

/// Hop distance between two vertices, or nullopt when in different
/// components.
inline std::optional<int> distance(const Graph& g, VertexId a, VertexId b) {
  g.index_of(a);
  g.index_of(b);
  std::vector<int> dist(g.vertex_count(), -1);
  dist[g.index_of(a)] = 0;
  std::queue<VertexId> queue;
  queue.push(a);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    if (v == b) return dist[g.index_of(v)];
    for (VertexId w : g.neighbors(v)) {
      if (dist[g.index_of(w)] < 0) {
        dist[g.index_of(w)] = dist[g.index_of(v)] + 1;
        queue.push(w);
      }
    }
  }
  return std::nullopt;
}

namespace detail {

/// Canonical form of the rooted tree hanging below `v` (parent excluded):
/// children forms sorted, so isomorphic rooted trees get equal strings.
inline std::string rooted_tree_form(const Graph& g, VertexId v, VertexId parent) {
  std::vector<std::string> child_forms;
  for (VertexId w : g.neighbors(v))
    if (w != parent) child_forms.push_back(rooted_tree_form(g, w, v));
  std::sort(child_forms.begin(), child_forms.end());
  std::string form = "(";
  for (const std::string& c : child_forms) form += c;
  form += ")";
  return form;
}

/// Centers of a tree given by its vertex set (one or two, by repeated
/// leaf removal).
inline std::vector<VertexId> tree_centers(const Graph& g,
                                          const std::vector<VertexId>& verts) {
  std::map<VertexId, int> degree;
  for (VertexId v : verts) degree[v] = 0;
  for (VertexId v : verts)
    for (VertexId w : g.neighbors(v))
      if (degree.count(w)) degree[v]++;
  std::set<VertexId> alive(verts.begin(), verts.end());
  std::vector<VertexId> layer;
  for (VertexId v : verts)
    if (degree[v] <= 1) layer.push_back(v);
  while (alive.size() > 2) {
    std::vector<VertexId> next;
    for (VertexId v : layer) {
      alive.erase(v);
      for (VertexId w : g.neighbors(v)) {
        if (alive.count(w) && --degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  return {alive.begin(), alive.end()};
}

/// Canonical form of one tree component: root at the center, or at both
/// centers taking the smaller form.
inline std::string tree_component_form(const Graph& g,
                                       const std::vector<VertexId>& verts) {
  std::vector<VertexId> centers = tree_centers(g, verts);
  std::string best;
  for (size_t i = 0; i < centers.size(); ++i) {
    std::string form = rooted_tree_form(g, centers[i], -1);
    if (i == 0 || form < best) best = std::move(form);
  }
  return best;
}

inline bool forest_isomorphic(const Graph& a, const Graph& b) {
  auto forms = [](const Graph& g) {
    std::vector<std::string> out;
    for (const auto& comp : connected_components(g))
      out.push_back(tree_component_form(g, comp));
    std::sort(out.begin(), out.end());
    return out;
  };
  return forms(a) == forms(b);
}

inline bool extend_isomorphism(const Graph& a, const Graph& b,
                               std::vector<int>& image,
                               std::vector<bool>& used, size_t next) {
  if (next == a.vertex_count()) return true;
  VertexId va = a.vertices()[next];
  for (size_t j = 0; j < b.vertex_count(); ++j) {
    if (used[j]) continue;
    VertexId vb = b.vertices()[j];
    if (a.neighbors(va).size() != b.neighbors(vb).size()) continue;
    bool ok = true;
    for (size_t prev = 0; prev < next && ok; ++prev) {
      bool ea = a.has_edge(Edge(va, a.vertices()[prev]));
      bool eb = b.has_edge(Edge(vb, b.vertices()[image[prev]]));
      if (ea != eb) ok = false;
    }
    if (!ok) continue;
    image[next] = static_cast<int>(j);
    used[j] = true;
    if (extend_isomorphism(a, b, image, used, next + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace detail

/// Unlabeled isomorphism test.  Forests use canonical forms; everything
/// else falls back to degree-pruned backtracking, guarded at 64 simplices.
inline bool graph_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count())
    return false;
  auto degree_multiset = [](const Graph& g) {
    std::vector<size_t> degs;
    for (VertexId v : g.vertices()) degs.push_back(g.neighbors(v).size());
    std::sort(degs.begin(), degs.end());
    return degs;
  };
  if (degree_multiset(a) != degree_multiset(b)) return false;
  if (betti_numbers(a) != betti_numbers(b)) return false;

  if (betti_numbers(a).second == 0) return detail::forest_isomorphic(a, b);

  if (a.simplex_count() > 64)
    throw SizeGuardError("isomorphism test limited to 64 simplices");
  std::vector<int> image(a.vertex_count(), -1);
  std::vector<bool> used(b.vertex_count(), false);
  return detail::extend_isomorphism(a, b, image, used, 0);
}

}  // namespace morsegraph
