#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "morsegraph/errors.hpp"
#include "morsegraph/graph.hpp"
#include "morsegraph/morse.hpp"

namespace morsegraph {

/// Persistence diagram of a function on a graph.  All event values are
/// integers (critical values).  Canonical order: finite pairs ascending,
/// essential birth lists ascending.
struct PersistenceDiagram {
  std::vector<std::pair<long long, long long>> finite_pairs;
  std::vector<long long> essential_h0;
  std::vector<long long> essential_h1;

  void canonicalize() {
    std::sort(finite_pairs.begin(), finite_pairs.end());
    std::sort(essential_h0.begin(), essential_h0.end());
    std::sort(essential_h1.begin(), essential_h1.end());
  }

  friend auto operator<=>(const PersistenceDiagram&,
                          const PersistenceDiagram&) = default;
};

/// Multiset equality of two diagrams.
inline bool diagram_equal(PersistenceDiagram a, PersistenceDiagram b) {
  a.canonicalize();
  b.canonicalize();
  return a == b;
}

/// Whether d can be the diagram of some function on a connected graph
/// with n simplices and first Betti number 0: one essential class born
/// at 0, no cycles, and finite pairs with distinct integer events, each
/// birth before its death, all within {1, ..., n-1}.
inline bool is_consistent(const PersistenceDiagram& d, long long n) {
  if (d.essential_h0 != std::vector<long long>{0}) return false;
  if (!d.essential_h1.empty()) return false;
  std::set<long long> events;
  for (auto [birth, death] : d.finite_pairs) {
    if (birth >= death) return false;
    for (long long value : {birth, death}) {
      if (value < 1 || value > n - 1) return false;
      if (!events.insert(value).second) return false;
    }
  }
  return true;
}

namespace detail {

/// Union-find over dense indices carrying, per class, the minimum
/// critical birth value of its members.
class UnionFind {
 public:
  explicit UnionFind(size_t size)
      : parent_(size), size_(size, 1),
        min_birth_(size, std::numeric_limits<long long>::max()) {
    for (size_t i = 0; i < size; ++i) parent_[i] = i;
  }

  size_t find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void set_birth(size_t x, long long birth) { min_birth_[find(x)] = birth; }
  long long birth(size_t x) { return min_birth_[find(x)]; }

  /// Merges the classes of a and b; returns false when already equal.
  bool merge(size_t a, size_t b) {
    size_t ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    min_birth_[ra] = std::min(min_birth_[ra], min_birth_[rb]);
    return true;
  }

 private:
  std::vector<size_t> parent_;
  std::vector<size_t> size_;
  std::vector<long long> min_birth_;
};

}  // namespace detail

/// Sweeps the simplices in increasing value order, one critical simplex
/// or regular pair at a time, tracking components with a union-find.
/// A critical vertex births a component; a critical edge either births
/// a cycle (essential) or merges two components, killing the one whose
/// minimum critical vertex value is larger (elder rule); regular pairs
/// glue silently.  Requires a connected graph.
inline PersistenceDiagram compute_diagram_fast(const MorseFunction& f) {
  const Graph& g = f.graph();
  if (!is_connected(g))
    throw MorseError(MorseErrorCode::Disconnected,
                     "persistence requires a connected graph");

  struct Step {
    Rational value;
    bool critical;
    Simplex simplex;  // critical step
    VertexId vertex;  // pair step
    Edge edge;        // pair step
  };
  std::vector<Step> steps;
  for (const auto& [simplex, value] : f.criticals())
    steps.push_back({Rational(value), true, simplex, 0, Edge(0, 1)});
  for (const auto& [vertex, edge] : f.regular_pairs().pairs)
    steps.push_back({f.value(Simplex::edge(edge)), false,
                     Simplex::vertex(vertex), vertex, edge});
  std::sort(steps.begin(), steps.end(),
            [](const Step& a, const Step& b) { return a.value < b.value; });

  detail::UnionFind uf(g.vertex_count());
  PersistenceDiagram d;
  for (const Step& step : steps) {
    if (!step.critical) {
      uf.merge(g.index_of(step.vertex), g.index_of(step.edge.other(step.vertex)));
      continue;
    }
    if (step.simplex.dimension() == 0) {
      uf.set_birth(g.index_of(step.simplex.vertex_id()),
                   step.value.as_integer());
      continue;
    }
    Edge e = step.simplex.as_edge();
    size_t ru = uf.find(g.index_of(e.u));
    size_t rv = uf.find(g.index_of(e.v));
    if (ru == rv) {
      d.essential_h1.push_back(step.value.as_integer());
    } else {
      long long dying = std::max(uf.birth(ru), uf.birth(rv));
      d.finite_pairs.emplace_back(dying, step.value.as_integer());
      uf.merge(ru, rv);
    }
  }
  d.essential_h0.push_back(0);
  d.canonicalize();
  return d;
}

namespace detail {

/// GF(2) matrix as a list of row bitmasks (columns = low bits).
using Gf2Matrix = std::vector<uint64_t>;

inline int gf2_rank(Gf2Matrix rows) {
  int rank = 0;
  for (int col = 0; col < 64; ++col) {
    uint64_t bit = uint64_t{1} << col;
    size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<size_t>(rank) && (rows[r] & bit)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

/// Basis of the GF(2) cycle space of g, each cycle as a bitmask over
/// edge positions in `edge_index`.
inline Gf2Matrix cycle_space_basis(const Graph& g,
                                   const std::map<Edge, int>& edge_index) {
  // Kernel of the boundary matrix via column elimination: columns are
  // edges, rows are vertices; kernel vectors are recorded in a shadow
  // identity matrix over the columns.
  size_t cols = g.edge_count();
  std::vector<uint64_t> boundary(cols, 0);  // column-major, bits = vertices
  std::vector<uint64_t> shadow(cols, 0);
  for (size_t j = 0; j < cols; ++j) {
    const Edge& e = g.edges()[j];
    boundary[j] = (uint64_t{1} << g.index_of(e.u)) |
                  (uint64_t{1} << g.index_of(e.v));
    shadow[j] = uint64_t{1} << j;
  }
  std::vector<bool> used_as_pivot(cols, false);
  std::vector<int> pivot_of_row(64, -1);
  Gf2Matrix kernel;
  for (size_t j = 0; j < cols; ++j) {
    uint64_t col = boundary[j];
    uint64_t combo = shadow[j];
    while (col) {
      int row = std::countr_zero(col);
      if (pivot_of_row[row] < 0) break;
      col ^= boundary[pivot_of_row[row]];
      combo ^= shadow[pivot_of_row[row]];
    }
    if (col == 0) {
      uint64_t cycle = 0;
      for (size_t t = 0; t < cols; ++t)
        if (combo & (uint64_t{1} << t))
          cycle |= uint64_t{1} << edge_index.at(g.edges()[t]);
      kernel.push_back(cycle);
    } else {
      boundary[j] = col;
      shadow[j] = combo;
      pivot_of_row[std::countr_zero(col)] = static_cast<int>(j);
    }
  }
  return kernel;
}

}  // namespace detail

/// Definition-level diagram: computes the persistent Betti numbers of
/// every filtration step pair directly (components for degree 0, GF(2)
/// cycle-space ranks for degree 1) and reads the multiplicities
///   mu^{i,j} = (beta^{i,j-1} - beta^{i,j}) - (beta^{i-1,j-1} - beta^{i-1,j})
/// off the resulting table.  Guarded at 64 simplices; independent of the
/// union-find sweep.
inline PersistenceDiagram compute_diagram_oracle(const MorseFunction& f) {
  if (f.graph().simplex_count() > 64)
    throw SizeGuardError("diagram oracle limited to 64 simplices");

  Filtration filt = filtration(f);
  const int m = static_cast<int>(filt.subcomplexes.size());

  std::map<Edge, int> edge_index;
  for (const Edge& e : f.graph().edges())
    edge_index.emplace(e, static_cast<int>(edge_index.size()));

  // beta0[i][j], beta1[i][j] for i <= j: rank of H_p(G_i) -> H_p(G_j).
  std::vector<std::vector<int>> beta0(m, std::vector<int>(m, 0));
  std::vector<std::vector<int>> beta1(m, std::vector<int>(m, 0));
  std::vector<detail::Gf2Matrix> cycles(m);
  for (int i = 0; i < m; ++i)
    cycles[i] = detail::cycle_space_basis(filt.subcomplexes[i], edge_index);
  for (int j = 0; j < m; ++j) {
    const Graph& gj = filt.subcomplexes[j];
    std::map<VertexId, int> component_of;
    auto components = connected_components(gj);
    for (size_t c = 0; c < components.size(); ++c)
      for (VertexId v : components[c]) component_of[v] = static_cast<int>(c);
    for (int i = 0; i <= j; ++i) {
      std::set<int> hit;
      for (VertexId v : filt.subcomplexes[i].vertices())
        hit.insert(component_of.at(v));
      beta0[i][j] = static_cast<int>(hit.size());
      // H_1 inclusions are injective on graphs, so the image rank is the
      // rank of G_i's cycle basis inside G_j's edge space.
      beta1[i][j] = detail::gf2_rank(cycles[i]);
    }
  }

  auto beta = [&](const std::vector<std::vector<int>>& table, int i, int j) {
    return (i < 0 || j < 0) ? 0 : table[i][j];
  };

  PersistenceDiagram d;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      int mu0 = (beta(beta0, i, j - 1) - beta(beta0, i, j)) -
                (beta(beta0, i - 1, j - 1) - beta(beta0, i - 1, j));
      for (int c = 0; c < mu0; ++c)
        d.finite_pairs.emplace_back(filt.critical_values[i],
                                    filt.critical_values[j]);
    }
    int last = m - 1;
    int essential0 = beta(beta0, i, last) - beta(beta0, i - 1, last);
    for (int c = 0; c < essential0; ++c)
      d.essential_h0.push_back(filt.critical_values[i]);
    int essential1 = beta(beta1, i, last) - beta(beta1, i - 1, last);
    for (int c = 0; c < essential1; ++c)
      d.essential_h1.push_back(filt.critical_values[i]);
  }
  d.canonicalize();
  return d;
}

}  // namespace morsegraph
