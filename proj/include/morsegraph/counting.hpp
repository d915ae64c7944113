#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "morsegraph/errors.hpp"
#include "morsegraph/graph.hpp"
#include "morsegraph/persistence.hpp"

namespace morsegraph {

using BigInt = mpz_class;

/// Shape of a counting question: connected graphs with n simplices,
/// first Betti number b1, and k finite persistence pairs, so
/// m = 1 + b1 + 2k critical values.
struct CountQuery {
  long long n;
  int b1;
  int k;
};

namespace detail {

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

inline BigInt factorial(long long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace detail

/// Number of consistent diagram shapes for the query: choose the cycle
/// birth values, then k unordered birth/death pairs from what remains of
/// {1, ..., n-1}.
inline BigInt upper_bound_general(const CountQuery& q) {
  if (q.n < 1 || q.b1 < 0 || q.k < 0)
    throw InputError("counting query needs n >= 1, b1 >= 0, k >= 0");
  long long m = 1 + q.b1 + 2ll * q.k;
  if (m > q.n)
    throw InputError("query asks for " + std::to_string(m) +
                     " critical values on " + std::to_string(q.n) +
                     " simplices");
  BigInt out = detail::binomial(q.n - 1, q.b1);
  for (int i = 0; i < q.k; ++i)
    out *= detail::binomial(q.n - 1 - q.b1 - 2ll * i, 2);
  out /= detail::factorial(q.k);
  return out;
}

/// The tree specialization (b1 = 0): (n-1)(n-2)...(n-2k) / (2^k k!).
inline BigInt upper_bound_tree(long long n, int k) {
  if (n < 1 || k < 0) throw InputError("counting query needs n >= 1, k >= 0");
  if (2ll * k + 1 > n)
    throw InputError("query asks for " + std::to_string(2ll * k + 1) +
                     " critical values on " + std::to_string(n) +
                     " simplices");
  BigInt out = 1;
  for (long long j = 1; j <= 2ll * k; ++j) out *= static_cast<long>(n - j);
  out /= BigInt(1) << k;
  out /= detail::factorial(k);
  return out;
}

/// Calls `emit` once per consistent diagram with k finite pairs on n
/// simplices, in lexicographic order of (c1, d1, c2, d2, ...) with
/// births ascending.
inline void for_each_consistent_diagram(
    long long n, int k,
    const std::function<void(const PersistenceDiagram&)>& emit) {
  if (n < 1 || k < 0) throw InputError("counting query needs n >= 1, k >= 0");
  if (2ll * k + 1 > n)
    throw InputError("diagram with " + std::to_string(k) +
                     " pairs needs more than " + std::to_string(n) +
                     " simplices");
  PersistenceDiagram d;
  d.essential_h0.push_back(0);
  std::vector<bool> used(static_cast<size_t>(n), false);
  std::function<void(long long, int)> recurse = [&](long long min_birth,
                                                    int left) {
    if (left == 0) {
      emit(d);
      return;
    }
    for (long long c = min_birth; c <= n - 1; ++c) {
      if (used[c]) continue;
      used[c] = true;
      for (long long death = c + 1; death <= n - 1; ++death) {
        if (used[death]) continue;
        used[death] = true;
        d.finite_pairs.emplace_back(c, death);
        recurse(c + 1, left - 1);
        d.finite_pairs.pop_back();
        used[death] = false;
      }
      used[c] = false;
    }
  };
  recurse(1, k);
}

inline std::vector<PersistenceDiagram> enumerate_consistent_diagrams(
    long long n, int k) {
  std::vector<PersistenceDiagram> out;
  for_each_consistent_diagram(
      n, k, [&](const PersistenceDiagram& d) { out.push_back(d); });
  return out;
}

namespace detail {

/// Union-find without path compression so merges can be undone in LIFO
/// order; tracks the earliest critical slot per class.
class RollbackDsu {
 public:
  explicit RollbackDsu(int size)
      : parent_(size), size_(size, 1), birth_(size, INT_MAX) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  int birth(int root) const { return birth_[root]; }
  void set_birth(int vertex, int slot) { birth_[vertex] = slot; }

  bool merge(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    log_.push_back({ra, rb, birth_[ra]});
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    birth_[ra] = std::min(birth_[ra], birth_[rb]);
    return true;
  }

  void undo_merge() {
    auto [kept, merged, old_birth] = log_.back();
    log_.pop_back();
    birth_[kept] = old_birth;
    size_[kept] -= size_[merged];
    parent_[merged] = merged;
  }

 private:
  struct Change {
    int kept;
    int merged;
    int old_birth;
  };
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> birth_;
  std::vector<Change> log_;
};

/// Exhaustive search state for one graph: enumerates every gradient
/// vector field (partial vertex-edge matching), every order of adding
/// its critical simplices and regular pairs that keeps each prefix a
/// subcomplex, and records the resulting component-merge pattern.
class AchievableSearch {
 public:
  explicit AchievableSearch(const Graph& g) : g_(g) {
    for (const Edge& e : g.edges()) {
      int u = static_cast<int>(g.index_of(e.u));
      int v = static_cast<int>(g.index_of(e.v));
      edge_ends_.emplace_back(u, v);
      incident_[u].push_back(static_cast<int>(edge_ends_.size()) - 1);
      incident_[v].push_back(static_cast<int>(edge_ends_.size()) - 1);
    }
  }

  std::set<std::vector<signed char>> run() {
    vertex_match_.assign(g_.vertex_count(), -1);
    enumerate_matchings(0, 0);
    return std::move(patterns_);
  }

 private:
  struct Unit {
    enum Kind { CriticalVertex, CriticalEdge, Pair } kind;
    int vertex;
    int edge;
  };

  void enumerate_matchings(size_t vertex, uint64_t matched_edges) {
    if (vertex == g_.vertex_count()) {
      collect_patterns();
      return;
    }
    enumerate_matchings(vertex + 1, matched_edges);
    auto it = incident_.find(static_cast<int>(vertex));
    if (it == incident_.end()) return;
    for (int e : it->second) {
      if (matched_edges & (uint64_t{1} << e)) continue;
      vertex_match_[vertex] = e;
      enumerate_matchings(vertex + 1, matched_edges | (uint64_t{1} << e));
      vertex_match_[vertex] = -1;
    }
  }

  void collect_patterns() {
    units_.clear();
    std::vector<int> edge_pair(edge_ends_.size(), -1);
    for (size_t v = 0; v < g_.vertex_count(); ++v)
      if (vertex_match_[v] >= 0) edge_pair[vertex_match_[v]] = static_cast<int>(v);
    for (size_t v = 0; v < g_.vertex_count(); ++v)
      if (vertex_match_[v] < 0)
        units_.push_back({Unit::CriticalVertex, static_cast<int>(v), -1});
    for (size_t e = 0; e < edge_ends_.size(); ++e) {
      if (edge_pair[e] >= 0)
        units_.push_back({Unit::Pair, edge_pair[e], static_cast<int>(e)});
      else
        units_.push_back({Unit::CriticalEdge, -1, static_cast<int>(e)});
    }
    RollbackDsu dsu(static_cast<int>(g_.vertex_count()));
    events_.clear();
    extend_order(0, 0, dsu);
  }

  bool addable(const Unit& u, uint64_t present) const {
    switch (u.kind) {
      case Unit::CriticalVertex:
        return !(present & (uint64_t{1} << u.vertex));
      case Unit::CriticalEdge:
        return (present & (uint64_t{1} << edge_ends_[u.edge].first)) &&
               (present & (uint64_t{1} << edge_ends_[u.edge].second));
      case Unit::Pair: {
        auto [a, b] = edge_ends_[u.edge];
        int other = a == u.vertex ? b : a;
        return present & (uint64_t{1} << other);
      }
    }
    return false;
  }

  void extend_order(uint64_t added, uint64_t present, RollbackDsu& dsu) {
    if (added == (uint64_t{1} << units_.size()) - 1) {
      patterns_.insert(events_);
      return;
    }
    for (size_t i = 0; i < units_.size(); ++i) {
      if (added & (uint64_t{1} << i)) continue;
      const Unit& u = units_[i];
      if (!addable(u, present)) continue;
      uint64_t next_added = added | (uint64_t{1} << i);
      switch (u.kind) {
        case Unit::CriticalVertex:
          dsu.set_birth(u.vertex, static_cast<int>(events_.size()));
          events_.push_back(-1);
          extend_order(next_added, present | (uint64_t{1} << u.vertex), dsu);
          events_.pop_back();
          dsu.set_birth(u.vertex, INT_MAX);
          break;
        case Unit::CriticalEdge: {
          auto [a, b] = edge_ends_[u.edge];
          int ra = dsu.find(a), rb = dsu.find(b);
          if (ra == rb) {
            events_.push_back(-2);
            extend_order(next_added, present, dsu);
            events_.pop_back();
          } else {
            events_.push_back(static_cast<signed char>(
                std::max(dsu.birth(ra), dsu.birth(rb))));
            dsu.merge(ra, rb);
            extend_order(next_added, present, dsu);
            dsu.undo_merge();
            events_.pop_back();
          }
          break;
        }
        case Unit::Pair: {
          auto [a, b] = edge_ends_[u.edge];
          int other = a == u.vertex ? b : a;
          dsu.merge(u.vertex, other);
          extend_order(next_added, present | (uint64_t{1} << u.vertex), dsu);
          dsu.undo_merge();
          break;
        }
      }
    }
  }

  const Graph& g_;
  std::vector<std::pair<int, int>> edge_ends_;
  std::map<int, std::vector<int>> incident_;
  std::vector<int> vertex_match_;
  std::vector<Unit> units_;
  std::vector<signed char> events_;
  std::set<std::vector<signed char>> patterns_;
};

inline PersistenceDiagram stamp_pattern(const std::vector<signed char>& pattern,
                                        const std::vector<long long>& values) {
  PersistenceDiagram d;
  std::vector<bool> killed(pattern.size(), false);
  for (size_t s = 0; s < pattern.size(); ++s)
    if (pattern[s] >= 0) killed[pattern[s]] = true;
  for (size_t s = 0; s < pattern.size(); ++s) {
    if (pattern[s] == -1) {
      if (!killed[s]) d.essential_h0.push_back(values[s]);
    } else if (pattern[s] == -2) {
      d.essential_h1.push_back(values[s]);
    } else {
      d.finite_pairs.emplace_back(values[pattern[s]], values[s]);
    }
  }
  d.canonicalize();
  return d;
}

// Bitmasks over simplices cap any override at 62.
inline size_t achievable_guard() {
  if (const char* env = std::getenv("MORSE_MAX_SIMPLICES")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end && *end == '\0' && parsed > 0)
      return std::min<size_t>(static_cast<size_t>(parsed), 62);
  }
  return 14;
}

}  // namespace detail

/// The exact set of diagrams of flat discrete Morse functions on the
/// connected graph g, sorted.  Every gradient field and addition order
/// is explored once; the distinct merge patterns are then stamped with
/// every ascending assignment of critical values from {0} and
/// {1, ..., n-1}.  Guarded at 14 simplices by default; the environment
/// variable MORSE_MAX_SIMPLICES overrides the guard.
inline std::vector<PersistenceDiagram> enumerate_achievable_diagrams(
    const Graph& g) {
  size_t guard = detail::achievable_guard();
  if (g.simplex_count() > guard)
    throw SizeGuardError("achievability search limited to " +
                         std::to_string(guard) + " simplices (" +
                         std::to_string(g.simplex_count()) + " given)");
  if (!is_connected(g))
    throw InputError("achievability search requires a connected graph");

  detail::AchievableSearch search(g);
  std::set<std::vector<signed char>> patterns = search.run();

  const long long n = static_cast<long long>(g.simplex_count());
  std::set<PersistenceDiagram> out;
  std::vector<long long> values;
  for (const auto& pattern : patterns) {
    const size_t m = pattern.size();
    // Ascending critical values: 0 then an (m-1)-subset of {1..n-1}.
    std::vector<long long> pick(m - 1);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
      values.assign(1, 0);
      values.insert(values.end(), pick.begin(), pick.end());
      out.insert(detail::stamp_pattern(pattern, values));
      size_t i = m - 1;
      while (i > 0 &&
             pick[i - 1] == n - 1 - static_cast<long long>(m - 1 - i))
        --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (size_t j = i; j < m - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace morsegraph
