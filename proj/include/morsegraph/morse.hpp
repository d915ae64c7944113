#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "morsegraph/errors.hpp"
#include "morsegraph/graph.hpp"
#include "morsegraph/rational.hpp"

namespace morsegraph {

enum class MorseErrorCode {
  MissingValue,
  UnknownSimplex,
  ValueOutOfRange,
  NonMonotone,
  MinNotZero,
  TripleValue,
  NonIncidentTie,
  NonIntegerCritical,
  ParityViolation,
  Disconnected,
};

class MorseError : public InputError {
 public:
  MorseError(MorseErrorCode code, const std::string& what)
      : InputError(what), code_(code) {}
  MorseErrorCode code() const { return code_; }

 private:
  MorseErrorCode code_;
};

/// The regular (vertex, edge) pairs of a function, i.e. its gradient
/// vector field.  Pairs are sorted by vertex id.
struct GradientVectorField {
  std::vector<std::pair<VertexId, Edge>> pairs;

  friend bool operator==(const GradientVectorField&,
                         const GradientVectorField&) = default;
};

/// A validated flat discrete Morse function on a graph: each simplex
/// carries a value in [0, n]; values are attained once (critical, at
/// distinct non-negative integers < n, with minimum 0) or twice (a
/// regular vertex-edge pair sharing the value).
class MorseFunction {
 public:
  /// Checks every axiom on the raw assignment and classifies simplices.
  /// Throws MorseError naming the first violated axiom.
  static MorseFunction validate(const Graph& g,
                                const std::map<Simplex, Rational>& raw_values) {
    const long long n = static_cast<long long>(g.simplex_count());
    if (n == 0)
      throw MorseError(MorseErrorCode::MinNotZero,
                       "empty graph admits no function with minimum 0");
    for (const auto& [simplex, value] : raw_values) {
      bool known = simplex.dimension() == 0 ? g.has_vertex(simplex.vertex_id())
                                            : g.has_edge(simplex.as_edge());
      if (!known)
        throw MorseError(MorseErrorCode::UnknownSimplex,
                         "value given for simplex " + simplex.str() +
                             " which is not in the graph");
      if (value < Rational(0) || value > Rational(n))
        throw MorseError(MorseErrorCode::ValueOutOfRange,
                         "value " + value.str() + " of simplex " +
                             simplex.str() + " outside [0, " +
                             std::to_string(n) + "]");
    }
    for (const Simplex& s : g.simplices())
      if (!raw_values.count(s))
        throw MorseError(MorseErrorCode::MissingValue,
                         "no value for simplex " + s.str());

    for (const Edge& e : g.edges()) {
      Rational fe = raw_values.at(Simplex::edge(e));
      for (VertexId v : {e.u, e.v})
        if (raw_values.at(Simplex::vertex(v)) > fe)
          throw MorseError(MorseErrorCode::NonMonotone,
                           "edge " + Simplex::edge(e).str() + " has value " +
                               fe.str() + " below its endpoint " +
                               std::to_string(v));
    }

    std::map<Rational, std::vector<Simplex>> by_value;
    for (const auto& [simplex, value] : raw_values)
      by_value[value].push_back(simplex);
    if (by_value.begin()->first != Rational(0))
      throw MorseError(MorseErrorCode::MinNotZero,
                       "minimum value is " + by_value.begin()->first.str() +
                           ", expected 0");

    MorseFunction f;
    f.graph_ = g;
    f.values_ = raw_values;
    for (const auto& [value, simplices] : by_value) {
      if (simplices.size() > 2)
        throw MorseError(MorseErrorCode::TripleValue,
                         "value " + value.str() + " attained " +
                             std::to_string(simplices.size()) + " times");
      if (simplices.size() == 2) {
        const Simplex& a = simplices[0];
        const Simplex& b = simplices[1];
        if (!a.incident_to(b))
          throw MorseError(MorseErrorCode::NonIncidentTie,
                           "simplices " + a.str() + " and " + b.str() +
                               " share value " + value.str() +
                               " but are not incident");
        const Simplex& vertex = a.dimension() == 0 ? a : b;
        f.pairs_.pairs.emplace_back(
            vertex.vertex_id(),
            (a.dimension() == 0 ? b : a).as_edge());
      } else {
        if (!value.is_integer())
          throw MorseError(MorseErrorCode::NonIntegerCritical,
                           "critical simplex " + simplices[0].str() +
                               " has non-integer value " + value.str());
        if (value.as_integer() >= n)
          throw MorseError(MorseErrorCode::ValueOutOfRange,
                           "critical simplex " + simplices[0].str() +
                               " has value " + value.str() +
                               ", critical values must stay below " +
                               std::to_string(n));
        f.criticals_.emplace_back(simplices[0], value.as_integer());
      }
    }
    std::sort(f.pairs_.pairs.begin(), f.pairs_.pairs.end());
    return f;
  }

  const Graph& graph() const { return graph_; }

  const Rational& value(const Simplex& s) const { return values_.at(s); }
  const std::map<Simplex, Rational>& values() const { return values_; }

  /// Critical simplices with their integer values, ascending by value.
  const std::vector<std::pair<Simplex, long long>>& criticals() const {
    return criticals_;
  }

  const GradientVectorField& regular_pairs() const { return pairs_; }

  bool is_critical(const Simplex& s) const {
    for (const auto& [c, value] : criticals_)
      if (c == s) return true;
    return false;
  }

 private:
  MorseFunction() = default;

  Graph graph_;
  std::map<Simplex, Rational> values_;
  std::vector<std::pair<Simplex, long long>> criticals_;
  GradientVectorField pairs_;
};

/// Subgraph of all simplices with value <= a (closed by monotonicity).
inline Graph level_subcomplex(const MorseFunction& f, const Rational& a) {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v : f.graph().vertices())
    if (f.value(Simplex::vertex(v)) <= a) vertices.push_back(v);
  for (const Edge& e : f.graph().edges())
    if (f.value(Simplex::edge(e)) <= a) edges.emplace_back(e.u, e.v);
  return Graph::build(std::move(vertices), edges);
}

/// The level subcomplexes at the critical values, in ascending order.
struct Filtration {
  std::vector<long long> critical_values;
  std::vector<Graph> subcomplexes;
};

inline Filtration filtration(const MorseFunction& f) {
  Filtration out;
  for (const auto& [simplex, value] : f.criticals()) {
    out.critical_values.push_back(value);
    out.subcomplexes.push_back(level_subcomplex(f, Rational(value)));
  }
  return out;
}

inline GradientVectorField gradient_vector_field(const MorseFunction& f) {
  return f.regular_pairs();
}

struct MorseInequalityReport {
  int m0;
  int m1;
  int b0;
  int b1;
  bool holds;
};

/// Weak Morse inequalities plus the Euler identity: m0 >= b0, m1 >= b1,
/// m0 - m1 = b0 - b1.  These hold for every valid function.
inline MorseInequalityReport check_morse_inequalities(const MorseFunction& f) {
  MorseInequalityReport r{};
  for (const auto& [simplex, value] : f.criticals())
    (simplex.dimension() == 0 ? r.m0 : r.m1)++;
  auto [b0, b1] = betti_numbers(f.graph());
  r.b0 = b0;
  r.b1 = b1;
  r.holds = r.m0 >= r.b0 && r.m1 >= r.b1 && r.m0 - r.m1 == r.b0 - r.b1;
  return r;
}

/// The k with m = 1 + b1 + 2k on a connected graph; the count of finite
/// persistence pairs.
inline int critical_parity(const MorseFunction& f) {
  if (!is_connected(f.graph()))
    throw MorseError(MorseErrorCode::Disconnected,
                     "critical parity requires a connected graph");
  int m = static_cast<int>(f.criticals().size());
  int b1 = betti_numbers(f.graph()).second;
  int twice_k = m - 1 - b1;
  if (twice_k < 0 || twice_k % 2 != 0)
    throw MorseError(MorseErrorCode::ParityViolation,
                     "critical count " + std::to_string(m) +
                         " incompatible with first Betti number " +
                         std::to_string(b1));
  return twice_k / 2;
}

}  // namespace morsegraph
