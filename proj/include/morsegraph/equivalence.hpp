#pragma once

#include <string>

#include "morsegraph/errors.hpp"
#include "morsegraph/graph.hpp"
#include "morsegraph/morse.hpp"
#include "morsegraph/persistence.hpp"

namespace morsegraph {

namespace detail {

inline void require_same_graph(const MorseFunction& f, const MorseFunction& g) {
  if (!(f.graph() == g.graph()))
    throw InputError("equivalence requires two functions on the same graph");
}

}  // namespace detail

/// Equal persistence diagrams.
inline bool persistence_equivalent(const MorseFunction& f,
                                   const MorseFunction& g) {
  detail::require_same_graph(f, g);
  return diagram_equal(compute_diagram_fast(f), compute_diagram_fast(g));
}

/// Equal gradient vector fields (same regular pairs).
inline bool forman_equivalent(const MorseFunction& f, const MorseFunction& g) {
  detail::require_same_graph(f, g);
  return gradient_vector_field(f) == gradient_vector_field(g);
}

/// Same number of critical values and equal Betti numbers of the level
/// subcomplexes at each filtration step.
inline bool homologically_equivalent(const MorseFunction& f,
                                     const MorseFunction& g) {
  detail::require_same_graph(f, g);
  Filtration ff = filtration(f);
  Filtration fg = filtration(g);
  if (ff.subcomplexes.size() != fg.subcomplexes.size()) return false;
  for (size_t i = 0; i < ff.subcomplexes.size(); ++i)
    if (betti_numbers(ff.subcomplexes[i]) != betti_numbers(fg.subcomplexes[i]))
      return false;
  return true;
}

/// Same number of critical values and isomorphic level subcomplexes at
/// each filtration step.
inline bool graph_equivalent(const MorseFunction& f, const MorseFunction& g) {
  detail::require_same_graph(f, g);
  Filtration ff = filtration(f);
  Filtration fg = filtration(g);
  if (ff.subcomplexes.size() != fg.subcomplexes.size()) return false;
  for (size_t i = 0; i < ff.subcomplexes.size(); ++i)
    if (!graph_isomorphic(ff.subcomplexes[i], fg.subcomplexes[i]))
      return false;
  return true;
}

}  // namespace morsegraph
