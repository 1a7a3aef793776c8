#pragma once

#include <cstddef>
#include <utility>

#include "critsets/coloring.hpp"
#include "critsets/critical.hpp"
#include "critsets/graph.hpp"

namespace critsets {

// Closed-form parameter values. None of these call into the exact critical-set search;
// the two are used as oracles for each other.

/// Even n: critically 1-uniform. Odd n >= 5: uscs = (n+1)/2, oscs = n-2, olcs = n-1, and
/// ulcs = (n+3)/2 when n = 1 (mod 4), (n+1)/2 when n = 3 (mod 4). C3 = K3 gives 2 everywhere.
ParamQuad cycle_params(std::size_t n);

/// Number of components when G has an edge (isolated vertices count: with two colors each
/// one needs its own clue); all zeros for an edgeless graph. Throws on non-bipartite input.
ParamQuad bipartite_params(const Graph& g);

/// chi(G) - 1 in every position. Throws when G is not uniquely colorable.
ParamQuad uniquely_colorable_params(const Graph& g, const SearchLimits& limits = {});

enum class CycleWitness { uscs, olcs, ulcs };

/// Explicit coloring of C_n (odd n >= 5) with a critical set of the extremal size.
std::pair<Coloring, VertexSet> proof_coloring_cycle(std::size_t n, CycleWitness which);

} // namespace critsets
