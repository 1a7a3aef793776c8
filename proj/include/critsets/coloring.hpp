#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "critsets/graph.hpp"

namespace critsets {

/// Total assignment V -> {0..palette-1}.
struct Coloring {
    std::vector<int> colors;
    int palette = 0;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

std::string to_string(const Coloring& c);

bool is_proper(const Graph& g, const Coloring& c);

/// Colors are meaningful only on `support`; other entries hold -1.
struct PartialAssignment {
    VertexSet support;
    std::vector<int> colors;
    int palette = 0;

    static PartialAssignment restrict(const Coloring& c, const VertexSet& support);
    static PartialAssignment empty(std::size_t n, int palette);
};

struct SearchLimits {
    /// Exact critical-set search enumerates the 2^n subset lattice.
    std::size_t exact_vertices = 20;
    /// Structural coloring (chromatic number, single solutions).
    std::size_t coloring_vertices = 4096;
    /// Bound on the number of proper colorings materialized for one search.
    std::size_t max_colorings = std::size_t{1} << 22;
};

/// Proper coloring with at most `palette` colors, or nullopt. With an engine, value order
/// at every branch is shuffled, which turns the search into a randomized generator.
std::optional<Coloring> find_coloring(const Graph& g, int palette, std::mt19937_64* rng = nullptr);

std::size_t chromatic_number(const Graph& g, const SearchLimits& limits = {});

/// Visits proper colorings into [palette] in lexicographic order of the color vector.
/// `canonical` keeps one representative per palette permutation (colors first used in
/// increasing order); `surjective` keeps only colorings that use every color. The
/// visitor returns false to stop.
void for_each_proper_coloring(const Graph& g, int palette, bool canonical, bool surjective,
                              const std::function<bool(const Coloring&)>& visit);

/// Canonical representatives of proper chi(G)-colorings, lexicographically ordered.
std::vector<Coloring> enumerate_optimal_colorings(const Graph& g, const SearchLimits& limits = {});

/// Every proper coloring into [palette], surjective or not.
std::vector<Coloring> all_proper_colorings(const Graph& g, int palette, const SearchLimits& limits = {});

/// Number of proper colorings into [p.palette] agreeing with p on its support, truncated
/// at cap. Forced vertices are assigned by propagation before any branching.
std::uint64_t count_extensions(const Graph& g, const PartialAssignment& p, std::uint64_t cap = 2);

bool is_uniquely_colorable(const Graph& g, const SearchLimits& limits = {});

/// Vertices whose closed neighborhood shows all c.palette colors.
VertexSet colorful_vertices(const Graph& g, const Coloring& c);

} // namespace critsets
