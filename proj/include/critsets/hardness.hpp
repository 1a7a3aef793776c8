#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critsets/coloring.hpp"
#include "critsets/critical.hpp"
#include "critsets/graph.hpp"

namespace critsets {

enum class ReductionVariant { ulcs, olcs };

const char* to_string(ReductionVariant v);
ReductionVariant parse_variant(std::string_view text);

enum class RoleClass { v1, v2, v3 };

const char* to_string(RoleClass r);

/// Where an instance vertex comes from in the source graph H. Unused fields hold -1.
/// ulcs: V1 = vertex of H; V2 = (edge, replica). olcs: V1 = x_{vertex, edge};
/// V2 = y_{vertex, edge, other_edge, replica} with edge < other_edge. V3: replica = 0, 1, 2.
struct VertexRole {
    RoleClass role = RoleClass::v1;
    long source_vertex = -1;
    long edge = -1;
    long other_edge = -1;
    long replica = -1;
};

/// G with threshold k such that the decision "param(G) >= k" encodes 3-colorability of H.
/// Edge indices refer to H.edges() order.
struct ReductionInstance {
    ReductionVariant variant = ReductionVariant::ulcs;
    Graph source;
    Graph graph;
    std::size_t k = 0;
    std::vector<VertexRole> roles;

    std::vector<Vertex> vertices_with(RoleClass r) const;
};

/// V1 = V(H) independent; V2 = E(H) x [m+n+1], each replica adjacent to both ends of its
/// edge; V3 a disjoint triangle. k = m + n + 3; H is 3-colorable iff ulcs(G) < k.
ReductionInstance reduce_ulcs(const Graph& h);

/// V1 = x_{v,e} for each end v of each edge e, with x_{v,vw} x_{w,vw} adjacent; V2 =
/// y_{v,{e,f},j} for unordered pairs of distinct edges at v and j in [2m+2], adjacent to
/// x_{v,e} and x_{v,f}; V3 a disjoint triangle. k = (2m+2) sum_v C(deg v, 2) + 2; H is
/// 3-colorable iff olcs(G) >= k.
ReductionInstance reduce_olcs(const Graph& h);

/// Expected sizes from the construction's formulas, used to cross-check the builders.
struct ReductionSizes {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t v1 = 0;
    std::size_t v2 = 0;
    std::size_t k = 0;
};
ReductionSizes expected_sizes(const Graph& h, ReductionVariant variant);

/// V1 copies c3, each replica of edge xy takes the least color outside {c3(x), c3(y)},
/// triangle vertex j takes color j.
Coloring proof_coloring_ulcs(const ReductionInstance& inst, const Coloring& c3);

/// x_{v,e} copies c3(v), each y at v takes the least color other than c3(v), triangle j -> j.
Coloring proof_coloring_olcs(const ReductionInstance& inst, const Coloring& c3);

/// Vertices whose color stays open when every other vertex is fixed; they lie in every
/// determining set.
VertexSet forced_vertices(const Graph& g, const Coloring& c);

/// A proper coloring of the instance drawn at random: V1 (independent in both variants'
/// bipartite part) gets random colors, the rest is completed by randomized search.
Coloring sample_instance_coloring(const ReductionInstance& inst, std::uint64_t seed);

enum class VerifyMode { automatic, full, certificate };

struct ReductionReport {
    ReductionVariant variant = ReductionVariant::ulcs;
    bool full_mode = false;
    std::size_t vertices = 0;
    std::size_t k = 0;
    bool source_three_colorable = false;
    /// Exact ulcs or olcs of G (full mode only).
    std::optional<std::size_t> exact_value;
    /// Certificate mode: number of colorings examined and how many passed.
    std::size_t samples = 0;
    std::size_t samples_passed = 0;
    bool consistent = false;
    std::string detail;
};

inline constexpr std::size_t kFullVerifyVertices = 14;

/// Full mode compares the exact parameter with k against 3-colorability of H. Certificate
/// mode checks the direction the construction exhibits explicitly.
ReductionReport verify_reduction_small(const Graph& h, ReductionVariant variant, VerifyMode mode = VerifyMode::automatic,
                                       std::size_t samples = 20, std::uint64_t seed = 1,
                                       const SearchLimits& limits = {});

} // namespace critsets
