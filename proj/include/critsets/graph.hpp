#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace critsets {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Dynamic bitset over the vertex universe [0, n).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);

    /// Requires universe <= 64.
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    bool contains(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t size() const noexcept;
    bool empty() const noexcept;
    bool intersects(const VertexSet& other) const noexcept;
    bool is_subset_of(const VertexSet& other) const noexcept;
    std::vector<Vertex> elements() const;

    /// Requires universe <= 64.
    std::uint64_t to_mask() const;

    VertexSet& operator|=(const VertexSet& other) noexcept;
    VertexSet& operator&=(const VertexSet& other) noexcept;
    VertexSet complement() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
                f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
            }
        }
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

std::string to_string(const VertexSet& s);

/// Immutable simple undirected graph stored as adjacency bit-rows.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    /// Throws invalid_parameter on loops or out-of-range endpoints; duplicate edges collapse.
    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

    std::size_t order() const noexcept { return rows_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].contains(v); }
    const VertexSet& neighbors(Vertex v) const noexcept { return rows_[v]; }
    std::size_t degree(Vertex v) const noexcept { return rows_[v].size(); }

    /// Only valid when order() <= 64.
    std::uint64_t neighbor_mask(Vertex v) const { return rows_[v].to_mask(); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    std::size_t component_count() const;
    bool is_bipartite() const;

    /// Subgraph induced on `keep`, relabeled in increasing vertex order.
    Graph induced(const VertexSet& keep) const;

    /// Relabel so that vertex `perm[i]` of this graph becomes vertex i.
    Graph permuted(const std::vector<Vertex>& perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> rows_;
    std::size_t edge_count_ = 0;
};

Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_path(std::size_t n);
Graph make_empty(std::size_t n);

/// H's vertices are shifted by |V(G)|.
Graph disjoint_union(const Graph& g, const Graph& h);
/// n copies of g.
Graph disjoint_copies(const Graph& g, std::size_t copies);
Graph complement(const Graph& g);
/// Vertex v of g keeps its index; its new pendant neighbor is n + v.
Graph add_pendant_to_each(const Graph& g);
/// Vertex (u, v) has index u * |V(H)| + v.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph strong_product(const Graph& g, const Graph& h);
/// Union of edge sets over a shared vertex set.
Graph edge_union(const Graph& g, const Graph& h);

// graph6 interchange

std::string emit_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" prefix and one trailing newline.
Graph parse_graph6(std::string_view text);

// isomorphism classes for small graphs

inline constexpr std::size_t kCanonicalFormCap = 8;

/// Adjacency code of the relabeling that is lexicographically least over all n! vertex
/// orders. Bits follow the graph6 upper-triangle column order, first bit most significant.
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);

/// One canonical representative per isomorphism class on n vertices (n <= 8), sorted by
/// canonical code. Up to 6 vertices every labeled graph is enumerated; above that each
/// class is grown from the classes on n - 1 vertices by adding a vertex in every way.
std::vector<Graph> graph_atlas(std::size_t n);

/// Classes on n + 1 vertices from the complete class list on n vertices.
std::vector<Graph> extend_atlas(const std::vector<Graph>& classes);

} // namespace critsets
