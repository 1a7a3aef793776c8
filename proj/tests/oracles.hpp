#pragma once

// Brute-force reference implementations for the tests. They share only the Graph container
// with the library: colorings come from plain index-order backtracking, determining status from
// scanning every coloring, isomorphism from trying every permutation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "critsets/graph.hpp"

namespace oracle {

using critsets::Graph;
using critsets::Vertex;
using Colors = std::vector<int>;

inline bool proper(const Graph& g, const Colors& c) {
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v) && c[u] == c[v]) {
                return false;
            }
        }
    }
    return true;
}

/// Every proper map V -> [k] in lexicographic order: vertices are assigned in index order,
/// each value checked against the already assigned neighbors.
inline std::vector<Colors> proper_colorings(const Graph& g, int k) {
    std::vector<Colors> out;
    const auto n = g.order();
    Colors c(n, -1);
    auto extend = [&](auto&& self, Vertex v) -> void {
        if (v == n) {
            out.push_back(c);
            return;
        }
        for (int x = 0; x < k; ++x) {
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u) {
                ok = !(g.adjacent(u, v) && c[u] == x);
            }
            if (ok) {
                c[v] = x;
                self(self, v + 1);
            }
        }
        c[v] = -1;
    };
    extend(extend, 0);
    return out;
}

inline std::size_t chromatic(const Graph& g) {
    if (g.order() == 0) {
        return 0;
    }
    for (int k = 1;; ++k) {
        if (!proper_colorings(g, k).empty()) {
            return static_cast<std::size_t>(k);
        }
    }
}

inline bool surjective(const Colors& c, int k) {
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int x : c) {
        seen[static_cast<std::size_t>(x)] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Proper colorings using all chi colors (every labeling, not one per relabeling).
inline std::vector<Colors> optimal_colorings(const Graph& g) {
    const int k = static_cast<int>(chromatic(g));
    std::vector<Colors> out;
    for (auto& c : proper_colorings(g, k)) {
        if (surjective(c, k)) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

/// Number of colorings in `pool` that agree with c on the vertices of `mask`.
inline std::size_t agreeing(const std::vector<Colors>& pool, const Colors& c, std::uint64_t mask) {
    std::size_t count = 0;
    for (const auto& d : pool) {
        bool same = true;
        for (std::size_t v = 0; v < c.size() && same; ++v) {
            if (((mask >> v) & 1U) && d[v] != c[v]) {
                same = false;
            }
        }
        count += same ? 1 : 0;
    }
    return count;
}

inline bool determining(const std::vector<Colors>& pool, const Colors& c, std::uint64_t mask) {
    return agreeing(pool, c, mask) == 1;
}

inline bool critical(const std::vector<Colors>& pool, const Colors& c, std::uint64_t mask) {
    if (!determining(pool, c, mask)) {
        return false;
    }
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
        if (determining(pool, c, mask & ~(rest & (~rest + 1)))) {
            return false;
        }
    }
    return true;
}

struct Quad {
    std::size_t uscs = 0, oscs = 0, ulcs = 0, olcs = 0;
};

/// Extremes over every coloring of `colorings`, judged against the pool `pool`.
inline Quad extremes(std::size_t n, const std::vector<Colors>& colorings, const std::vector<Colors>& pool) {
    Quad q{SIZE_MAX, 0, SIZE_MAX, 0};
    for (const auto& c : colorings) {
        std::size_t lo = SIZE_MAX;
        std::size_t hi = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (critical(pool, c, mask)) {
                const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
                lo = std::min(lo, size);
                hi = std::max(hi, size);
            }
        }
        q.uscs = std::min(q.uscs, lo);
        q.oscs = std::max(q.oscs, lo);
        q.ulcs = std::min(q.ulcs, hi);
        q.olcs = std::max(q.olcs, hi);
    }
    return q;
}

/// Every proper chi-coloring uses all chi colors, so the filter is only a safety net.
inline Quad four_params(const Graph& g) {
    const int k = static_cast<int>(chromatic(g));
    return extremes(g.order(), optimal_colorings(g), proper_colorings(g, k));
}

inline Quad four_params_k(const Graph& g, int k) {
    const auto pool = proper_colorings(g, k);
    return extremes(g.order(), pool, pool);
}

/// Chromatic polynomial of C_n: (k-1)^n + (-1)^n (k-1).
inline long long cycle_chromatic_polynomial(std::size_t n, long long k) {
    long long p = 1;
    for (std::size_t i = 0; i < n; ++i) {
        p *= k - 1;
    }
    return p + ((n % 2) ? -(k - 1) : (k - 1));
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
        return false;
    }
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do {
        bool ok = true;
        for (Vertex u = 0; u < a.order() && ok; ++u) {
            for (Vertex v = u + 1; v < a.order() && ok; ++v) {
                ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
            }
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Every labeled graph on n vertices, indexed by the bitmask over pairs (u < v).
inline std::vector<Graph> labeled_graphs(std::size_t n) {
    std::vector<critsets::Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<critsets::Edge> es;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1U) {
                es.push_back(pairs[i]);
            }
        }
        out.push_back(Graph::from_edges(n, es));
    }
    return out;
}

/// graph6 lines of the reference atlas file, grouped by order.
inline std::vector<std::vector<std::string>> reference_atlas(const std::string& path) {
    std::vector<std::vector<std::string>> by_order(8);
    std::ifstream in(path);
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) {
            continue;
        }
        const auto n = static_cast<std::size_t>(line[0] - 63);
        if (n < by_order.size()) {
            by_order[n].push_back(line);
        }
    }
    return by_order;
}

} // namespace oracle
