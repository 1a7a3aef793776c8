#include "critsets/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "critsets/error.hpp"

namespace critsets {

namespace {

using Domain = std::uint64_t;

constexpr int kMaxPalette = 64;

Domain palette_mask(int palette) {
    return palette >= 64 ? ~Domain{0} : (Domain{1} << palette) - 1;
}

void check_palette(int palette) {
    if (palette < 0 || palette > kMaxPalette) {
        fail(ErrorKind::invalid_parameter, "palette size must be in [0, 64]");
    }
}

// Removes the color of every singleton in `queue` from its neighbors, cascading through
// vertices that become singletons. Returns false on a wipe-out.
bool propagate(const Graph& g, std::vector<Domain>& dom, std::vector<Vertex>& queue) {
    while (!queue.empty()) {
        const Vertex v = queue.back();
        queue.pop_back();
        const Domain bit = dom[v];
        bool ok = true;
        g.neighbors(v).for_each([&](Vertex w) {
            if (!ok || (dom[w] & bit) == 0) {
                return;
            }
            dom[w] &= ~bit;
            if (dom[w] == 0) {
                ok = false;
            } else if (std::has_single_bit(dom[w])) {
                queue.push_back(w);
            }
        });
        if (!ok) {
            return false;
        }
    }
    return true;
}

// Unassigned vertex with the fewest remaining colors, ties to the larger degree; n if none.
Vertex pick_branch_vertex(const Graph& g, const std::vector<Domain>& dom) {
    Vertex best = dom.size();
    int best_size = kMaxPalette + 1;
    std::size_t best_degree = 0;
    for (Vertex v = 0; v < dom.size(); ++v) {
        const int size = std::popcount(dom[v]);
        if (size <= 1) {
            continue;
        }
        const auto deg = g.degree(v);
        if (size < best_size || (size == best_size && deg > best_degree)) {
            best = v;
            best_size = size;
            best_degree = deg;
        }
    }
    return best;
}

std::uint64_t count_from(const Graph& g, std::vector<Domain>& dom, std::uint64_t cap) {
    const Vertex v = pick_branch_vertex(g, dom);
    if (v == dom.size()) {
        return 1;
    }
    std::uint64_t total = 0;
    for (Domain rest = dom[v]; rest != 0 && total < cap; rest &= rest - 1) {
        auto next = dom;
        next[v] = rest & (~rest + 1);
        std::vector<Vertex> queue{v};
        if (propagate(g, next, queue)) {
            total += count_from(g, next, cap - total);
        }
    }
    return std::min(total, cap);
}

bool solve_from(const Graph& g, std::vector<Domain>& dom, std::mt19937_64* rng) {
    const Vertex v = pick_branch_vertex(g, dom);
    if (v == dom.size()) {
        return true;
    }
    std::vector<Domain> choices;
    for (Domain rest = dom[v]; rest != 0; rest &= rest - 1) {
        choices.push_back(rest & (~rest + 1));
    }
    if (rng != nullptr) {
        std::shuffle(choices.begin(), choices.end(), *rng);
    }
    for (auto bit : choices) {
        auto next = dom;
        next[v] = bit;
        std::vector<Vertex> queue{v};
        if (propagate(g, next, queue) && solve_from(g, next, rng)) {
            dom = std::move(next);
            return true;
        }
    }
    return false;
}

std::size_t greedy_clique_size(const Graph& g) {
    std::size_t best = 0;
    for (Vertex start = 0; start < g.order(); ++start) {
        VertexSet candidates = g.neighbors(start);
        std::size_t size = 1;
        while (!candidates.empty()) {
            Vertex pick = g.order();
            std::size_t pick_deg = 0;
            candidates.for_each([&](Vertex w) {
                VertexSet inside = g.neighbors(w);
                inside &= candidates;
                if (pick == g.order() || inside.size() > pick_deg) {
                    pick = w;
                    pick_deg = inside.size();
                }
            });
            candidates &= g.neighbors(pick);
            ++size;
        }
        best = std::max(best, size);
    }
    return best;
}

std::size_t greedy_color_count(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    int used = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        Domain taken = 0;
        g.neighbors(v).for_each([&](Vertex w) {
            if (color[w] >= 0) {
                taken |= Domain{1} << color[w];
            }
        });
        color[v] = std::countr_one(taken);
        used = std::max(used, color[v] + 1);
    }
    return static_cast<std::size_t>(used);
}

} // namespace

std::string to_string(const Coloring& c) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.colors.size(); ++i) {
        os << (i ? "," : "") << c.colors[i];
    }
    os << ')';
    return os.str();
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (c.colors.size() != g.order()) {
        return false;
    }
    for (auto col : c.colors) {
        if (col < 0 || col >= c.palette) {
            return false;
        }
    }
    for (auto [u, v] : g.edges()) {
        if (c.colors[u] == c.colors[v]) {
            return false;
        }
    }
    return true;
}

PartialAssignment PartialAssignment::restrict(const Coloring& c, const VertexSet& support) {
    PartialAssignment p{support, std::vector<int>(c.colors.size(), -1), c.palette};
    support.for_each([&](Vertex v) { p.colors[v] = c.colors[v]; });
    return p;
}

PartialAssignment PartialAssignment::empty(std::size_t n, int palette) {
    return PartialAssignment{VertexSet(n), std::vector<int>(n, -1), palette};
}

std::optional<Coloring> find_coloring(const Graph& g, int palette, std::mt19937_64* rng) {
    check_palette(palette);
    const auto n = g.order();
    if (n == 0) {
        return Coloring{{}, palette};
    }
    if (palette == 0) {
        return std::nullopt;
    }
    std::vector<Domain> dom(n, palette_mask(palette));
    if (!solve_from(g, dom, rng)) {
        return std::nullopt;
    }
    Coloring c{std::vector<int>(n), palette};
    for (Vertex v = 0; v < n; ++v) {
        c.colors[v] = std::countr_zero(dom[v]);
    }
    return c;
}

std::size_t chromatic_number(const Graph& g, const SearchLimits& limits) {
    if (g.order() > limits.coloring_vertices) {
        fail(ErrorKind::size_limit, "graph exceeds the coloring vertex cap");
    }
    if (g.order() == 0) {
        return 0;
    }
    const auto upper = greedy_color_count(g);
    for (auto k = greedy_clique_size(g); k < upper; ++k) {
        if (k > static_cast<std::size_t>(kMaxPalette)) {
            fail(ErrorKind::size_limit, "chromatic number exceeds the 64-color palette limit");
        }
        if (find_coloring(g, static_cast<int>(k))) {
            return k;
        }
    }
    if (upper > static_cast<std::size_t>(kMaxPalette)) {
        fail(ErrorKind::size_limit, "chromatic number exceeds the 64-color palette limit");
    }
    return upper;
}

void for_each_proper_coloring(const Graph& g, int palette, bool canonical, bool surjective,
                              const std::function<bool(const Coloring&)>& visit) {
    check_palette(palette);
    const auto n = g.order();
    std::vector<std::vector<Vertex>> earlier(n);
    for (auto [u, v] : g.edges()) {
        earlier[v].push_back(u);
    }
    Coloring c{std::vector<int>(n, -1), palette};
    std::vector<int> uses(static_cast<std::size_t>(palette), 0);
    int distinct = 0;
    bool stop = false;

    std::function<void(Vertex)> rec = [&](Vertex v) {
        if (stop) {
            return;
        }
        if (surjective && palette - distinct > static_cast<int>(n - v)) {
            return;
        }
        if (v == n) {
            if (!visit(c)) {
                stop = true;
            }
            return;
        }
        const int limit = canonical ? std::min(palette, distinct + 1) : palette;
        for (int col = 0; col < limit && !stop; ++col) {
            const bool clash = std::any_of(earlier[v].begin(), earlier[v].end(),
                                           [&](Vertex u) { return c.colors[u] == col; });
            if (clash) {
                continue;
            }
            c.colors[v] = col;
            if (uses[col]++ == 0) {
                ++distinct;
            }
            rec(v + 1);
            if (--uses[col] == 0) {
                --distinct;
            }
        }
        c.colors[v] = -1;
    };
    rec(0);
}

namespace {

std::vector<Coloring> collect(const Graph& g, int palette, bool canonical, bool surjective,
                              const SearchLimits& limits) {
    if (g.order() > limits.exact_vertices) {
        fail(ErrorKind::size_limit, "graph exceeds the exact-search vertex cap of " +
                                        std::to_string(limits.exact_vertices));
    }
    std::vector<Coloring> out;
    bool overflow = false;
    for_each_proper_coloring(g, palette, canonical, surjective, [&](const Coloring& c) {
        if (out.size() >= limits.max_colorings) {
            overflow = true;
            return false;
        }
        out.push_back(c);
        return true;
    });
    if (overflow) {
        fail(ErrorKind::size_limit, "more than " + std::to_string(limits.max_colorings) + " colorings");
    }
    return out;
}

} // namespace

std::vector<Coloring> enumerate_optimal_colorings(const Graph& g, const SearchLimits& limits) {
    const auto chi = static_cast<int>(chromatic_number(g, limits));
    return collect(g, chi, true, true, limits);
}

std::vector<Coloring> all_proper_colorings(const Graph& g, int palette, const SearchLimits& limits) {
    return collect(g, palette, false, false, limits);
}

std::uint64_t count_extensions(const Graph& g, const PartialAssignment& p, std::uint64_t cap) {
    check_palette(p.palette);
    const auto n = g.order();
    if (cap == 0) {
        fail(ErrorKind::invalid_parameter, "extension cap must be at least 1");
    }
    if (p.colors.size() != n || p.support.universe() != n) {
        fail(ErrorKind::invalid_parameter, "partial assignment does not match the graph order");
    }
    if (n == 0) {
        return 1;
    }
    std::vector<Domain> dom(n, palette_mask(p.palette));
    std::vector<Vertex> queue;
    bool consistent = true;
    p.support.for_each([&](Vertex v) {
        const int col = p.colors[v];
        if (col < 0 || col >= p.palette) {
            consistent = false;
            return;
        }
        dom[v] = Domain{1} << col;
    });
    if (!consistent || p.palette == 0) {
        return 0;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (std::has_single_bit(dom[v])) {
            queue.push_back(v);
        }
    }
    // A support vertex whose neighbor shares its color wipes out during propagation.
    if (!propagate(g, dom, queue)) {
        return 0;
    }
    return count_from(g, dom, cap);
}

bool is_uniquely_colorable(const Graph& g, const SearchLimits& limits) {
    if (g.order() > limits.exact_vertices) {
        fail(ErrorKind::size_limit, "graph exceeds the exact-search vertex cap");
    }
    const auto chi = static_cast<int>(chromatic_number(g, limits));
    std::size_t seen = 0;
    for_each_proper_coloring(g, chi, true, true, [&](const Coloring&) { return ++seen < 2; });
    return seen == 1;
}

VertexSet colorful_vertices(const Graph& g, const Coloring& c) {
    VertexSet out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        Domain seen = Domain{1} << c.colors[v];
        g.neighbors(v).for_each([&](Vertex w) { seen |= Domain{1} << c.colors[w]; });
        if (std::popcount(seen) == c.palette) {
            out.insert(v);
        }
    }
    return out;
}

} // namespace critsets
