#include "critsets/graph.hpp"

#include <algorithm>
#include <sstream>

#include "critsets/error.hpp"

namespace critsets {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::parse: return "parse-error";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::internal: return "internal-error";
    }
    return "unknown";
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) {
        fail(ErrorKind::invalid_parameter, "mask conversion needs a universe of at most 64");
    }
    VertexSet s(universe);
    if (universe > 0) {
        const std::uint64_t keep = universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
        s.words_[0] = mask & keep;
    }
    return s;
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) {
        s.insert(v);
    }
    return s;
}

std::size_t VertexSet::size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
            return true;
        }
    }
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
        if ((words_[i] & ~theirs) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Vertex> VertexSet::elements() const {
    std::vector<Vertex> out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::uint64_t VertexSet::to_mask() const {
    if (universe_ > 64) {
        fail(ErrorKind::invalid_parameter, "mask conversion needs a universe of at most 64");
    }
    return words_.empty() ? 0 : words_[0];
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
    }
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet out = full(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        out.words_[i] &= ~words_[i];
    }
    return out;
}

std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    s.for_each([&](Vertex v) {
        os << (first ? "" : ",") << v;
        first = false;
    });
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            fail(ErrorKind::invalid_parameter, "edge endpoint out of range");
        }
        if (u == v) {
            fail(ErrorKind::invalid_parameter, "self-loops are not allowed");
        }
        if (!g.rows_[u].contains(v)) {
            g.rows_[u].insert(v);
            g.rows_[v].insert(u);
            ++g.edge_count_;
        }
    }
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        rows_[u].for_each([&](Vertex v) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        });
    }
    return out;
}

std::size_t Graph::component_count() const {
    const auto n = order();
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack;
    std::size_t components = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) {
            continue;
        }
        ++components;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            rows_[u].for_each([&](Vertex w) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            });
        }
    }
    return components;
}

bool Graph::is_bipartite() const {
    const auto n = order();
    std::vector<int> side(n, -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] >= 0) {
            continue;
        }
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            bool ok = true;
            rows_[u].for_each([&](Vertex w) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    stack.push_back(w);
                } else if (side[w] == side[u]) {
                    ok = false;
                }
            });
            if (!ok) {
                return false;
            }
        }
    }
    return true;
}

Graph Graph::induced(const VertexSet& keep) const {
    const auto kept = keep.elements();
    std::vector<std::size_t> index(order(), 0);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        index[kept[i]] = i;
    }
    std::vector<Edge> es;
    for (auto [u, v] : edges()) {
        if (keep.contains(u) && keep.contains(v)) {
            es.emplace_back(index[u], index[v]);
        }
    }
    return from_edges(kept.size(), es);
}

Graph Graph::permuted(const std::vector<Vertex>& perm) const {
    const auto n = order();
    if (perm.size() != n) {
        fail(ErrorKind::invalid_parameter, "permutation length differs from graph order");
    }
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || position[perm[i]] != n) {
            fail(ErrorKind::invalid_parameter, "not a permutation");
        }
        position[perm[i]] = i;
    }
    std::vector<Edge> es;
    for (auto [u, v] : edges()) {
        es.emplace_back(position[u], position[v]);
    }
    return from_edges(n, es);
}

// ---------------------------------------------------------------- constructors

Graph make_cycle(std::size_t n) {
    if (n < 3) {
        fail(ErrorKind::invalid_parameter, "a cycle needs at least 3 vertices");
    }
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);
    }
    return Graph::from_edges(n, es);
}

Graph make_complete(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            es.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, es);
}

Graph make_path(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex i = 0; i + 1 < n; ++i) {
        es.emplace_back(i, i + 1);
    }
    return Graph::from_edges(n, es);
}

Graph make_empty(std::size_t n) { return Graph(n); }

Graph disjoint_union(const Graph& g, const Graph& h) {
    const auto offset = g.order();
    auto es = g.edges();
    for (auto [u, v] : h.edges()) {
        es.emplace_back(u + offset, v + offset);
    }
    return Graph::from_edges(g.order() + h.order(), es);
}

Graph disjoint_copies(const Graph& g, std::size_t copies) {
    Graph out(0);
    for (std::size_t i = 0; i < copies; ++i) {
        out = disjoint_union(out, g);
    }
    return out;
}

Graph complement(const Graph& g) {
    const auto n = g.order();
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) {
                es.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, es);
}

Graph add_pendant_to_each(const Graph& g) {
    const auto n = g.order();
    auto es = g.edges();
    for (Vertex v = 0; v < n; ++v) {
        es.emplace_back(v, n + v);
    }
    return Graph::from_edges(2 * n, es);
}

namespace {

template <class Rule>
Graph product(const Graph& g, const Graph& h, Rule adjacent_pair) {
    const auto ng = g.order();
    const auto nh = h.order();
    std::vector<Edge> es;
    for (Vertex a = 0; a < ng * nh; ++a) {
        for (Vertex b = a + 1; b < ng * nh; ++b) {
            if (adjacent_pair(a / nh, a % nh, b / nh, b % nh)) {
                es.emplace_back(a, b);
            }
        }
    }
    return Graph::from_edges(ng * nh, es);
}

} // namespace

Graph cartesian_product(const Graph& g, const Graph& h) {
    return product(g, h, [&](Vertex u, Vertex v, Vertex u2, Vertex v2) {
        return (u == u2 && h.adjacent(v, v2)) || (v == v2 && g.adjacent(u, u2));
    });
}

Graph strong_product(const Graph& g, const Graph& h) {
    return product(g, h, [&](Vertex u, Vertex v, Vertex u2, Vertex v2) {
        return (u == u2 || g.adjacent(u, u2)) && (v == v2 || h.adjacent(v, v2));
    });
}

Graph edge_union(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) {
        fail(ErrorKind::invalid_parameter, "edge_union needs graphs on the same vertex set");
    }
    auto es = g.edges();
    const auto more = h.edges();
    es.insert(es.end(), more.begin(), more.end());
    return Graph::from_edges(g.order(), es);
}

} // namespace critsets
