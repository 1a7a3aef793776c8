#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "critsets/error.hpp"
#include "critsets/graph.hpp"

namespace critsets {

namespace {

// Branch and bound over vertex orders. Position j contributes a column of j bits (its
// adjacency to positions 0..j-1); a prefix whose columns exceed the best known code is cut.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
        perm_.resize(n_);
        cols_.assign(n_, 0);
        best_perm_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            best_perm_[v] = v;
        }
        best_cols_ = columns_of(best_perm_);
    }

    void run() {
        for (Vertex v = 0; v < n_; ++v) {
            perm_[0] = v;
            used_ = std::uint32_t{1} << v;
            extend(1);
        }
    }

    std::uint64_t code() const {
        std::uint64_t c = 0;
        for (std::size_t j = 1; j < n_; ++j) {
            c = (c << j) | best_cols_[j];
        }
        return c;
    }

    const std::vector<Vertex>& best_perm() const { return best_perm_; }

private:
    std::uint32_t column(std::size_t j, Vertex v) const {
        std::uint32_t col = 0;
        for (std::size_t i = 0; i < j; ++i) {
            col = (col << 1) | (g_.adjacent(perm_[i], v) ? 1U : 0U);
        }
        return col;
    }

    std::vector<std::uint32_t> columns_of(const std::vector<Vertex>& p) {
        perm_ = p;
        std::vector<std::uint32_t> out(n_, 0);
        for (std::size_t j = 1; j < n_; ++j) {
            out[j] = column(j, p[j]);
        }
        return out;
    }

    bool prefix_equals_best(std::size_t j) const {
        return std::equal(cols_.begin() + 1, cols_.begin() + static_cast<std::ptrdiff_t>(j),
                          best_cols_.begin() + 1);
    }

    void extend(std::size_t j) {
        if (j == n_) {
            if (std::lexicographical_compare(cols_.begin(), cols_.end(), best_cols_.begin(), best_cols_.end())) {
                best_cols_ = cols_;
                best_perm_ = perm_;
            }
            return;
        }
        for (Vertex v = 0; v < n_; ++v) {
            if ((used_ >> v) & 1U) {
                continue;
            }
            const auto col = column(j, v);
            if (col > best_cols_[j] && prefix_equals_best(j)) {
                continue;
            }
            perm_[j] = v;
            cols_[j] = col;
            used_ |= std::uint32_t{1} << v;
            extend(j + 1);
            used_ &= ~(std::uint32_t{1} << v);
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<Vertex> perm_;
    std::vector<std::uint32_t> cols_;
    std::uint32_t used_ = 0;
    std::vector<Vertex> best_perm_;
    std::vector<std::uint32_t> best_cols_;
};

void check_cap(const Graph& g) {
    if (g.order() > kCanonicalFormCap) {
        fail(ErrorKind::size_limit, "canonical form is limited to " + std::to_string(kCanonicalFormCap) + " vertices");
    }
}

std::vector<Graph> atlas_labeled(std::size_t n) {
    std::vector<Edge> slots;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            slots.emplace_back(i, j);
        }
    }
    std::unordered_map<std::uint64_t, Graph> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> es;
        for (std::size_t b = 0; b < slots.size(); ++b) {
            if ((mask >> b) & 1U) {
                es.push_back(slots[b]);
            }
        }
        const auto g = Graph::from_edges(n, es);
        const auto code = canonical_code(g);
        if (!classes.contains(code)) {
            classes.emplace(code, canonical_form(g));
        }
    }
    std::vector<std::pair<std::uint64_t, Graph>> sorted(classes.begin(), classes.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    for (auto& [code, g] : sorted) {
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace

std::vector<Graph> extend_atlas(const std::vector<Graph>& smaller) {
    std::unordered_map<std::uint64_t, Graph> classes;
    for (const auto& base : smaller) {
        const auto m = base.order();
        const auto base_edges = base.edges();
        for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << m); ++nbrs) {
            auto es = base_edges;
            for (Vertex v = 0; v < m; ++v) {
                if ((nbrs >> v) & 1U) {
                    es.emplace_back(v, m);
                }
            }
            const auto g = Graph::from_edges(m + 1, es);
            const auto code = canonical_code(g);
            if (!classes.contains(code)) {
                classes.emplace(code, canonical_form(g));
            }
        }
    }
    std::vector<std::pair<std::uint64_t, Graph>> sorted(classes.begin(), classes.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    for (auto& [code, g] : sorted) {
        out.push_back(std::move(g));
    }
    return out;
}

std::uint64_t canonical_code(const Graph& g) {
    check_cap(g);
    CanonicalSearch search(g);
    search.run();
    return search.code();
}

Graph canonical_form(const Graph& g) {
    check_cap(g);
    CanonicalSearch search(g);
    search.run();
    return g.permuted(search.best_perm());
}

std::vector<Graph> graph_atlas(std::size_t n) {
    if (n > kCanonicalFormCap) {
        fail(ErrorKind::size_limit, "graph atlas is limited to " + std::to_string(kCanonicalFormCap) + " vertices");
    }
    if (n <= 6) {
        return atlas_labeled(n);
    }
    return extend_atlas(graph_atlas(n - 1));
}

} // namespace critsets
