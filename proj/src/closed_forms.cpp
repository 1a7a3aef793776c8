#include "critsets/closed_forms.hpp"

#include "critsets/error.hpp"

namespace critsets {

namespace {

ParamQuad constant_quad(std::size_t value) {
    ParamQuad q;
    q.uscs = q.oscs = q.ulcs = q.olcs = value;
    return q;
}

} // namespace

ParamQuad cycle_params(std::size_t n) {
    if (n < 3) {
        fail(ErrorKind::invalid_parameter, "a cycle needs at least 3 vertices");
    }
    if (n % 2 == 0) {
        return constant_quad(1);
    }
    if (n == 3) {
        return constant_quad(2);
    }
    ParamQuad q;
    q.uscs = (n + 1) / 2;
    q.oscs = n - 2;
    q.olcs = n - 1;
    q.ulcs = n % 4 == 1 ? (n + 3) / 2 : (n + 1) / 2;
    return q;
}

ParamQuad bipartite_params(const Graph& g) {
    if (!g.is_bipartite()) {
        fail(ErrorKind::invalid_parameter, "graph is not bipartite");
    }
    if (g.edge_count() == 0) {
        return constant_quad(0);
    }
    return constant_quad(g.component_count());
}

ParamQuad uniquely_colorable_params(const Graph& g, const SearchLimits& limits) {
    if (!is_uniquely_colorable(g, limits)) {
        fail(ErrorKind::invalid_parameter, "graph is not uniquely colorable");
    }
    const auto chi = chromatic_number(g, limits);
    return constant_quad(chi == 0 ? 0 : chi - 1);
}

std::pair<Coloring, VertexSet> proof_coloring_cycle(std::size_t n, CycleWitness which) {
    if (n < 5 || n % 2 == 0) {
        fail(ErrorKind::invalid_parameter, "cycle witnesses need odd n >= 5");
    }
    Coloring c{std::vector<int>(n, 0), 3};
    VertexSet s(n);
    switch (which) {
    case CycleWitness::olcs:
        // Alternate 0/1 and close the cycle with color 2; every vertex but the last.
        for (std::size_t i = 0; i + 1 < n; ++i) {
            c.colors[i] = static_cast<int>(i % 2);
            s.insert(i);
        }
        c.colors[n - 1] = 2;
        break;
    case CycleWitness::uscs:
        for (std::size_t j = 0; j < n; ++j) {
            c.colors[j] = static_cast<int>(j % 3);
        }
        for (std::size_t j = 0; j < n; j += 2) {
            s.insert(j);
        }
        if (n % 3 == 1) {
            // Recolor the last vertex and swap it out of the set for its predecessor.
            c.colors[n - 1] = 1;
            s.erase(n - 1);
            s.insert(n - 2);
        }
        break;
    case CycleWitness::ulcs:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (i % 2 == 0) {
                c.colors[i] = 0;
            } else {
                c.colors[i] = i % 4 == 1 ? 1 : 2;
            }
        }
        c.colors[n - 1] = 3 - c.colors[n - 2];
        for (std::size_t i = 1; i + 4 <= n; i += 2) {
            s.insert(i);
        }
        if (n % 4 == 3) {
            s.insert(n - 2);
            s.insert(n - 1);
        } else {
            s.insert(n - 3);
            s.insert(n - 1);
            s.insert(0);
        }
        break;
    }
    return {c, s};
}

} // namespace critsets
