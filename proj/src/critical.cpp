#include "critsets/critical.hpp"

#include <bit>
#include <sstream>

#include "critsets/error.hpp"

namespace critsets {

namespace {

constexpr std::size_t kLatticeHardCap = 30;

using Mask = DeterminingLattice::Mask;

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

void require_proper(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) {
        fail(ErrorKind::invalid_parameter, "coloring is not proper for this graph");
    }
}

void require_exact_cap(const Graph& g, const SearchLimits& limits) {
    if (g.order() > limits.exact_vertices || g.order() > kLatticeHardCap) {
        fail(ErrorKind::size_limit, "graph exceeds the exact-search vertex cap of " +
                                        std::to_string(std::min(limits.exact_vertices, kLatticeHardCap)));
    }
}

ParamQuad extremal_params(const Graph& g, int palette, bool surjective, const SearchLimits& limits) {
    require_exact_cap(g, limits);
    const auto everything = all_proper_colorings(g, palette, limits);
    std::vector<Coloring> reps;
    for_each_proper_coloring(g, palette, true, surjective, [&](const Coloring& c) {
        reps.push_back(c);
        return true;
    });

    ParamQuad q;
    bool first = true;
    for (const auto& c : reps) {
        const DeterminingLattice lattice(g, c, everything, limits);
        const auto ext = lattice.extremes();
        if (first || ext.scs < q.uscs) {
            q.uscs = ext.scs;
            q.uscs_witness = {c, ext.scs_witness};
        }
        if (first || ext.scs > q.oscs) {
            q.oscs = ext.scs;
            q.oscs_witness = {c, ext.scs_witness};
        }
        if (first || ext.lcs < q.ulcs) {
            q.ulcs = ext.lcs;
            q.ulcs_witness = {c, ext.lcs_witness};
        }
        if (first || ext.lcs > q.olcs) {
            q.olcs = ext.lcs;
            q.olcs_witness = {c, ext.lcs_witness};
        }
        first = false;
    }
    if (first) {
        fail(ErrorKind::internal, "no proper coloring found with the requested palette");
    }
    return q;
}

} // namespace

std::string to_string(const ParamQuad& q) {
    std::ostringstream os;
    os << q.uscs << ',' << q.oscs << ',' << q.ulcs << ',' << q.olcs;
    return os.str();
}

bool lex_less(std::uint64_t a, std::uint64_t b) {
    const auto diff = a ^ b;
    if (diff == 0) {
        return false;
    }
    return (a & diff & (~diff + 1)) != 0;
}

// ---------------------------------------------------------------- lattice

DeterminingLattice::DeterminingLattice(const Graph& g, const Coloring& c,
                                       std::span<const Coloring> all_colorings, const SearchLimits& limits)
    : n_(g.order()) {
    require_exact_cap(g, limits);
    require_proper(g, c);
    const Mask full = full_mask(n_);
    nondetermining_.assign(std::size_t{1} << n_, 0);
    for (const auto& other : all_colorings) {
        Mask agree = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (other.colors[v] == c.colors[v]) {
                agree |= Mask{1} << v;
            }
        }
        if (agree != full) {
            nondetermining_[agree] = 1;
        }
    }
    // Close downward: a subset of a non-determining set is non-determining.
    for (std::size_t bit = 0; bit < n_; ++bit) {
        const Mask b = Mask{1} << bit;
        for (Mask s = 0; s <= full; ++s) {
            if ((s & b) == 0) {
                nondetermining_[s] |= nondetermining_[s | b];
            }
            if (s == full) {
                break;
            }
        }
    }
}

bool DeterminingLattice::critical(Mask s) const {
    if (!determining(s)) {
        return false;
    }
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
        if (determining(s & ~(rest & (~rest + 1)))) {
            return false;
        }
    }
    return true;
}

CriticalExtremes DeterminingLattice::extremes() const {
    CriticalExtremes out;
    bool found = false;
    Mask small = 0;
    Mask large = 0;
    const Mask full = full_mask(n_);
    for (Mask s = 0;; ++s) {
        if (critical(s)) {
            const auto size = static_cast<std::size_t>(std::popcount(s));
            if (!found || size < out.scs || (size == out.scs && lex_less(s, small))) {
                out.scs = size;
                small = s;
            }
            if (!found || size > out.lcs || (size == out.lcs && lex_less(s, large))) {
                out.lcs = size;
                large = s;
            }
            found = true;
            ++out.critical_count;
        }
        if (s == full) {
            break;
        }
    }
    if (!found) {
        fail(ErrorKind::internal, "no critical set found; the full vertex set must determine");
    }
    out.scs_witness = VertexSet::from_mask(n_, small);
    out.lcs_witness = VertexSet::from_mask(n_, large);
    return out;
}

std::vector<Mask> DeterminingLattice::critical_masks() const {
    std::vector<Mask> out;
    const Mask full = full_mask(n_);
    for (Mask s = 0;; ++s) {
        if (critical(s)) {
            out.push_back(s);
        }
        if (s == full) {
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------- per-set predicates

bool is_determining(const Graph& g, const Coloring& c, const VertexSet& s) {
    require_proper(g, c);
    return count_extensions(g, PartialAssignment::restrict(c, s), 2) == 1;
}

CriticalCertificate is_critical(const Graph& g, const Coloring& c, const VertexSet& s) {
    CriticalCertificate cert{c, s, is_determining(g, c, s), false};
    if (cert.determining) {
        cert.minimal = true;
        s.for_each([&](Vertex v) {
            if (!cert.minimal) {
                return;
            }
            VertexSet smaller = s;
            smaller.erase(v);
            if (is_determining(g, c, smaller)) {
                cert.minimal = false;
            }
        });
    }
    return cert;
}

// ---------------------------------------------------------------- per-coloring and global

CriticalExtremes scs_lcs_for_coloring(const Graph& g, const Coloring& c, const SearchLimits& limits) {
    require_exact_cap(g, limits);
    require_proper(g, c);
    const auto everything = all_proper_colorings(g, c.palette, limits);
    return DeterminingLattice(g, c, everything, limits).extremes();
}

std::vector<VertexSet> critical_sets(const Graph& g, const Coloring& c, const SearchLimits& limits) {
    require_exact_cap(g, limits);
    require_proper(g, c);
    const auto everything = all_proper_colorings(g, c.palette, limits);
    std::vector<VertexSet> out;
    for (auto m : DeterminingLattice(g, c, everything, limits).critical_masks()) {
        out.push_back(VertexSet::from_mask(g.order(), m));
    }
    return out;
}

ParamQuad four_params(const Graph& g, const SearchLimits& limits) {
    require_exact_cap(g, limits);
    const auto chi = static_cast<int>(chromatic_number(g, limits));
    return extremal_params(g, chi, true, limits);
}

ParamQuad four_params_k(const Graph& g, int k, const SearchLimits& limits) {
    require_exact_cap(g, limits);
    const auto chi = static_cast<int>(chromatic_number(g, limits));
    if (k < chi) {
        fail(ErrorKind::invalid_parameter, "palette size " + std::to_string(k) +
                                               " is below the chromatic number " + std::to_string(chi));
    }
    return extremal_params(g, k, false, limits);
}

std::optional<std::size_t> is_critically_uniform(const Graph& g, const SearchLimits& limits) {
    const auto q = four_params(g, limits);
    if (!q.uniform()) {
        return std::nullopt;
    }
    return q.uscs;
}

bool GraphProfile::prop1_holds() const {
    if (order == 0 || !uniquely_colorable) {
        return true;
    }
    return quad.uniform() && quad.uscs == chromatic - 1;
}

bool GraphProfile::converse_holds() const {
    if (order == 0) {
        return true;
    }
    const bool uniform_at_chi_minus_one = quad.uniform() && quad.uscs == chromatic - 1;
    return !uniform_at_chi_minus_one || uniquely_colorable;
}

GraphProfile profile(const Graph& g, const SearchLimits& limits) {
    GraphProfile p;
    p.order = g.order();
    p.chromatic = chromatic_number(g, limits);
    p.quad = four_params(g, limits);
    p.uniquely_colorable = is_uniquely_colorable(g, limits);
    return p;
}

bool verify_prop1(const Graph& g, const SearchLimits& limits) { return profile(g, limits).prop1_holds(); }

bool verify_converse_prop1(const Graph& g, const SearchLimits& limits) {
    return profile(g, limits).converse_holds();
}

} // namespace critsets
