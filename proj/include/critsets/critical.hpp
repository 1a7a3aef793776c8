#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "critsets/coloring.hpp"
#include "critsets/graph.hpp"

namespace critsets {

struct Witness {
    Coloring coloring;
    VertexSet set;
};

/// The four extremal critical-set sizes over all proper colorings with a fixed palette.
struct ParamQuad {
    std::size_t uscs = 0; ///< min over colorings of the smallest critical set
    std::size_t oscs = 0; ///< max over colorings of the smallest critical set
    std::size_t ulcs = 0; ///< min over colorings of the largest critical set
    std::size_t olcs = 0; ///< max over colorings of the largest critical set
    Witness uscs_witness;
    Witness oscs_witness;
    Witness ulcs_witness;
    Witness olcs_witness;

    bool same_values(const ParamQuad& other) const {
        return uscs == other.uscs && oscs == other.oscs && ulcs == other.ulcs && olcs == other.olcs;
    }
    /// uscs <= oscs <= olcs and uscs <= ulcs <= olcs.
    bool ordered() const { return uscs <= oscs && uscs <= ulcs && ulcs <= olcs && oscs <= olcs; }
    bool uniform() const { return uscs == oscs && oscs == ulcs && ulcs == olcs; }
};

std::string to_string(const ParamQuad& q);

struct CriticalCertificate {
    Coloring coloring;
    VertexSet set;
    bool determining = false;
    bool minimal = false; ///< implies determining
};

/// Smallest and largest critical sets of one coloring; witnesses are the lexicographically
/// least sets (compared as sorted vertex lists) among those of extremal size.
struct CriticalExtremes {
    std::size_t scs = 0;
    std::size_t lcs = 0;
    VertexSet scs_witness;
    VertexSet lcs_witness;
    std::size_t critical_count = 0;
};

/// Determining status of every subset of V for one coloring, derived from the sets on
/// which some other proper coloring agrees with it. A set fails to determine exactly when
/// it lies inside such an agreement set, so the non-determining family is the down-closure
/// of the agreement sets.
class DeterminingLattice {
public:
    using Mask = std::uint64_t;

    /// `all_colorings` must hold every proper coloring of g into [c.palette].
    DeterminingLattice(const Graph& g, const Coloring& c, std::span<const Coloring> all_colorings,
                       const SearchLimits& limits = {});

    std::size_t order() const noexcept { return n_; }
    bool determining(Mask s) const { return nondetermining_[s] == 0; }
    /// Determining, and every single-vertex deletion is not.
    bool critical(Mask s) const;

    CriticalExtremes extremes() const;
    std::vector<Mask> critical_masks() const;

private:
    std::size_t n_;
    std::vector<std::uint8_t> nondetermining_;
};

/// The set holding the lowest vertex where a and b differ comes first. On sets of equal
/// size this is lexicographic order of the sorted vertex lists.
bool lex_less(std::uint64_t a, std::uint64_t b);

/// True iff c restricted to s has exactly one proper completion into [c.palette].
bool is_determining(const Graph& g, const Coloring& c, const VertexSet& s);
CriticalCertificate is_critical(const Graph& g, const Coloring& c, const VertexSet& s);

CriticalExtremes scs_lcs_for_coloring(const Graph& g, const Coloring& c, const SearchLimits& limits = {});
std::vector<VertexSet> critical_sets(const Graph& g, const Coloring& c, const SearchLimits& limits = {});

ParamQuad four_params(const Graph& g, const SearchLimits& limits = {});

/// Extremes over all proper colorings into [k], which need not use every color. Throws
/// invalid_parameter when k < chi(G).
ParamQuad four_params_k(const Graph& g, int k, const SearchLimits& limits = {});

/// The common critical-set size when all four parameters agree.
std::optional<std::size_t> is_critically_uniform(const Graph& g, const SearchLimits& limits = {});

/// Everything a scan needs about one graph, computed once.
struct GraphProfile {
    std::size_t order = 0;
    std::size_t chromatic = 0;
    ParamQuad quad;
    bool uniquely_colorable = false;

    std::optional<std::size_t> uniform_size() const {
        return quad.uniform() ? std::optional<std::size_t>(quad.uscs) : std::nullopt;
    }
    /// Uniquely colorable implies critically (chi-1)-uniform.
    bool prop1_holds() const;
    /// Critically (chi-1)-uniform implies uniquely colorable.
    bool converse_holds() const;
};

GraphProfile profile(const Graph& g, const SearchLimits& limits = {});

/// The null graph passes both checks vacuously.
bool verify_prop1(const Graph& g, const SearchLimits& limits = {});
bool verify_converse_prop1(const Graph& g, const SearchLimits& limits = {});

} // namespace critsets
