#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critsets/coloring.hpp"
#include "critsets/critical.hpp"
#include "critsets/graph.hpp"

namespace critsets {

/// Resolves a graph source: `cycle:n`, `complete:n`, `path:n`, `empty:n`, `sudoku:n`,
/// `latin:n` (K_n box K_n), `pendant:<source>`, `complement:<source>`, `file:<path>` (first
/// line, graph6), `g6:<text>`, or a bare graph6 string.
Graph graph_from_source(std::string_view source);

enum class ScanCheck { prop1, converse, uniform };

ScanCheck parse_scan_check(std::string_view text);
const char* to_string(ScanCheck c);

struct ScanRecord {
    std::size_t line = 0;
    std::string graph6;
    std::optional<GraphProfile> profile;
    bool holds = false;
    std::string error; ///< parse or size error; profile is empty when set
};

struct ScanReport {
    ScanCheck check = ScanCheck::converse;
    std::vector<ScanRecord> records;
    std::size_t checked = 0;
    std::size_t held = 0;
    std::size_t errors = 0;
    std::vector<std::string> counterexamples; ///< graph6 strings of graphs where the check failed
};

/// One job per non-blank line; records keep input order whatever the worker count.
ScanReport scan_graphs(const std::vector<std::string>& lines, ScanCheck check, const SearchLimits& limits = {},
                       std::size_t workers = 1);

struct TableRow {
    Graph graph;
    std::string graph6;
    GraphProfile profile;
};

/// One row per isomorphism class on n vertices (n <= 7), ordered by canonical code.
std::vector<TableRow> params_table(std::size_t n, bool nonbipartite_only, const SearchLimits& limits = {},
                                   std::size_t workers = 1);

enum ExitCode : int {
    exit_ok = 0,
    exit_input_error = 1,
    exit_size_limit = 2,
    exit_invariant_breach = 3,
};

/// Entry point of the command-line tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace critsets
