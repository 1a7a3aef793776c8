#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "critsets/coloring.hpp"
#include "critsets/graph.hpp"

namespace critsets {

inline constexpr std::size_t kMaxSudokuOrder = 6;

/// Sudoku graph of box order n: cells of an n^2 x n^2 grid, adjacent when they share a
/// row, a column, or an n x n block. Cell (row, col) is vertex row * n^2 + col.
struct SudokuStructure {
    std::size_t n = 0;
    std::size_t side = 0;
    Graph graph;

    Vertex cell(std::size_t row, std::size_t col) const { return row * side + col; }
    std::size_t row(Vertex v) const { return v / side; }
    std::size_t col(Vertex v) const { return v % side; }
    std::size_t block(Vertex v) const { return (row(v) / n) * n + col(v) / n; }
    int palette() const { return static_cast<int>(side); }
};

SudokuStructure sudoku_graph(std::size_t n);

/// (K_{n^2} box K_{n^2}) edge-union (nK_n strong nK_n), built with the generic operators.
Graph sudoku_graph_product_form(std::size_t n);

/// The row-mate, column-mate and block-mate of v carrying color gamma (gamma != board[v]).
/// Two of them coincide when the block-mate shares v's row or column.
VertexSet color_witnesses(const SudokuStructure& s, const Coloring& board, Vertex v, int gamma);

struct WitnessSplit {
    std::size_t pairs = 0;   ///< colors gamma with two distinct witnesses
    std::size_t triples = 0; ///< colors gamma with three distinct witnesses
};

/// Per-vertex split over all gamma != board[v].
std::vector<WitnessSplit> witness_splits(const SudokuStructure& s, const Coloring& board);

/// Visits cells in a seeded uniformly random order and drops a cell once every other color
/// appears on a neighbor that is still kept. The surviving cells determine the board.
VertexSet random_determining_set(const SudokuStructure& s, const Coloring& board, std::uint64_t seed);

/// True iff the clue cells have exactly one completion to a valid board.
bool certify_fair_puzzle(const SudokuStructure& s, const Coloring& board, const VertexSet& clues);

/// Every valid board (practical for n <= 2), lexicographic.
std::vector<Coloring> all_boards(const SudokuStructure& s);

/// Valid board built by randomized backtracking from an empty grid.
Coloring random_board(const SudokuStructure& s, std::uint64_t seed);

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::size_t size = 0;
    bool determining = false;
    VertexSet set;
};

struct TrialStats {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<TrialRecord> trials;
    double mean = 0.0;
    std::size_t min = 0;
    std::size_t max = 0;
};

/// n = 2 cycles through all 288 boards; n = 3 draws a fresh random board per trial.
/// Every surviving set is certified; a non-determining one raises an internal error.
TrialStats trial_campaign(std::size_t n, std::size_t count, std::uint64_t seed, std::size_t workers = 1);

struct MncResult {
    std::size_t min_clues = 0;
    Coloring board;
    VertexSet clues;
    std::size_t boards_searched = 0;
    /// Clue sets of size below min_clues checked (all unfair).
    std::uint64_t smaller_sets_checked = 0;
    /// Clue sets of size min_clues checked until the witness was found.
    std::uint64_t sets_checked_at_min = 0;
};

/// Fewest clues in a fair puzzle, by exhaustion. Only n = 2 is supported. With symmetry
/// reduction one board per relabeling of the digits is searched.
MncResult mnc_exhaustive(std::size_t n, bool symmetry_reduction = true);

/// Grid text: n^2 lines of n^2 space-separated tokens, digits 1..n^2 or '.' for empty.
struct Puzzle {
    std::size_t n = 0;
    std::vector<int> cells; ///< 0-based colors, -1 for empty

    VertexSet clues() const;
};

std::string emit_puzzle(const Puzzle& p);
Puzzle parse_puzzle(std::string_view text);
Puzzle puzzle_from(const SudokuStructure& s, const Coloring& board, const VertexSet& clues);

} // namespace critsets
