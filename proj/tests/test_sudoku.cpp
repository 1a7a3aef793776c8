#include <doctest.h>

#include <algorithm>
#include <set>

#include "critsets/error.hpp"
#include "critsets/sudoku.hpp"
#include "oracles.hpp"

using namespace critsets;

TEST_SUITE("sudoku") {

TEST_CASE("graph structure") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto s = sudoku_graph(n);
        CHECK(s.graph.order() == n * n * n * n);
        CHECK(s.graph == sudoku_graph_product_form(n));
        for (Vertex v = 0; v < s.graph.order(); ++v) {
            CHECK(s.graph.degree(v) == 3 * n * n - 2 * n - 1);
        }
    }
    const auto s = sudoku_graph(3);
    CHECK(s.cell(4, 7) == 43);
    CHECK(s.row(43) == 4);
    CHECK(s.col(43) == 7);
    CHECK(s.block(43) == 5);
    CHECK(s.graph.adjacent(s.cell(0, 0), s.cell(2, 2)));
    CHECK_FALSE(s.graph.adjacent(s.cell(0, 0), s.cell(3, 3)));
    CHECK_THROWS_AS(sudoku_graph(0), Error);
    CHECK_THROWS_AS(sudoku_graph(7), Error);
}

TEST_CASE("Shidoku has 288 boards") {
    const auto s = sudoku_graph(2);
    const auto boards = all_boards(s);
    CHECK(boards.size() == 288);
    CHECK(oracle::proper_colorings(s.graph, 4).size() == 288);
    for (const auto& b : boards) {
        CHECK(is_proper(s.graph, b));
    }
}

TEST_CASE("witness split on valid boards") {
    // Over the n^2 - 1 colors other than the cell's own, 2n - 2 have two distinct
    // witnesses and (n-1)^2 have three.
    auto check_board = [](const SudokuStructure& s, const Coloring& b) {
        const auto n = s.n;
        for (const auto& split : witness_splits(s, b)) {
            CHECK(split.pairs == 2 * n - 2);
            CHECK(split.triples == (n - 1) * (n - 1));
            CHECK(split.pairs + split.triples == n * n - 1);
        }
    };
    const auto s2 = sudoku_graph(2);
    for (const auto& b : all_boards(s2)) {
        check_board(s2, b);
    }
    const auto s3 = sudoku_graph(3);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        check_board(s3, random_board(s3, seed));
    }
    // Two witnesses coincide exactly when the block-mate shares a row or column with v.
    const auto b = all_boards(s2).front();
    const auto w = color_witnesses(s2, b, 0, b.colors[1]);
    CHECK(w.contains(1));
}

TEST_CASE("random determining sets") {
    const auto s = sudoku_graph(2);
    const auto boards = all_boards(s);
    const auto pool = oracle::proper_colorings(s.graph, 4);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto& board = boards[seed * 5 % boards.size()];
        const auto set = random_determining_set(s, board, seed);
        CHECK(certify_fair_puzzle(s, board, set));
        CHECK(oracle::agreeing(pool, board.colors, set.to_mask()) == 1);
        CHECK(set == random_determining_set(s, board, seed));
    }
    const auto s3 = sudoku_graph(3);
    const auto board = random_board(s3, 3);
    CHECK(board == random_board(s3, 3));
    CHECK(certify_fair_puzzle(s3, board, random_determining_set(s3, board, 9)));
    Coloring bad = board;
    std::swap(bad.colors[0], bad.colors[1]);
    std::swap(bad.colors[0], bad.colors[9]);
    CHECK_THROWS_AS(random_determining_set(s3, bad, 1), Error);
}

TEST_CASE("trial campaigns replay identically") {
    const auto a = trial_campaign(3, 12, 42, 1);
    const auto b = trial_campaign(3, 12, 42, 4);
    REQUIRE(a.trials.size() == 12);
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
        CHECK(a.trials[i].seed == b.trials[i].seed);
        CHECK(a.trials[i].set == b.trials[i].set);
        CHECK(a.trials[i].determining);
    }
    CHECK(a.mean == b.mean);
    CHECK(a.min <= a.max);
    CHECK(a.max < 81);
    const auto c = trial_campaign(3, 12, 43, 1);
    CHECK_FALSE(std::equal(a.trials.begin(), a.trials.end(), c.trials.begin(),
                           [](const TrialRecord& x, const TrialRecord& y) { return x.set == y.set; }));
    const auto shidoku = trial_campaign(2, 288, 5, 2);
    for (const auto& r : shidoku.trials) {
        CHECK(r.determining);
    }
    CHECK_THROWS_AS(trial_campaign(4, 1, 0, 1), Error);
}

TEST_CASE("minimum clues for Shidoku") {
    const auto sym = mnc_exhaustive(2, true);
    CHECK(sym.min_clues == 4);
    CHECK(sym.boards_searched == 12);
    const auto s = sudoku_graph(2);
    CHECK(certify_fair_puzzle(s, sym.board, sym.clues));
    CHECK(sym.clues.size() == 4);
    CHECK_THROWS_AS(mnc_exhaustive(3, true), Error);
}

TEST_CASE("puzzle text") {
    const auto s = sudoku_graph(2);
    const auto board = all_boards(s).front();
    const auto clues = VertexSet::from_mask(16, 0b1000'0100'0010'0001);
    const auto p = puzzle_from(s, board, clues);
    const auto text = emit_puzzle(p);
    CHECK(text == "1 . . .\n. 4 . .\n. . 4 .\n. . . 1\n");
    const auto back = parse_puzzle(text);
    CHECK(back.n == 2);
    CHECK(back.cells == p.cells);
    CHECK(back.clues() == clues);

    auto offset_of = [](std::string_view t) -> long {
        try {
            parse_puzzle(t);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("1 . .\n. . .\n. . .\n") >= 0);        // three rows
    CHECK(offset_of("1 . . .\n. 5 . .\n. . . .\n. . . .") == 10);
    CHECK(offset_of("1 . . .\n. x . .\n. . . .\n. . . .") == 10);
    CHECK(offset_of("1 . .\n. . . .\n. . . .\n. . . .") == 0);
    CHECK(offset_of("") >= 0);
}

}
