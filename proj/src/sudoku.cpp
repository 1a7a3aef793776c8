#include "critsets/sudoku.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "critsets/error.hpp"
#include "critsets/parallel.hpp"

namespace critsets {

namespace {

void require_board(const SudokuStructure& s, const Coloring& board) {
    if (board.palette != s.palette() || !is_proper(s.graph, board)) {
        fail(ErrorKind::invalid_parameter, "board is not a proper " + std::to_string(s.side) + "-coloring");
    }
}

std::mt19937_64 derived_engine(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index) { return derived_engine(seed, index, 0)(); }

} // namespace

SudokuStructure sudoku_graph(std::size_t n) {
    if (n == 0) {
        fail(ErrorKind::invalid_parameter, "box order must be at least 1");
    }
    if (n > kMaxSudokuOrder) {
        fail(ErrorKind::size_limit, "box order above " + std::to_string(kMaxSudokuOrder));
    }
    SudokuStructure s;
    s.n = n;
    s.side = n * n;
    const auto cells = s.side * s.side;
    std::vector<Edge> es;
    for (Vertex a = 0; a < cells; ++a) {
        for (Vertex b = a + 1; b < cells; ++b) {
            const auto ra = a / s.side;
            const auto ca = a % s.side;
            const auto rb = b / s.side;
            const auto cb = b % s.side;
            if (ra == rb || ca == cb || (ra / n == rb / n && ca / n == cb / n)) {
                es.emplace_back(a, b);
            }
        }
    }
    s.graph = Graph::from_edges(cells, es);
    return s;
}

Graph sudoku_graph_product_form(std::size_t n) {
    const auto side = make_complete(n * n);
    const auto blocks = disjoint_copies(make_complete(n), n);
    return edge_union(cartesian_product(side, side), strong_product(blocks, blocks));
}

VertexSet color_witnesses(const SudokuStructure& s, const Coloring& board, Vertex v, int gamma) {
    VertexSet out(s.graph.order());
    for (std::size_t i = 0; i < s.side; ++i) {
        const Vertex in_row = s.cell(s.row(v), i);
        const Vertex in_col = s.cell(i, s.col(v));
        if (in_row != v && board.colors[in_row] == gamma) {
            out.insert(in_row);
        }
        if (in_col != v && board.colors[in_col] == gamma) {
            out.insert(in_col);
        }
    }
    const auto top = (s.row(v) / s.n) * s.n;
    const auto left = (s.col(v) / s.n) * s.n;
    for (std::size_t dr = 0; dr < s.n; ++dr) {
        for (std::size_t dc = 0; dc < s.n; ++dc) {
            const Vertex w = s.cell(top + dr, left + dc);
            if (w != v && board.colors[w] == gamma) {
                out.insert(w);
            }
        }
    }
    return out;
}

std::vector<WitnessSplit> witness_splits(const SudokuStructure& s, const Coloring& board) {
    require_board(s, board);
    std::vector<WitnessSplit> out(s.graph.order());
    for (Vertex v = 0; v < s.graph.order(); ++v) {
        for (int gamma = 0; gamma < s.palette(); ++gamma) {
            if (gamma == board.colors[v]) {
                continue;
            }
            const auto size = color_witnesses(s, board, v, gamma).size();
            if (size == 2) {
                ++out[v].pairs;
            } else if (size == 3) {
                ++out[v].triples;
            } else {
                fail(ErrorKind::internal, "a color must have two or three witnesses on a valid board");
            }
        }
    }
    return out;
}

VertexSet random_determining_set(const SudokuStructure& s, const Coloring& board, std::uint64_t seed) {
    require_board(s, board);
    const auto cells = s.graph.order();
    std::vector<Vertex> order(cells);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    VertexSet kept = VertexSet::full(cells);
    const std::uint64_t everything = s.side >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.side) - 1;
    for (const Vertex v : order) {
        std::uint64_t seen = std::uint64_t{1} << board.colors[v];
        s.graph.neighbors(v).for_each([&](Vertex w) {
            if (kept.contains(w)) {
                seen |= std::uint64_t{1} << board.colors[w];
            }
        });
        if (seen == everything) {
            kept.erase(v);
        }
    }
    return kept;
}

bool certify_fair_puzzle(const SudokuStructure& s, const Coloring& board, const VertexSet& clues) {
    require_board(s, board);
    return count_extensions(s.graph, PartialAssignment::restrict(board, clues), 2) == 1;
}

std::vector<Coloring> all_boards(const SudokuStructure& s) {
    std::vector<Coloring> out;
    for_each_proper_coloring(s.graph, s.palette(), false, false, [&](const Coloring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

Coloring random_board(const SudokuStructure& s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto board = find_coloring(s.graph, s.palette(), &rng);
    if (!board) {
        fail(ErrorKind::internal, "no valid board found");
    }
    return *board;
}

TrialStats trial_campaign(std::size_t n, std::size_t count, std::uint64_t seed, std::size_t workers) {
    if (n != 2 && n != 3) {
        fail(ErrorKind::unsupported, "trial campaigns run for n = 2 or n = 3");
    }
    const auto structure = sudoku_graph(n);
    const auto boards = n == 2 ? all_boards(structure) : std::vector<Coloring>{};

    TrialStats stats;
    stats.n = n;
    stats.seed = seed;
    stats.trials = parallel_map<TrialRecord>(count, workers, [&](std::size_t t) {
        const Coloring board = n == 2 ? boards[t % boards.size()] : random_board(structure, derived_engine(seed, t, 1)());
        TrialRecord r;
        r.trial = t;
        r.seed = derived_seed(seed, t);
        r.set = random_determining_set(structure, board, r.seed);
        r.size = r.set.size();
        r.determining = certify_fair_puzzle(structure, board, r.set);
        if (!r.determining) {
            fail(ErrorKind::internal, "trial " + std::to_string(t) + " produced a non-determining set");
        }
        return r;
    });
    if (!stats.trials.empty()) {
        std::size_t total = 0;
        stats.min = std::numeric_limits<std::size_t>::max();
        for (const auto& r : stats.trials) {
            total += r.size;
            stats.min = std::min(stats.min, r.size);
            stats.max = std::max(stats.max, r.size);
        }
        stats.mean = static_cast<double>(total) / static_cast<double>(stats.trials.size());
    }
    return stats;
}

MncResult mnc_exhaustive(std::size_t n, bool symmetry_reduction) {
    if (n != 2) {
        fail(ErrorKind::unsupported, "exhaustive minimum-clue search is only feasible for n = 2");
    }
    const auto structure = sudoku_graph(n);
    std::vector<Coloring> boards;
    if (symmetry_reduction) {
        for_each_proper_coloring(structure.graph, structure.palette(), true, true, [&](const Coloring& c) {
            boards.push_back(c);
            return true;
        });
    } else {
        boards = all_boards(structure);
    }
    const auto cells = structure.graph.order();

    MncResult result;
    result.boards_searched = boards.size();
    for (std::size_t size = 0; size <= cells; ++size) {
        std::uint64_t checked = 0;
        for (const auto& board : boards) {
            // Gosper's hack walks the masks of `size` bits in increasing order.
            const std::uint64_t limit = std::uint64_t{1} << cells;
            std::uint64_t mask = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
            while (mask < limit) {
                ++checked;
                const auto clues = VertexSet::from_mask(cells, mask);
                if (certify_fair_puzzle(structure, board, clues)) {
                    result.min_clues = size;
                    result.board = board;
                    result.clues = clues;
                    result.sets_checked_at_min = checked;
                    return result;
                }
                if (mask == 0) {
                    break;
                }
                const std::uint64_t low = mask & (~mask + 1);
                const std::uint64_t ripple = mask + low;
                mask = (((ripple ^ mask) >> 2) / low) | ripple;
            }
        }
        result.smaller_sets_checked += checked;
    }
    fail(ErrorKind::internal, "the full grid must be a fair puzzle");
}

// ---------------------------------------------------------------- puzzle text

VertexSet Puzzle::clues() const {
    VertexSet out(cells.size());
    for (Vertex v = 0; v < cells.size(); ++v) {
        if (cells[v] >= 0) {
            out.insert(v);
        }
    }
    return out;
}

std::string emit_puzzle(const Puzzle& p) {
    const auto side = p.n * p.n;
    std::ostringstream os;
    for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t c = 0; c < side; ++c) {
            const int value = p.cells[r * side + c];
            os << (c ? " " : "");
            if (value < 0) {
                os << '.';
            } else {
                os << value + 1;
            }
        }
        os << '\n';
    }
    return os.str();
}

Puzzle parse_puzzle(std::string_view text) {
    struct Token {
        std::string_view text;
        std::size_t offset;
    };
    std::vector<std::vector<Token>> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::vector<Token> row;
        std::size_t i = pos;
        while (i < end) {
            while (i < end && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) {
                ++i;
            }
            const auto start = i;
            while (i < end && text[i] != ' ' && text[i] != '\t' && text[i] != '\r') {
                ++i;
            }
            if (i > start) {
                row.push_back({text.substr(start, i - start), start});
            }
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
        pos = end + 1;
    }

    const auto side = rows.size();
    const auto n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(side))));
    if (side == 0 || n * n != side) {
        throw ParseError("puzzle must have a perfect-square number of rows", text.size());
    }
    Puzzle p{n, std::vector<int>(side * side, -1)};
    for (std::size_t r = 0; r < side; ++r) {
        if (rows[r].size() != side) {
            const auto at = rows[r].empty() ? 0 : rows[r].front().offset;
            throw ParseError("row " + std::to_string(r + 1) + " must have " + std::to_string(side) + " tokens", at);
        }
        for (std::size_t c = 0; c < side; ++c) {
            const auto& tok = rows[r][c];
            if (tok.text == ".") {
                continue;
            }
            std::size_t value = 0;
            for (char ch : tok.text) {
                if (ch < '0' || ch > '9') {
                    throw ParseError("puzzle token must be a digit string or '.'", tok.offset);
                }
                value = value * 10 + static_cast<std::size_t>(ch - '0');
                if (value > side) {
                    break;
                }
            }
            if (value < 1 || value > side) {
                throw ParseError("puzzle value out of range 1.." + std::to_string(side), tok.offset);
            }
            p.cells[r * side + c] = static_cast<int>(value) - 1;
        }
    }
    return p;
}

Puzzle puzzle_from(const SudokuStructure& s, const Coloring& board, const VertexSet& clues) {
    Puzzle p{s.n, std::vector<int>(s.graph.order(), -1)};
    clues.for_each([&](Vertex v) { p.cells[v] = board.colors[v]; });
    return p;
}

} // namespace critsets
