#include <string>

#include "critsets/error.hpp"
#include "critsets/graph.hpp"

namespace critsets {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::size_t kShortLimit = 62;
constexpr std::size_t kMediumLimit = 258047;

void append_size(std::string& out, std::size_t n) {
    auto push_bits = [&](std::size_t value, int groups) {
        for (int g = groups - 1; g >= 0; --g) {
            out.push_back(static_cast<char>(63 + ((value >> (6 * g)) & 63)));
        }
    };
    if (n <= kShortLimit) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= kMediumLimit) {
        out.push_back('~');
        push_bits(n, 3);
    } else {
        out += "~~";
        push_bits(n, 6);
    }
}

int sextet(std::string_view text, std::size_t pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
        throw ParseError("graph6 character out of range", pos);
    }
    return c - 63;
}

} // namespace

std::string emit_graph6(const Graph& g) {
    const auto n = g.order();
    std::string out;
    append_size(out, n);
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    }
    return out;
}

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader) {
        pos = kHeader.size();
    }
    if (!text.empty() && text.back() == '\n') {
        text.remove_suffix(1);
    }
    if (!text.empty() && text.back() == '\r') {
        text.remove_suffix(1);
    }
    if (pos >= text.size()) {
        throw ParseError("empty graph6 string", pos);
    }

    std::size_t n = 0;
    auto read_groups = [&](int groups) {
        std::size_t value = 0;
        for (int g = 0; g < groups; ++g) {
            if (pos >= text.size()) {
                throw ParseError("truncated graph6 size header", pos);
            }
            value = (value << 6) | static_cast<std::size_t>(sextet(text, pos++));
        }
        return value;
    };
    if (text[pos] != '~') {
        n = read_groups(1);
    } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
        pos += 2;
        n = read_groups(6);
        if (n <= kMediumLimit) {
            throw ParseError("non-canonical graph6 size header", pos);
        }
    } else {
        ++pos;
        n = read_groups(3);
        if (n <= kShortLimit) {
            throw ParseError("non-canonical graph6 size header", pos);
        }
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - pos < expected) {
        throw ParseError("truncated graph6 adjacency data", text.size());
    }
    if (text.size() - pos > expected) {
        throw ParseError("trailing characters after graph6 adjacency data", pos + expected);
    }

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int chunk = sextet(text, pos + k / 6);
            if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) {
                edges.emplace_back(i, j);
            }
        }
    }
    if (k % 6 != 0) {
        const std::size_t last = pos + k / 6;
        const int chunk = sextet(text, last);
        const int padding = 6 - static_cast<int>(k % 6);
        if ((chunk & ((1 << padding) - 1)) != 0) {
            throw ParseError("nonzero graph6 padding bits", last);
        }
    }
    return Graph::from_edges(n, edges);
}

} // namespace critsets
