// graph6.hpp
// Standard graph6 byte format. The short form (single length byte) covers
// n <= 62; the '~' extended form carries an 18-bit length for n up to
// 258047. The 8-byte '~~' form is out of scope and rejected explicitly.
//
// Layout: after the length prefix, the upper triangle of the adjacency
// matrix is read column by column (for j = 1..n-1, i = 0..j-1), packed into
// 6-bit groups (high bit first), zero padded, each group offset by 63 so
// every byte is printable.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

inline std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("to_graph6: n > 258047 requires the unsupported '~~' form");
    }
    int bits = 0;
    int group = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(group + 63));
                bits = 0;
                group = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view text, const std::string& name = "") {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("from_graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126)
            throw std::invalid_argument("from_graph6: byte out of graph6 range");

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] != '~') {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw std::invalid_argument("from_graph6: '~~' long form (n > 258047) is not supported");
        if (text.size() < 4)
            throw std::invalid_argument("from_graph6: truncated extended length prefix");
        n = (static_cast<long long>(text[1] - 63) << 12) |
            (static_cast<long long>(text[2] - 63) << 6) |
            static_cast<long long>(text[3] - 63);
        pos = 4;
    }
    if (n < 1) throw std::invalid_argument("from_graph6: graph must have at least one vertex");

    const long long nbits = n * (n - 1) / 2;
    const std::size_t expected = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - pos != expected)
        throw std::invalid_argument("from_graph6: body length does not match vertex count");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int group = text[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    return Graph(static_cast<int>(n), edges, name);
}

}  // namespace mdim
