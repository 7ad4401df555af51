#include "mbd/graph6.hpp"

#include <vector>

namespace mbd {

// Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
// packed into 6-bit groups, each group offset by 63.

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw Graph6Error("graph6 single-byte form supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw Graph6Error("empty graph6 string");
    const unsigned char head = static_cast<unsigned char>(text[0]);
    if (head == ':' || head == ';') throw Graph6Error("sparse6 format not supported");
    if (head == '&') throw Graph6Error("digraph6 format not supported");
    if (head == '~') throw Graph6Error("multi-byte graph6 length form not supported");
    if (head < 63 || head > 126) throw Graph6Error("malformed length byte");
    const int n = head - 63;
    if (n < 1 || n > 62) throw Graph6Error("vertex count out of range [1, 62]");

    const int nbits = n * (n - 1) / 2;
    const int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(text.size()) != 1 + nbytes)
        throw Graph6Error("wrong length: expected " + std::to_string(1 + nbytes) +
                          " characters, got " + std::to_string(text.size()));

    std::vector<Edge> edges;
    int byte_idx = 1, bit_idx = 0, cur = 0;
    auto next_bit = [&]() -> int {
        if (bit_idx == 0) {
            const unsigned char c = static_cast<unsigned char>(text[byte_idx++]);
            if (c < 63 || c > 126) throw Graph6Error("byte out of printable range");
            cur = c - 63;
            bit_idx = 6;
        }
        --bit_idx;
        return (cur >> bit_idx) & 1;
    };
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (next_bit()) edges.emplace_back(u, v);
    // remaining padding bits of the last group must be zero
    while (bit_idx > 0) {
        --bit_idx;
        if ((cur >> bit_idx) & 1) throw Graph6Error("nonzero trailing padding bits");
    }
    return Graph(n, edges);
}

}  // namespace mbd
