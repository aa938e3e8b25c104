#include "neumaier/graph6.hpp"

#include <cstddef>

#include "neumaier/errors.hpp"

namespace neumaier {

namespace {

constexpr int kOffset = 63;
constexpr int kBigMark = 126;

void append_bits(std::string& out, int& acc, int& nbits, bool bit) {
    acc = (acc << 1) | (bit ? 1 : 0);
    if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        nbits = 0;
    }
}

} // namespace

std::string graph6_encode(const Graph& g) {
    const int v = g.vertex_count();
    if (v > 258047) throw ArgumentError("graph6 encoding supported up to 258047 vertices");
    std::string out;
    if (v <= 62) {
        out.push_back(static_cast<char>(v + kOffset));
    } else {
        out.push_back(static_cast<char>(kBigMark));
        out.push_back(static_cast<char>(((v >> 12) & 63) + kOffset));
        out.push_back(static_cast<char>(((v >> 6) & 63) + kOffset));
        out.push_back(static_cast<char>((v & 63) + kOffset));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < v; ++j) {
        for (int i = 0; i < j; ++i) append_bits(out, acc, nbits, g.edge(i, j));
    }
    if (nbits > 0) {
        acc <<= (6 - nbits); // zero padding
        out.push_back(static_cast<char>(acc + kOffset));
    }
    return out;
}

Graph graph6_decode(std::string_view s) {
    if (s.empty()) throw ArgumentError("empty graph6 string");
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw ArgumentError("truncated graph6 string");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < kOffset || c > kOffset + 63) throw ArgumentError("invalid graph6 byte");
        return c - kOffset;
    };

    int v;
    if (static_cast<unsigned char>(s[0]) == kBigMark) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == kBigMark)
            throw ArgumentError("graph6 strings beyond 258047 vertices are not supported");
        ++pos;
        int a = next(), b = next(), c = next();
        v = (a << 12) | (b << 6) | c;
        if (v <= 62) throw ArgumentError("non-canonical graph6 length encoding");
    } else {
        v = next();
    }
    if (v < 1) throw ArgumentError("graph6 graph must have at least one vertex");

    Graph g(v);
    int acc = 0, nbits = 0;
    for (int j = 1; j < v; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
            --nbits;
        }
    }
    if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
        throw ArgumentError("graph6 padding bits must be zero");
    if (pos != s.size()) throw ArgumentError("trailing bytes after graph6 data");
    return g;
}

} // namespace neumaier
