#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lpt/errors.hpp"
#include "lpt/graph.hpp"

namespace lpt {

// Edge-list text format: first line `n m`, then m lines `u v` (0-based).
// Blank lines and `#` comments are allowed anywhere.
inline Graph read_edge_list(std::istream& in) {
    int lineno = 0;
    auto next_line = [&](std::string& out) -> bool {
        while (std::getline(in, out)) {
            lineno++;
            auto hash = out.find('#');
            if (hash != std::string::npos) out.erase(hash);
            size_t i = 0;
            while (i < out.size() && std::isspace(static_cast<unsigned char>(out[i]))) i++;
            if (i < out.size()) return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) throw ParseError(lineno + 1, "missing header `n m`");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw ParseError(lineno, "expected header `n m`");
    std::string junk;
    if (head >> junk) throw ParseError(lineno, "trailing tokens after header");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(m));
    for (long long i = 0; i < m; i++) {
        if (!next_line(line)) throw ParseError(lineno + 1, "expected edge line");
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) throw ParseError(lineno, "expected edge `u v`");
        if (es >> junk) throw ParseError(lineno, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "edge endpoint out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        edges.emplace_back(int(u), int(v));
    }
    if (next_line(line)) throw ParseError(lineno, "unexpected content after edges");
    return Graph::from_edge_list(int(n), edges);
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_edge_list(in);
}

// Canonical serialization: header then edges sorted with u < v.
inline std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << write_edge_list(g);
}

// FNV-1a over bytes; used to stamp reports with a replayable input hash.
inline std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t graph_hash(const Graph& g) { return fnv1a(write_edge_list(g)); }

inline std::string hex64(std::uint64_t x) {
    static const char* digits = "0123456789abcdef";
    std::string s = "0x";
    for (int i = 60; i >= 0; i -= 4) s += digits[(x >> i) & 0xf];
    return s;
}

} // namespace lpt
