#include "rdlab/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rdlab {

Graph parse_edgelist(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("edgelist: expected header `n m`");
    if (n < 1) throw ParseError("edgelist: order must be >= 1");
    if (m < 0) throw ParseError("edgelist: negative edge count");
    std::vector<std::pair<long long, long long>> raw;
    raw.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw ParseError("edgelist: expected " + std::to_string(m) +
                                              " edges, got " + std::to_string(i));
        if (u < 0 || v < 0) throw ParseError("edgelist: negative vertex label");
        raw.emplace_back(u, v);
    }
    bool in_range = std::all_of(raw.begin(), raw.end(),
                                [n](auto e) { return e.first < n && e.second < n; });
    std::map<long long, int> remap;
    if (!in_range) {
        for (auto [u, v] : raw) {
            remap.emplace(u, 0);
            remap.emplace(v, 0);
        }
        if (static_cast<long long>(remap.size()) != n)
            throw ParseError("edgelist: labels exceed n-1 and distinct label count " +
                             std::to_string(remap.size()) + " != n");
        int next = 0;
        for (auto& [label, id] : remap) id = next++;
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw) {
        if (in_range)
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        else
            edges.emplace_back(remap[u], remap[v]);
    }
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const InvalidGraph& e) {
        throw ParseError(std::string("edgelist: ") + e.what());
    }
}

Graph parse_edgelist(const std::string& text) {
    std::istringstream ss(text);
    return parse_edgelist(ss);
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw CapExceeded("graph6 writer supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    // Upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian
    // into 6-bit groups, each offset by 63.
    int bit = 0;
    int acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bit = 0;
                acc = 0;
            }
        }
    }
    if (bit > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bit))));
    return out;
}

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw ParseError("graph6: empty line");
    if (s[0] == ':' || s[0] == '&' || s[0] == '~')
        throw ParseError("graph6: sparse6/digraph6/large-order headers not supported");
    int n = s[0] - 63;
    if (n < 1 || n > 62) throw ParseError("graph6: order byte out of supported range");
    std::size_t need = (static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 + 5) / 6;
    if (s.size() != 1 + need)
        throw ParseError("graph6: expected " + std::to_string(1 + need) + " bytes, got " +
                         std::to_string(s.size()));
    std::vector<std::pair<int, int>> edges;
    std::size_t pos = 1;
    int bit = 0;
    int acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit == 0) {
                int byte = s[pos] - 63;
                if (byte < 0 || byte > 63) throw ParseError("graph6: byte out of range");
                acc = byte;
                ++pos;
                bit = 6;
            }
            --bit;
            if ((acc >> bit) & 1) edges.emplace_back(i, j);
        }
    }
    try {
        return Graph(n, edges);
    } catch (const InvalidGraph& e) {
        throw ParseError(std::string("graph6: ") + e.what());
    }
}

Graph parse_graph(const std::string& text, const std::string& format) {
    if (format == "edgelist") return parse_edgelist(text);
    if (format == "graph6") {
        std::istringstream ss(text);
        std::string line;
        while (std::getline(ss, line)) {
            if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
                return parse_graph6(line);
        }
        throw ParseError("graph6: no data line found");
    }
    throw ParseError("unknown graph format: " + format);
}

}  // namespace rdlab
