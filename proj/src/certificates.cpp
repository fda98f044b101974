#include "rdlab/certificates.hpp"

#include <algorithm>
#include <sstream>

namespace rdlab {

Assignment::Assignment(std::vector<int> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw InvalidGraph("assignment must cover at least one vertex");
    for (int x : labels_)
        if (x < 0 || x > 2) throw InvalidGraph("assignment labels must lie in {0,1,2}");
}

Assignment Assignment::uniform(int n, int label) {
    return Assignment(std::vector<int>(static_cast<std::size_t>(n), label));
}

int Assignment::weight() const {
    int w = 0;
    for (int x : labels_) w += x;
    return w;
}

VertexSet Assignment::partition_cell(int i) const {
    std::vector<int> ids;
    for (int v = 0; v < size(); ++v)
        if (labels_[static_cast<std::size_t>(v)] == i) ids.push_back(v);
    return VertexSet(std::move(ids));
}

Assignment parse_assignment(std::istream& in) {
    int n = 0;
    if (!(in >> n) || n < 1) throw ParseError("assignment: expected order line");
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (!(in >> labels[static_cast<std::size_t>(i)]))
            throw ParseError("assignment: expected " + std::to_string(n) + " labels");
        int x = labels[static_cast<std::size_t>(i)];
        if (x < 0 || x > 2) throw ParseError("assignment: label out of {0,1,2}");
    }
    return Assignment(std::move(labels));
}

Assignment parse_assignment(const std::string& text) {
    std::istringstream ss(text);
    return parse_assignment(ss);
}

std::string to_assignment_text(const Assignment& a) {
    std::ostringstream out;
    out << a.size() << '\n';
    for (int v = 0; v < a.size(); ++v) out << (v ? " " : "") << a.label(v);
    out << '\n';
    return out.str();
}

namespace {

void check_subset(const Graph& g, const VertexSet& s) {
    if (!s.empty() && (s.ids().front() < 0 || s.ids().back() >= g.order()))
        throw InvalidGraph("vertex set is not a subset of V(G)");
}

}  // namespace

CertCheck is_dominating(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        bool dominated = std::any_of(g.adjacency(v).begin(), g.adjacency(v).end(),
                                     [&](int w) { return s.contains(w); });
        if (!dominated) return {false, v, -1, "no neighbor in set"};
    }
    return {};
}

CertCheck is_rds(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        bool has_in = false, has_out = false;
        for (int w : g.adjacency(v)) {
            if (s.contains(w))
                has_in = true;
            else
                has_out = true;
        }
        if (!has_in) return {false, v, -1, "no neighbor in set"};
        if (!has_out) return {false, v, -1, "no neighbor outside set"};
    }
    return {};
}

CertCheck is_ridf(const Graph& g, const Assignment& f) {
    if (f.size() != g.order()) throw InvalidGraph("assignment size does not match graph order");
    for (int v = 0; v < g.order(); ++v) {
        if (f.label(v) != 0) continue;
        int sum = 0;
        bool zero_neighbor = false;
        for (int w : g.adjacency(v)) {
            sum += f.label(w);
            if (f.label(w) == 0) zero_neighbor = true;
        }
        if (sum < 2) return {false, v, -1, "neighbor label sum below 2"};
        if (!zero_neighbor) return {false, v, -1, "isolated in the 0-labeled subgraph"};
    }
    return {};
}

CertCheck is_packing(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    // Distance < 3 means equal/adjacent or sharing a neighbor; a depth-2
    // BFS per member suffices and keeps this usable on general graphs.
    for (int u : s) {
        std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
        dist[static_cast<std::size_t>(u)] = 0;
        std::vector<int> frontier = {u};
        for (int level = 1; level <= 2; ++level) {
            std::vector<int> next;
            for (int x : frontier) {
                for (int w : g.adjacency(x)) {
                    if (dist[static_cast<std::size_t>(w)] == -1) {
                        dist[static_cast<std::size_t>(w)] = level;
                        next.push_back(w);
                    }
                }
            }
            frontier = std::move(next);
        }
        for (int v : s) {
            if (v <= u) continue;
            if (dist[static_cast<std::size_t>(v)] != -1)
                return {false, u, v, "pair at distance below 3"};
        }
    }
    return {};
}

}  // namespace rdlab
