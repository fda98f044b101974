#include "rdlab/graph.hpp"

#include <algorithm>

namespace rdlab {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::full(int n) {
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
    return VertexSet(std::move(ids));
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) throw InvalidGraph("graph order must be >= 1");
    adj_.resize(static_cast<std::size_t>(n));
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidGraph("duplicate edge");
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

const std::vector<int>& Graph::adjacency(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

VertexSet Graph::neighbors(int v) const {
    return VertexSet(adjacency(v));
}

VertexSet Graph::closed_neighbors(int v) const {
    auto ids = adjacency(v);
    ids.push_back(v);
    return VertexSet(std::move(ids));
}

bool Graph::is_connected() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : adj_[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InvalidGraph("vertex id " + std::to_string(v) + " out of range [0," +
                           std::to_string(n_) + ")");
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> old_to_new(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (int v : keep) {
        if (v < 0 || v >= g.order()) throw InvalidGraph("induced_subgraph: vertex out of range");
        old_to_new[static_cast<std::size_t>(v)] = next++;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int nu = old_to_new[static_cast<std::size_t>(u)];
        int nv = old_to_new[static_cast<std::size_t>(v)];
        if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
    }
    return {Graph(next, edges), std::move(old_to_new)};
}

}  // namespace rdlab
