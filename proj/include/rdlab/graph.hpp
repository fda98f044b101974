#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rdlab {

// Error hierarchy shared by the whole library. The CLI maps these onto
// its documented exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : Error {
    using Error::Error;
};
struct InvalidGraph : Error {
    using Error::Error;
};
struct CapExceeded : Error {
    using Error::Error;
};
struct TraceError : Error {
    using Error::Error;
};

/// Sorted set of vertex ids. Small and value-semantic; the universe
/// (graph order) is not stored, so membership in a graph is checked at
/// the point of use.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);

    static VertexSet full(int n);

    bool contains(int v) const;
    void insert(int v);
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }

    const std::vector<int>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

private:
    std::vector<int> ids_;  // strictly increasing
};

/// Immutable simple undirected graph over dense vertex ids 0..n-1.
/// Construction validates: no self-loops, no duplicate edges, endpoints
/// in range. Adjacency lists are kept sorted.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int degree(int v) const { return static_cast<int>(adjacency(v).size()); }
    const std::vector<int>& adjacency(int v) const;
    bool has_edge(int u, int v) const;

    /// Open neighborhood N(v) as a set.
    VertexSet neighbors(int v) const;
    /// Closed neighborhood N[v].
    VertexSet closed_neighbors(int v) const;

    /// Edges as sorted (u < v) pairs, lexicographically ordered.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool is_connected() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Induced subgraph on `keep` (ids in increasing order are renumbered to
/// 0..k-1). Returns the subgraph and the old-id -> new-id map (-1 for
/// dropped vertices).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace rdlab
