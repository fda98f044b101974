#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdlab/graph.hpp"

namespace rdlab {

/// A connected acyclic graph. Validated on construction (connected,
/// exactly n-1 edges).
class Tree {
public:
    explicit Tree(Graph g);
    Tree(int n, const std::vector<std::pair<int, int>>& edges) : Tree(Graph(n, edges)) {}

    const Graph& graph() const { return g_; }
    int order() const { return g_.order(); }
    int degree(int v) const { return g_.degree(v); }
    const std::vector<int>& adjacency(int v) const { return g_.adjacency(v); }

    bool is_leaf(int v) const { return g_.degree(v) == 1; }
    /// A stem is a vertex adjacent to a leaf; a weak stem is adjacent to
    /// exactly one leaf.
    bool is_stem(int v) const;
    int leaf_neighbor_count(int v) const;

    std::vector<int> leaves() const;
    std::vector<int> stems() const;

private:
    Graph g_;
};

/// Parent/child view of a tree from a chosen root. Children lists are
/// sorted by id; `order` is a BFS ordering from the root.
struct RootedTree {
    const Tree* tree = nullptr;
    int root = -1;
    std::vector<int> parent;              // -1 at the root
    std::vector<std::vector<int>> children;
    std::vector<int> bfs_order;
    std::vector<int> depth;

    /// Vertices of the subtree T_v (v and its descendants), increasing ids.
    VertexSet subtree(int v) const;
};

RootedTree root_at(const Tree& t, int r);

struct DiametralPath {
    std::vector<int> vertices;  // x_0 .. x_d
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int penultimate() const { return vertices[vertices.size() - 2]; }
};

/// All-pairs shortest path distances (edge counts), n x n.
std::vector<std::vector<int>> distance_matrix(const Tree& t);

int diameter(const Tree& t);

/// Tree center: one vertex (even diameter) or two adjacent vertices.
std::vector<int> center(const Tree& t);

/// Among all diametral paths, returns one whose second-to-last vertex has
/// maximum degree; ties broken by the lexicographically smallest vertex id
/// sequence. Requires order >= 2.
DiametralPath diametral_path_max_penultimate(const Tree& t);

/// AHU-style canonical form rooted at the center (lexicographic minimum
/// over both orientations for bicentral trees). Two trees get equal codes
/// iff they are isomorphic.
std::string canonical_code(const Tree& t);

/// Canonical code computed directly from adjacency lists; `adj` must
/// describe a tree. Shared fast path for enumeration-scale callers.
std::string canonical_code_adj(const std::vector<std::vector<int>>& adj);

bool isomorphic(const Tree& a, const Tree& b);

}  // namespace rdlab
