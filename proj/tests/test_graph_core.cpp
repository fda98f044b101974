#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rdlab/enumerate.hpp"
#include "rdlab/graph.hpp"
#include "rdlab/io.hpp"
#include "rdlab/tree.hpp"
#include "test_util.hpp"

using namespace rdlab;
using namespace testutil;

TEST_CASE("graph construction validates invariants") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidGraph);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidGraph);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidGraph);
    CHECK_THROWS_AS(Graph(0, {}), InvalidGraph);
    Graph g(3, {{2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(g.degree(0) == 2);
}

TEST_CASE("tree construction validates connectivity and edge count") {
    CHECK_THROWS_AS(Tree(4, {{0, 1}, {2, 3}, {1, 2}, {0, 2}}), InvalidGraph);  // n edges
    CHECK_THROWS_AS(Tree(4, {{0, 1}, {2, 3}}), InvalidGraph);                  // too few
    CHECK_NOTHROW(Tree(1, {}));
}

TEST_CASE("neighbors on P3, star, and the one-vertex graph") {
    Tree p3 = make_path(3);
    CHECK(p3.graph().neighbors(1) == VertexSet({0, 2}));
    CHECK(p3.graph().closed_neighbors(1) == VertexSet({0, 1, 2}));
    Tree star = make_star(3);
    CHECK(star.graph().neighbors(0) == VertexSet({1, 2, 3}));
    Tree k1(1, {});
    CHECK(k1.graph().neighbors(0).empty());
    CHECK_THROWS_AS(p3.graph().neighbors(3), InvalidGraph);
}

TEST_CASE("distance matrix on small trees") {
    Tree p4 = make_path(4);
    auto d = distance_matrix(p4);
    CHECK(d[0][3] == 3);
    CHECK(d[3][0] == 3);
    Tree star = make_star(3);
    CHECK(distance_matrix(star)[1][2] == 2);
    Tree k1(1, {});
    CHECK(distance_matrix(k1) == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("distance matrix is symmetric with zero diagonal") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Tree t = random_tree(12, rng);
        auto d = distance_matrix(t);
        for (int u = 0; u < t.order(); ++u) {
            CHECK(d[u][u] == 0);
            for (int v = 0; v < t.order(); ++v) CHECK(d[u][v] == d[v][u]);
        }
    }
}

TEST_CASE("degree sum is twice the edge count") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        Tree t = random_tree(2 + static_cast<int>(rng() % 14), rng);
        int sum = 0;
        for (int v = 0; v < t.order(); ++v) sum += t.degree(v);
        CHECK(sum == 2 * (t.order() - 1));
    }
}

TEST_CASE("diametral path on P4 is the whole path") {
    Tree p4 = make_path(4);
    DiametralPath dp = diametral_path_max_penultimate(p4);
    CHECK(dp.length() == 3);
    CHECK(dp.vertices == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("diametral path on DS22 picks a degree-3 penultimate") {
    Tree ds = make_double_star(2, 2);
    DiametralPath dp = diametral_path_max_penultimate(ds);
    CHECK(dp.length() == 3);
    CHECK(ds.degree(dp.penultimate()) == 3);
}

TEST_CASE("diametral path on P5 has length 4") {
    DiametralPath dp = diametral_path_max_penultimate(make_path(5));
    CHECK(dp.length() == 4);
}

TEST_CASE("single-vertex tree has no diametral path") {
    CHECK_THROWS_AS(diametral_path_max_penultimate(Tree(1, {})), InvalidGraph);
}

namespace {

// Independent oracle: enumerate every diametral path endpoint pair via
// the distance matrix and track the best penultimate degree.
int best_penultimate_by_enumeration(const Tree& t) {
    auto d = distance_matrix(t);
    int diam = 0;
    for (int u = 0; u < t.order(); ++u)
        for (int v = 0; v < t.order(); ++v) diam = std::max(diam, d[u][v]);
    int best = 0;
    for (int a = 0; a < t.order(); ++a) {
        for (int b = 0; b < t.order(); ++b) {
            if (d[a][b] != diam) continue;
            for (int w : t.adjacency(b))
                if (d[a][w] == diam - 1) best = std::max(best, t.degree(w));
        }
    }
    return best;
}

}  // namespace

TEST_CASE("diametral path maximizes the penultimate degree") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        Tree t = random_tree(2 + static_cast<int>(rng() % 12), rng);
        DiametralPath dp = diametral_path_max_penultimate(t);
        auto d = distance_matrix(t);
        int diam = 0;
        for (int u = 0; u < t.order(); ++u)
            for (int v = 0; v < t.order(); ++v) diam = std::max(diam, d[u][v]);
        REQUIRE(dp.length() == diam);
        for (std::size_t i = 0; i + 1 < dp.vertices.size(); ++i)
            CHECK(t.graph().has_edge(dp.vertices[i], dp.vertices[i + 1]));
        CHECK(t.degree(dp.penultimate()) == best_penultimate_by_enumeration(t));
    }
}

TEST_CASE("canonical code separates P4 from the claw and survives relabeling") {
    Tree p4 = make_path(4);
    Tree claw = make_star(3);
    CHECK(canonical_code(p4) != canonical_code(claw));
    Tree p4b(4, {{3, 1}, {1, 0}, {0, 2}});  // relabeled P4
    CHECK(canonical_code(p4) == canonical_code(p4b));
    CHECK(canonical_code(make_double_star(2, 3)) == canonical_code(make_double_star(3, 2)));
}

TEST_CASE("canonical code is invariant under random relabelings") {
    std::mt19937_64 rng(14);
    for (int n : {5, 8, 11}) {
        for (int trial = 0; trial < 3; ++trial) {
            Tree t = random_tree(n, rng);
            std::string code = canonical_code(t);
            for (int i = 0; i < 100; ++i) CHECK(canonical_code(relabel(t, rng)) == code);
        }
    }
}

TEST_CASE("canonical codes of non-isomorphic trees differ") {
    TreeStream ts = all_trees(6);
    std::set<std::string> codes;
    ts.for_each([&](const Tree& t) { codes.insert(canonical_code(t)); });
    CHECK(codes.size() == ts.size());
}

TEST_CASE("root_at produces consistent parent/child structure") {
    Tree p3 = make_path(3);
    RootedTree r = root_at(p3, 0);
    CHECK(r.parent[0] == -1);
    CHECK(r.parent[1] == 0);
    CHECK(r.parent[2] == 1);
    Tree star = make_star(3);
    RootedTree rs = root_at(star, 0);
    CHECK(rs.children[0].size() == 3);
    Tree p4 = make_path(4);
    RootedTree rp = root_at(p4, 0);
    CHECK(rp.subtree(2) == VertexSet({2, 3}));
    CHECK_THROWS_AS(root_at(p4, 4), InvalidGraph);
}

TEST_CASE("edge list parses, emits, and remaps sparse labels") {
    Graph g = parse_edgelist("4 3\n0 1\n1 2\n2 3\n");
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(parse_edgelist(to_edgelist(g)) == g);

    // 1-based labels remap onto 0..n-1
    Graph h = parse_edgelist("3 2\n1 2\n2 3\n");
    CHECK(h.order() == 3);
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(1, 2));

    CHECK_THROWS_AS(parse_edgelist("oops"), ParseError);
    CHECK_THROWS_AS(parse_edgelist("2 1\n0 5\n"), ParseError);  // label gap
    CHECK_THROWS_AS(parse_edgelist("3 2\n0 1\n"), ParseError);  // missing edge
    CHECK_THROWS_AS(parse_edgelist("3 2\n0 1\n0 1\n"), ParseError);
}

TEST_CASE("graph6 encodes known byte strings") {
    // frozen from the published bit layout, computed by hand
    CHECK(to_graph6(Graph(2, {{0, 1}})) == "A_");
    CHECK(to_graph6(make_path(4).graph()) == "Ch");
    CHECK(to_graph6(make_star(3).graph()) == "Cs");
    CHECK(to_graph6(Graph(3, {{0, 1}, {0, 2}, {1, 2}})) == "Bw");
}

TEST_CASE("graph6 round-trips every small tree") {
    for (int n = 1; n <= 9; ++n) {
        TreeStream ts = all_trees(n);
        ts.for_each([&](const Tree& t) {
            Graph back = parse_graph6(to_graph6(t.graph()));
            CHECK(back == t.graph());
        });
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6(":sparse6"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);  // truncated
    CHECK_THROWS_AS(to_graph6(Graph(63, {})), CapExceeded);
}

TEST_CASE("induced subgraph renumbers and maps back") {
    Tree p5 = make_path(5);
    auto [sub, map] = induced_subgraph(p5.graph(), VertexSet({0, 1, 2}));
    CHECK(sub.order() == 3);
    CHECK(sub.edge_count() == 2);
    CHECK(map[4] == -1);
    CHECK(map[2] == 2);
}
