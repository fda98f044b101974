#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rdlab/graph.hpp"
#include "rdlab/tree.hpp"

namespace testutil {

inline rdlab::Tree make_path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return rdlab::Tree(n, e);
}

inline rdlab::Tree make_star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return rdlab::Tree(leaves + 1, e);
}

// Centers 0 and 1 carrying p and q leaves.
inline rdlab::Tree make_double_star(int p, int q) {
    std::vector<std::pair<int, int>> e = {{0, 1}};
    int next = 2;
    for (int i = 0; i < p; ++i) e.emplace_back(0, next++);
    for (int i = 0; i < q; ++i) e.emplace_back(1, next++);
    return rdlab::Tree(next, e);
}

// Healthy spider: center 0, middles odd, feet even.
inline rdlab::Tree make_spider(int t) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < t; ++i) {
        e.emplace_back(0, 1 + 2 * i);
        e.emplace_back(1 + 2 * i, 2 + 2 * i);
    }
    return rdlab::Tree(2 * t + 1, e);
}

// Uniform random labeled tree via a random Pruefer sequence.
inline rdlab::Tree random_tree(int n, std::mt19937_64& rng) {
    if (n == 1) return rdlab::Tree(1, {});
    if (n == 2) return rdlab::Tree(2, {{0, 1}});
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& x : seq) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++deg[static_cast<std::size_t>(x)];
    std::vector<std::pair<int, int>> edges;
    int ptr = 0, leaf = -1;
    for (int x : seq) {
        if (leaf < 0) {
            while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr++;
        }
        edges.emplace_back(leaf, x);
        deg[static_cast<std::size_t>(leaf)] = 0;
        if (--deg[static_cast<std::size_t>(x)] == 1 && x < ptr)
            leaf = x;
        else
            leaf = -1;
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    return rdlab::Tree(n, edges);
}

// Relabels a tree by a random permutation.
inline rdlab::Tree relabel(const rdlab::Tree& t, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(t.order()));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i)
        std::swap(perm[i - 1], perm[rng() % i]);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : t.graph().edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return rdlab::Tree(t.order(), edges);
}

// Independent tree-count oracle: rooted counts by the classic divisor-sum
// recurrence, free counts by Otter's dissimilarity identity.
inline std::vector<std::uint64_t> rooted_tree_counts(int nmax) {
    std::vector<std::uint64_t> r(static_cast<std::size_t>(nmax) + 1, 0);
    r[1] = 1;
    for (int n = 1; n < nmax; ++n) {
        // r[n+1] = (1/n) * sum_{k=1..n} (sum_{d|k} d*r[d]) * r[n+1-k]
        std::uint64_t acc = 0;
        for (int k = 1; k <= n; ++k) {
            std::uint64_t c = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) c += static_cast<std::uint64_t>(d) * r[static_cast<std::size_t>(d)];
            acc += c * r[static_cast<std::size_t>(n + 1 - k)];
        }
        r[static_cast<std::size_t>(n) + 1] = acc / static_cast<std::uint64_t>(n);
    }
    return r;
}

inline std::uint64_t free_tree_count(int n) {
    auto r = rooted_tree_counts(n);
    std::uint64_t pairs = 0;
    for (int i = 1; i < n; ++i) pairs += r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(n - i)];
    if (n % 2 == 0) pairs -= r[static_cast<std::size_t>(n / 2)];
    return r[static_cast<std::size_t>(n)] - pairs / 2;
}

}  // namespace testutil
