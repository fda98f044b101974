#include "rdlab/oracle.hpp"

#include <algorithm>
#include <string>

namespace rdlab {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
        adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }
    return adj;
}

VertexSet mask_to_set(Mask m, int n) {
    std::vector<int> ids;
    for (int v = 0; v < n; ++v)
        if (m >> v & 1) ids.push_back(v);
    return VertexSet(std::move(ids));
}

// Applies fn to every n-bit mask of popcount k, in increasing numeric
// order (Gosper's hack). Requires n < 32, guaranteed by the caps.
template <typename Fn>
void for_each_combination(int n, int k, Fn fn) {
    if (k == 0) {
        fn(Mask{0});
        return;
    }
    if (k > n) return;
    const Mask limit = Mask{1} << n;
    Mask m = (Mask{1} << k) - 1;
    while (m < limit) {
        fn(m);
        Mask c = m & (~m + 1);
        Mask r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

void require_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw CapExceeded(std::string(what) + ": order " + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap));
}

template <typename Pred>
OptimalSetReport minimize_sets(const Graph& g, Pred feasible) {
    int n = g.order();
    OptimalSetReport report;
    for (int k = 0; k <= n; ++k) {
        std::vector<Mask> hits;
        for_each_combination(n, k, [&](Mask m) {
            if (feasible(m)) hits.push_back(m);
        });
        if (!hits.empty()) {
            report.value = k;
            for (Mask m : hits) report.witnesses.push_back(mask_to_set(m, n));
            std::sort(report.witnesses.begin(), report.witnesses.end());
            return report;
        }
    }
    // Unreachable for the invariants used here: S = V is always feasible.
    throw Error("set search found no feasible subset");
}

}  // namespace

OptimalSetReport gamma_bruteforce(const Graph& g, const OracleCaps& caps) {
    require_cap(g.order(), caps.set_cap, "gamma_bruteforce");
    int n = g.order();
    auto adj = adjacency_masks(g);
    const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    return minimize_sets(g, [&](Mask s) {
        Mask outside = all & ~s;
        for (int v = 0; v < n; ++v)
            if ((outside >> v & 1) && !(adj[static_cast<std::size_t>(v)] & s)) return false;
        return true;
    });
}

OptimalSetReport gamma_r_bruteforce(const Graph& g, const OracleCaps& caps) {
    require_cap(g.order(), caps.set_cap, "gamma_r_bruteforce");
    int n = g.order();
    auto adj = adjacency_masks(g);
    const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    return minimize_sets(g, [&](Mask s) {
        Mask outside = all & ~s;
        for (int v = 0; v < n; ++v) {
            if (!(outside >> v & 1)) continue;
            Mask nb = adj[static_cast<std::size_t>(v)];
            if (!(nb & s) || !(nb & outside)) return false;
        }
        return true;
    });
}

OptimalSetReport rho_bruteforce(const Graph& g, const OracleCaps& caps) {
    require_cap(g.order(), caps.set_cap, "rho_bruteforce");
    int n = g.order();
    auto adj = adjacency_masks(g);
    // ball2[v]: vertices within distance 2 of v, excluding v itself.
    std::vector<Mask> ball2(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        Mask b = adj[static_cast<std::size_t>(v)];
        for (int w = 0; w < n; ++w)
            if (adj[static_cast<std::size_t>(v)] >> w & 1) b |= adj[static_cast<std::size_t>(w)];
        ball2[static_cast<std::size_t>(v)] = b & ~(Mask{1} << v);
    }
    auto packing = [&](Mask s) {
        for (int v = 0; v < n; ++v)
            if ((s >> v & 1) && (ball2[static_cast<std::size_t>(v)] & s)) return false;
        return true;
    };
    OptimalSetReport report;
    for (int k = n; k >= 0; --k) {
        std::vector<Mask> hits;
        for_each_combination(n, k, [&](Mask m) {
            if (packing(m)) hits.push_back(m);
        });
        if (!hits.empty()) {
            report.value = k;
            for (Mask m : hits) report.witnesses.push_back(mask_to_set(m, n));
            std::sort(report.witnesses.begin(), report.witnesses.end());
            return report;
        }
    }
    throw Error("packing search found no feasible subset");
}

OptimalAssignmentReport gamma_ri_bruteforce(const Graph& g, const OracleCaps& caps) {
    require_cap(g.order(), caps.assignment_cap, "gamma_ri_bruteforce");
    const int n = g.order();

    // done_at[v]: vertices whose closed neighborhood completes once vertex
    // v is labeled; their RIDF conditions become decidable at that point.
    std::vector<std::vector<int>> done_at(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        int last = u;
        for (int w : g.adjacency(u)) last = std::max(last, w);
        done_at[static_cast<std::size_t>(last)].push_back(u);
    }

    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    OptimalAssignmentReport report;
    report.value = n;  // the all-ones assignment is always a RIDF
    std::vector<Assignment> witnesses;

    auto violates = [&](int u) {
        // u and all of its neighbors are labeled.
        if (labels[static_cast<std::size_t>(u)] != 0) return false;
        int sum = 0;
        bool zero_neighbor = false;
        for (int w : g.adjacency(u)) {
            sum += labels[static_cast<std::size_t>(w)];
            if (labels[static_cast<std::size_t>(w)] == 0) zero_neighbor = true;
        }
        return sum < 2 || !zero_neighbor;
    };

    // Depth-first over partial labelings in vertex order; weight-bounded,
    // keeping every labeling that attains the current best weight.
    auto dfs = [&](auto&& self, int v, int weight) -> void {
        if (weight > report.value) return;
        if (v == n) {
            if (weight < report.value) {
                report.value = weight;
                witnesses.clear();
            }
            witnesses.emplace_back(labels);
            return;
        }
        for (int label = 0; label <= 2; ++label) {
            labels[static_cast<std::size_t>(v)] = label;
            bool dead = false;
            for (int u : done_at[static_cast<std::size_t>(v)]) {
                if (violates(u)) {
                    dead = true;
                    break;
                }
            }
            if (!dead) self(self, v + 1, weight + label);
        }
    };
    dfs(dfs, 0, 0);

    std::sort(witnesses.begin(), witnesses.end());
    report.witnesses = std::move(witnesses);
    return report;
}

}  // namespace rdlab
