#include "rdlab/treedp.hpp"

#include <array>
#include <limits>

namespace rdlab {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// gamma_r states. An unselected vertex tracks whether it has a selected
// neighbor yet (D) and an unselected neighbor yet (S) among processed
// children; the parent may still supply exactly one of the two.
enum RdsState : int { kIn = 0, kOutDS = 1, kOutDN = 2, kOutNS = 3, kOutNN = 4 };
constexpr int kRdsStates = 5;

struct Choice {
    std::int8_t prev = -1;   // parent state before this child
    std::int8_t child = -1;  // child's finished state
};

}  // namespace

TreeSetSolution gamma_r_tree(const Tree& t) {
    const int n = t.order();
    if (n <= 2) {
        // Vertices outside S would need a neighbor outside S; with n <= 2
        // none exists, so S = V.
        return {n, VertexSet::full(n)};
    }

    RootedTree rt = root_at(t, 0);
    std::vector<std::array<int, kRdsStates>> dp(static_cast<std::size_t>(n));
    // choices[v][i][s]: decision that produced state s after merging the
    // i-th child of v.
    std::vector<std::vector<std::array<Choice, kRdsStates>>> choices(
        static_cast<std::size_t>(n));

    // Child states acceptable under a selected / unselected parent.
    static constexpr std::array<RdsState, 3> kUnderIn = {kIn, kOutDS, kOutNS};
    static constexpr std::array<RdsState, 3> kUnderOut = {kIn, kOutDS, kOutDN};

    for (auto it = rt.bfs_order.rbegin(); it != rt.bfs_order.rend(); ++it) {
        const int v = *it;
        std::array<int, kRdsStates> cur{};
        cur.fill(kInf);
        cur[kIn] = 1;
        cur[kOutNN] = 0;
        const auto& kids = rt.children[static_cast<std::size_t>(v)];
        choices[static_cast<std::size_t>(v)].resize(kids.size());
        for (std::size_t i = 0; i < kids.size(); ++i) {
            const auto& cdp = dp[static_cast<std::size_t>(kids[i])];
            std::array<int, kRdsStates> next{};
            next.fill(kInf);
            auto& log = choices[static_cast<std::size_t>(v)][i];
            for (int s = 0; s < kRdsStates; ++s) {
                if (cur[static_cast<std::size_t>(s)] >= kInf) continue;
                const bool selected = s == kIn;
                for (RdsState cs : selected ? kUnderIn : kUnderOut) {
                    const int cost = cdp[static_cast<std::size_t>(cs)];
                    if (cost >= kInf) continue;
                    int s2 = s;
                    if (!selected) {
                        bool d = s == kOutDS || s == kOutDN;
                        bool o = s == kOutDS || s == kOutNS;
                        if (cs == kIn)
                            d = true;
                        else
                            o = true;
                        s2 = d ? (o ? kOutDS : kOutDN) : (o ? kOutNS : kOutNN);
                    }
                    const int total = cur[static_cast<std::size_t>(s)] + cost;
                    if (total < next[static_cast<std::size_t>(s2)]) {
                        next[static_cast<std::size_t>(s2)] = total;
                        log[static_cast<std::size_t>(s2)] = {static_cast<std::int8_t>(s),
                                                             static_cast<std::int8_t>(cs)};
                    }
                }
            }
            cur = next;
        }
        dp[static_cast<std::size_t>(v)] = cur;
    }

    const auto& root_dp = dp[static_cast<std::size_t>(rt.root)];
    int best_state = root_dp[kIn] <= root_dp[kOutDS] ? kIn : kOutDS;
    TreeSetSolution sol;
    sol.value = root_dp[static_cast<std::size_t>(best_state)];

    // Walk the choice log backwards through each vertex's children. A
    // merge never moves a vertex between IN and the OUT states, so the
    // finished state alone decides membership.
    std::vector<int> selected;
    std::vector<std::pair<int, int>> stack = {{rt.root, best_state}};
    while (!stack.empty()) {
        auto [v, s] = stack.back();
        stack.pop_back();
        if (s == kIn) selected.push_back(v);
        const auto& kids = rt.children[static_cast<std::size_t>(v)];
        int state = s;
        for (std::size_t i = kids.size(); i-- > 0;) {
            const Choice c = choices[static_cast<std::size_t>(v)][i][static_cast<std::size_t>(state)];
            stack.emplace_back(kids[i], c.child);
            state = c.prev;
        }
    }
    sol.witness = VertexSet(std::move(selected));
    return sol;
}

namespace {

// gamma_rI states: labels 1 and 2 carry no pending constraints; label 0
// tracks the clamped neighbor-label sum {0,1,2} and whether a 0-labeled
// neighbor has been seen.
constexpr int kRidfStates = 8;
constexpr int kL1 = 6;
constexpr int kL2 = 7;

constexpr int zero_state(int sum, bool zero_nbr) { return sum * 2 + (zero_nbr ? 1 : 0); }
constexpr int state_label(int s) { return s == kL1 ? 1 : s == kL2 ? 2 : 0; }
constexpr int state_sum(int s) { return s / 2; }       // label-0 states only
constexpr bool state_znbr(int s) { return (s & 1) != 0; }

// Child label-0 state finishes against a known parent label.
bool zero_child_ok(int s, int parent_label) {
    return state_sum(s) + parent_label >= 2 && (state_znbr(s) || parent_label == 0);
}

}  // namespace

TreeAssignmentSolution gamma_ri_tree(const Tree& t) {
    const int n = t.order();
    if (n <= 2) {
        // A 0-label needs neighbor sum >= 2 and a 0-labeled neighbor;
        // impossible here, so all-ones is optimal.
        TreeAssignmentSolution sol;
        sol.value = n;
        sol.witness = Assignment::uniform(n, 1);
        return sol;
    }

    RootedTree rt = root_at(t, 0);
    std::vector<std::array<int, kRidfStates>> dp(static_cast<std::size_t>(n));
    std::vector<std::vector<std::array<Choice, kRidfStates>>> choices(
        static_cast<std::size_t>(n));

    for (auto it = rt.bfs_order.rbegin(); it != rt.bfs_order.rend(); ++it) {
        const int v = *it;
        std::array<int, kRidfStates> cur{};
        cur.fill(kInf);
        cur[zero_state(0, false)] = 0;
        cur[kL1] = 1;
        cur[kL2] = 2;
        const auto& kids = rt.children[static_cast<std::size_t>(v)];
        choices[static_cast<std::size_t>(v)].resize(kids.size());
        for (std::size_t i = 0; i < kids.size(); ++i) {
            const auto& cdp = dp[static_cast<std::size_t>(kids[i])];
            std::array<int, kRidfStates> next{};
            next.fill(kInf);
            auto& log = choices[static_cast<std::size_t>(v)][i];
            for (int s = 0; s < kRidfStates; ++s) {
                if (cur[static_cast<std::size_t>(s)] >= kInf) continue;
                const int pl = state_label(s);
                for (int cs = 0; cs < kRidfStates; ++cs) {
                    const int cost = cdp[static_cast<std::size_t>(cs)];
                    if (cost >= kInf) continue;
                    const int cl = state_label(cs);
                    if (cl == 0 && !zero_child_ok(cs, pl)) continue;
                    int s2 = s;
                    if (pl == 0) {
                        int sum = std::min(2, state_sum(s) + cl);
                        bool z = state_znbr(s) || cl == 0;
                        s2 = zero_state(sum, z);
                    }
                    const int total = cur[static_cast<std::size_t>(s)] + cost;
                    if (total < next[static_cast<std::size_t>(s2)]) {
                        next[static_cast<std::size_t>(s2)] = total;
                        log[static_cast<std::size_t>(s2)] = {static_cast<std::int8_t>(s),
                                                             static_cast<std::int8_t>(cs)};
                    }
                }
            }
            cur = next;
        }
        dp[static_cast<std::size_t>(v)] = cur;
    }

    const auto& root_dp = dp[static_cast<std::size_t>(rt.root)];
    int best_state = -1;
    int best = kInf;
    for (int s : {zero_state(2, true), kL1, kL2}) {
        if (root_dp[static_cast<std::size_t>(s)] < best) {
            best = root_dp[static_cast<std::size_t>(s)];
            best_state = s;
        }
    }

    TreeAssignmentSolution sol;
    sol.value = best;
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> stack = {{rt.root, best_state}};
    while (!stack.empty()) {
        auto [v, s] = stack.back();
        stack.pop_back();
        labels[static_cast<std::size_t>(v)] = state_label(s);
        const auto& kids = rt.children[static_cast<std::size_t>(v)];
        int state = s;
        for (std::size_t i = kids.size(); i-- > 0;) {
            const Choice c = choices[static_cast<std::size_t>(v)][i][static_cast<std::size_t>(state)];
            stack.emplace_back(kids[i], c.child);
            state = c.prev;
        }
    }
    sol.witness = Assignment(std::move(labels));
    return sol;
}

}  // namespace rdlab
