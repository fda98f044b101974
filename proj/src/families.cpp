#include "rdlab/families.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>

#include <json.hpp>

namespace rdlab {

namespace {

// Incremental tree builder used by replay and the recognizers. LV/SV are
// refreshed after the base and after every step so that membership stays
// cumulative over the whole prefix sequence.
class Builder {
public:
    int order() const { return static_cast<int>(adj_.size()); }

    bool in_lv(int v) const { return lv_[static_cast<std::size_t>(v)] != 0; }
    bool in_sv(int v) const { return sv_[static_cast<std::size_t>(v)] != 0; }

    const std::vector<char>& lv_flags() const { return lv_; }
    const std::vector<char>& sv_flags() const { return sv_; }

    void base_h(int l, int n) {
        if (l < 2 || n < 2) throw TraceError("base double star needs both sides >= 2");
        add_vertices(2 + l + n);
        add_edge(0, 1);
        for (int i = 0; i < l; ++i) add_edge(0, 2 + i);
        for (int i = 0; i < n; ++i) add_edge(1, 2 + l + i);
        refresh_classes();
    }

    void base_f() {
        add_vertices(4);
        add_edge(0, 1);
        add_edge(1, 2);
        add_edge(2, 3);
        refresh_classes();
    }

    void apply(Family family, const Step& st, std::size_t step_index) {
        const std::string at = "step " + std::to_string(step_index) + ": ";
        if (st.attach < 0 || st.attach >= order())
            throw TraceError(at + "attach vertex out of range");
        if (family == Family::H && st.op == OpKind::O1) {
            if (st.r < 1 || st.s < 2) throw TraceError(at + "O1 needs r >= 1 and s >= 2");
            require_lv(st.attach, at);
            const int u = order();
            const int w = u + 1;
            add_vertices(2 + st.r + st.s);
            add_edge(st.attach, u);
            add_edge(u, w);
            for (int i = 0; i < st.r; ++i) add_edge(u, w + 1 + i);
            for (int i = 0; i < st.s; ++i) add_edge(w, w + 1 + st.r + i);
        } else if (family == Family::H && st.op == OpKind::O2) {
            // Stars K_{1,t} have t >= 2 here; a pendant P2 (t = 1) breaks
            // the equal-invariants increment.
            if (st.t < 2) throw TraceError(at + "O2 needs t >= 2");
            require_sv(st.attach, at);
            const int u = order();
            add_vertices(1 + st.t);
            add_edge(st.attach, u);
            for (int i = 0; i < st.t; ++i) add_edge(u, u + 1 + i);
        } else if (family == Family::F && st.op == OpKind::O1) {
            require_lv(st.attach, at);
            const int a = order();
            add_vertices(3);
            add_edge(st.attach, a);
            add_edge(a, a + 1);
            add_edge(a + 1, a + 2);
        } else {  // F-O2: healthy spider
            if (st.t < 1) throw TraceError(at + "O2 needs t >= 1");
            require_lv(st.attach, at);
            const int u = order();
            add_vertices(1 + 2 * st.t);
            add_edge(st.attach, u);
            for (int i = 0; i < st.t; ++i) {
                add_edge(u, u + 1 + 2 * i);
                add_edge(u + 1 + 2 * i, u + 2 + 2 * i);
            }
        }
        refresh_classes();
    }

    Replayed finish(Family family) const {
        std::vector<int> lv_ids, sv_ids;
        for (int v = 0; v < order(); ++v) {
            if (in_lv(v)) lv_ids.push_back(v);
            if (family == Family::H && in_sv(v)) sv_ids.push_back(v);
        }
        return {Tree(order(), edges_), {VertexSet(std::move(lv_ids)), VertexSet(std::move(sv_ids))}};
    }

private:
    void require_lv(int v, const std::string& at) const {
        if (!in_lv(v))
            throw TraceError(at + "attach vertex " + std::to_string(v) + " not in LV");
    }
    void require_sv(int v, const std::string& at) const {
        if (!in_sv(v))
            throw TraceError(at + "attach vertex " + std::to_string(v) + " not in SV");
    }

    void add_vertices(int count) {
        adj_.resize(adj_.size() + static_cast<std::size_t>(count));
        lv_.resize(adj_.size(), 0);
        sv_.resize(adj_.size(), 0);
    }

    void add_edge(int u, int v) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        edges_.emplace_back(u, v);
    }

    void refresh_classes() {
        for (int v = 0; v < order(); ++v) {
            if (adj_[static_cast<std::size_t>(v)].size() == 1) {
                lv_[static_cast<std::size_t>(v)] = 1;
                sv_[static_cast<std::size_t>(adj_[static_cast<std::size_t>(v)][0])] = 1;
            }
        }
    }

    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<char> lv_, sv_;
};

void run_trace(const ConstructionTrace& trace, Builder& b) {
    if (trace.family == Family::H)
        b.base_h(trace.base_l, trace.base_n);
    else
        b.base_f();
    for (std::size_t i = 0; i < trace.steps.size(); ++i)
        b.apply(trace.family, trace.steps[i], i);
}

}  // namespace

Replayed replay(const ConstructionTrace& trace) {
    Builder b;
    run_trace(trace, b);
    return b.finish(trace.family);
}

std::optional<Replayed> try_replay(const ConstructionTrace& trace, std::string* error) {
    try {
        return replay(trace);
    } catch (const TraceError& e) {
        if (error) *error = e.what();
        return std::nullopt;
    }
}

Assignment canonical_ridf_f(const Tree& tree, const FamilyState& state) {
    if (state.lv.empty() || state.lv.ids().back() >= tree.order())
        throw InvalidGraph("family state inconsistent with tree");
    std::vector<int> labels(static_cast<std::size_t>(tree.order()), 0);
    for (int v : state.lv) labels[static_cast<std::size_t>(v)] = 2;
    return Assignment(std::move(labels));
}

// ---------------------------------------------------------------------------
// Recognizers
// ---------------------------------------------------------------------------

namespace {

// Ordered triples (x_{d-1}, x_{d-2}, x_{d-3}) over all diametral paths
// whose penultimate vertex attains the maximal degree. xd2 is the unique
// non-leaf neighbor of xd1; xd3 candidates are xd2's other non-leaf
// neighbors that can head the remainder of a diametral path.
struct PathTail {
    int xd1 = -1;
    int xd2 = -1;
    std::vector<int> xd3_options;
};

std::vector<int> max_penultimates(const Tree& t, int d) {
    std::vector<int> dist, parent, penult;
    for (int a : t.leaves()) {
        dist.assign(static_cast<std::size_t>(t.order()), -1);
        parent.assign(static_cast<std::size_t>(t.order()), -1);
        std::queue<int> q;
        q.push(a);
        dist[static_cast<std::size_t>(a)] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : t.adjacency(v)) {
                if (dist[static_cast<std::size_t>(w)] >= 0) continue;
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                parent[static_cast<std::size_t>(w)] = v;
                q.push(w);
            }
        }
        for (int b = 0; b < t.order(); ++b)
            if (dist[static_cast<std::size_t>(b)] == d)
                penult.push_back(parent[static_cast<std::size_t>(b)]);
    }
    std::sort(penult.begin(), penult.end());
    penult.erase(std::unique(penult.begin(), penult.end()), penult.end());
    int best = 0;
    for (int v : penult) best = std::max(best, t.degree(v));
    std::vector<int> out;
    for (int v : penult)
        if (t.degree(v) == best) out.push_back(v);
    return out;
}

}  // namespace

namespace {

struct FPeel {
    OpKind op = OpKind::O1;
    int attach = -1;                          // original id of x_{d-3}
    std::vector<int> chain;                   // O1: {x_{d-2}, x_{d-1}, x_d}
    int center = -1;                          // O2: x_{d-2}
    std::vector<std::pair<int, int>> spider;  // O2: (middle, foot), sorted
};

// Backtracking peel search. The proof's case analysis picks its reverse
// operation with an optimal function in hand; structurally several
// diametral paths can tie, and only some of them peel down to the base,
// so every candidate reverse operation is explored.
struct FSearch {
    std::optional<ConstructionTrace> result;
    std::vector<FPeel> stack;

    bool commit(const Tree& base, const std::vector<int>& to_orig) {
        int maxdeg = 0;
        for (int v = 0; v < 4; ++v) maxdeg = std::max(maxdeg, base.degree(v));
        if (maxdeg != 2) return false;  // K_{1,3}
        std::vector<int> ends = base.leaves();
        int e0 = ends[0], e1 = ends[1];
        if (to_orig[static_cast<std::size_t>(e1)] < to_orig[static_cast<std::size_t>(e0)])
            std::swap(e0, e1);
        std::vector<int> base_path = {to_orig[static_cast<std::size_t>(e0)]};
        int prev = -1, v = e0;
        while (static_cast<int>(base_path.size()) < 4) {
            for (int w : base.adjacency(v)) {
                if (w != prev) {
                    prev = v;
                    v = w;
                    break;
                }
            }
            base_path.push_back(to_orig[static_cast<std::size_t>(v)]);
        }

        ConstructionTrace trace;
        trace.family = Family::F;
        Builder b;
        b.base_f();
        std::map<int, int> to_replay;
        for (int i = 0; i < 4; ++i) to_replay[base_path[static_cast<std::size_t>(i)]] = i;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            auto found = to_replay.find(it->attach);
            if (found == to_replay.end()) return false;
            const int attach = found->second;
            if (!b.in_lv(attach)) return false;
            const int first_new = b.order();
            Step st;
            st.op = it->op;
            st.attach = attach;
            if (it->op == OpKind::O1) {
                b.apply(Family::F, st, trace.steps.size());
                for (int i = 0; i < 3; ++i)
                    to_replay[it->chain[static_cast<std::size_t>(i)]] = first_new + i;
            } else {
                st.t = static_cast<int>(it->spider.size());
                b.apply(Family::F, st, trace.steps.size());
                to_replay[it->center] = first_new;
                for (std::size_t i = 0; i < it->spider.size(); ++i) {
                    to_replay[it->spider[i].first] = first_new + 1 + 2 * static_cast<int>(i);
                    to_replay[it->spider[i].second] = first_new + 2 + 2 * static_cast<int>(i);
                }
            }
            trace.steps.push_back(st);
        }
        result = std::move(trace);
        return true;
    }

    bool dfs(const Tree& cur, const std::vector<int>& to_orig) {
        const int nc = cur.order();
        if (nc < 4) return false;
        if (nc == 4) return commit(cur, to_orig);
        const int d = diameter(cur);
        if (d < 4) return false;  // stars and non-P4 double stars

        const std::vector<int> penults = max_penultimates(cur, d);
        // Penultimate vertices of degree >= 3 carry two leaves whose
        // weight can be lowered in any doubled-weight witness, so any
        // such vertex rules the whole tree out.
        if (cur.degree(penults[0]) != 2) return false;

        struct Candidate {
            FPeel peel;
            std::vector<int> removed;
        };
        std::vector<Candidate> candidates;
        std::vector<std::vector<int>> seen;
        auto add_candidate = [&](Candidate c) {
            std::sort(c.removed.begin(), c.removed.end());
            for (const auto& r : seen)
                if (r == c.removed) return;
            seen.push_back(c.removed);
            candidates.push_back(std::move(c));
        };

        for (int xd1 : penults) {
            int xd = -1, xd2 = -1;
            for (int w : cur.adjacency(xd1)) {
                if (cur.degree(w) == 1)
                    xd = w;
                else
                    xd2 = w;
            }
            if (xd < 0 || xd2 < 0) return false;

            if (cur.degree(xd2) == 2) {
                Candidate c;
                c.peel.op = OpKind::O1;
                int xd3 = cur.adjacency(xd2)[0] == xd1 ? cur.adjacency(xd2)[1]
                                                       : cur.adjacency(xd2)[0];
                c.peel.attach = to_orig[static_cast<std::size_t>(xd3)];
                c.peel.chain = {to_orig[static_cast<std::size_t>(xd2)],
                                to_orig[static_cast<std::size_t>(xd1)],
                                to_orig[static_cast<std::size_t>(xd)]};
                c.removed = {xd2, xd1, xd};
                add_candidate(std::move(c));
            } else {
                // T_{x_{d-2}} must be a healthy spider: all neighbors of
                // x_{d-2} except the unique continuation x_{d-3} are weak
                // stems of degree 2 holding one leaf.
                int xd3 = -1;
                int non_stem = 0;
                std::vector<std::pair<int, int>> legs;
                for (int m : cur.adjacency(xd2)) {
                    if (cur.degree(m) == 2) {
                        int foot = cur.adjacency(m)[0] == xd2 ? cur.adjacency(m)[1]
                                                              : cur.adjacency(m)[0];
                        if (cur.degree(foot) == 1) {
                            legs.emplace_back(m, foot);
                            continue;
                        }
                    }
                    ++non_stem;
                    xd3 = m;
                }
                if (non_stem != 1) continue;
                Candidate c;
                c.peel.op = OpKind::O2;
                c.peel.attach = to_orig[static_cast<std::size_t>(xd3)];
                c.peel.center = to_orig[static_cast<std::size_t>(xd2)];
                c.removed = {xd2};
                for (auto [m, foot] : legs) {
                    c.peel.spider.emplace_back(to_orig[static_cast<std::size_t>(m)],
                                               to_orig[static_cast<std::size_t>(foot)]);
                    c.removed.push_back(m);
                    c.removed.push_back(foot);
                }
                std::sort(c.peel.spider.begin(), c.peel.spider.end());
                add_candidate(std::move(c));
            }
        }

        for (auto& cand : candidates) {
            std::vector<int> keep;
            for (int v = 0; v < nc; ++v)
                if (!std::binary_search(cand.removed.begin(), cand.removed.end(), v))
                    keep.push_back(v);
            auto [sub, old_to_new] = induced_subgraph(cur.graph(), VertexSet(keep));
            std::vector<int> next_orig(static_cast<std::size_t>(sub.order()));
            for (int v = 0; v < nc; ++v)
                if (old_to_new[static_cast<std::size_t>(v)] >= 0)
                    next_orig[static_cast<std::size_t>(old_to_new[static_cast<std::size_t>(v)])] =
                        to_orig[static_cast<std::size_t>(v)];
            stack.push_back(cand.peel);
            if (dfs(Tree(std::move(sub)), next_orig)) return true;
            stack.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<ConstructionTrace> recognize_f(const Tree& t) {
    if (t.order() < 4) return std::nullopt;
    FSearch search;
    std::vector<int> to_orig(static_cast<std::size_t>(t.order()));
    for (int v = 0; v < t.order(); ++v) to_orig[static_cast<std::size_t>(v)] = v;
    if (!search.dfs(t, to_orig)) return std::nullopt;
    return search.result;
}

namespace {

struct HPeel {
    OpKind op = OpKind::O1;
    int attach = -1;  // original id: x_{d-3} for O1, x_{d-2} for O2
    // O1 double star: u = x_{d-2} with its leaves, w = x_{d-1} with its leaves.
    // O2 star: u = x_{d-1} (stored in `u`) with `u_leaves`.
    int u = -1;
    int w = -1;
    std::vector<int> u_leaves;
    std::vector<int> w_leaves;
};

struct HSearch {
    std::optional<ConstructionTrace> result;
    std::vector<HPeel> stack;

    bool commit(const Tree& base, const std::vector<int>& to_orig) {
        // Base must be a double star with both sides >= 2.
        std::vector<int> centers;
        for (int v = 0; v < base.order(); ++v)
            if (base.degree(v) >= 2) centers.push_back(v);
        if (centers.size() != 2 || !base.graph().has_edge(centers[0], centers[1])) return false;
        int c0 = centers[0], c1 = centers[1];
        if (to_orig[static_cast<std::size_t>(c1)] < to_orig[static_cast<std::size_t>(c0)])
            std::swap(c0, c1);
        const int l = base.degree(c0) - 1;
        const int n = base.degree(c1) - 1;
        if (l < 2 || n < 2) return false;

        ConstructionTrace trace;
        trace.family = Family::H;
        trace.base_l = l;
        trace.base_n = n;
        Builder b;
        b.base_h(l, n);
        std::map<int, int> to_replay;
        to_replay[to_orig[static_cast<std::size_t>(c0)]] = 0;
        to_replay[to_orig[static_cast<std::size_t>(c1)]] = 1;
        int next = 2;
        for (int c : {c0, c1}) {
            std::vector<int> ls;
            for (int x : base.adjacency(c))
                if (base.degree(x) == 1) ls.push_back(to_orig[static_cast<std::size_t>(x)]);
            std::sort(ls.begin(), ls.end());
            for (int orig : ls) to_replay[orig] = next++;
        }

        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            auto found = to_replay.find(it->attach);
            if (found == to_replay.end()) return false;
            const int attach = found->second;
            Step st;
            st.op = it->op;
            st.attach = attach;
            const int first_new = b.order();
            if (it->op == OpKind::O2) {
                if (!b.in_sv(attach)) return false;
                st.t = static_cast<int>(it->u_leaves.size());
                b.apply(Family::H, st, trace.steps.size());
                to_replay[it->u] = first_new;
                for (std::size_t i = 0; i < it->u_leaves.size(); ++i)
                    to_replay[it->u_leaves[i]] = first_new + 1 + static_cast<int>(i);
            } else {
                if (!b.in_lv(attach)) return false;
                st.r = static_cast<int>(it->u_leaves.size());
                st.s = static_cast<int>(it->w_leaves.size());
                b.apply(Family::H, st, trace.steps.size());
                to_replay[it->u] = first_new;
                to_replay[it->w] = first_new + 1;
                for (std::size_t i = 0; i < it->u_leaves.size(); ++i)
                    to_replay[it->u_leaves[i]] = first_new + 2 + static_cast<int>(i);
                for (std::size_t i = 0; i < it->w_leaves.size(); ++i)
                    to_replay[it->w_leaves[i]] =
                        first_new + 2 + st.r + static_cast<int>(i);
            }
            trace.steps.push_back(st);
        }
        result = std::move(trace);
        return true;
    }

    bool dfs(const Tree& cur, const std::vector<int>& to_orig) {
        const int nc = cur.order();
        if (nc < 6) return false;
        const int d = diameter(cur);
        if (d < 3) return false;
        if (d == 3) return commit(cur, to_orig);

        // Candidate reverse operations from every diametral path whose
        // penultimate degree is maximal. The proof's case split depends
        // on an optimal function we do not have, so both structurally
        // valid peels are explored.
        const std::vector<int> penults = max_penultimates(cur, d);
        if (cur.degree(penults[0]) < 3) return false;

        struct Candidate {
            HPeel peel;
            std::vector<int> removed;  // current ids, sorted
        };
        std::vector<Candidate> candidates;
        std::vector<std::vector<int>> seen_removed;

        auto add_candidate = [&](Candidate c) {
            std::sort(c.removed.begin(), c.removed.end());
            for (const auto& r : seen_removed)
                if (r == c.removed) return;
            seen_removed.push_back(c.removed);
            candidates.push_back(std::move(c));
        };

        for (int xd1 : penults) {
            // All neighbors of a penultimate vertex except one are leaves
            // at maximal depth; the remaining one is x_{d-2}.
            int xd2 = -1;
            int nonleaf = 0;
            for (int w : cur.adjacency(xd1))
                if (cur.degree(w) > 1) {
                    xd2 = w;
                    ++nonleaf;
                }
            if (nonleaf != 1) return false;
            if (cur.degree(xd2) == 2) return false;

            std::vector<int> leaf_children, nonleaf_others;
            for (int y : cur.adjacency(xd2)) {
                if (y == xd1) continue;
                if (cur.degree(y) == 1)
                    leaf_children.push_back(y);
                else
                    nonleaf_others.push_back(y);
            }

            // Reverse O1: T_{x_{d-2}} is the double star DS_{r,s} made of
            // x_{d-2} with its leaves and x_{d-1} with its leaves. Valid
            // only when the single remaining non-leaf neighbor is x_{d-3}.
            if (nonleaf_others.size() == 1 && !leaf_children.empty()) {
                Candidate c;
                c.peel.op = OpKind::O1;
                c.peel.attach = to_orig[static_cast<std::size_t>(nonleaf_others[0])];
                c.peel.u = to_orig[static_cast<std::size_t>(xd2)];
                c.peel.w = to_orig[static_cast<std::size_t>(xd1)];
                c.removed = {xd2, xd1};
                for (int y : leaf_children) {
                    c.peel.u_leaves.push_back(to_orig[static_cast<std::size_t>(y)]);
                    c.removed.push_back(y);
                }
                for (int y : cur.adjacency(xd1)) {
                    if (y == xd2) continue;
                    c.peel.w_leaves.push_back(to_orig[static_cast<std::size_t>(y)]);
                    c.removed.push_back(y);
                }
                std::sort(c.peel.u_leaves.begin(), c.peel.u_leaves.end());
                std::sort(c.peel.w_leaves.begin(), c.peel.w_leaves.end());
                add_candidate(std::move(c));
            }

            // Reverse O2: peel the star T_{x_{d-1}}, attaching at x_{d-2}.
            {
                Candidate c;
                c.peel.op = OpKind::O2;
                c.peel.attach = to_orig[static_cast<std::size_t>(xd2)];
                c.peel.u = to_orig[static_cast<std::size_t>(xd1)];
                c.removed = {xd1};
                for (int y : cur.adjacency(xd1))
                    if (y != xd2) {
                        c.peel.u_leaves.push_back(to_orig[static_cast<std::size_t>(y)]);
                        c.removed.push_back(y);
                    }
                std::sort(c.peel.u_leaves.begin(), c.peel.u_leaves.end());
                add_candidate(std::move(c));
            }
        }

        for (auto& cand : candidates) {
            std::vector<int> keep;
            for (int v = 0; v < nc; ++v)
                if (!std::binary_search(cand.removed.begin(), cand.removed.end(), v))
                    keep.push_back(v);
            auto [sub, old_to_new] = induced_subgraph(cur.graph(), VertexSet(keep));
            std::vector<int> next_orig(static_cast<std::size_t>(sub.order()));
            for (int v = 0; v < nc; ++v)
                if (old_to_new[static_cast<std::size_t>(v)] >= 0)
                    next_orig[static_cast<std::size_t>(old_to_new[static_cast<std::size_t>(v)])] =
                        to_orig[static_cast<std::size_t>(v)];
            stack.push_back(cand.peel);
            if (dfs(Tree(std::move(sub)), next_orig)) return true;
            stack.pop_back();
        }
        return false;
    }
};

}  // namespace

HVerdict recognize_h(const Tree& t) {
    HVerdict verdict;
    if (t.order() < 3) return verdict;
    if (diameter(t) == 2) {
        verdict.kind = HVerdict::Kind::StarException;
        return verdict;
    }
    HSearch search;
    std::vector<int> to_orig(static_cast<std::size_t>(t.order()));
    for (int v = 0; v < t.order(); ++v) to_orig[static_cast<std::size_t>(v)] = v;
    if (search.dfs(t, to_orig)) {
        verdict.kind = HVerdict::Kind::Member;
        verdict.trace = std::move(search.result);
    }
    return verdict;
}

// ---------------------------------------------------------------------------
// Random traces
// ---------------------------------------------------------------------------

namespace {

// Hand-rolled bounded draw so results are identical across standard
// library implementations.
int draw(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<int> flags_to_ids(const std::vector<char>& flags) {
    std::vector<int> ids;
    for (std::size_t v = 0; v < flags.size(); ++v)
        if (flags[v]) ids.push_back(static_cast<int>(v));
    return ids;
}

}  // namespace

ConstructionTrace sample_trace(Family family, int budget, std::uint64_t seed) {
    const int base_min = family == Family::H ? 6 : 4;
    if (budget < base_min)
        throw TraceError("sample_trace: budget " + std::to_string(budget) +
                         " below base size " + std::to_string(base_min));
    std::mt19937_64 rng(seed);
    ConstructionTrace trace;
    trace.family = family;
    Builder b;
    if (family == Family::H) {
        trace.base_l = draw(rng, 2, budget - 4);
        trace.base_n = draw(rng, 2, budget - 2 - trace.base_l);
        b.base_h(trace.base_l, trace.base_n);
    } else {
        b.base_f();
    }

    for (;;) {
        const int room = budget - b.order();
        std::vector<OpKind> feasible;
        if (family == Family::H) {
            if (room >= 5) feasible.push_back(OpKind::O1);  // 2 + r + s with r>=1, s>=2
            if (room >= 3) feasible.push_back(OpKind::O2);  // 1 + t with t>=2
        } else {
            if (room >= 3) {
                feasible.push_back(OpKind::O1);
                feasible.push_back(OpKind::O2);  // 1 + 2t
            }
        }
        if (feasible.empty()) break;

        Step st;
        st.op = feasible[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(feasible.size()) - 1))];
        const auto lv_ids = flags_to_ids(b.lv_flags());
        const auto sv_ids = flags_to_ids(b.sv_flags());
        if (family == Family::H && st.op == OpKind::O1) {
            st.attach = lv_ids[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(lv_ids.size()) - 1))];
            st.r = draw(rng, 1, room - 4);
            st.s = draw(rng, 2, room - 2 - st.r);
        } else if (family == Family::H && st.op == OpKind::O2) {
            st.attach = sv_ids[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(sv_ids.size()) - 1))];
            st.t = draw(rng, 2, room - 1);
        } else if (st.op == OpKind::O1) {
            st.attach = lv_ids[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(lv_ids.size()) - 1))];
        } else {
            st.attach = lv_ids[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(lv_ids.size()) - 1))];
            st.t = draw(rng, 1, (room - 1) / 2);
        }
        b.apply(family, st, trace.steps.size());
        trace.steps.push_back(st);
    }
    return trace;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

std::string trace_to_json(const ConstructionTrace& trace) {
    nlohmann::ordered_json j;
    j["family"] = trace.family == Family::H ? "H" : "F";
    if (trace.family == Family::H)
        j["base"] = {{"l", trace.base_l}, {"n", trace.base_n}};
    else
        j["base"] = nlohmann::ordered_json::object();
    auto steps = nlohmann::ordered_json::array();
    for (const Step& st : trace.steps) {
        nlohmann::ordered_json s;
        s["op"] = st.op == OpKind::O1 ? "O1" : "O2";
        s["attach"] = st.attach;
        if (trace.family == Family::H && st.op == OpKind::O1) {
            s["r"] = st.r;
            s["s"] = st.s;
        } else if (st.op == OpKind::O2) {
            s["t"] = st.t;
        }
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    return j.dump();
}

ConstructionTrace trace_from_json(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("trace: ") + e.what());
    }
    ConstructionTrace trace;
    try {
        const std::string fam = j.at("family").get<std::string>();
        if (fam == "H")
            trace.family = Family::H;
        else if (fam == "F")
            trace.family = Family::F;
        else
            throw ParseError("trace: unknown family " + fam);
        if (trace.family == Family::H) {
            trace.base_l = j.at("base").at("l").get<int>();
            trace.base_n = j.at("base").at("n").get<int>();
        }
        for (const auto& s : j.at("steps")) {
            Step st;
            const std::string op = s.at("op").get<std::string>();
            if (op == "O1")
                st.op = OpKind::O1;
            else if (op == "O2")
                st.op = OpKind::O2;
            else
                throw ParseError("trace: unknown op " + op);
            st.attach = s.at("attach").get<int>();
            if (trace.family == Family::H && st.op == OpKind::O1) {
                st.r = s.at("r").get<int>();
                st.s = s.at("s").get<int>();
            } else if (st.op == OpKind::O2) {
                st.t = s.at("t").get<int>();
            }
            trace.steps.push_back(st);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("trace: ") + e.what());
    }
    return trace;
}

}  // namespace rdlab
