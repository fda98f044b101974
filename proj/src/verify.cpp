#include "rdlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "rdlab/enumerate.hpp"
#include "rdlab/io.hpp"
#include "rdlab/treedp.hpp"

namespace rdlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn fn) {
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(0, i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                fn(w, i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

struct WorkerBuckets {
    std::vector<std::vector<SweepFailure>> failures;
    std::vector<std::uint64_t> witnesses;
    std::vector<std::uint64_t> checked;

    explicit WorkerBuckets(int workers)
        : failures(static_cast<std::size_t>(workers)),
          witnesses(static_cast<std::size_t>(workers), 0),
          checked(static_cast<std::size_t>(workers), 0) {}

    void merge_into(SweepReport& report) {
        for (auto& bucket : failures)
            report.failures.insert(report.failures.end(), bucket.begin(), bucket.end());
        for (auto w : witnesses) report.witnesses_validated += w;
        for (auto c : checked) report.trees_checked += c;
        std::sort(report.failures.begin(), report.failures.end(),
                  [](const SweepFailure& a, const SweepFailure& b) {
                      return std::tie(a.n, a.canonical, a.expected, a.got, a.trace_json) <
                             std::tie(b.n, b.canonical, b.expected, b.got, b.trace_json);
                  });
    }
};

SweepFailure make_failure(const Tree& t, std::string expected, std::string got) {
    SweepFailure f;
    f.n = t.order();
    f.canonical = canonical_code(t);
    f.expected = std::move(expected);
    f.got = std::move(got);
    f.edgelist = to_edgelist(t.graph());
    return f;
}

// Validates the DP solutions for one tree, recording certificate
// failures; returns the two values.
std::pair<int, int> dp_values_checked(const Tree& t, std::vector<SweepFailure>& out,
                                      std::uint64_t& witnesses) {
    auto r = gamma_r_tree(t);
    auto ri = gamma_ri_tree(t);
    if (auto chk = is_rds(t.graph(), r.witness); !chk.ok)
        out.push_back(make_failure(t, "dp gamma_r witness passes is_rds",
                                   "witness fails at vertex " + std::to_string(chk.witness)));
    else
        ++witnesses;
    if (auto chk = is_ridf(t.graph(), ri.witness); !chk.ok)
        out.push_back(make_failure(t, "dp gamma_rI witness passes is_ridf",
                                   "witness fails at vertex " + std::to_string(chk.witness)));
    else
        ++witnesses;
    if (r.witness.size() != r.value)
        out.push_back(make_failure(t, "dp gamma_r witness size equals value", "mismatch"));
    if (ri.witness.weight() != ri.value)
        out.push_back(make_failure(t, "dp gamma_rI witness weight equals value", "mismatch"));
    return {r.value, ri.value};
}

void oracle_spot_check(const Tree& t, int dp_r, int dp_ri, const VerifyOptions& opt,
                       std::uint64_t salt, std::vector<SweepFailure>& out,
                       std::uint64_t& witnesses) {
    if (opt.oracle_sample_percent <= 0) return;
    if (splitmix64(opt.seed ^ salt) % 100 >=
        static_cast<std::uint64_t>(opt.oracle_sample_percent))
        return;
    if (t.order() <= opt.caps.set_cap) {
        auto r = gamma_r_bruteforce(t.graph(), opt.caps);
        if (r.value != dp_r)
            out.push_back(make_failure(t, "oracle gamma_r == dp (" + std::to_string(r.value) + ")",
                                       std::to_string(dp_r)));
        for (const auto& w : r.witnesses) {
            if (!is_rds(t.graph(), w).ok) {
                out.push_back(make_failure(t, "oracle gamma_r witnesses pass is_rds", "failure"));
                break;
            }
        }
        witnesses += r.witnesses.size();
    }
    if (t.order() <= opt.caps.assignment_cap) {
        auto ri = gamma_ri_bruteforce(t.graph(), opt.caps);
        if (ri.value != dp_ri)
            out.push_back(make_failure(t,
                                       "oracle gamma_rI == dp (" + std::to_string(ri.value) + ")",
                                       std::to_string(dp_ri)));
        witnesses += ri.witnesses.size();
    }
}

template <typename PerTree>
SweepReport sweep_over_orders(std::string claim, int n_min, int n_max, const VerifyOptions& opt,
                              PerTree per_tree) {
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.claim = std::move(claim);
    report.n_min = n_min;
    report.n_max = n_max;
    if (n_max > opt.enumeration_cap)
        throw CapExceeded("sweep: n_max " + std::to_string(n_max) + " exceeds enumeration cap " +
                          std::to_string(opt.enumeration_cap));
    const int workers = std::max(1, opt.workers);
    WorkerBuckets buckets(workers);
    for (int n = n_min; n <= n_max; ++n) {
        TreeStream stream = all_trees(n, opt.enumeration_cap);
        parallel_for(stream.size(), workers, [&](int w, std::size_t i) {
            Tree t = stream.at(i);
            ++buckets.checked[static_cast<std::size_t>(w)];
            per_tree(t, static_cast<std::uint64_t>(n) << 32 | i,
                     buckets.failures[static_cast<std::size_t>(w)],
                     buckets.witnesses[static_cast<std::size_t>(w)]);
        });
    }
    buckets.merge_into(report);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

SweepReport verify_bound_sandwich(int n_max, const VerifyOptions& opt) {
    return sweep_over_orders(
        "sandwich", 1, n_max, opt,
        [&](const Tree& t, std::uint64_t salt, std::vector<SweepFailure>& out,
            std::uint64_t& witnesses) {
            auto [r, ri] = dp_values_checked(t, out, witnesses);
            if (!(r <= ri && ri <= 2 * r))
                out.push_back(make_failure(t, "gamma_r <= gamma_rI <= 2*gamma_r",
                                           std::to_string(r) + " / " + std::to_string(ri)));
            oracle_spot_check(t, r, ri, opt, salt, out, witnesses);
        });
}

SweepReport verify_theorem_h(int n_max, const VerifyOptions& opt) {
    return sweep_over_orders(
        "theorem-H", 3, n_max, opt,
        [&](const Tree& t, std::uint64_t salt, std::vector<SweepFailure>& out,
            std::uint64_t& witnesses) {
            auto [r, ri] = dp_values_checked(t, out, witnesses);
            const bool equal = r == ri;
            HVerdict verdict = recognize_h(t);
            if (equal != verdict.member_or_star()) {
                out.push_back(make_failure(
                    t,
                    equal ? "recognized (gamma_r == gamma_rI)" : "rejected (gamma_r != gamma_rI)",
                    verdict.kind == HVerdict::Kind::None ? "not recognized" : "recognized"));
                return;
            }
            if (verdict.kind == HVerdict::Kind::Member) {
                auto replayed = try_replay(*verdict.trace);
                if (!replayed || !isomorphic(replayed->tree, t)) {
                    SweepFailure f = make_failure(t, "trace replays isomorphically", "mismatch");
                    f.trace_json = trace_to_json(*verdict.trace);
                    out.push_back(std::move(f));
                }
            }
            oracle_spot_check(t, r, ri, opt, salt, out, witnesses);
        });
}

SweepReport verify_theorem_f(int n_max, const VerifyOptions& opt) {
    return sweep_over_orders(
        "theorem-F", 4, n_max, opt,
        [&](const Tree& t, std::uint64_t salt, std::vector<SweepFailure>& out,
            std::uint64_t& witnesses) {
            auto [r, ri] = dp_values_checked(t, out, witnesses);
            const bool doubled = ri == 2 * r;
            auto trace = recognize_f(t);
            if (doubled != trace.has_value()) {
                out.push_back(make_failure(
                    t, doubled ? "recognized (gamma_rI == 2 gamma_r)" : "rejected",
                    trace ? "recognized" : "not recognized"));
                return;
            }
            if (trace) {
                auto replayed = try_replay(*trace);
                if (!replayed || !isomorphic(replayed->tree, t)) {
                    SweepFailure f = make_failure(t, "trace replays isomorphically", "mismatch");
                    f.trace_json = trace_to_json(*trace);
                    out.push_back(std::move(f));
                }
            }
            oracle_spot_check(t, r, ri, opt, salt, out, witnesses);
        });
}

namespace {

ConstructionTrace prefix_trace(const ConstructionTrace& trace, std::size_t steps) {
    ConstructionTrace p = trace;
    p.steps.resize(steps);
    return p;
}

// Forest with every component of size >= 2, on the SV-induced subgraph.
bool sv_forest_ok(const Tree& t, const VertexSet& sv) {
    auto [sub, map] = induced_subgraph(t.graph(), sv);
    std::vector<int> comp(static_cast<std::size_t>(sub.order()), -1);
    int edges_seen = 0;
    for (int v = 0; v < sub.order(); ++v) {
        if (comp[static_cast<std::size_t>(v)] != -1) continue;
        int size = 0, edges = 0;
        std::vector<int> stack = {v};
        comp[static_cast<std::size_t>(v)] = v;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++size;
            for (int y : sub.adjacency(x)) {
                ++edges;
                if (comp[static_cast<std::size_t>(y)] == -1) {
                    comp[static_cast<std::size_t>(y)] = v;
                    stack.push_back(y);
                }
            }
        }
        edges /= 2;
        edges_seen += edges;
        if (size < 2) return false;
        if (edges != size - 1) return false;  // cycle (impossible inside a tree)
    }
    return edges_seen == sub.edge_count();
}

void check_h_prefix(const Tree& t, const FamilyState& st, const VerifyOptions& opt,
                    const std::string& tj, std::vector<SweepFailure>& out,
                    std::uint64_t& witnesses) {
    auto fail = [&](std::string expected, std::string got) {
        SweepFailure f = make_failure(t, std::move(expected), std::move(got));
        f.trace_json = tj;
        out.push_back(std::move(f));
    };
    auto r = gamma_r_bruteforce(t.graph(), opt.caps);
    witnesses += r.witnesses.size();
    if (r.witnesses.size() != 1 || !(r.witnesses[0] == st.lv))
        fail("LV is the unique minimum RDS",
             std::to_string(r.witnesses.size()) + " optimal sets of size " +
                 std::to_string(r.value) + " vs |LV|=" + std::to_string(st.lv.size()));
    if (!sv_forest_ok(t, st.sv)) fail("SV induces a forest with components >= 2", "violated");
}

void check_f_prefix(const Tree& t, const FamilyState& st, const VerifyOptions& opt,
                    const std::string& tj, std::vector<SweepFailure>& out,
                    std::uint64_t& witnesses) {
    auto fail = [&](std::string expected, std::string got) {
        SweepFailure f = make_failure(t, std::move(expected), std::move(got));
        f.trace_json = tj;
        out.push_back(std::move(f));
    };
    if (!is_packing(t.graph(), st.lv).ok) fail("LV is a packing", "violated");
    for (int v = 0; v < t.order(); ++v) {
        if (st.lv.contains(v)) continue;
        int in_lv = 0, outside = 0;
        for (int w : t.adjacency(v)) {
            if (st.lv.contains(w))
                ++in_lv;
            else
                ++outside;
        }
        if (in_lv != 1 || outside < 1) {
            fail("outside-LV vertices have one LV neighbor and an outside neighbor",
                 "vertex " + std::to_string(v) + ": " + std::to_string(in_lv) + " LV, " +
                     std::to_string(outside) + " outside");
            break;
        }
    }
    auto g = gamma_bruteforce(t.graph(), opt.caps);
    witnesses += g.witnesses.size();
    if (g.value != st.lv.size() || !is_dominating(t.graph(), st.lv).ok)
        fail("LV is a minimum dominating set",
             "gamma=" + std::to_string(g.value) + " |LV|=" + std::to_string(st.lv.size()));
    auto r = gamma_r_bruteforce(t.graph(), opt.caps);
    witnesses += r.witnesses.size();
    if (r.witnesses.size() != 1 || !(r.witnesses[0] == st.lv))
        fail("LV is the unique minimum RDS", std::to_string(r.witnesses.size()) + " optima");
    auto rho = rho_bruteforce(t.graph(), opt.caps);
    witnesses += rho.witnesses.size();
    if (rho.witnesses.size() != 1 || !(rho.witnesses[0] == st.lv))
        fail("LV is the unique maximum packing", std::to_string(rho.witnesses.size()) + " optima");
    // Closed neighborhoods of LV partition V.
    std::vector<int> covered(static_cast<std::size_t>(t.order()), 0);
    for (int u : st.lv) {
        ++covered[static_cast<std::size_t>(u)];
        for (int w : t.adjacency(u)) ++covered[static_cast<std::size_t>(w)];
    }
    if (std::any_of(covered.begin(), covered.end(), [](int c) { return c != 1; }))
        fail("closed neighborhoods of LV partition V", "violated");
    Assignment f = canonical_ridf_f(t, st);
    auto ridf = is_ridf(t.graph(), f);
    auto dp = gamma_ri_tree(t);
    if (!ridf.ok || f.weight() != 2 * st.lv.size() || f.weight() != dp.value)
        fail("canonical assignment is an optimal RIDF of weight 2|LV|",
             "weight " + std::to_string(f.weight()) + ", gamma_rI " + std::to_string(dp.value));
    else
        ++witnesses;
}

}  // namespace

SweepReport verify_lemmas_on_traces(Family family, int count, int budget, std::uint64_t seed,
                                    const VerifyOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.claim = family == Family::H ? "lemmas-H" : "lemmas-F";
    report.n_min = family == Family::H ? 6 : 4;
    report.n_max = budget;
    if (budget > opt.caps.set_cap)
        throw CapExceeded("lemma suite budget exceeds the oracle set cap");
    const int workers = std::max(1, opt.workers);
    WorkerBuckets buckets(workers);
    parallel_for(static_cast<std::size_t>(count), workers, [&](int w, std::size_t i) {
        auto& out = buckets.failures[static_cast<std::size_t>(w)];
        auto& witnesses = buckets.witnesses[static_cast<std::size_t>(w)];
        ConstructionTrace trace = sample_trace(family, budget, seed + i);
        int prev_r = 0, prev_ri = 0;
        for (std::size_t k = 0; k <= trace.steps.size(); ++k) {
            ConstructionTrace prefix = prefix_trace(trace, k);
            Replayed rep = replay(prefix);
            ++buckets.checked[static_cast<std::size_t>(w)];
            const std::string tj = trace_to_json(prefix);
            auto dp_r = gamma_r_tree(rep.tree);
            auto dp_ri = gamma_ri_tree(rep.tree);
            if (k > 0 && family == Family::H) {
                const Step& st = trace.steps[k - 1];
                const int want = st.op == OpKind::O1 ? st.r + st.s : st.t;
                if (dp_r.value != prev_r + want || dp_ri.value != prev_ri + want) {
                    SweepFailure f = make_failure(
                        rep.tree,
                        "step increments gamma_r and gamma_rI by " + std::to_string(want),
                        "gamma_r " + std::to_string(prev_r) + "->" + std::to_string(dp_r.value) +
                            ", gamma_rI " + std::to_string(prev_ri) + "->" +
                            std::to_string(dp_ri.value));
                    f.trace_json = tj;
                    out.push_back(std::move(f));
                }
            }
            prev_r = dp_r.value;
            prev_ri = dp_ri.value;
            if (family == Family::H)
                check_h_prefix(rep.tree, rep.state, opt, tj, out, witnesses);
            else
                check_f_prefix(rep.tree, rep.state, opt, tj, out, witnesses);
        }
    });
    buckets.merge_into(report);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_json(const SweepReport& report, bool include_timings) {
    nlohmann::ordered_json j;
    j["claim"] = report.claim;
    j["n_min"] = report.n_min;
    j["n_max"] = report.n_max;
    j["trees_checked"] = report.trees_checked;
    j["witnesses_validated"] = report.witnesses_validated;
    auto failures = nlohmann::ordered_json::array();
    for (const auto& f : report.failures) {
        nlohmann::ordered_json jf;
        jf["n"] = f.n;
        jf["canonical"] = f.canonical;
        jf["expected"] = f.expected;
        jf["got"] = f.got;
        jf["edgelist"] = f.edgelist;
        if (!f.trace_json.empty()) jf["trace"] = nlohmann::ordered_json::parse(f.trace_json);
        failures.push_back(std::move(jf));
    }
    j["failures"] = std::move(failures);
    j["pass"] = report.pass();
    if (include_timings) j["wall_seconds"] = report.wall_seconds;
    return j.dump(2) + "\n";
}

}  // namespace rdlab
