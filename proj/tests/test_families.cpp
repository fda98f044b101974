#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rdlab/families.hpp"
#include "rdlab/oracle.hpp"
#include "rdlab/tree.hpp"
#include "rdlab/treedp.hpp"
#include "test_util.hpp"

using namespace rdlab;
using namespace testutil;

namespace {

ConstructionTrace f_base() { return {Family::F, 0, 0, {}}; }

ConstructionTrace h_base(int l, int n) { return {Family::H, l, n, {}}; }

// Exhaustive family enumeration by BFS over traces; one canonical code
// per isomorphism class. Independent of the recognizers.
std::map<std::string, Tree> enumerate_family(Family fam, int nmax) {
    std::map<std::string, Tree> members;
    std::set<std::string> expanded;
    std::vector<ConstructionTrace> frontier;
    if (fam == Family::F) {
        frontier.push_back(f_base());
    } else {
        for (int l = 2; l + 4 <= nmax; ++l)
            for (int n = l; l + n + 2 <= nmax; ++n) frontier.push_back(h_base(l, n));
    }
    while (!frontier.empty()) {
        ConstructionTrace tr = frontier.back();
        frontier.pop_back();
        Replayed rep = replay(tr);
        const int n = rep.tree.order();
        std::string code = canonical_code(rep.tree);
        members.emplace(code, rep.tree);
        std::string sig = code + "|";
        for (int v : rep.state.lv) sig += std::to_string(v) + ",";
        sig += "|";
        for (int v : rep.state.sv) sig += std::to_string(v) + ",";
        if (!expanded.insert(sig).second) continue;
        for (int attach = 0; attach < n; ++attach) {
            const bool in_lv = rep.state.lv.contains(attach);
            const bool in_sv = rep.state.sv.contains(attach);
            if (fam == Family::F && in_lv) {
                if (n + 3 <= nmax) {
                    auto t2 = tr;
                    t2.steps.push_back({OpKind::O1, attach, 0, 0, 0});
                    frontier.push_back(t2);
                }
                for (int t = 1; n + 1 + 2 * t <= nmax; ++t) {
                    auto t2 = tr;
                    t2.steps.push_back({OpKind::O2, attach, 0, 0, t});
                    frontier.push_back(t2);
                }
            }
            if (fam == Family::H) {
                if (in_lv)
                    for (int r = 1; n + 2 + r + 2 <= nmax; ++r)
                        for (int s = 2; n + 2 + r + s <= nmax; ++s) {
                            auto t2 = tr;
                            t2.steps.push_back({OpKind::O1, attach, r, s, 0});
                            frontier.push_back(t2);
                        }
                if (in_sv)
                    for (int t = 2; n + 1 + t <= nmax; ++t) {
                        auto t2 = tr;
                        t2.steps.push_back({OpKind::O2, attach, 0, 0, t});
                        frontier.push_back(t2);
                    }
            }
        }
    }
    return members;
}

}  // namespace

TEST_CASE("replaying the bare bases") {
    Replayed p4 = replay(f_base());
    CHECK(isomorphic(p4.tree, make_path(4)));
    CHECK(p4.state.lv == VertexSet({0, 3}));
    CHECK(p4.state.sv.empty());

    Replayed ds = replay(h_base(2, 3));
    CHECK(isomorphic(ds.tree, make_double_star(2, 3)));
    CHECK(ds.state.sv == VertexSet({0, 1}));
    CHECK(ds.state.lv == VertexSet({2, 3, 4, 5, 6}));
}

TEST_CASE("F-O1 at a leaf of P4 yields P7 with the right LV") {
    ConstructionTrace tr = f_base();
    tr.steps.push_back({OpKind::O1, 3, 0, 0, 0});
    Replayed rep = replay(tr);
    CHECK(isomorphic(rep.tree, make_path(7)));
    CHECK(rep.state.lv == VertexSet({0, 3, 6}));
    CHECK(is_packing(rep.tree.graph(), rep.state.lv).ok);
}

TEST_CASE("F-O2 with t=2 yields the 9-vertex spider extension") {
    ConstructionTrace tr = f_base();
    tr.steps.push_back({OpKind::O2, 3, 0, 0, 2});
    Replayed rep = replay(tr);
    CHECK(rep.tree.order() == 9);
    CHECK(rep.state.lv == VertexSet({0, 3, 6, 8}));  // old leaves plus both feet
    CHECK(gamma_ri_bruteforce(rep.tree.graph()).value == 8);
}

TEST_CASE("H-O2 at a center increments both invariants by t") {
    ConstructionTrace tr = h_base(2, 2);
    tr.steps.push_back({OpKind::O2, 0, 0, 0, 2});
    Replayed rep = replay(tr);
    CHECK(rep.tree.order() == 9);
    CHECK(gamma_r_tree(rep.tree).value == 6);
    CHECK(gamma_ri_tree(rep.tree).value == 6);
    CHECK(gamma_r_bruteforce(rep.tree.graph()).value == 6);
}

TEST_CASE("H replays keep V = LV union SV") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        ConstructionTrace tr = sample_trace(Family::H, 15, seed);
        Replayed rep = replay(tr);
        for (int v = 0; v < rep.tree.order(); ++v)
            CHECK((rep.state.lv.contains(v) || rep.state.sv.contains(v)));
    }
}

TEST_CASE("replay rejects invalid traces with the step index") {
    ConstructionTrace bad = f_base();
    bad.steps.push_back({OpKind::O1, 1, 0, 0, 0});  // internal vertex, not LV
    std::string err;
    CHECK_FALSE(try_replay(bad, &err).has_value());
    CHECK(err.find("step 0") != std::string::npos);
    CHECK_THROWS_AS(replay(bad), TraceError);

    CHECK_THROWS_AS(replay(h_base(1, 2)), TraceError);  // base side below 2

    ConstructionTrace pendant = h_base(2, 2);
    pendant.steps.push_back({OpKind::O2, 0, 0, 0, 1});  // star needs t >= 2
    CHECK_THROWS_AS(replay(pendant), TraceError);

    ConstructionTrace wrong_class = h_base(2, 2);
    wrong_class.steps.push_back({OpKind::O2, 2, 0, 0, 2});  // leaf is not a stem
    CHECK_THROWS_AS(replay(wrong_class), TraceError);

    ConstructionTrace out_of_range = f_base();
    out_of_range.steps.push_back({OpKind::O1, 9, 0, 0, 0});
    CHECK_THROWS_AS(replay(out_of_range), TraceError);
}

TEST_CASE("canonical F assignment is the optimal doubled-weight RIDF") {
    Replayed p4 = replay(f_base());
    Assignment a = canonical_ridf_f(p4.tree, p4.state);
    CHECK(a == Assignment({2, 0, 0, 2}));
    CHECK(a.weight() == 4);

    ConstructionTrace tr = f_base();
    tr.steps.push_back({OpKind::O1, 3, 0, 0, 0});
    Replayed p7 = replay(tr);
    Assignment a7 = canonical_ridf_f(p7.tree, p7.state);
    CHECK(a7.weight() == 6);
    CHECK(is_ridf(p7.tree.graph(), a7).ok);
    CHECK(gamma_ri_bruteforce(p7.tree.graph()).value == 6);

    ConstructionTrace sp = f_base();
    sp.steps.push_back({OpKind::O2, 3, 0, 0, 2});
    Replayed nine = replay(sp);
    CHECK(canonical_ridf_f(nine.tree, nine.state).weight() == 8);
}

TEST_CASE("recognize_f on the named examples") {
    auto base = recognize_f(make_path(4));
    REQUIRE(base.has_value());
    CHECK(base->steps.empty());

    auto p7 = recognize_f(make_path(7));
    REQUIRE(p7.has_value());
    CHECK(p7->steps.size() == 1);
    CHECK(isomorphic(replay(*p7).tree, make_path(7)));

    CHECK_FALSE(recognize_f(make_path(6)).has_value());
    CHECK_FALSE(recognize_f(make_star(3)).has_value());
    CHECK_FALSE(recognize_f(make_path(3)).has_value());
}

TEST_CASE("recognize_f handles the spider-at-base-leaf shape") {
    // P4 + O2(t=2): one diametral orientation peels into the base, the
    // other peels the spider; recognition must find the good one.
    ConstructionTrace tr = f_base();
    tr.steps.push_back({OpKind::O2, 3, 0, 0, 2});
    Tree t = replay(tr).tree;
    auto rec = recognize_f(t);
    REQUIRE(rec.has_value());
    CHECK(isomorphic(replay(*rec).tree, t));
}

TEST_CASE("recognize_h on the named examples") {
    auto ds = recognize_h(make_double_star(2, 3));
    CHECK(ds.kind == HVerdict::Kind::Member);
    REQUIRE(ds.trace.has_value());
    CHECK(ds.trace->steps.empty());
    CHECK(isomorphic(replay(*ds.trace).tree, make_double_star(2, 3)));

    CHECK(recognize_h(make_star(4)).kind == HVerdict::Kind::StarException);
    CHECK(recognize_h(make_path(3)).kind == HVerdict::Kind::StarException);
    CHECK(recognize_h(make_path(6)).kind == HVerdict::Kind::None);
    CHECK(recognize_h(make_path(2)).kind == HVerdict::Kind::None);
    CHECK(recognize_h(make_double_star(1, 3)).kind == HVerdict::Kind::None);
}

TEST_CASE("recognize_h explores both reverse operations") {
    // DS22 + O2(t=2) at a center: the double-star peel strands a P3, the
    // star peel certifies membership.
    ConstructionTrace tr = h_base(2, 2);
    tr.steps.push_back({OpKind::O2, 0, 0, 0, 2});
    Tree t = replay(tr).tree;
    auto v = recognize_h(t);
    REQUIRE(v.kind == HVerdict::Kind::Member);
    CHECK(isomorphic(replay(*v.trace).tree, t));
}

TEST_CASE("recognizers accept exactly the enumerated family members") {
    auto f_members = enumerate_family(Family::F, 13);
    for (const auto& [code, tree] : f_members) {
        auto rec = recognize_f(tree);
        REQUIRE_MESSAGE(rec.has_value(), "unrecognized F member ", code);
        CHECK(canonical_code(replay(*rec).tree) == code);
    }
    auto h_members = enumerate_family(Family::H, 13);
    for (const auto& [code, tree] : h_members) {
        auto v = recognize_h(tree);
        REQUIRE_MESSAGE(v.kind == HVerdict::Kind::Member, "unrecognized H member ", code);
        CHECK(canonical_code(replay(*v.trace).tree) == code);
    }
    CHECK(f_members.size() > 10);
    CHECK(h_members.size() > 40);
}

TEST_CASE("recognized traces round-trip on random members") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        Tree ft = replay(sample_trace(Family::F, 16, seed)).tree;
        auto rec = recognize_f(ft);
        REQUIRE(rec.has_value());
        CHECK(isomorphic(replay(*rec).tree, ft));

        Tree ht = replay(sample_trace(Family::H, 16, seed)).tree;
        auto v = recognize_h(ht);
        REQUIRE(v.kind == HVerdict::Kind::Member);
        CHECK(isomorphic(replay(*v.trace).tree, ht));
    }
}

TEST_CASE("sample_trace respects the budget and is seed-deterministic") {
    ConstructionTrace bare = sample_trace(Family::F, 4, 99);
    CHECK(bare.steps.empty());

    ConstructionTrace one = sample_trace(Family::F, 7, 3);
    CHECK(one.steps.size() == 1);  // exactly one op fits
    CHECK(replay(one).tree.order() == 7);

    ConstructionTrace ds = sample_trace(Family::H, 6, 5);
    CHECK(ds.base_l == 2);
    CHECK(ds.base_n == 2);
    CHECK(ds.steps.empty());

    CHECK_THROWS_AS(sample_trace(Family::F, 3, 0), TraceError);
    CHECK_THROWS_AS(sample_trace(Family::H, 5, 0), TraceError);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        CHECK(sample_trace(Family::F, 14, seed) == sample_trace(Family::F, 14, seed));
        CHECK(sample_trace(Family::H, 14, seed) == sample_trace(Family::H, 14, seed));
        CHECK(replay(sample_trace(Family::F, 14, seed)).tree.order() <= 14);
        CHECK(replay(sample_trace(Family::H, 14, seed)).tree.order() <= 14);
    }
}

TEST_CASE("trace JSON round-trips and matches the documented shape") {
    ConstructionTrace tr = f_base();
    tr.steps.push_back({OpKind::O1, 3, 0, 0, 0});
    CHECK(trace_to_json(tr) == R"({"family":"F","base":{},"steps":[{"op":"O1","attach":3}]})");
    CHECK(trace_from_json(trace_to_json(tr)) == tr);

    ConstructionTrace h = h_base(2, 2);
    h.steps.push_back({OpKind::O2, 0, 0, 0, 2});
    h.steps.push_back({OpKind::O1, 3, 1, 2, 0});
    CHECK(trace_to_json(h) ==
          R"({"family":"H","base":{"l":2,"n":2},"steps":[{"op":"O2","attach":0,"t":2},{"op":"O1","attach":3,"r":1,"s":2}]})");
    CHECK(trace_from_json(trace_to_json(h)) == h);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ConstructionTrace s = sample_trace(seed % 2 ? Family::H : Family::F, 16, seed);
        CHECK(trace_from_json(trace_to_json(s)) == s);
    }

    CHECK_THROWS_AS(trace_from_json("not json"), ParseError);
    CHECK_THROWS_AS(trace_from_json(R"({"family":"X","base":{},"steps":[]})"), ParseError);
    CHECK_THROWS_AS(trace_from_json(R"({"family":"F","base":{}})"), ParseError);
}
