#include <doctest.h>

#include <json.hpp>

#include "rdlab/io.hpp"
#include "rdlab/treedp.hpp"
#include "rdlab/verify.hpp"

using namespace rdlab;

TEST_CASE("sandwich sweep passes on all small trees") {
    VerifyOptions opt;
    opt.seed = 5;
    SweepReport r = verify_bound_sandwich(9, opt);
    CHECK(r.pass());
    CHECK(r.trees_checked == 95);  // classes with 1 <= n <= 9
    CHECK(r.witnesses_validated > 0);
}

TEST_CASE("theorem-H sweep passes through n=10") {
    VerifyOptions opt;
    opt.seed = 5;
    SweepReport r = verify_theorem_h(10, opt);
    CHECK(r.pass());
    CHECK(r.trees_checked == 199);  // classes with 3 <= n <= 10
}

TEST_CASE("theorem-F sweep passes through n=10") {
    VerifyOptions opt;
    opt.seed = 5;
    SweepReport r = verify_theorem_f(10, opt);
    CHECK(r.pass());
    CHECK(r.trees_checked == 198);
}

TEST_CASE("theorem-F sweep surfaces the doubled non-member at n=11") {
    // Known counterexample to the doubling characterization: three paths
    // of lengths 4, 4 and 2 hanging from one hub. The sweep must report
    // it as a self-contained reproduction.
    VerifyOptions opt;
    opt.seed = 5;
    SweepReport r = verify_theorem_f(11, opt);
    CHECK_FALSE(r.pass());
    REQUIRE(r.failures.size() == 1);
    const SweepFailure& f = r.failures[0];
    CHECK(f.n == 11);
    Tree t(parse_edgelist(f.edgelist));
    CHECK(gamma_ri_tree(t).value == 2 * gamma_r_tree(t).value);
    CHECK_FALSE(recognize_f(t).has_value());
}

TEST_CASE("lemma suites pass on random traces") {
    VerifyOptions opt;
    opt.workers = 2;
    SweepReport h = verify_lemmas_on_traces(Family::H, 40, 14, 77, opt);
    CHECK(h.pass());
    CHECK(h.trees_checked >= 40);  // every prefix of every trace
    SweepReport f = verify_lemmas_on_traces(Family::F, 40, 14, 77, opt);
    CHECK(f.pass());
    CHECK(f.witnesses_validated > 0);
}

TEST_CASE("lemma suite budget is capped by the oracle") {
    VerifyOptions opt;
    CHECK_THROWS_AS(verify_lemmas_on_traces(Family::H, 1, 21, 0, opt), CapExceeded);
    CHECK_THROWS_AS(verify_theorem_h(19, opt), CapExceeded);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
    VerifyOptions one;
    one.seed = 9;
    one.workers = 1;
    VerifyOptions four = one;
    four.workers = 4;
    CHECK(report_json(verify_theorem_h(9, one)) == report_json(verify_theorem_h(9, four)));
    CHECK(report_json(verify_lemmas_on_traces(Family::F, 25, 14, 9, one)) ==
          report_json(verify_lemmas_on_traces(Family::F, 25, 14, 9, four)));
    // volatile wall time only on request
    SweepReport r = verify_bound_sandwich(6, one);
    CHECK(report_json(r).find("wall_seconds") == std::string::npos);
    CHECK(report_json(r, true).find("wall_seconds") != std::string::npos);
}

TEST_CASE("report JSON carries the sweep fields") {
    VerifyOptions opt;
    opt.seed = 3;
    SweepReport r = verify_theorem_f(11, opt);
    auto j = nlohmann::json::parse(report_json(r));
    CHECK(j["claim"] == "theorem-F");
    CHECK(j["n_min"] == 4);
    CHECK(j["n_max"] == 11);
    CHECK(j["pass"] == false);
    REQUIRE(j["failures"].size() == 1);
    CHECK(j["failures"][0]["n"] == 11);
    CHECK(j["failures"][0].contains("edgelist"));
}
