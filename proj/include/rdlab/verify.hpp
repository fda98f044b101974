#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdlab/families.hpp"
#include "rdlab/oracle.hpp"

namespace rdlab {

struct SweepFailure {
    int n = 0;
    std::string canonical;
    std::string expected;
    std::string got;
    std::string edgelist;
    std::string trace_json;  // offending trace prefix, when applicable
};

struct SweepReport {
    std::string claim;
    int n_min = 0;
    int n_max = 0;
    std::uint64_t trees_checked = 0;
    std::uint64_t witnesses_validated = 0;
    std::vector<SweepFailure> failures;
    double wall_seconds = 0.0;

    bool pass() const { return failures.empty(); }
};

struct VerifyOptions {
    int workers = 1;
    std::uint64_t seed = 0;         // drives the oracle spot-check sample
    int oracle_sample_percent = 1;  // per-n share of trees recomputed brute force
    OracleCaps caps;
    int enumeration_cap = 18;
};

/// gamma_r <= gamma_rI <= 2 gamma_r on every tree with 1 <= n <= n_max.
SweepReport verify_bound_sandwich(int n_max, const VerifyOptions& opt = {});

/// Equal-invariants characterization on every tree with 3 <= n <= n_max:
/// gamma_r = gamma_rI holds iff the H recognizer returns a trace or the
/// star exception; recognized traces must replay isomorphically.
SweepReport verify_theorem_h(int n_max, const VerifyOptions& opt = {});

/// Doubling characterization on every tree with 4 <= n <= n_max:
/// gamma_rI = 2 gamma_r holds iff the F recognizer returns a trace.
SweepReport verify_theorem_f(int n_max, const VerifyOptions& opt = {});

/// Replays `count` seeded random traces and checks the family's full
/// invariant list at every prefix (uniqueness claims via the oracle,
/// increments via the tree DP).
SweepReport verify_lemmas_on_traces(Family family, int count, int budget, std::uint64_t seed,
                                    const VerifyOptions& opt = {});

/// Stable JSON rendering; wall time is volatile and only included on
/// request so identical runs produce identical bytes.
std::string report_json(const SweepReport& report, bool include_timings = false);

}  // namespace rdlab
