#pragma once

#include <vector>

#include "rdlab/certificates.hpp"
#include "rdlab/graph.hpp"

namespace rdlab {

struct OracleCaps {
    int set_cap = 20;         // 2^n subset searches
    int assignment_cap = 13;  // 3^n labelings, pruned
};

/// Exhaustive-search result for a set invariant: the optimal value and
/// every optimal witness, sorted lexicographically.
struct OptimalSetReport {
    int value = 0;
    std::vector<VertexSet> witnesses;
};

/// Same for the assignment invariant gamma_rI.
struct OptimalAssignmentReport {
    int value = 0;
    std::vector<Assignment> witnesses;
};

/// Domination number gamma(G) with all minimum dominating sets.
OptimalSetReport gamma_bruteforce(const Graph& g, const OracleCaps& caps = {});

/// Restrained domination number gamma_r(G) with all minimum RDSs.
/// Subsets are searched by increasing cardinality; the first feasible
/// level is completed in full so the witness list is exhaustive.
OptimalSetReport gamma_r_bruteforce(const Graph& g, const OracleCaps& caps = {});

/// Packing number rho(G) with all maximum packings (searched by
/// decreasing cardinality).
OptimalSetReport rho_bruteforce(const Graph& g, const OracleCaps& caps = {});

/// Restrained Italian domination number gamma_rI(G) with all
/// minimum-weight RIDFs.
OptimalAssignmentReport gamma_ri_bruteforce(const Graph& g, const OracleCaps& caps = {});

}  // namespace rdlab
