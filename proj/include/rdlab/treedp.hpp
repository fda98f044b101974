#pragma once

#include "rdlab/certificates.hpp"
#include "rdlab/graph.hpp"
#include "rdlab/tree.hpp"

namespace rdlab {

struct TreeSetSolution {
    int value = 0;
    VertexSet witness;
};

struct TreeAssignmentSolution {
    int value = 0;
    Assignment witness;

    TreeAssignmentSolution() : witness(std::vector<int>{0}) {}
};

/// gamma_r on a tree by dynamic programming over five per-vertex states
/// (selected; unselected crossed with has-selected-neighbor-yet and
/// has-unselected-neighbor-yet). Linear in n; returns one optimal RDS.
TreeSetSolution gamma_r_tree(const Tree& t);

/// gamma_rI on a tree; eight per-vertex states (labels 1 and 2, and label
/// 0 crossed with clamped neighbor sum {0,1,>=2} and
/// has-0-labeled-neighbor-yet). Linear in n; returns one optimal RIDF.
TreeAssignmentSolution gamma_ri_tree(const Tree& t);

}  // namespace rdlab
