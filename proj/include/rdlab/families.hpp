#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdlab/certificates.hpp"
#include "rdlab/graph.hpp"
#include "rdlab/tree.hpp"

namespace rdlab {

enum class Family { H, F };

enum class OpKind { O1, O2 };

/// One construction step. `attach` is a vertex id in the pre-step tree.
/// H-O1 glues a double star DS_{r,s} by its r-leaf center (s >= 2,
/// r >= 1); H-O2 and F-O2 carry the star/spider size t >= 1; F-O1 glues
/// a P3 by one of its leaves.
struct Step {
    OpKind op = OpKind::O1;
    int attach = -1;
    int r = 0;
    int s = 0;
    int t = 0;

    bool operator==(const Step&) const = default;
};

/// Replayable family-membership certificate: a base tree plus ordered
/// steps. Family H starts from the double star DS_{base_l, base_n}
/// (both sides >= 2); family F starts from the path P4.
struct ConstructionTrace {
    Family family = Family::F;
    int base_l = 0;
    int base_n = 0;
    std::vector<Step> steps;

    bool operator==(const ConstructionTrace&) const = default;
};

/// Cumulative vertex classes along a replay: lv collects every vertex
/// that was a leaf of some prefix tree, sv every vertex that was a stem
/// (family H only). The two may overlap.
struct FamilyState {
    VertexSet lv;
    VertexSet sv;
};

struct Replayed {
    Tree tree;
    FamilyState state;
};

/// Replays a trace into its tree and final LV/SV classes. Throws
/// TraceError when a step's attach vertex is outside the class the
/// operation requires, or a parameter is out of bounds.
Replayed replay(const ConstructionTrace& trace);

/// Non-throwing replay; on failure returns nullopt and fills `error`.
std::optional<Replayed> try_replay(const ConstructionTrace& trace, std::string* error = nullptr);

/// The weight-2|LV| assignment (2 on LV, 0 elsewhere) attached to an
/// F-family replay.
Assignment canonical_ridf_f(const Tree& tree, const FamilyState& state);

/// Constructive recognizer for family F: peels diametral-path gadgets
/// down to P4, then certifies by forward replay. Returns a trace whose
/// replay is isomorphic to t, or nullopt.
std::optional<ConstructionTrace> recognize_f(const Tree& t);

/// Recognition outcome for family H; stars K_{1,t} (t >= 2) are the
/// exceptional class of the equal-invariants characterization and are
/// reported separately.
struct HVerdict {
    enum class Kind { Member, StarException, None };
    Kind kind = Kind::None;
    std::optional<ConstructionTrace> trace;

    bool member_or_star() const { return kind != Kind::None; }
};

HVerdict recognize_h(const Tree& t);

/// Seed-deterministic random valid trace; the replayed tree has at most
/// `budget` vertices and ops are appended while any still fits.
ConstructionTrace sample_trace(Family family, int budget, std::uint64_t seed);

/// One-line JSON serialization, replayable bit-for-bit.
std::string trace_to_json(const ConstructionTrace& trace);
ConstructionTrace trace_from_json(const std::string& line);

}  // namespace rdlab
