#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rdlab/graph.hpp"

namespace rdlab {

/// A labeling V -> {0,1,2} with its induced ordered partition and weight.
class Assignment {
public:
    explicit Assignment(std::vector<int> labels);
    static Assignment uniform(int n, int label);

    int size() const { return static_cast<int>(labels_.size()); }
    int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& labels() const { return labels_; }

    int weight() const;
    /// The cell V_i of the ordered partition (V_0, V_1, V_2).
    VertexSet partition_cell(int i) const;

    bool operator==(const Assignment&) const = default;
    auto operator<=>(const Assignment&) const = default;

private:
    std::vector<int> labels_;
};

/// Assignment text format: first line `n`, then one line of n labels.
Assignment parse_assignment(std::istream& in);
Assignment parse_assignment(const std::string& text);
std::string to_assignment_text(const Assignment& a);

/// Outcome of a certificate check. On failure `witness` is the first
/// offending vertex in id order (`witness2` identifies the second vertex
/// of a too-close packing pair), and `reason` says which condition broke.
struct CertCheck {
    bool ok = true;
    int witness = -1;
    int witness2 = -1;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Every vertex outside s has a neighbor in s.
CertCheck is_dominating(const Graph& g, const VertexSet& s);

/// Restrained dominating set: every vertex outside s has a neighbor in s
/// and a neighbor outside s.
CertCheck is_rds(const Graph& g, const VertexSet& s);

/// Restrained Italian dominating function: every 0-vertex has neighbor
/// labels summing to >= 2 and at least one 0-labeled neighbor.
CertCheck is_ridf(const Graph& g, const Assignment& f);

/// Packing: members pairwise at distance >= 3.
CertCheck is_packing(const Graph& g, const VertexSet& s);

}  // namespace rdlab
