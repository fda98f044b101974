#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdlab/tree.hpp"

namespace rdlab {

/// All non-isomorphic free trees of one order, materialized lazily from
/// compact parent arrays and yielded in canonical-code order.
class TreeStream {
public:
    int order() const { return n_; }
    std::size_t size() const { return count_; }
    Tree at(std::size_t idx) const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < count_; ++i) fn(at(i));
    }

private:
    friend TreeStream all_trees(int n, int cap);
    int n_ = 1;
    std::size_t count_ = 0;
    std::vector<std::uint8_t> parents_;  // stride n-1: parent of vertex v at [i*(n-1) + v-1]
};

/// Every isomorphism class of free trees on n vertices, exactly once.
/// Generated by level-sequence successor enumeration of rooted trees,
/// assembled around the tree center (or central edge).
TreeStream all_trees(int n, int cap = 18);

/// Independent cross-check: decodes all n^(n-2) Pruefer sequences and
/// counts isomorphism classes by canonical-code deduplication.
std::uint64_t count_trees_labeled_oracle(int n, int cap = 10);

}  // namespace rdlab
