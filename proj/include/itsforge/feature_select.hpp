#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "itsforge/series.hpp"

namespace itsforge {

// A subset of the 2d candidate lag variables. Variable v indexes the
// embedded input coordinate directly: v = 2*(lag-1) for the lower bound at
// that lag, 2*(lag-1)+1 for the upper bound (lag 1 = most recent).
struct VariableSet {
    std::vector<std::size_t> indices; // sorted ascending, unique

    bool contains(std::size_t v) const;
    VariableSet with(std::size_t v) const;
    VariableSet without(std::size_t v) const;
    std::size_t size() const { return indices.size(); }
    bool empty() const { return indices.empty(); }

    // "L1,U1,L3" style token list, sorted by variable index.
    std::string tokens() const;
    static VariableSet from_tokens(const std::string& tokens);

    bool operator==(const VariableSet&) const = default;
};

// Keeps only the coordinates in v, in ascending index order.
SupervisedDataset restrict_to(const SupervisedDataset& data, const VariableSet& v);

// 2-fold 1-NN cross-validation error of the variable subset: pairs are split
// into contiguous halves, each point is matched to its Euclidean nearest
// neighbor in the opposite half using only the v coordinates of the
// standardized inputs, and the squared target error, averaged over both
// bounds, is summed once per point and divided by the pair count.
double relevance(const SupervisedDataset& data, const VariableSet& v);

// Greedy forward-backward search from the empty set: each round tries every
// single-variable addition and (once |V| >= 2) every single-variable
// removal, applies the strictly best move, and stops when nothing improves.
// Ties prefer the smaller resulting set, then the lowest variable index.
VariableSet forward_backward_select(const SupervisedDataset& data);

} // namespace itsforge
