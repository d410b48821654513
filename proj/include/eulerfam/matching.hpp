#pragma once

#include <vector>

namespace eulerfam {

/// Maximum-cardinality matching in an undirected simple graph (Edmonds'
/// blossom algorithm).  `adj` is an adjacency list over nodes 0..n-1; the
/// result maps each node to its partner, or -1 when unmatched.
///
/// Deterministic: greedy initialization and augmenting-path searches both
/// walk nodes in ascending id and neighbors in list order, so equal inputs
/// give identical matchings.
std::vector<int> max_matching(const std::vector<std::vector<int>>& adj);

/// Number of matched pairs in a mate array.
int matching_size(const std::vector<int>& mate);

}  // namespace eulerfam
