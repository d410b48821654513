#include "eulerfam/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace eulerfam {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("bound must be positive");
  std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  while (true) {
    std::uint64_t draw = next();
    if (draw >= threshold) return draw % bound;
  }
}

namespace {

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<VertexId>> all_subsets(int n, int k) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::uint64_t subset_mask(const std::vector<VertexId>& subset) {
  std::uint64_t mask = 0;
  for (VertexId v : subset) mask |= std::uint64_t{1} << v;
  return mask;
}

}  // namespace

Hypergraph gen_complete(int n, int k) {
  if (k < 1 || k > n)
    throw PreconditionError("complete generator requires 1 <= k <= n");
  if (n > 64 || binomial(n, k) > 1'000'000)
    throw GuardError("complete generator: C(n,k) exceeds the guard");
  return Hypergraph(n, all_subsets(n, k));
}

Hypergraph gen_cover(int n, int k, int l, std::optional<std::uint64_t> seed) {
  if (!(2 <= l && l < k && k <= n))
    throw PreconditionError("cover generator requires 2 <= l < k <= n");
  if (n > 64 || binomial(n, l) > 1'000'000 || binomial(n, k) > 1'000'000)
    throw GuardError("cover generator: subset space exceeds the guard");

  std::vector<std::vector<VertexId>> targets = all_subsets(n, l);
  if (seed) {
    SplitMix64 rng(*seed);
    shuffle(targets, rng);
  }
  std::vector<std::uint64_t> target_masks(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i)
    target_masks[i] = subset_mask(targets[i]);

  std::vector<bool> covered(targets.size(), false);
  std::vector<std::vector<VertexId>> edges;
  auto cover_with = [&](std::uint64_t edge_mask) {
    long long newly = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (!covered[i] && (target_masks[i] & edge_mask) == target_masks[i]) {
        covered[i] = true;
        ++newly;
      }
    }
    return newly;
  };

  std::size_t cursor = 0;
  while (true) {
    while (cursor < targets.size() && covered[cursor]) ++cursor;
    if (cursor == targets.size()) break;
    const std::vector<VertexId>& base = targets[cursor];
    std::uint64_t base_mask = target_masks[cursor];

    // Candidate edges: base plus any (k-l)-subset of the other vertices,
    // examined in lexicographic edge order so ties resolve low.
    std::vector<VertexId> others;
    for (VertexId v = 0; v < n; ++v)
      if (!(base_mask & (std::uint64_t{1} << v))) others.push_back(v);
    std::vector<std::vector<VertexId>> candidates;
    for (const auto& extra : all_subsets(static_cast<int>(others.size()), k - l)) {
      std::vector<VertexId> edge = base;
      for (int idx : extra) edge.push_back(others[idx]);
      std::sort(edge.begin(), edge.end());
      candidates.push_back(std::move(edge));
    }
    std::sort(candidates.begin(), candidates.end());

    long long best_gain = -1;
    const std::vector<VertexId>* best_edge = nullptr;
    for (const auto& cand : candidates) {
      std::uint64_t cand_mask = subset_mask(cand);
      long long gain = 0;
      for (std::size_t i = 0; i < targets.size(); ++i)
        if (!covered[i] && (target_masks[i] & cand_mask) == target_masks[i])
          ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best_edge = &cand;
      }
    }
    cover_with(subset_mask(*best_edge));
    edges.push_back(*best_edge);
  }

  Hypergraph result(n, std::move(edges));
  if (!is_l_covering(result, l))
    throw InvariantError("cover generator produced a non-covering output");
  return result;
}

Hypergraph gen_named(const std::string& name) {
  if (name == "design_4_6")
    return Hypergraph(6, {{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}});
  if (name == "fano_like")
    return Hypergraph(7, {{0, 1, 2},
                          {0, 3, 4},
                          {0, 5, 6},
                          {1, 3, 5},
                          {1, 4, 6},
                          {2, 3, 6},
                          {2, 4, 5}});
  throw PreconditionError("unknown named instance: " + name);
}

}  // namespace eulerfam
