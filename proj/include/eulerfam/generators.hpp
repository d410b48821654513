#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eulerfam/hypergraph.hpp"

namespace eulerfam {

/// splitmix64: the fixed, portable 64-bit generator behind every seeded
/// feature of this project.  Chosen over std::mt19937 + distributions
/// because the standard distributions are implementation-defined and would
/// break cross-platform byte-for-byte reproducibility.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, bound) via rejection sampling; bound >= 1.
  std::uint64_t below(std::uint64_t bound);
};

/// Name recorded in corpus metadata so outputs are reproducible elsewhere.
inline constexpr const char* kRngName = "splitmix64";

/// Fisher–Yates shuffle driven by SplitMix64.
template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = rng.below(i);
    std::swap(items[i - 1], items[j]);
  }
}

/// All C(n,k) k-subsets of {0..n-1}, in lexicographic order; the result is
/// (k-1)-covering by construction.  Guard: C(n,k) <= 10^6.
Hypergraph gen_complete(int n, int k);

/// Greedy l-cover builder: repeatedly take an uncovered l-subset (in
/// lexicographic order, or in a seeded-shuffled order when `seed` is given)
/// and add the k-edge through it that covers the most still-uncovered
/// l-subsets, breaking ties toward the lexicographically smallest edge.
/// The output always satisfies is_l_covering(·, l).
Hypergraph gen_cover(int n, int k, int l,
                     std::optional<std::uint64_t> seed = std::nullopt);

/// Built-in instances by name: "design_4_6" (the three-edge 2-covering
/// 4-hypergraph on six vertices) and "fano_like" (the seven-line triple
/// system on seven points).
Hypergraph gen_named(const std::string& name);

}  // namespace eulerfam
