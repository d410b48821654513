// General-graph maximum matching (blossom search) against a brute-force
// oracle and classical instances.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "eulerfam/generators.hpp"
#include "eulerfam/matching.hpp"

using namespace eulerfam;

namespace {

using Adjacency = std::vector<std::vector<int>>;

Adjacency from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Adjacency adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

Adjacency cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return from_edges(n, edges);
}

Adjacency complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return from_edges(n, edges);
}

/// The Petersen graph: outer 5-cycle, inner 5-cycle with step 2, spokes.
Adjacency petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return from_edges(10, edges);
}

/// Exhaustive maximum-matching size by branching on the lowest uncovered
/// node; exact for the small graphs used here.
int brute_max_matching(const Adjacency& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int node) -> int {
    while (node < n && used[node]) ++node;
    if (node >= n) return 0;
    // Either node stays unmatched...
    used[node] = true;
    int best = self(self, node + 1);
    // ...or it is matched to some free neighbour.
    for (int other : adj[node]) {
      if (used[other]) continue;
      used[other] = true;
      best = std::max(best, 1 + self(self, node + 1));
      used[other] = false;
    }
    used[node] = false;
    return best;
  };
  return rec(rec, 0);
}

/// Checks that `mate` encodes a valid matching of `adj`.
void check_valid(const Adjacency& adj, const std::vector<int>& mate) {
  REQUIRE(mate.size() == adj.size());
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if (mate[v] == -1) continue;
    int u = mate[v];
    CHECK(mate[u] == v);  // involution
    CHECK(std::binary_search(adj[v].begin(), adj[v].end(), u));
  }
}

Adjacency random_graph(SplitMix64& rng) {
  int n = 1 + static_cast<int>(rng.below(10));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(100) < 40) edges.emplace_back(i, j);
  return from_edges(n, edges);
}

}  // namespace

TEST_CASE("classical instances") {
  CHECK(matching_size(max_matching(cycle(3))) == 1);
  CHECK(matching_size(max_matching(cycle(5))) == 2);
  CHECK(matching_size(max_matching(cycle(6))) == 3);
  CHECK(matching_size(max_matching(complete(7))) == 3);
  CHECK(matching_size(max_matching(complete(8))) == 4);
  CHECK(matching_size(max_matching(petersen())) == 5);
  CHECK(brute_max_matching(petersen()) == 5);

  // Star: one central node, all edges share it.
  CHECK(matching_size(max_matching(from_edges(
            6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}))) == 1);
  // No edges at all.
  CHECK(matching_size(max_matching(Adjacency(4))) == 0);
  CHECK(matching_size(max_matching(Adjacency{})) == 0);
}

TEST_CASE("blossom-forcing structures") {
  // Two triangles joined by a bridge: perfect matching exists.
  Adjacency bowtie = from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(matching_size(max_matching(bowtie)) == 3);

  // Odd component forces one exposed node.
  Adjacency two_parts = from_edges(8, {{0, 1}, {1, 2}, {2, 0},  // triangle
                                       {3, 4}, {4, 5}, {5, 6}, {6, 3},
                                       {3, 5}, {7, 3}});
  CHECK(matching_size(max_matching(two_parts)) ==
        brute_max_matching(two_parts));
}

TEST_CASE("agreement with the brute-force oracle on random graphs") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Adjacency adj = random_graph(rng);
    std::vector<int> mate = max_matching(adj);
    check_valid(adj, mate);
    CHECK(matching_size(mate) == brute_max_matching(adj));
  }
}

TEST_CASE("deterministic output") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Adjacency adj = random_graph(rng);
    CHECK(max_matching(adj) == max_matching(adj));
  }
}
