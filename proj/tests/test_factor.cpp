// Even-2-factor solver: parity gadget, matching reduction, exhaustive
// oracle, selection serialization.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "eulerfam/factor.hpp"
#include "eulerfam/generators.hpp"
#include "eulerfam/hypergraph.hpp"
#include "eulerfam/incidence.hpp"

using namespace eulerfam;

namespace {

Hypergraph k43() {
  return Hypergraph(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

/// Expected gadget node count: per edge 2|e|-2, per vertex deg plus one
/// extra parity node when deg is odd.
int expected_nodes(const Hypergraph& h) {
  int total = 0;
  for (EdgeId e = 0; e < h.size(); ++e)
    total += 2 * static_cast<int>(h.edge(e).size()) - 2;
  for (VertexId v = 0; v < h.order(); ++v)
    total += h.degree(v) + (h.degree(v) % 2);
  return total;
}

Hypergraph random_instance(SplitMix64& rng) {
  int n = 2 + static_cast<int>(rng.below(6));  // 2..7
  int m = 1 + static_cast<int>(rng.below(4));  // 1..4
  std::vector<std::vector<VertexId>> edges;
  for (int e = 0; e < m; ++e) {
    int size = 2 + static_cast<int>(rng.below(
                       static_cast<std::uint64_t>(std::min(3, n - 1))));
    std::set<VertexId> edge;
    while (static_cast<int>(edge.size()) < size)
      edge.insert(static_cast<VertexId>(rng.below(n)));
    edges.emplace_back(edge.begin(), edge.end());
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("gadget structure") {
  // Single triple: (2*3-2) + 3*(1+1) = 10 nodes.
  Hypergraph single(3, {{0, 1, 2}});
  GadgetGraph g1 = build_gadget(incidence_graph(single));
  CHECK(g1.node_count() == 10);
  CHECK(expected_nodes(single) == 10);
  CHECK(g1.incidences.size() == 3);

  // Doubled pair edge: degrees even everywhere, no parity nodes.
  Hypergraph dup(2, {{0, 1}, {0, 1}});
  GadgetGraph g2 = build_gadget(incidence_graph(dup));
  CHECK(g2.node_count() == 8);
  CHECK(expected_nodes(dup) == 8);
  CHECK(g2.incidences.size() == 4);

  // K4^3: 16 + 16.
  GadgetGraph g3 = build_gadget(incidence_graph(k43()));
  CHECK(g3.node_count() == 32);
  CHECK(expected_nodes(k43()) == 32);
  CHECK(g3.incidences.size() == 12);

  // The node-count identity on random instances.
  SplitMix64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Hypergraph h = random_instance(rng);
    GadgetGraph g = build_gadget(incidence_graph(h));
    CHECK(g.node_count() == expected_nodes(h));
    // Gadget adjacency is symmetric and sorted.
    for (int node = 0; node < g.node_count(); ++node) {
      CHECK(std::is_sorted(g.adj[node].begin(), g.adj[node].end()));
      for (int other : g.adj[node])
        CHECK(std::binary_search(g.adj[other].begin(), g.adj[other].end(),
                                 node));
    }
  }

  // Edges below size 2 cannot carry a pair choice.
  Hypergraph singleton(2, {{0}});
  CHECK_THROWS_AS(build_gadget(incidence_graph(singleton)),
                  PreconditionError);
}

TEST_CASE("selection validation") {
  Hypergraph h(4, {{0, 1, 2}, {0, 1, 3}});
  CHECK_NOTHROW(validate_selection(h, FactorSelection{{{0, 1}, {0, 1}}}));
  // Wrong number of pairs.
  CHECK_THROWS_AS(validate_selection(h, FactorSelection{{{0, 1}}}),
                  InvariantError);
  // Pair not inside its edge.
  CHECK_THROWS_AS(
      validate_selection(h, FactorSelection{{{0, 3}, {0, 1}}}),
      InvariantError);
  // Identical endpoints.
  CHECK_THROWS_AS(
      validate_selection(h, FactorSelection{{{1, 1}, {0, 1}}}),
      InvariantError);
  // Odd vertex multiplicities.
  CHECK_THROWS_AS(
      validate_selection(h, FactorSelection{{{0, 1}, {0, 3}}}),
      InvariantError);
}

TEST_CASE("solver on the stated instances") {
  // A single edge is always infeasible: its endpoints would have count 1.
  CHECK_FALSE(solve_even_two_factor(Hypergraph(3, {{0, 1, 2}})).has_value());

  // Two triples sharing a pair: the unique selection uses the shared pair.
  Hypergraph two(4, {{0, 1, 2}, {0, 1, 3}});
  auto sel = solve_even_two_factor(two);
  REQUIRE(sel.has_value());
  CHECK(sel->choice ==
        std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 1}});

  // K4^3 is feasible.
  auto selk = solve_even_two_factor(k43());
  REQUIRE(selk.has_value());
  CHECK_NOTHROW(validate_selection(k43(), *selk));

  // Deterministic.
  CHECK(solve_even_two_factor(k43())->choice == selk->choice);
}

TEST_CASE("exhaustive oracle") {
  CHECK_FALSE(brute_force_selection(Hypergraph(3, {{0, 1, 2}})).has_value());

  auto sel = brute_force_selection(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}}));
  REQUIRE(sel.has_value());
  CHECK(sel->choice ==
        std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 1}});

  // Tripled triple: first selection in lexicographic pair order.
  Hypergraph tripled(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  auto selt = brute_force_selection(tripled);
  REQUIRE(selt.has_value());
  CHECK(selt->choice ==
        std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 2}, {1, 2}});

  // Empty edge list: the empty selection is trivially valid.
  auto sele = brute_force_selection(Hypergraph(2, {}));
  REQUIRE(sele.has_value());
  CHECK(sele->choice.empty());

  // Guard: 12 edges with C(6,2)=15 pairs each overflows 10^7 states.
  std::vector<std::vector<VertexId>> big(12, {0, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(brute_force_selection(Hypergraph(6, big)), GuardError);
}

TEST_CASE("matching reduction agrees with the oracle") {
  SplitMix64 rng(123);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Hypergraph h = random_instance(rng);
    auto fast = solve_even_two_factor(h);
    auto slow = brute_force_selection(h);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      ++feasible;
      CHECK_NOTHROW(validate_selection(h, *fast));
      CHECK_NOTHROW(validate_selection(h, *slow));
    }
  }
  // The comparison is not vacuous: both outcomes occur.
  CHECK(feasible > 30);
  CHECK(feasible < 270);
}

TEST_CASE("selection serialization") {
  FactorSelection sel{{{0, 1}, {2, 5}}};
  std::string text = selection_to_json(sel);
  FactorSelection back = selection_from_json(text);
  CHECK(back.choice == sel.choice);
  CHECK(selection_to_json(back) == text);

  CHECK_THROWS_AS(selection_from_json("not json"), ParseError);
  CHECK_THROWS_AS(selection_from_json(R"({"0":[0,1],"2":[0,1]})"),
                  ParseError);  // gap in edge ids
  CHECK_THROWS_AS(selection_from_json(R"({"0":[0]})"), ParseError);
  CHECK_THROWS_AS(selection_from_json(R"([1,2])"), ParseError);
}
