#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eulerfam/hypergraph.hpp"
#include "eulerfam/incidence.hpp"

namespace eulerfam {

/// Incidence graph augmented with r symbolic loops at every v-node.  Loops
/// are never materialized: they contribute 2r to v-node degrees and set the
/// degree-constraint profile f(v) = r, f(e) = 2, but are invisible to
/// connectivity and to edge counts between node sets.
struct LoopedIncidenceGraph {
  IncidenceGraph base;
  long long r = 0;

  long long f(int node) const { return base.is_v_node(node) ? r : 2; }
  long long degree_star(int node) const {
    return base.degree(node) + (base.is_v_node(node) ? 2 * r : 0);
  }
};

/// with_loops(g, r): validates r >= 0.
LoopedIncidenceGraph with_loops(const IncidenceGraph& g, long long r);

/// The loop multiplicity used by default: 2(m+n)^2.
long long default_loop_multiplicity(const Hypergraph& h);

/// One evaluation of the deficiency functional
///   gamma(S,T) = sum_S f + sum_T (deg* - f) - eps(S,T) - q(S,T),
/// where eps counts base-graph edges between S and T and q counts the
/// components C of the graph minus S and T whose sum of f over C plus
/// eps(C,T) is odd.  The parity-constrained factor exists iff gamma >= 0
/// for every disjoint S, T.
struct GammaReport {
  std::vector<int> s_nodes;
  std::vector<int> t_nodes;
  long long r = 0;
  long long sum_f_s = 0;
  long long sum_deg_minus_f_t = 0;
  long long eps = 0;
  long long q = 0;
  long long gamma = 0;
};

GammaReport gamma(const LoopedIncidenceGraph& gs, std::vector<int> s_nodes,
                  std::vector<int> t_nodes);

enum class AuditMode { exhaustive_e, sampled_v };

/// Minimum of gamma over a family of (S,T) pairs.  exhaustive_e enumerates
/// every disjoint S,T drawn from the e-nodes (3^m assignments; guarded).
/// sampled_v additionally draws seeded random assignments over all nodes,
/// rejecting those that touch no v-node.  A negative minimum certifies that
/// no factor exists; a nonnegative minimum is NOT a proof of feasibility
/// (only the full exponential space would be).
struct AuditReport {
  AuditMode mode = AuditMode::exhaustive_e;
  long long r = 0;
  GammaReport minimum;
  long long assignments_scanned = 0;  // exhaustive part
  long long samples_drawn = 0;        // sampled part
  bool exhaustive_part_ran = false;
  std::uint64_t seed = 0;
};

AuditReport audit_lovasz(const Hypergraph& h, AuditMode mode,
                         std::optional<long long> r = std::nullopt,
                         long long samples = 10'000, std::uint64_t seed = 0,
                         long long guard = 1'000'000);

std::string audit_to_json(const AuditReport& report);

/// Verdict for one candidate edge set X: with c = number of components of
/// the incidence graph after deleting X's e-nodes, the condition reads
/// |X| >= 2*floor((c+3)/k).  Requires |X| >= 2 and a uniform hypergraph.
struct XConditionReport {
  int x_size = 0;
  int component_count = 0;
  int k = 0;
  int bound = 0;
  bool holds = false;
  /// The complementary inequality k(|X|+1) <= 2(c+3), reported for
  /// diagnostic symmetry.
  bool negation_bound_holds = false;
};

XConditionReport check_X_condition(const Hypergraph& h,
                                   const std::vector<EdgeId>& x_edges);

/// Exhaustive check over all X with |X| >= 2; refuses when 2^m exceeds the
/// guard.  Stops at the first violation (lowest bitmask order).
struct XSweepResult {
  bool all_hold = false;
  std::optional<std::vector<EdgeId>> violation;
  long long subsets_checked = 0;
};

XSweepResult x_condition_sweep(const Hypergraph& h, long long guard = 1 << 16);

/// Lower bound 2*floor((n+3)/k) on the edge count of a 2-covering
/// k-hypergraph; meaningful under the hypotheses k >= 4 and 2n > 3k, and
/// flagged (not rejected) outside them.
struct EdgeBound {
  int value = 0;
  bool applicable = false;
};

EdgeBound min_edges_bound(int n, int k);

/// Maximum of sum C(x_i, 2) over tuples x_1..x_q with all parts >= k
/// and total n; the maximum sits at (k, ..., k, n-k(q-1)).
struct PairSumResult {
  std::vector<int> parts;
  long long value = 0;
};

PairSumResult max_component_pairsum(int n, int k, int q);
/// Enumerates every nondecreasing tuple in the domain; ground truth for the
/// closed form.
PairSumResult max_component_pairsum_brute(int n, int k, int q);

}  // namespace eulerfam
