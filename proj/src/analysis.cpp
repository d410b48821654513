#include "eulerfam/analysis.hpp"

#include <algorithm>
#include <cstdint>

#include <json.hpp>

#include "eulerfam/generators.hpp"

namespace eulerfam {

LoopedIncidenceGraph with_loops(const IncidenceGraph& g, long long r) {
  if (r < 0) throw PreconditionError("loop multiplicity must be nonnegative");
  return LoopedIncidenceGraph{g, r};
}

long long default_loop_multiplicity(const Hypergraph& h) {
  long long total = h.order() + h.size();
  return 2 * total * total;
}

GammaReport gamma(const LoopedIncidenceGraph& gs, std::vector<int> s_nodes,
                  std::vector<int> t_nodes) {
  const IncidenceGraph& g = gs.base;
  int total = g.node_count();
  std::sort(s_nodes.begin(), s_nodes.end());
  std::sort(t_nodes.begin(), t_nodes.end());

  // 0 = free, 1 = S, 2 = T.
  std::vector<int> side(total, 0);
  for (int x : s_nodes) {
    if (x < 0 || x >= total) throw PreconditionError("node id out of range");
    side[x] = 1;
  }
  for (int x : t_nodes) {
    if (x < 0 || x >= total) throw PreconditionError("node id out of range");
    if (side[x] == 1) throw PreconditionError("S and T must be disjoint");
    side[x] = 2;
  }

  GammaReport report;
  report.r = gs.r;
  report.s_nodes = s_nodes;
  report.t_nodes = t_nodes;
  for (int x : s_nodes) report.sum_f_s += gs.f(x);
  for (int x : t_nodes) report.sum_deg_minus_f_t += gs.degree_star(x) - gs.f(x);

  // eps(S,T): base edges with one end in S and the other in T.  Loops never
  // contribute (both of a loop's ends sit on the same node).
  for (int x : s_nodes)
    for (int y : g.adj[x])
      if (side[y] == 2) ++report.eps;

  // q(S,T): components C of the base graph minus S and T with
  // sum_{x in C} f(x) + eps(C, T) odd.  For even r this is exactly the
  // parity of eps(C, T); the general formula is computed and the shortcut
  // asserted, not assumed.
  std::vector<int> component(total, -1);
  int comp_count = 0;
  for (int start = 0; start < total; ++start) {
    if (side[start] != 0 || component[start] != -1) continue;
    int c = comp_count++;
    std::vector<int> stack = {start};
    component[start] = c;
    long long f_sum = 0;
    long long eps_to_t = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      f_sum += gs.f(u);
      for (int w : g.adj[u]) {
        if (side[w] == 2) ++eps_to_t;
        if (side[w] == 0 && component[w] == -1) {
          component[w] = c;
          stack.push_back(w);
        }
      }
    }
    bool odd = (f_sum + eps_to_t) % 2 != 0;
    if (gs.r % 2 == 0) {
      bool shortcut_odd = eps_to_t % 2 != 0;
      if (odd != shortcut_odd)
        throw InvariantError("component parity disagrees with its even-r form");
    }
    if (odd) ++report.q;
  }

  report.gamma =
      report.sum_f_s + report.sum_deg_minus_f_t - report.eps - report.q;
  return report;
}

namespace {

/// Decodes a base-3 digit string into (S, T) node sets: 1 -> S, 2 -> T.
void decode_assignment(const std::vector<int>& digits, int offset,
                       std::vector<int>& s_nodes, std::vector<int>& t_nodes) {
  s_nodes.clear();
  t_nodes.clear();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 1) s_nodes.push_back(offset + static_cast<int>(i));
    if (digits[i] == 2) t_nodes.push_back(offset + static_cast<int>(i));
  }
}

}  // namespace

AuditReport audit_lovasz(const Hypergraph& h, AuditMode mode,
                         std::optional<long long> r_param, long long samples,
                         std::uint64_t seed, long long guard) {
  IncidenceGraph g = incidence_graph(h);
  long long r = r_param.value_or(default_loop_multiplicity(h));
  LoopedIncidenceGraph gs = with_loops(g, r);

  AuditReport report;
  report.mode = mode;
  report.r = r;
  report.seed = seed;

  bool have_min = false;
  auto consider = [&](std::vector<int> s_nodes, std::vector<int> t_nodes) {
    GammaReport gr = gamma(gs, std::move(s_nodes), std::move(t_nodes));
    if (!have_min || gr.gamma < report.minimum.gamma) {
      report.minimum = std::move(gr);
      have_min = true;
    }
  };

  // Exhaustive part: every disjoint S, T drawn from the e-nodes.
  long long space = 1;
  bool within_guard = true;
  for (EdgeId e = 0; e < h.size(); ++e) {
    if (space > guard / 3) {
      within_guard = false;
      break;
    }
    space *= 3;
  }
  if (mode == AuditMode::exhaustive_e && !within_guard)
    throw GuardError("exhaustive audit: 3^m exceeds the guard");
  if (within_guard) {
    report.exhaustive_part_ran = true;
    std::vector<int> digits(h.size(), 0);
    std::vector<int> s_nodes, t_nodes;
    while (true) {
      decode_assignment(digits, g.n, s_nodes, t_nodes);
      consider(s_nodes, t_nodes);
      ++report.assignments_scanned;
      int pos = 0;
      while (pos < static_cast<int>(digits.size()) && digits[pos] == 2)
        digits[pos++] = 0;
      if (pos == static_cast<int>(digits.size())) break;
      ++digits[pos];
    }
  }

  // Sampled part: assignments over all nodes, kept only when S or T touches
  // a v-node (the remaining case of the hypothesis split).
  if (mode == AuditMode::sampled_v) {
    SplitMix64 rng(seed);
    std::vector<int> digits(g.node_count());
    std::vector<int> s_nodes, t_nodes;
    for (long long i = 0; i < samples; ++i) {
      bool touches_v = false;
      while (!touches_v) {
        for (int& d : digits) d = static_cast<int>(rng.below(3));
        for (int v = 0; v < g.n && !touches_v; ++v)
          if (digits[v] != 0) touches_v = true;
      }
      decode_assignment(digits, 0, s_nodes, t_nodes);
      consider(s_nodes, t_nodes);
      ++report.samples_drawn;
    }
  }

  if (!have_min)
    throw GuardError("audit evaluated no assignments");  // unreachable: (∅,∅) always scanned
  return report;
}

std::string audit_to_json(const AuditReport& report) {
  nlohmann::json doc;
  doc["mode"] =
      report.mode == AuditMode::exhaustive_e ? "exhaustive_e" : "sampled_v";
  doc["r"] = report.r;
  doc["seed"] = report.seed;
  doc["assignments_scanned"] = report.assignments_scanned;
  doc["samples_drawn"] = report.samples_drawn;
  doc["exhaustive_part_ran"] = report.exhaustive_part_ran;
  nlohmann::json min;
  min["gamma"] = report.minimum.gamma;
  min["S"] = report.minimum.s_nodes;
  min["T"] = report.minimum.t_nodes;
  min["sum_f_S"] = report.minimum.sum_f_s;
  min["sum_deg_minus_f_T"] = report.minimum.sum_deg_minus_f_t;
  min["eps"] = report.minimum.eps;
  min["q"] = report.minimum.q;
  doc["min"] = std::move(min);
  return doc.dump(2) + "\n";
}

XConditionReport check_X_condition(const Hypergraph& h,
                                   const std::vector<EdgeId>& x_edges) {
  std::optional<int> k = uniform_cardinality(h);
  if (!k) throw PreconditionError("X-condition requires a uniform hypergraph");
  if (x_edges.size() < 2)
    throw PreconditionError("X-condition requires |X| >= 2");

  IncidenceGraph g = incidence_graph(h);
  std::vector<bool> deleted(g.node_count(), false);
  for (EdgeId e : x_edges) {
    h.check_edge(e);
    if (deleted[g.e_node(e)])
      throw PreconditionError("repeated edge id in X");
    deleted[g.e_node(e)] = true;
  }

  int components = 0;
  std::vector<bool> seen(g.node_count(), false);
  for (int start = 0; start < g.node_count(); ++start) {
    if (seen[start] || deleted[start]) continue;
    ++components;
    std::vector<int> stack = {start};
    seen[start] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj[u]) {
        if (!seen[w] && !deleted[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }

  XConditionReport report;
  report.x_size = static_cast<int>(x_edges.size());
  report.component_count = components;
  report.k = *k;
  report.bound = 2 * ((components + 3) / *k);
  report.holds = report.x_size >= report.bound;
  report.negation_bound_holds =
      static_cast<long long>(*k) * (report.x_size + 1) <=
      2LL * (components + 3);
  return report;
}

XSweepResult x_condition_sweep(const Hypergraph& h, long long guard) {
  std::optional<int> k = uniform_cardinality(h);
  if (!k) throw PreconditionError("X-condition requires a uniform hypergraph");
  if (h.size() > 62 || (1LL << h.size()) > guard)
    throw GuardError("X-condition sweep: 2^m exceeds the guard");

  XSweepResult result;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.size()); ++mask) {
    if (__builtin_popcountll(mask) < 2) continue;
    std::vector<EdgeId> x_edges;
    for (EdgeId e = 0; e < h.size(); ++e)
      if (mask & (std::uint64_t{1} << e)) x_edges.push_back(e);
    ++result.subsets_checked;
    if (!check_X_condition(h, x_edges).holds) {
      result.violation = std::move(x_edges);
      result.all_hold = false;
      return result;
    }
  }
  result.all_hold = true;
  return result;
}

EdgeBound min_edges_bound(int n, int k) {
  EdgeBound bound;
  if (k <= 0) throw PreconditionError("uniformity must be positive");
  bound.value = 2 * ((n + 3) / k);
  bound.applicable = k >= 4 && 2 * n > 3 * k;
  return bound;
}

PairSumResult max_component_pairsum(int n, int k, int q) {
  if (q < 1 || k < 1 || n < static_cast<long long>(q) * k)
    throw PreconditionError("pair-sum maximizer requires n >= q*k, q,k >= 1");
  PairSumResult result;
  result.parts.assign(q - 1, k);
  result.parts.push_back(n - k * (q - 1));
  for (int x : result.parts) result.value += binomial(x, 2);
  return result;
}

namespace {

void enumerate_parts(int remaining, int parts_left, int minimum,
                     std::vector<int>& current, PairSumResult& best) {
  if (parts_left == 1) {
    if (remaining < minimum) return;
    current.push_back(remaining);
    long long value = 0;
    for (int x : current) value += binomial(x, 2);
    if (best.parts.empty() || value > best.value) {
      best.value = value;
      best.parts = current;
    }
    current.pop_back();
    return;
  }
  // Nondecreasing tuples: each part at least `minimum`, leaving enough for
  // the rest.
  for (int x = minimum; static_cast<long long>(x) * parts_left <= remaining; ++x) {
    current.push_back(x);
    enumerate_parts(remaining - x, parts_left - 1, x, current, best);
    current.pop_back();
  }
}

}  // namespace

PairSumResult max_component_pairsum_brute(int n, int k, int q) {
  if (q < 1 || k < 1 || n < static_cast<long long>(q) * k)
    throw PreconditionError("pair-sum maximizer requires n >= q*k, q,k >= 1");
  PairSumResult best;
  std::vector<int> current;
  enumerate_parts(n, q, k, current, best);
  return best;
}

}  // namespace eulerfam
