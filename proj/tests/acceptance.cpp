// Acceptance gate: eight end-to-end checks, one [PASS]/[FAIL] line each,
// nonzero exit when anything fails.  Checks 1, 5, 6, and 7 share one run of
// the default corpus; check 8 drives the installed CLI binary.
//
// Usage: acceptance --cli PATH --workdir DIR

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eulerfam/analysis.hpp"
#include "eulerfam/corpus.hpp"
#include "eulerfam/covering.hpp"
#include "eulerfam/factor.hpp"
#include "eulerfam/generators.hpp"
#include "eulerfam/hypergraph.hpp"
#include "eulerfam/incidence.hpp"
#include "eulerfam/io.hpp"
#include "eulerfam/trails.hpp"

using namespace eulerfam;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }
Outcome pass(std::string detail) { return {true, std::move(detail)}; }

// ---------------------------------------------------------------------------
// 1. Default corpus: both strategies construct a family and verification
//    accepts it, on every covering instance with at least two edges.
Outcome check_corpus_solves(const CorpusReport& report, double seconds) {
  if (static_cast<int>(report.rows.size()) < 200)
    return fail("corpus has only " + std::to_string(report.rows.size()) +
                " instances");
  for (const InstanceRow& row : report.rows) {
    if (row.n > 12 || row.k < 3 || row.k > 6 || row.l < 2 || row.l >= row.k)
      return fail("instance outside the parameter window: " + row.key);
  }
  const CorpusAggregate& agg = report.aggregate;
  if (agg.eligible < 200)
    return fail("only " + std::to_string(agg.eligible) +
                " eligible instances (need >= 200)");
  if (agg.solved_and_verified_both != agg.eligible)
    return fail(std::to_string(agg.solved_and_verified_both) + "/" +
                std::to_string(agg.eligible) +
                " eligible instances solved+verified by both strategies");
  if (!agg.strategies_agree_everywhere)
    return fail("strategy feasibility disagreement");
  if (agg.failures != 0 || !agg.pass) {
    for (const InstanceRow& row : report.rows)
      if (!row.failure.empty())
        return fail(row.key + ": " + row.failure);
    return fail("aggregate reports failures");
  }
  if (seconds >= 300.0)
    return fail("corpus run took " + std::to_string(seconds) + "s (>= 300s)");
  std::ostringstream out;
  out << agg.solved_and_verified_both << "/" << agg.eligible
      << " eligible instances, both strategies, across "
      << report.rows.size() << " rows in " << seconds << "s";
  return pass(out.str());
}

// ---------------------------------------------------------------------------
// 2. The polynomial factor solver agrees with exhaustive enumeration on
//    feasibility, over every small edge-multiset shape and 500 seeded
//    random instances.
std::vector<std::vector<VertexId>> subsets_of_size(int n, int lo, int hi) {
  std::vector<std::vector<VertexId>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits < lo || bits > hi) continue;
    std::vector<VertexId> subset;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) subset.push_back(v);
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Outcome check_oracle_agreement() {
  long long scanned = 0;
  long long feasible = 0;
  std::string mismatch;

  auto compare = [&](const Hypergraph& h) {
    std::optional<FactorSelection> fast = solve_even_two_factor(h);
    std::optional<FactorSelection> slow = brute_force_selection(h);
    ++scanned;
    if (fast.has_value() != slow.has_value()) {
      if (mismatch.empty()) {
        std::ostringstream out;
        out << "disagreement on " << serialize_json(h);
        mismatch = out.str();
      }
      return;
    }
    if (fast) {
      ++feasible;
      validate_selection(h, *fast);
      validate_selection(h, *slow);
    }
  };

  // Exhaustive shapes: every multiset of m edges (sizes 2..4) over n
  // vertices, nondecreasing in candidate order so each multiset appears
  // once.
  auto enumerate = [&](int n, int max_m) {
    std::vector<std::vector<VertexId>> cands = subsets_of_size(n, 2, 4);
    std::vector<std::vector<VertexId>> edges;
    auto rec = [&](auto&& self, std::size_t first, int left) -> void {
      if (!edges.empty()) compare(Hypergraph(n, edges));
      if (left == 0) return;
      for (std::size_t i = first; i < cands.size(); ++i) {
        edges.push_back(cands[i]);
        self(self, i, left - 1);
        edges.pop_back();
      }
    };
    rec(rec, 0, max_m);
  };
  for (int n = 2; n <= 4; ++n) enumerate(n, 4);
  enumerate(5, 3);

  // Seeded random instances on up to 8 vertices.
  SplitMix64 rng(500123);
  std::vector<VertexId> ids;
  for (int i = 0; i < 500; ++i) {
    int n = 2 + static_cast<int>(rng.below(7));
    int m = 1 + static_cast<int>(rng.below(4));
    std::vector<std::vector<VertexId>> edges;
    for (int e = 0; e < m; ++e) {
      int s = std::min(n, 2 + static_cast<int>(rng.below(3)));
      ids.resize(n);
      for (int v = 0; v < n; ++v) ids[v] = v;
      shuffle(ids, rng);
      std::vector<VertexId> edge(ids.begin(), ids.begin() + s);
      std::sort(edge.begin(), edge.end());
      edges.push_back(std::move(edge));
    }
    compare(Hypergraph(n, std::move(edges)));
  }

  if (!mismatch.empty()) return fail(mismatch);
  std::ostringstream out;
  out << scanned << " instances compared (" << feasible
      << " feasible), zero disagreements";
  return pass(out.str());
}

// ---------------------------------------------------------------------------
// 3. Small-order tour constructions: on instances whose every edge pair
//    intersects deeply (n <= 2k-3) and on the three-edge design, the
//    constructive routines emit a verified tour through every edge.
Outcome check_constructions() {
  int built = 0;
  auto require_tour = [&](const Hypergraph& h, const ClosedTrail& tour,
                          const std::string& label) -> std::optional<Outcome> {
    VerifyResult res = verify_family(h, EulerFamily{{tour}});
    if (!res.accepted)
      return fail(label + ": tour rejected (" + res.reason + ")");
    if (tour.length() != h.size())
      return fail(label + ": tour misses edges");
    return std::nullopt;
  };

  // The three-edge design, via the explicit branch.
  Hypergraph design = gen_named("design_4_6");
  std::optional<ClosedTrail> dt = solve_small_cases(design);
  if (!dt) return fail("design_4_6: no tour constructed");
  if (auto bad = require_tour(design, *dt, "design_4_6")) return *bad;
  ++built;

  // Every (n,k,l) cell with n <= 2k-3 and k in {4,5}: the greedy cover and
  // twelve seeded random covers each.
  struct Cell {
    int n, k, l;
  };
  std::vector<Cell> cells;
  for (int k : {4, 5})
    for (int n = k + 1; n <= 2 * k - 3; ++n)
      for (int l = 2; l < k; ++l) cells.push_back({n, k, l});

  for (const Cell& cell : cells) {
    std::vector<std::optional<std::uint64_t>> seeds = {std::nullopt};
    for (std::uint64_t s = 1; s <= 12; ++s) seeds.push_back(s);
    for (const auto& seed : seeds) {
      Hypergraph h = gen_cover(cell.n, cell.k, cell.l, seed);
      std::ostringstream label;
      label << "cover n=" << cell.n << " k=" << cell.k << " l=" << cell.l
            << " seed=" << (seed ? std::to_string(*seed) : "greedy");
      if (h.size() < 2) continue;  // a single edge is outside the hypotheses
      ClosedTrail direct = tour_intersecting(h);
      if (auto bad = require_tour(h, direct, label.str())) return *bad;
      std::optional<ClosedTrail> small = solve_small_cases(h);
      if (!small) return fail(label.str() + ": delegation returned nothing");
      if (auto bad = require_tour(h, *small, label.str())) return *bad;
      ++built;
    }
  }

  if (built < 100)
    return fail("only " + std::to_string(built) + " instances (need >= 100)");
  return pass(std::to_string(built) + " tours constructed and verified");
}

// ---------------------------------------------------------------------------
// 4. The closed-form component pair-sum maximizer equals the brute-force
//    maximum on every valid (n, k, q) triple in the sweep window.
Outcome check_pairsum_sweep() {
  int checked = 0;
  for (int k = 1; k <= 5; ++k)
    for (int q = 1; q <= 4; ++q)
      for (int n = q * k; n <= 20; ++n) {
        PairSumResult closed = max_component_pairsum(n, k, q);
        PairSumResult brute = max_component_pairsum_brute(n, k, q);
        ++checked;
        if (closed.value != brute.value || closed.parts != brute.parts) {
          std::ostringstream out;
          out << "mismatch at n=" << n << " k=" << k << " q=" << q << ": "
              << closed.value << " vs " << brute.value;
          return fail(out.str());
        }
      }
  return pass(std::to_string(checked) + " triples, exact agreement");
}

// ---------------------------------------------------------------------------
// 5. Edge-count lower bound m >= 2*floor((n+3)/k) on every generated
//    2-covering instance with k >= 4, 2n > 3k, m >= 2 — recomputed from the
//    instances themselves, not trusted from the corpus report.
// 6. No cut edges in any generated 2-covering instance with k >= 4, m >= 2.
Outcome check_edge_bound(const std::vector<Hypergraph>& instances,
                         const std::vector<std::string>& keys) {
  int checked = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Hypergraph& h = instances[i];
    std::optional<int> k = uniform_cardinality(h);
    if (!k || *k < 4 || h.size() < 2) continue;
    if (2 * h.order() <= 3 * *k) continue;
    if (!is_l_covering(h, 2)) continue;
    ++checked;
    int bound = 2 * ((h.order() + 3) / *k);
    if (h.size() < bound) {
      std::ostringstream out;
      out << keys[i] << ": m=" << h.size() << " below bound " << bound;
      return fail(out.str());
    }
  }
  if (checked < 50)
    return fail("only " + std::to_string(checked) + " instances in scope");
  return pass(std::to_string(checked) + " instances meet the bound");
}

Outcome check_no_cut_edges(const std::vector<Hypergraph>& instances,
                           const std::vector<std::string>& keys) {
  int checked = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Hypergraph& h = instances[i];
    std::optional<int> k = uniform_cardinality(h);
    if (!k || *k < 4 || h.size() < 2) continue;
    if (!is_l_covering(h, 2)) continue;
    ++checked;
    for (EdgeId e = 0; e < h.size(); ++e)
      if (is_cut_edge(h, e))
        return fail(keys[i] + ": edge " + std::to_string(e) + " is a cut edge");
  }
  if (checked < 100)
    return fail("only " + std::to_string(checked) + " instances in scope");
  return pass(std::to_string(checked) + " instances, no cut edge anywhere");
}

// ---------------------------------------------------------------------------
// 7. Feasibility audit: the exhaustive e-node scan of the deficiency
//    functional never goes negative on corpus instances that pass the
//    no-cut-edge and exhaustive X-condition hypotheses; on a single edge it
//    bottoms out at exactly -2 with the edge node as witness.
Outcome check_audit(const CorpusReport& report) {
  int audited = 0;
  int singles = 0;
  for (const InstanceRow& row : report.rows) {
    if (row.audit_ran && row.audit_hypotheses_pass) {
      ++audited;
      if (row.audit_min_gamma < 0)
        return fail(row.key + ": audit minimum " +
                    std::to_string(row.audit_min_gamma) + " < 0");
    }
    if (row.audit_ran && row.m == 1) {
      ++singles;
      if (row.audit_min_gamma != -2)
        return fail(row.key + ": single-edge audit minimum " +
                    std::to_string(row.audit_min_gamma) + " != -2");
    }
  }
  if (audited < 50)
    return fail("only " + std::to_string(audited) +
                " instances passed the audit hypotheses");
  if (singles < 1) return fail("no single-edge instance in the corpus");

  // The witness structure, checked directly against the library.
  AuditReport lone =
      audit_lovasz(Hypergraph(3, {{0, 1, 2}}), AuditMode::exhaustive_e);
  if (lone.minimum.gamma != -2)
    return fail("single-edge minimum is " +
                std::to_string(lone.minimum.gamma) + ", expected -2");
  if (!lone.minimum.s_nodes.empty() ||
      lone.minimum.t_nodes != std::vector<int>{3})
    return fail("single-edge witness is not T = {edge node}");

  std::ostringstream out;
  out << audited << " audited instances nonnegative; " << singles
      << " single-edge instances at exactly -2";
  return pass(out.str());
}

// ---------------------------------------------------------------------------
// 8. Byte-identical reruns of the CLI: solve, gen, and corpus.
std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome check_cli_determinism(const std::string& cli,
                              const std::filesystem::path& work) {
  auto run = [&](const std::string& args,
                 const std::filesystem::path& out) -> bool {
    std::string cmd = "\"" + cli + "\" " + args + " > \"" + out.string() +
                      "\" 2> \"" + (work / "stderr.log").string() + "\"";
    return std::system(cmd.c_str()) == 0;
  };

  std::filesystem::path input = work / "design.json";
  if (!run("gen --kind named --name design_4_6", input))
    return fail("gen (named) failed");

  struct Job {
    std::string label;
    std::string args;
  };
  std::vector<Job> jobs = {
      {"solve", "solve \"" + input.string() +
                    "\" --strategy reduce --emit-factor --emit-trace --json"},
      {"gen", "gen --kind random_cover --n 9 --k 4 --l 2 --seed 17"},
      {"corpus", "corpus default"},
  };
  for (const Job& job : jobs) {
    std::filesystem::path first = work / (job.label + ".1");
    std::filesystem::path second = work / (job.label + ".2");
    if (!run(job.args, first) || !run(job.args, second))
      return fail(job.label + ": CLI run failed");
    std::string a = slurp(first);
    std::string b = slurp(second);
    if (a.empty()) return fail(job.label + ": empty output");
    if (a != b) return fail(job.label + ": reruns differ");
  }
  return pass("solve, gen, and corpus each byte-identical across reruns");
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::string workdir;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--cli") cli = argv[i + 1];
    else if (flag == "--workdir") workdir = argv[i + 1];
  }
  if (cli.empty() || workdir.empty()) {
    std::cerr << "usage: acceptance --cli PATH --workdir DIR\n";
    return 2;
  }
  std::filesystem::create_directories(workdir);

  // Shared work: the default corpus (checks 1 and 7) and its instantiated
  // hypergraphs (checks 5 and 6).
  CorpusSpec spec = default_corpus_spec();
  auto start = std::chrono::steady_clock::now();
  CorpusReport report = run_corpus(spec);
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::vector<Hypergraph> instances;
  std::vector<std::string> keys;
  for (const GeneratorSpec& g : spec.instances) {
    instances.push_back(instantiate(g));
    keys.push_back(g.key());
  }

  struct Check {
    std::string label;
    Outcome outcome;
  };
  std::vector<Check> checks;
  auto guard = [&](const std::string& label, auto&& fn) {
    Outcome outcome;
    try {
      outcome = fn();
    } catch (const std::exception& err) {
      outcome = fail(std::string("exception: ") + err.what());
    }
    checks.push_back({label, std::move(outcome)});
  };

  guard("corpus solved and verified by both strategies",
        [&] { return check_corpus_solves(report, seconds); });
  guard("factor solver matches the exhaustive oracle",
        [] { return check_oracle_agreement(); });
  guard("small-order tour constructions verify",
        [] { return check_constructions(); });
  guard("pair-sum closed form equals brute force",
        [] { return check_pairsum_sweep(); });
  guard("edge-count lower bound holds",
        [&] { return check_edge_bound(instances, keys); });
  guard("no cut edges in covering instances",
        [&] { return check_no_cut_edges(instances, keys); });
  guard("deficiency audit nonnegative under hypotheses, -2 on a single edge",
        [&] { return check_audit(report); });
  guard("CLI reruns byte-identical",
        [&] { return check_cli_determinism(cli, workdir); });

  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Check& c = checks[i];
    if (!c.outcome.pass) ++failures;
    std::cout << (c.outcome.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << ". "
              << c.label << ": " << c.outcome.detail << "\n";
  }
  std::cout << (failures == 0 ? "acceptance: all 8 checks passed\n"
                              : "acceptance: " + std::to_string(failures) +
                                    " of 8 checks FAILED\n");
  return failures == 0 ? 0 : 1;
}
