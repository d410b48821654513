// eulerfam: decide, construct, verify, and audit Euler families of
// hypergraphs.  One binary, subcommand per task; all configuration through
// flags, no environment variables.
//
// Exit codes
//   check   0 structure printed and every requested predicate holds; 1 else
//   solve   0 family found / 2 infeasible / 1 error
//   tour    0 tour found (or no edges) / 2 none exists / 3 budget / 1 error
//   verify  0 accepted / 1 rejected or error
//   gen     0 / 1 error
//   audit   0 / 1 error
//   corpus  0 aggregate pass / 1 failures or error

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerfam/analysis.hpp"
#include "eulerfam/corpus.hpp"
#include "eulerfam/covering.hpp"
#include "eulerfam/factor.hpp"
#include "eulerfam/generators.hpp"
#include "eulerfam/hypergraph.hpp"
#include "eulerfam/incidence.hpp"
#include "eulerfam/io.hpp"
#include "eulerfam/trails.hpp"

namespace {

using namespace eulerfam;

int run_check(const std::string& path, std::optional<int> l) {
  Hypergraph h = parse(read_file(path));
  nlohmann::json doc;
  doc["order"] = h.order();
  doc["size"] = h.size();
  std::optional<int> k = uniform_cardinality(h);
  if (k)
    doc["uniform"] = *k;
  else
    doc["uniform"] = nullptr;
  doc["components"] = components(h).count;
  doc["connected"] = is_connected(h);
  std::vector<EdgeId> cut;
  for (EdgeId e = 0; e < h.size(); ++e)
    if (is_cut_edge(h, e)) cut.push_back(e);
  doc["cut_edges"] = cut;

  bool requested_hold = true;
  if (l) {
    bool holds = is_l_covering(h, *l);
    nlohmann::json cov;
    cov["l"] = *l;
    cov["holds"] = holds;
    if (holds) {
      cov["uncovered"] = nullptr;
    } else {
      cov["uncovered"] = *first_uncovered_subset(h, *l);
      requested_hold = false;
    }
    doc["covering"] = std::move(cov);
  }
  std::cout << doc.dump(2) << "\n";
  return requested_hold ? 0 : 1;
}

int run_solve(const std::string& path, const std::string& strategy,
              std::optional<int> l, bool emit_factor, bool emit_trace,
              bool as_json) {
  Hypergraph h = parse(read_file(path));
  for (EdgeId e = 0; e < h.size(); ++e) {
    if (h.edge(e).size() < 2) {
      std::cerr << "infeasible: edge " << e
                << " has fewer than two vertices and cannot be traversed\n";
      return 2;
    }
  }

  std::optional<EulerFamily> family;
  ReductionTrace trace;
  if (strategy == "direct") {
    // The factor route works on arbitrary hypergraphs, covering or not.
    std::optional<FactorSelection> sel = solve_even_two_factor(h);
    if (sel) family = extract_family(incidence_graph(h), *sel);
  } else {
    int ell = 0;
    if (l) {
      ell = *l;
    } else {
      std::optional<int> k = uniform_cardinality(h);
      if (!k) {
        std::cerr << "error: the reduce strategy needs a uniform hypergraph\n";
        return 1;
      }
      for (int cand = *k - 1; cand >= 2; --cand) {
        if (is_l_covering(h, cand)) {
          ell = cand;
          break;
        }
      }
      if (ell == 0) {
        std::cerr << "error: instance is not l-covering for any 2 <= l < k; "
                     "pass --l explicitly\n";
        return 1;
      }
    }
    SolveResult res = solve_l_covering(h, ell, Strategy::reduce);
    family = std::move(res.family);
    trace = std::move(res.trace);
  }

  if (!family) {
    std::cerr << "infeasible: no Euler family exists\n";
    return 2;
  }
  if (as_json || emit_factor || emit_trace) {
    nlohmann::json doc;
    doc["family"] = nlohmann::json::parse(family_to_json(*family));
    if (emit_factor) {
      FactorSelection sel = selection_from_family(h, *family);
      doc["factor"] = nlohmann::json::parse(selection_to_json(sel));
    }
    if (emit_trace)
      doc["trace"] = nlohmann::json::parse(trace_to_json(trace));
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << family_to_text(h, *family);
  }
  return 0;
}

int run_tour(const std::string& path, long long budget) {
  Hypergraph h = parse(read_file(path));
  if (h.size() == 0) return 0;  // no edges: nothing to traverse
  if (h.size() == 1) {
    std::cerr << "no tour: a single edge admits no closed trail\n";
    return 2;
  }
  TourResult res = euler_tour_exact(h, budget);
  switch (res.status) {
    case TourStatus::found:
      std::cout << family_to_text(h, EulerFamily{{*res.tour}});
      return 0;
    case TourStatus::none:
      std::cerr << "no Euler tour exists (search exhausted after "
                << res.nodes_explored << " nodes)\n";
      return 2;
    case TourStatus::budget_exceeded:
      std::cerr << "undecided: budget of " << budget
                << " search nodes exhausted\n";
      return 3;
  }
  return 1;
}

int run_verify(const std::string& hpath, const std::string& fpath) {
  Hypergraph h = parse(read_file(hpath));
  EulerFamily family = parse_family(h, read_file(fpath));
  VerifyResult res = verify_family(h, family);
  if (res.accepted) {
    std::cout << "accepted\n";
    return 0;
  }
  std::cout << "rejected: " << res.reason << "\n";
  return 1;
}

int run_gen(const std::string& kind, int n, int k, int l,
            std::optional<std::uint64_t> seed, const std::string& name,
            bool as_text) {
  GeneratorSpec g;
  if (kind == "complete")
    g.kind = GeneratorSpec::Kind::complete;
  else if (kind == "greedy_cover")
    g.kind = GeneratorSpec::Kind::greedy_cover;
  else if (kind == "random_cover")
    g.kind = GeneratorSpec::Kind::random_cover;
  else
    g.kind = GeneratorSpec::Kind::named;
  g.n = n;
  g.k = k;
  g.l = l;
  g.seed = seed;
  g.name = name;
  Hypergraph h = instantiate(g);
  std::cout << (as_text ? serialize_text(h) : serialize_json(h));
  return 0;
}

int run_audit(const std::string& path, const std::string& mode_str,
              std::optional<long long> r, long long samples,
              std::uint64_t seed, long long guard) {
  Hypergraph h = parse(read_file(path));
  AuditMode mode = mode_str == "sampled_v" ? AuditMode::sampled_v
                                           : AuditMode::exhaustive_e;
  AuditReport report = audit_lovasz(h, mode, r, samples, seed, guard);
  std::cout << audit_to_json(report);
  return 0;
}

int run_corpus_cmd(const std::string& spec_arg) {
  CorpusSpec spec = spec_arg == "default"
                        ? default_corpus_spec()
                        : corpus_spec_from_json(read_file(spec_arg));
  CorpusReport report = run_corpus(spec);
  std::cout << corpus_report_to_json(report);
  return report.aggregate.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler families of hypergraphs: decide, construct, verify, "
               "and audit"};
  app.require_subcommand(1);
  int code = 0;

  // check
  std::string check_file;
  std::optional<int> check_l;
  CLI::App* check = app.add_subcommand(
      "check", "Structural report: uniformity, covering, components, "
               "cut edges");
  check->add_option("file", check_file, "hypergraph file")->required();
  check->add_option("--l", check_l, "also require the l-covering property");
  check->callback([&]() { code = run_check(check_file, check_l); });

  // solve
  std::string solve_file, solve_strategy = "direct";
  std::optional<int> solve_l;
  bool solve_factor = false, solve_trace = false, solve_json = false;
  CLI::App* solve = app.add_subcommand(
      "solve", "Construct an Euler family (exit 2 when none exists)");
  solve->add_option("file", solve_file, "hypergraph file")->required();
  solve->add_option("--strategy", solve_strategy, "direct | reduce")
      ->check(CLI::IsMember({"direct", "reduce"}));
  solve->add_option("--l", solve_l,
                    "covering parameter for the reduce strategy "
                    "(largest valid value inferred when omitted)");
  solve->add_flag("--emit-factor", solve_factor,
                  "include the per-edge anchor-pair selection (JSON output)");
  solve->add_flag("--emit-trace", solve_trace,
                  "include the vertex-deletion trace (JSON output)");
  solve->add_flag("--json", solve_json, "JSON output instead of trail lines");
  solve->callback([&]() {
    code = run_solve(solve_file, solve_strategy, solve_l, solve_factor,
                     solve_trace, solve_json);
  });

  // tour
  std::string tour_file;
  long long tour_budget = 1'000'000;
  CLI::App* tour = app.add_subcommand(
      "tour", "Exact Euler tour search (exit 2 none / 3 budget exhausted)");
  tour->add_option("file", tour_file, "hypergraph file")->required();
  tour->add_option("--budget", tour_budget, "search-node budget");
  tour->callback([&]() { code = run_tour(tour_file, tour_budget); });

  // verify
  std::string verify_file, verify_family_file;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check a family certificate (exit 0 accepted / 1 rejected)");
  verify->add_option("file", verify_file, "hypergraph file")->required();
  verify->add_option("--family", verify_family_file, "family file")
      ->required();
  verify->callback([&]() { code = run_verify(verify_file, verify_family_file); });

  // gen
  std::string gen_kind, gen_name;
  int gen_n = 0, gen_k = 0, gen_l = 0;
  std::optional<std::uint64_t> gen_seed;
  bool gen_text = false;
  CLI::App* gen = app.add_subcommand("gen", "Generate a hypergraph");
  gen->add_option("--kind", gen_kind,
                  "complete | greedy_cover | random_cover | named")
      ->required()
      ->check(CLI::IsMember(
          {"complete", "greedy_cover", "random_cover", "named"}));
  gen->add_option("--n", gen_n, "number of vertices");
  gen->add_option("--k", gen_k, "edge cardinality");
  gen->add_option("--l", gen_l, "covering parameter (cover kinds)");
  gen->add_option("--seed", gen_seed, "seed (required for random_cover)");
  gen->add_option("--name", gen_name, "design_4_6 | fano_like");
  gen->add_flag("--text", gen_text, "plain-text output instead of JSON");
  gen->callback([&]() {
    code = run_gen(gen_kind, gen_n, gen_k, gen_l, gen_seed, gen_name,
                   gen_text);
  });

  // audit
  std::string audit_file, audit_mode = "exhaustive_e";
  std::optional<long long> audit_r;
  long long audit_samples = 10'000, audit_guard = 1'000'000;
  std::uint64_t audit_seed = 0;
  CLI::App* audit = app.add_subcommand(
      "audit", "Minimum of the factor-deficiency functional gamma(S,T)");
  audit->add_option("file", audit_file, "hypergraph file")->required();
  audit->add_option("--mode", audit_mode, "exhaustive_e | sampled_v")
      ->check(CLI::IsMember({"exhaustive_e", "sampled_v"}));
  audit->add_option("--r", audit_r,
                    "loop multiplicity (default 2(m+n)^2, must be even to "
                    "model even vertex degrees)");
  audit->add_option("--samples", audit_samples, "sampled-mode draw count");
  audit->add_option("--seed", audit_seed, "sampled-mode seed");
  audit->add_option("--guard", audit_guard,
                    "refuse exhaustive enumeration beyond 3^m > guard");
  audit->callback([&]() {
    code = run_audit(audit_file, audit_mode, audit_r, audit_samples,
                     audit_seed, audit_guard);
  });

  // corpus
  std::string corpus_spec_arg;
  CLI::App* corpus = app.add_subcommand(
      "corpus", "Run a whole instance corpus and print the report");
  corpus
      ->add_option("spec", corpus_spec_arg,
                   "spec file, or the literal word 'default'")
      ->required();
  corpus->callback([&]() { code = run_corpus_cmd(corpus_spec_arg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 1;
  } catch (const eulerfam::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
