#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eulerfam/generators.hpp"
#include "eulerfam/hypergraph.hpp"

namespace eulerfam {

/// Recipe for one corpus instance.
struct GeneratorSpec {
  enum class Kind { complete, greedy_cover, random_cover, named };
  Kind kind = Kind::complete;
  int n = 0;
  int k = 0;
  int l = 0;  // covering parameter the instance promises; k-1 for complete
  std::optional<std::uint64_t> seed;  // required for random_cover
  std::string name;                   // required for named

  /// Stable identity used to sort and address report rows.
  std::string key() const;
};

Hypergraph instantiate(const GeneratorSpec& spec);

struct CorpusOptions {
  int tour_max_edges = 6;          // exact tour search only below this m
  long long tour_budget = 1'000'000;
  long long audit_guard = 1'000'000;   // exhaustive audit when 3^m fits
  long long x_sweep_guard = 1 << 16;   // exhaustive X-condition when 2^m fits
  long long audit_samples = 0;         // sampled-V draws per audited instance
  std::uint64_t audit_seed = 0;
};

struct CorpusSpec {
  std::vector<GeneratorSpec> instances;
  CorpusOptions options;
};

/// The built-in corpus: greedy covers for every 2 <= l < k <= 6 and
/// k <= n <= 12, seeded random covers on a spread of orders, complete
/// k-subset hypergraphs, and the built-in named instances.
CorpusSpec default_corpus_spec();

CorpusSpec corpus_spec_from_json(const std::string& text);

/// Everything measured for one instance.  Fields that did not run (guards,
/// inapplicable bounds) stay at their inert defaults with the matching
/// *_ran / *_applicable flag false.
struct InstanceRow {
  std::string key;
  std::string kind;
  int n = 0, k = 0, l = 0;
  std::optional<std::uint64_t> seed;
  std::string name;

  int m = 0;
  bool is_covering = false;
  bool covering_monotone_ok = true;
  bool expected_infeasible = false;  // m <= 1: no closed trail can exist

  bool direct_feasible = false;
  bool direct_verified = false;
  int direct_trails = 0;
  bool reduce_feasible = false;
  bool reduce_verified = false;
  int reduce_trails = 0;
  int reduce_steps = 0;
  bool strategies_agree = true;

  bool no_cut_edges_applicable = false;
  bool no_cut_edges_ok = true;
  bool min_edges_applicable = false;
  int min_edges_bound_value = 0;
  bool min_edges_ok = true;

  bool x_sweep_ran = false;
  bool x_all_hold = false;
  long long x_subsets_checked = 0;

  bool audit_ran = false;
  bool audit_hypotheses_pass = false;
  long long audit_min_gamma = 0;     // r = 2(m+n)^2
  long long audit_min_gamma_r0 = 0;  // minimal even loop count
  bool audit_ok = true;

  bool tour_ran = false;
  std::string tour_status;

  /// Empty when the row met every expectation; otherwise all reasons,
  /// separated by "; ".
  std::string failure;
};

struct CorpusAggregate {
  int instances = 0;
  int eligible = 0;  // m >= 2 covering instances the solver must decide
  int solved_and_verified_both = 0;
  int expected_infeasible = 0;
  int failures = 0;
  bool strategies_agree_everywhere = true;
  bool pass = false;
};

struct CorpusReport {
  std::vector<InstanceRow> rows;  // sorted by key
  CorpusAggregate aggregate;
  CorpusOptions options;
};

CorpusReport run_corpus(const CorpusSpec& spec);

/// Deterministic JSON rendering (rows sorted, fixed key order, no clocks).
std::string corpus_report_to_json(const CorpusReport& report);

}  // namespace eulerfam
