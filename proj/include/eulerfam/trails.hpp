#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulerfam/factor.hpp"
#include "eulerfam/hypergraph.hpp"
#include "eulerfam/incidence.hpp"

namespace eulerfam {

/// Closed trail v0 e1 v1 e2 ... et v0 through a hypergraph: edges[i] joins
/// anchors[i] and anchors[(i+1) % t], consecutive anchors are distinct and
/// both lie in the connecting edge, and all edge ids are distinct.  t >= 2.
struct ClosedTrail {
  std::vector<VertexId> anchors;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(edges.size()); }
};

/// A set of pairwise anchor-disjoint, edge-disjoint closed trails that
/// together traverse every edge of the hypergraph exactly once.
struct EulerFamily {
  std::vector<ClosedTrail> trails;
};

/// Outcome of certificate checking; rejection names the first violated
/// clause rather than throwing, since "not a family" is an answer.
struct VerifyResult {
  bool accepted = false;
  std::string reason;  // empty iff accepted
};

/// Checks every ClosedTrail invariant, anchor-disjointness across trails,
/// and that the trails' edge ids partition {0..m-1}.
VerifyResult verify_family(const Hypergraph& h, const EulerFamily& family);

/// Decomposes the spanning subgraph selected by `sel` into closed trails,
/// one per non-trivial connected component (Hierholzer, lowest-id incidence
/// first — fully deterministic).  The result always passes verify_family.
EulerFamily extract_family(const IncidenceGraph& g, const FactorSelection& sel);

/// The selection induced by a family: each trail edge gets the anchor pair
/// it connects.  Inverse direction of extract_family.
FactorSelection selection_from_family(const Hypergraph& h,
                                      const EulerFamily& family);

/// Canonical form of a trail: the lexicographically smallest interleaved
/// (anchor, edge, anchor, ...) sequence over all rotations and both
/// directions.  Families additionally sort their trails.
ClosedTrail normalized(const ClosedTrail& trail);
EulerFamily normalized(const EulerFamily& family);

enum class TourStatus { found, none, budget_exceeded };

struct TourResult {
  TourStatus status = TourStatus::none;
  std::optional<ClosedTrail> tour;
  long long nodes_explored = 0;
};

/// Exact search for an Euler tour: backtracks over per-edge pair choices
/// looking for a selection whose subgraph has a single non-trivial
/// component.  Deciding existence is NP-complete in general, so the search
/// carries an explicit budget (count of search nodes); exceeding it returns
/// budget_exceeded, which means "unknown", not "none".  Requires m >= 2.
TourResult euler_tour_exact(const Hypergraph& h, long long budget = 1'000'000);

/// Text form, one line per trail: `v0 (e1) v1 (e2) ... v0` with vertex
/// names and edge ids.  Trails and rotations are normalized first.
std::string family_to_text(const Hypergraph& h, const EulerFamily& family);
/// JSON form: {"trails": [{"anchors": [...], "edges": [...]}, ...]} with
/// vertex ids (not labels).  Normalized like the text form.
std::string family_to_json(const EulerFamily& family);

/// Parses either family form (auto-detected like hypergraph parse).
EulerFamily parse_family(const Hypergraph& h, const std::string& text);

}  // namespace eulerfam
