#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "eulerfam/hypergraph.hpp"
#include "eulerfam/incidence.hpp"

namespace eulerfam {

/// Per-edge choice of two incident vertices such that every vertex is chosen
/// an even number of times.  This is the combinatorial form of a spanning
/// subgraph of the incidence graph with degree 2 at every e-node and even
/// degree at every v-node; its existence is what makes a hypergraph
/// decomposable into closed trails.
struct FactorSelection {
  /// choice[e] = the two chosen vertices of edge e, stored ascending.
  std::vector<std::pair<VertexId, VertexId>> choice;
};

/// Throws InvariantError unless `sel` is a valid selection for `h`:
/// one pair per edge, both vertices distinct members of the edge, and every
/// vertex chosen an even number of times.
void validate_selection(const Hypergraph& h, const FactorSelection& sel);

/// Auxiliary matching instance whose perfect matchings correspond one-to-one
/// with factor selections.
///
/// Per e-node of degree k: k "external" nodes (one per incidence) and k-2
/// "core" nodes, joined complete-bipartite.  A core absorbs one external;
/// the two externals left over are exactly the two incidences the e-node
/// keeps.  Per v-node of degree d: d external nodes (one per incidence)
/// forming a clique, plus — when d is odd — one "aux" node adjacent to all
/// of them.  Clique edges absorb externals in pairs, so the number of
/// unmatched-within-the-gadget externals (= incidences kept at v) is even.
struct GadgetGraph {
  enum class NodeKind : std::uint8_t { e_external, e_core, v_external, v_aux };
  struct Node {
    NodeKind kind;
    int owner;  // edge id or vertex id the gadget belongs to
  };
  /// One per incidence (v, e): the gadget nodes representing it on each side.
  struct Incidence {
    VertexId v;
    EdgeId e;
    int v_external;
    int e_external;
  };

  std::vector<Node> nodes;
  std::vector<std::vector<int>> adj;
  std::vector<Incidence> incidences;
  std::size_t edge_count = 0;

  int node_count() const { return static_cast<int>(nodes.size()); }
};

/// Builds the matching gadget.  Throws PreconditionError when some e-node
/// has degree < 2 (an edge with fewer than two vertices can never carry a
/// pair choice).
GadgetGraph build_gadget(const IncidenceGraph& g);

/// Maximum matching on the gadget, as sorted (low, high) node pairs.
std::vector<std::pair<int, int>> max_matching(const GadgetGraph& gadget);

/// Decides whether `h` admits a factor selection and constructs one when it
/// does.  Requires every edge to have at least 2 vertices.  nullopt means
/// infeasible (equivalently: h has no Euler family).
std::optional<FactorSelection> solve_even_two_factor(const Hypergraph& h);

/// Exhaustive oracle: tries every per-edge pair choice in lexicographic
/// order and returns the first valid selection.  Guard: refuses when
/// Π_e C(|e|,2) exceeds `guard` (default 10⁷).
std::optional<FactorSelection> brute_force_selection(
    const Hypergraph& h, long long guard = 10'000'000);

/// JSON object mapping edge id → [v, w]; inverse of selection_from_json.
std::string selection_to_json(const FactorSelection& sel);
FactorSelection selection_from_json(const std::string& text);

}  // namespace eulerfam
