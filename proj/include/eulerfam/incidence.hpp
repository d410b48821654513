#pragma once

#include <vector>

#include "eulerfam/hypergraph.hpp"

namespace eulerfam {

/// Bipartite incidence graph of a hypergraph: v-nodes 0..n-1 (one per
/// vertex, in vertex order) followed by e-nodes n..n+m-1 (one per edge, in
/// edge-id order); a v-node and an e-node are adjacent iff the vertex lies
/// in the edge.  Adjacency lists are sorted ascending.
struct IncidenceGraph {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> adj;

  int node_count() const { return n + m; }
  bool is_v_node(int node) const { return node < n; }
  int v_node(VertexId v) const { return v; }
  int e_node(EdgeId e) const { return n + e; }
  EdgeId edge_of(int node) const { return node - n; }
  int degree(int node) const { return static_cast<int>(adj[node].size()); }
};

IncidenceGraph incidence_graph(const Hypergraph& h);

}  // namespace eulerfam
