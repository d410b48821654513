#include "eulerfam/incidence.hpp"

namespace eulerfam {

IncidenceGraph incidence_graph(const Hypergraph& h) {
  IncidenceGraph g;
  g.n = h.order();
  g.m = h.size();
  g.adj.assign(g.n + g.m, {});
  for (EdgeId e = 0; e < h.size(); ++e) {
    for (VertexId v : h.edge(e)) {
      g.adj[v].push_back(g.e_node(e));
      g.adj[g.e_node(e)].push_back(v);
    }
  }
  // Edge vertices are stored ascending and edges are visited in id order, so
  // every list is already sorted.
  return g;
}

}  // namespace eulerfam
