#include "eulerfam/factor.hpp"

#include <algorithm>

#include <json.hpp>

#include "eulerfam/matching.hpp"

namespace eulerfam {

void validate_selection(const Hypergraph& h, const FactorSelection& sel) {
  if (static_cast<int>(sel.choice.size()) != h.size())
    throw InvariantError("selection must choose a pair for every edge");
  std::vector<int> times_chosen(h.order(), 0);
  for (EdgeId e = 0; e < h.size(); ++e) {
    auto [u, w] = sel.choice[e];
    if (u == w) throw InvariantError("selection pair vertices must differ");
    if (u < 0 || u >= h.order() || w < 0 || w >= h.order())
      throw InvariantError("selection vertex out of range");
    if (!h.edge_contains(e, u) || !h.edge_contains(e, w))
      throw InvariantError("selection pair must lie inside its edge");
    ++times_chosen[u];
    ++times_chosen[w];
  }
  for (VertexId v = 0; v < h.order(); ++v)
    if (times_chosen[v] % 2 != 0)
      throw InvariantError("vertex chosen an odd number of times");
}

GadgetGraph build_gadget(const IncidenceGraph& g) {
  GadgetGraph gadget;
  auto add_node = [&](GadgetGraph::NodeKind kind, int owner) {
    gadget.nodes.push_back({kind, owner});
    gadget.adj.emplace_back();
    return gadget.node_count() - 1;
  };
  auto link = [&](int a, int b) {
    gadget.adj[a].push_back(b);
    gadget.adj[b].push_back(a);
    ++gadget.edge_count;
  };

  // One incidence record per (vertex, edge) membership, grouped by edge.
  for (EdgeId e = 0; e < g.m; ++e) {
    if (g.degree(g.e_node(e)) < 2)
      throw PreconditionError("edge with fewer than two vertices");
    for (int v : g.adj[g.e_node(e)])
      gadget.incidences.push_back({v, e, -1, -1});
  }

  // Edge gadgets: k externals + (k-2) cores, complete bipartite.  Cores
  // absorb all but two externals; the two survivors are the incidences the
  // edge keeps in the selection.
  std::size_t idx = 0;
  for (EdgeId e = 0; e < g.m; ++e) {
    int k = g.degree(g.e_node(e));
    std::vector<int> externals;
    for (int i = 0; i < k; ++i)
      externals.push_back(
          add_node(GadgetGraph::NodeKind::e_external, e));
    for (int c = 0; c < k - 2; ++c) {
      int core = add_node(GadgetGraph::NodeKind::e_core, e);
      for (int ext : externals) link(core, ext);
    }
    for (int i = 0; i < k; ++i) gadget.incidences[idx + i].e_external = externals[i];
    idx += k;
  }

  // Vertex gadgets: a clique over the externals absorbs kept-incidence
  // complements in pairs, so the count of incidences kept at the vertex is
  // even; an odd-degree vertex gets one aux node to fix the parity.
  std::vector<std::vector<std::size_t>> by_vertex(g.n);
  for (std::size_t i = 0; i < gadget.incidences.size(); ++i)
    by_vertex[gadget.incidences[i].v].push_back(i);
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> externals;
    for (std::size_t i : by_vertex[v]) {
      int ext = add_node(GadgetGraph::NodeKind::v_external, v);
      gadget.incidences[i].v_external = ext;
      externals.push_back(ext);
    }
    for (std::size_t a = 0; a < externals.size(); ++a)
      for (std::size_t b = a + 1; b < externals.size(); ++b)
        link(externals[a], externals[b]);
    if (externals.size() % 2 == 1) {
      int aux = add_node(GadgetGraph::NodeKind::v_aux, v);
      for (int ext : externals) link(aux, ext);
    }
  }

  // The incidence edges themselves: matching one selects that incidence.
  for (const auto& inc : gadget.incidences) link(inc.v_external, inc.e_external);

  for (auto& list : gadget.adj) std::sort(list.begin(), list.end());
  return gadget;
}

std::vector<std::pair<int, int>> max_matching(const GadgetGraph& gadget) {
  std::vector<int> mate = eulerfam::max_matching(gadget.adj);
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < gadget.node_count(); ++v)
    if (mate[v] > v) pairs.emplace_back(v, mate[v]);
  return pairs;
}

std::optional<FactorSelection> solve_even_two_factor(const Hypergraph& h) {
  for (EdgeId e = 0; e < h.size(); ++e)
    if (h.edge(e).size() < 2)
      throw PreconditionError("edge with fewer than two vertices");

  IncidenceGraph g = incidence_graph(h);
  GadgetGraph gadget = build_gadget(g);
  std::vector<int> mate = eulerfam::max_matching(gadget.adj);
  if (2 * matching_size(mate) != gadget.node_count()) return std::nullopt;

  // A perfect matching keeps exactly two incidences per edge (those whose
  // external pair is matched along the incidence edge).
  std::vector<std::vector<VertexId>> kept(h.size());
  for (const auto& inc : gadget.incidences)
    if (mate[inc.v_external] == inc.e_external) kept[inc.e].push_back(inc.v);

  FactorSelection sel;
  sel.choice.reserve(h.size());
  for (EdgeId e = 0; e < h.size(); ++e) {
    if (kept[e].size() != 2)
      throw InvariantError("matching kept a non-pair at an edge gadget");
    sel.choice.emplace_back(std::min(kept[e][0], kept[e][1]),
                            std::max(kept[e][0], kept[e][1]));
  }
  validate_selection(h, sel);
  return sel;
}

std::optional<FactorSelection> brute_force_selection(const Hypergraph& h,
                                                     long long guard) {
  // Candidate pairs per edge, lexicographic.
  std::vector<std::vector<std::pair<VertexId, VertexId>>> pairs(h.size());
  long long total = 1;
  for (EdgeId e = 0; e < h.size(); ++e) {
    const auto& edge = h.edge(e);
    for (std::size_t i = 0; i < edge.size(); ++i)
      for (std::size_t j = i + 1; j < edge.size(); ++j)
        pairs[e].emplace_back(edge[i], edge[j]);
    if (pairs[e].empty()) return std::nullopt;  // edge too small for a pair
    if (total > guard / static_cast<long long>(pairs[e].size()))
      throw GuardError("brute_force_selection: choice space exceeds guard");
    total *= static_cast<long long>(pairs[e].size());
  }
  if (h.size() == 0) return FactorSelection{};

  // Odometer over choice indices; last edge spins fastest.  Parity counts
  // are maintained incrementally; the first all-even assignment wins.
  std::vector<std::size_t> digit(h.size(), 0);
  std::vector<int> count(h.order(), 0);
  int odd_vertices = 0;
  auto bump = [&](VertexId v, int delta) {
    bool was_odd = count[v] % 2 != 0;
    count[v] += delta;
    bool is_odd = count[v] % 2 != 0;
    odd_vertices += static_cast<int>(is_odd) - static_cast<int>(was_odd);
  };
  for (EdgeId e = 0; e < h.size(); ++e) {
    bump(pairs[e][0].first, 1);
    bump(pairs[e][0].second, 1);
  }
  while (true) {
    if (odd_vertices == 0) {
      FactorSelection sel;
      for (EdgeId e = 0; e < h.size(); ++e) sel.choice.push_back(pairs[e][digit[e]]);
      return sel;
    }
    int pos = h.size() - 1;
    while (pos >= 0) {
      bump(pairs[pos][digit[pos]].first, -1);
      bump(pairs[pos][digit[pos]].second, -1);
      if (++digit[pos] < pairs[pos].size()) break;
      digit[pos] = 0;
      bump(pairs[pos][0].first, 1);
      bump(pairs[pos][0].second, 1);
      --pos;
    }
    if (pos < 0) return std::nullopt;
    bump(pairs[pos][digit[pos]].first, 1);
    bump(pairs[pos][digit[pos]].second, 1);
  }
}

std::string selection_to_json(const FactorSelection& sel) {
  nlohmann::json doc = nlohmann::json::object();
  for (std::size_t e = 0; e < sel.choice.size(); ++e)
    doc[std::to_string(e)] = {sel.choice[e].first, sel.choice[e].second};
  return doc.dump(2) + "\n";
}

FactorSelection selection_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object()) throw ParseError("selection must be a JSON object");
  std::vector<std::pair<VertexId, VertexId>> choice(doc.size(), {-1, -1});
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    std::size_t pos = 0;
    long long e = -1;
    try {
      e = std::stoll(it.key(), &pos);
    } catch (const std::exception&) {
    }
    if (pos != it.key().size() || e < 0 || e >= static_cast<long long>(choice.size()))
      throw ParseError("selection keys must be the edge ids 0..m-1");
    const auto& val = it.value();
    if (!val.is_array() || val.size() != 2 || !val[0].is_number_integer() ||
        !val[1].is_number_integer())
      throw ParseError("selection values must be vertex pairs");
    choice[e] = {val[0].get<int>(), val[1].get<int>()};
  }
  for (const auto& [u, w] : choice)
    if (u == -1 && w == -1) throw ParseError("selection keys must be contiguous");
  return FactorSelection{std::move(choice)};
}

}  // namespace eulerfam
