#include "eulerfam/trails.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace eulerfam {

namespace {

/// Interleaved (anchor, edge, anchor, edge, ...) key used for canonical
/// comparison of trails.
std::vector<int> trail_key(const ClosedTrail& t) {
  std::vector<int> key;
  key.reserve(2 * t.edges.size());
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    key.push_back(t.anchors[i]);
    key.push_back(t.edges[i]);
  }
  return key;
}

}  // namespace

VerifyResult verify_family(const Hypergraph& h, const EulerFamily& family) {
  auto reject = [](std::string reason) {
    return VerifyResult{false, std::move(reason)};
  };

  for (const ClosedTrail& t : family.trails) {
    if (t.anchors.size() != t.edges.size())
      return reject("trail shape mismatch");
    int len = t.length();
    if (len < 2) return reject("trail shorter than two edges");
    for (EdgeId e : t.edges)
      if (e < 0 || e >= h.size()) return reject("edge id out of range");
    for (VertexId v : t.anchors)
      if (v < 0 || v >= h.order()) return reject("anchor out of range");
    for (int i = 0; i < len; ++i) {
      VertexId a = t.anchors[i];
      VertexId b = t.anchors[(i + 1) % len];
      if (a == b) return reject("consecutive anchors equal");
      if (!h.edge_contains(t.edges[i], a) || !h.edge_contains(t.edges[i], b))
        return reject("anchor not inside its edge");
    }
    std::set<EdgeId> distinct(t.edges.begin(), t.edges.end());
    if (static_cast<int>(distinct.size()) != len)
      return reject("repeated edge id within a trail");
  }

  std::set<VertexId> anchors_seen;
  for (const ClosedTrail& t : family.trails) {
    std::set<VertexId> own(t.anchors.begin(), t.anchors.end());
    for (VertexId v : own)
      if (!anchors_seen.insert(v).second) return reject("anchor-disjointness");
  }

  std::vector<int> edge_uses(h.size(), 0);
  for (const ClosedTrail& t : family.trails)
    for (EdgeId e : t.edges)
      if (++edge_uses[e] > 1) return reject("edge-disjointness");
  for (EdgeId e = 0; e < h.size(); ++e)
    if (edge_uses[e] == 0) return reject("edges not covered");

  return VerifyResult{true, ""};
}

EulerFamily extract_family(const IncidenceGraph& g, const FactorSelection& sel) {
  if (static_cast<int>(sel.choice.size()) != g.m)
    throw InvariantError("selection must choose a pair for every edge");
  std::vector<int> times_chosen(g.n, 0);
  for (EdgeId e = 0; e < g.m; ++e) {
    auto [u, w] = sel.choice[e];
    if (u == w) throw InvariantError("selection pair vertices must differ");
    if (u < 0 || u >= g.n || w < 0 || w >= g.n)
      throw InvariantError("selection vertex out of range");
    const auto& nbrs = g.adj[g.e_node(e)];
    if (!std::binary_search(nbrs.begin(), nbrs.end(), u) ||
        !std::binary_search(nbrs.begin(), nbrs.end(), w))
      throw InvariantError("selection pair must lie inside its edge");
    ++times_chosen[u];
    ++times_chosen[w];
  }
  for (int v = 0; v < g.n; ++v)
    if (times_chosen[v] % 2 != 0)
      throw InvariantError("vertex chosen an odd number of times");

  // The selected subgraph: two incidence-graph edges per hyperedge.
  int total = g.node_count();
  std::vector<std::vector<std::pair<int, int>>> sub(total);  // (neighbor, edge idx)
  std::vector<bool> used(2 * g.m, false);
  int next_idx = 0;
  auto add = [&](int a, int b) {
    sub[a].emplace_back(b, next_idx);
    sub[b].emplace_back(a, next_idx);
    ++next_idx;
  };
  for (EdgeId e = 0; e < g.m; ++e) {
    add(sel.choice[e].first, g.e_node(e));
    add(sel.choice[e].second, g.e_node(e));
  }
  for (auto& list : sub) std::sort(list.begin(), list.end());

  // Hierholzer per component.  Scanning starts in ascending id order makes
  // each circuit begin at its component's lowest node — a v-node, since
  // v-nodes precede e-nodes and every subgraph edge touches a v-node.
  EulerFamily family;
  std::vector<std::size_t> next(total, 0);
  for (int start = 0; start < total; ++start) {
    while (next[start] < sub[start].size() && used[sub[start][next[start]].second])
      ++next[start];
    if (next[start] == sub[start].size()) continue;

    std::vector<int> stack = {start};
    std::vector<int> circuit;
    while (!stack.empty()) {
      int u = stack.back();
      while (next[u] < sub[u].size() && used[sub[u][next[u]].second]) ++next[u];
      if (next[u] == sub[u].size()) {
        circuit.push_back(u);
        stack.pop_back();
      } else {
        auto [w, idx] = sub[u][next[u]];
        used[idx] = true;
        stack.push_back(w);
      }
    }
    std::reverse(circuit.begin(), circuit.end());

    // circuit = v0, e, v1, e, ..., v0 (odd length, alternating by
    // bipartiteness); fold into anchor/edge arrays.
    ClosedTrail trail;
    for (std::size_t i = 0; i + 1 < circuit.size(); i += 2) {
      trail.anchors.push_back(circuit[i]);
      trail.edges.push_back(g.edge_of(circuit[i + 1]));
    }
    family.trails.push_back(std::move(trail));
  }
  return family;
}

FactorSelection selection_from_family(const Hypergraph& h,
                                      const EulerFamily& family) {
  VerifyResult check = verify_family(h, family);
  if (!check.accepted)
    throw PreconditionError("family does not verify: " + check.reason);
  FactorSelection sel;
  sel.choice.assign(h.size(), {-1, -1});
  for (const ClosedTrail& t : family.trails) {
    for (int i = 0; i < t.length(); ++i) {
      VertexId a = t.anchors[i];
      VertexId b = t.anchors[(i + 1) % t.length()];
      sel.choice[t.edges[i]] = {std::min(a, b), std::max(a, b)};
    }
  }
  validate_selection(h, sel);
  return sel;
}

ClosedTrail normalized(const ClosedTrail& trail) {
  int len = trail.length();
  if (len == 0) return trail;
  ClosedTrail best;
  std::vector<int> best_key;
  auto consider = [&](const ClosedTrail& cand) {
    std::vector<int> key = trail_key(cand);
    if (best_key.empty() || key < best_key) {
      best_key = std::move(key);
      best = cand;
    }
  };
  for (int s = 0; s < len; ++s) {
    ClosedTrail fwd, bwd;
    for (int i = 0; i < len; ++i) {
      fwd.anchors.push_back(trail.anchors[(s + i) % len]);
      fwd.edges.push_back(trail.edges[(s + i) % len]);
      bwd.anchors.push_back(trail.anchors[(s - i + 2 * len) % len]);
      bwd.edges.push_back(trail.edges[(s - 1 - i + 2 * len) % len]);
    }
    consider(fwd);
    consider(bwd);
  }
  return best;
}

EulerFamily normalized(const EulerFamily& family) {
  EulerFamily out;
  for (const ClosedTrail& t : family.trails) out.trails.push_back(normalized(t));
  std::sort(out.trails.begin(), out.trails.end(),
            [](const ClosedTrail& a, const ClosedTrail& b) {
              return trail_key(a) < trail_key(b);
            });
  return out;
}

namespace {

/// Backtracking state for the exact tour search.
class TourSearch {
 public:
  TourSearch(const Hypergraph& h, long long budget)
      : h_(h), budget_(budget), count_(h.order(), 0), remaining_(h.order(), 0) {
    pairs_.resize(h.size());
    for (EdgeId e = 0; e < h.size(); ++e) {
      const auto& edge = h.edge(e);
      for (std::size_t i = 0; i < edge.size(); ++i) {
        ++remaining_[edge[i]];
        for (std::size_t j = i + 1; j < edge.size(); ++j)
          pairs_[e].emplace_back(edge[i], edge[j]);
      }
    }
    chosen_.resize(h.size());
  }

  TourResult run() {
    for (EdgeId e = 0; e < h_.size(); ++e)
      if (pairs_[e].empty())
        return {TourStatus::none, std::nullopt, explored_};
    dfs(0);
    if (exceeded_) return {TourStatus::budget_exceeded, std::nullopt, explored_};
    if (found_) {
      FactorSelection sel{chosen_saved_};
      EulerFamily family = extract_family(incidence_graph(h_), sel);
      if (family.trails.size() != 1)
        throw InvariantError("tour search accepted a multi-trail selection");
      return {TourStatus::found, family.trails[0], explored_};
    }
    return {TourStatus::none, std::nullopt, explored_};
  }

 private:
  bool dfs(EdgeId e) {
    if (e == h_.size()) return leaf();
    for (const auto& pick : pairs_[e]) {
      if (++explored_ > budget_) {
        exceeded_ = true;
        return true;
      }
      chosen_[e] = pick;
      ++count_[pick.first];
      ++count_[pick.second];
      for (VertexId v : h_.edge(e)) --remaining_[v];

      // Once a vertex has no future incident edges its parity is final.
      bool viable = true;
      for (VertexId v : h_.edge(e)) {
        if (remaining_[v] == 0 && count_[v] % 2 != 0) {
          viable = false;
          break;
        }
      }
      if (viable && dfs(e + 1)) return true;

      for (VertexId v : h_.edge(e)) ++remaining_[v];
      --count_[pick.first];
      --count_[pick.second];
    }
    return false;
  }

  bool leaf() {
    // All parities are even here; the selection is a tour iff the selected
    // subgraph has one non-trivial component, i.e. all chosen vertices are
    // linked through chosen pairs.
    std::vector<int> parent(h_.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const auto& [u, w] : chosen_) parent[find(u)] = find(w);
    int root = find(chosen_[0].first);
    for (const auto& [u, w] : chosen_)
      if (find(u) != root || find(w) != root) return false;
    found_ = true;
    chosen_saved_ = chosen_;
    return true;
  }

  const Hypergraph& h_;
  long long budget_;
  long long explored_ = 0;
  bool exceeded_ = false;
  bool found_ = false;
  std::vector<int> count_;
  std::vector<int> remaining_;
  std::vector<std::vector<std::pair<VertexId, VertexId>>> pairs_;
  std::vector<std::pair<VertexId, VertexId>> chosen_;
  std::vector<std::pair<VertexId, VertexId>> chosen_saved_;
};

}  // namespace

TourResult euler_tour_exact(const Hypergraph& h, long long budget) {
  if (h.size() < 2)
    throw PreconditionError("tour search requires at least two edges");
  return TourSearch(h, budget).run();
}

std::string family_to_text(const Hypergraph& h, const EulerFamily& family) {
  EulerFamily canon = normalized(family);
  std::ostringstream out;
  for (const ClosedTrail& t : canon.trails) {
    for (int i = 0; i < t.length(); ++i) {
      out << h.vertex_name(t.anchors[i]) << " (" << t.edges[i] << ") ";
    }
    out << h.vertex_name(t.anchors.empty() ? 0 : t.anchors[0]) << "\n";
  }
  return out.str();
}

std::string family_to_json(const EulerFamily& family) {
  EulerFamily canon = normalized(family);
  nlohmann::json trails = nlohmann::json::array();
  for (const ClosedTrail& t : canon.trails) {
    nlohmann::json jt;
    jt["anchors"] = t.anchors;
    jt["edges"] = t.edges;
    trails.push_back(std::move(jt));
  }
  nlohmann::json doc;
  doc["trails"] = std::move(trails);
  return doc.dump(2) + "\n";
}

namespace {

EulerFamily family_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("trails") || !doc["trails"].is_array())
    throw ParseError("expected an object with a \"trails\" array");
  EulerFamily family;
  for (const auto& jt : doc["trails"]) {
    if (!jt.is_object() || !jt.contains("anchors") || !jt.contains("edges"))
      throw ParseError("each trail needs \"anchors\" and \"edges\"");
    ClosedTrail t;
    for (const auto& a : jt["anchors"]) {
      if (!a.is_number_integer()) throw ParseError("anchors must be integers");
      t.anchors.push_back(a.get<int>());
    }
    for (const auto& e : jt["edges"]) {
      if (!e.is_number_integer()) throw ParseError("edges must be integers");
      t.edges.push_back(e.get<int>());
    }
    family.trails.push_back(std::move(t));
  }
  return family;
}

EulerFamily family_from_text(const Hypergraph& h, const std::string& text) {
  EulerFamily family;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    // v0 (e1) v1 (e2) ... v0 — an odd token count of at least 5.
    if (tokens.size() < 5 || tokens.size() % 2 == 0)
      throw ParseError("malformed trail line");
    ClosedTrail t;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i % 2 == 0) {
        auto v = h.find_vertex(tokens[i]);
        if (!v) throw ParseError("unknown vertex in trail: " + tokens[i]);
        if (i + 1 < tokens.size()) t.anchors.push_back(*v);
        else if (*v != t.anchors[0])
          throw ParseError("trail line does not close on its first anchor");
      } else {
        const std::string& p = tokens[i];
        if (p.size() < 3 || p.front() != '(' || p.back() != ')')
          throw ParseError("expected (edge-id) between anchors");
        std::size_t used = 0;
        int e = -1;
        try {
          e = std::stoi(p.substr(1, p.size() - 2), &used);
        } catch (const std::exception&) {
        }
        if (used != p.size() - 2 || e < 0)
          throw ParseError("expected (edge-id) between anchors");
        t.edges.push_back(e);
      }
    }
    family.trails.push_back(std::move(t));
  }
  return family;
}

}  // namespace

EulerFamily parse_family(const Hypergraph& h, const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return family_from_json(text);
  return family_from_text(h, text);
}

}  // namespace eulerfam
