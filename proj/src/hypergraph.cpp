#include "eulerfam/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace eulerfam {

namespace {

/// Plain union-find over 0..n-1.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

/// Components of the structure "vertices 0..n-1, the given edges", where an
/// edge links all of its vertices.  Dense labels in order of first appearance.
Components label_components(int n, const std::vector<std::vector<VertexId>>& edges) {
  DisjointSets ds(n);
  for (const auto& e : edges) {
    for (std::size_t i = 1; i < e.size(); ++i) ds.unite(e[0], e[i]);
  }
  Components out;
  out.component_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int root = ds.find(v);
    if (out.component_of[root] == -1) out.component_of[root] = out.count++;
    out.component_of[v] = out.component_of[root];
  }
  return out;
}

}  // namespace

Hypergraph::Hypergraph(int order, std::vector<std::vector<VertexId>> edges,
                       std::vector<std::string> labels)
    : order_(order), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (order_ <= 0) throw InvariantError("hypergraph order must be positive");
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != order_)
      throw InvariantError("label list length differs from order");
    // Labels appear verbatim in the text formats, so they must not contain
    // the characters those formats give meaning to.
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvariantError("repeated vertex label");
    for (const std::string& label : labels_) {
      if (label.empty()) throw InvariantError("empty vertex label");
      if (label[0] == '!')
        throw InvariantError("vertex label may not start with '!'");
      if (label.find_first_of(" \t\r\n#()") != std::string::npos)
        throw InvariantError(
            "vertex label may not contain whitespace, '#', or parentheses");
    }
  }
  for (auto& e : edges_) {
    if (e.empty()) throw InvariantError("empty edge");
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= order_)
        throw InvariantError("edge vertex out of range");
      if (i > 0 && e[i] == e[i - 1])
        throw InvariantError("repeated vertex inside an edge");
    }
  }
  degrees_.assign(order_, 0);
  for (const auto& e : edges_)
    for (VertexId v : e) ++degrees_[v];
}

const std::vector<VertexId>& Hypergraph::edge(EdgeId e) const {
  check_edge(e);
  return edges_[e];
}

int Hypergraph::degree(VertexId v) const {
  check_vertex(v);
  return degrees_[v];
}

std::vector<EdgeId> Hypergraph::incident_edges(VertexId v) const {
  check_vertex(v);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < size(); ++e)
    if (edge_contains(e, v)) out.push_back(e);
  return out;
}

bool Hypergraph::edge_contains(EdgeId e, VertexId v) const {
  check_edge(e);
  return std::binary_search(edges_[e].begin(), edges_[e].end(), v);
}

std::uint64_t Hypergraph::edge_mask(EdgeId e) const {
  check_edge(e);
  if (order_ > 64) throw GuardError("edge_mask requires order <= 64");
  std::uint64_t mask = 0;
  for (VertexId v : edges_[e]) mask |= std::uint64_t{1} << v;
  return mask;
}

std::string Hypergraph::vertex_name(VertexId v) const {
  check_vertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<VertexId> Hypergraph::find_vertex(const std::string& name) const {
  if (labels_.empty()) {
    try {
      std::size_t used = 0;
      int v = std::stoi(name, &used);
      if (used == name.size() && v >= 0 && v < order_) return v;
    } catch (const std::exception&) {
    }
    return std::nullopt;
  }
  for (int v = 0; v < order_; ++v)
    if (labels_[v] == name) return v;
  return std::nullopt;
}

void Hypergraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= order_) throw PreconditionError("vertex id out of range");
}

void Hypergraph::check_edge(EdgeId e) const {
  if (e < 0 || e >= size()) throw PreconditionError("edge id out of range");
}

Components components(const Hypergraph& h) {
  return label_components(h.order(), h.edges());
}

int component_count(const Hypergraph& h) { return components(h).count; }

bool is_connected(const Hypergraph& h) { return component_count(h) == 1; }

bool is_k_uniform(const Hypergraph& h, int k) {
  for (const auto& e : h.edges())
    if (static_cast<int>(e.size()) != k) return false;
  return true;
}

std::optional<int> uniform_cardinality(const Hypergraph& h) {
  if (h.size() == 0) return std::nullopt;
  int k = static_cast<int>(h.edge(0).size());
  return is_k_uniform(h, k) ? std::optional<int>(k) : std::nullopt;
}

long long binomial(long long n, long long k) {
  static constexpr long long kCap = 4'000'000'000'000'000'000LL;
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (long long i = 1; i <= k; ++i) {
    if (result > kCap / (n - k + i)) return kCap;
    result = result * (n - k + i) / i;
  }
  return result;
}

namespace {

/// Shared walk for the covering predicates: the lexicographically first
/// uncovered l-subset, or nullopt when every l-subset lies in some edge.
std::optional<std::vector<VertexId>> scan_uncovered(const Hypergraph& h, int l,
                                                    long long guard) {
  int n = h.order();
  if (l < 2 || l > n)
    throw PreconditionError("covering predicate requires 2 <= l <= order");
  if (n > 64) throw GuardError("covering predicate requires order <= 64");
  if (binomial(n, l) > guard)
    throw GuardError("covering predicate: C(n, l) exceeds the work guard");

  std::vector<std::uint64_t> masks(h.size());
  for (EdgeId e = 0; e < h.size(); ++e) masks[e] = h.edge_mask(e);

  // Enumerate l-subsets in lexicographic order of the sorted tuple.
  std::vector<VertexId> pick(l);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::uint64_t subset = 0;
    for (VertexId v : pick) subset |= std::uint64_t{1} << v;
    bool covered = false;
    for (std::uint64_t em : masks) {
      if ((subset & em) == subset) {
        covered = true;
        break;
      }
    }
    if (!covered) return pick;

    int i = l - 1;
    while (i >= 0 && pick[i] == n - l + i) --i;
    if (i < 0) return std::nullopt;
    ++pick[i];
    for (int j = i + 1; j < l; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

bool is_l_covering(const Hypergraph& h, int l, long long guard) {
  return !scan_uncovered(h, l, guard).has_value();
}

std::optional<std::vector<VertexId>> first_uncovered_subset(const Hypergraph& h,
                                                            int l,
                                                            long long guard) {
  return scan_uncovered(h, l, guard);
}

bool is_cut_edge(const Hypergraph& h, EdgeId e) {
  h.check_edge(e);
  std::vector<std::vector<VertexId>> rest;
  rest.reserve(h.size() - 1);
  for (EdgeId i = 0; i < h.size(); ++i)
    if (i != e) rest.push_back(h.edge(i));
  return label_components(h.order(), rest).count > component_count(h);
}

bool is_cut_vertex(const Hypergraph& h, VertexId v) {
  h.check_vertex(v);
  if (h.order() == 1) return false;
  // Deleting v: remaining vertices keep their ids shifted down past v; edges
  // lose v and vanish when nothing is left.  Only the component count
  // matters here, so the renumbering is local.
  std::vector<std::vector<VertexId>> rest;
  for (const auto& e : h.edges()) {
    std::vector<VertexId> reduced;
    for (VertexId w : e)
      if (w != v) reduced.push_back(w < v ? w : w - 1);
    if (!reduced.empty()) rest.push_back(std::move(reduced));
  }
  return label_components(h.order() - 1, rest).count > component_count(h);
}

}  // namespace eulerfam
