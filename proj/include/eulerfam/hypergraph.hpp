#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerfam {

using VertexId = int;
using EdgeId = int;

/// Input text could not be parsed into a hypergraph (or family / selection).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructed object violates a structural invariant it promises to hold.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was invoked outside its stated preconditions.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive operation would exceed its work guard; caller must opt in
/// to a larger budget explicitly instead of silently burning CPU.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hypergraph on vertices {0, ..., order-1} with a fixed edge list.
///
/// Edges are stored sorted ascending and are indexed by their position in the
/// list; duplicate edges are allowed (the list is a multiset), duplicate
/// vertices inside one edge are not.  Edge identity is positional and stable:
/// every operation that transforms a hypergraph documents what happens to
/// edge ids.  Optional vertex labels are carried for I/O only and never
/// affect structure.
class Hypergraph {
 public:
  /// Validates and canonicalizes: sorts each edge, rejects empty edges,
  /// out-of-range or repeated vertices, non-positive order, and label lists
  /// whose length differs from `order`.
  Hypergraph(int order, std::vector<std::vector<VertexId>> edges,
             std::vector<std::string> labels = {});

  /// Number of vertices (n).
  int order() const { return order_; }
  /// Number of edges (m).
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<VertexId>& edge(EdgeId e) const;
  const std::vector<std::vector<VertexId>>& edges() const { return edges_; }

  /// Number of edges containing v.
  int degree(VertexId v) const;
  /// Ids of edges containing v, ascending.
  std::vector<EdgeId> incident_edges(VertexId v) const;
  bool edge_contains(EdgeId e, VertexId v) const;

  /// Edge as a bitmask over vertices; requires order() <= 64.
  std::uint64_t edge_mask(EdgeId e) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Printable name of a vertex: its label if present, else its id.
  std::string vertex_name(VertexId v) const;
  /// Id of the vertex carrying `name` (label, or id for unlabeled graphs).
  std::optional<VertexId> find_vertex(const std::string& name) const;

  void check_vertex(VertexId v) const;
  void check_edge(EdgeId e) const;

 private:
  int order_;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
};

/// Connected-components labelling.  Two vertices are connected when some
/// edge contains both; every vertex (isolated ones included) gets a label.
/// Labels are dense, 0-based, assigned in order of first appearance.
struct Components {
  std::vector<int> component_of;
  int count = 0;
};

Components components(const Hypergraph& h);
int component_count(const Hypergraph& h);
bool is_connected(const Hypergraph& h);

/// True when every edge has exactly k vertices.
bool is_k_uniform(const Hypergraph& h, int k);
/// The common edge cardinality, if one exists (empty edge list: k undefined).
std::optional<int> uniform_cardinality(const Hypergraph& h);

/// True when every l-subset of the vertex set is contained in at least one
/// edge.  Requires 2 <= l <= order.  The check enumerates all C(n, l)
/// subsets, so it refuses (GuardError) when C(n, l) > guard or order > 64.
bool is_l_covering(const Hypergraph& h, int l, long long guard = 1'000'000);

/// First (lexicographically) l-subset witnessing non-coverage, if any.
std::optional<std::vector<VertexId>> first_uncovered_subset(
    const Hypergraph& h, int l, long long guard = 1'000'000);

/// True when deleting edge e (keeping all vertices) increases the number of
/// connected components.
bool is_cut_edge(const Hypergraph& h, EdgeId e);

/// True when deleting vertex v increases the number of connected components.
/// Deleting v removes it from every edge and drops edges that become empty.
/// With order() == 1 there is nothing left to disconnect: returns false.
bool is_cut_vertex(const Hypergraph& h, VertexId v);

/// C(n, k) with saturation at a large sentinel to avoid overflow; helper for
/// guards and the counting bounds.
long long binomial(long long n, long long k);

}  // namespace eulerfam
