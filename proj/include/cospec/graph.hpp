#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cospec/rational.hpp"

namespace cospec {

/// Vertex label: nonempty, no whitespace, must not start with '#'.
using VertexId = std::string;

struct VertexSpec {
  VertexId id;
  Rational weight{0};
};

struct EdgeSpec {
  VertexId u;
  VertexId v;
  Rational weight{1};

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// Undirected graph with nonnegative rational vertex weights w(u) and
/// symmetric positive rational edge weights w(u,v). Loops {u,u} are allowed.
///
/// Immutable once built. Vertex order is insertion order and fixes the row
/// order of every matrix built from the graph. Zero-weight edges are never
/// stored.
class WeightedGraph {
 public:
  /// Empty graph.
  WeightedGraph() = default;

  /// Throws GraphError on duplicate or malformed ids, unknown endpoints,
  /// duplicate edges and negative weights.
  static WeightedGraph build(std::vector<VertexSpec> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t order() const { return ids_.size(); }
  std::span<const VertexId> vertices() const { return ids_; }
  const VertexId& id(std::size_t i) const { return ids_.at(i); }
  bool contains(const VertexId& v) const { return index_.contains(v); }
  /// Throws GraphError for an unknown vertex.
  std::size_t index_of(const VertexId& v) const;

  const Rational& vertex_weight(std::size_t i) const { return vertex_weight_.at(i); }
  const Rational& vertex_weight(const VertexId& v) const { return vertex_weight_[index_of(v)]; }
  /// w(u,v); zero for non-adjacent pairs.
  Rational edge_weight(std::size_t u, std::size_t v) const;
  Rational edge_weight(const VertexId& u, const VertexId& v) const { return edge_weight(index_of(u), index_of(v)); }

  /// Neighbors of vertex i (including i itself when it carries a loop).
  const std::map<std::size_t, Rational>& neighbors(std::size_t i) const { return adjacency_.at(i); }
  bool has_loop(std::size_t i) const { return adjacency_.at(i).contains(i); }

  /// Every stored edge once, as (u, v) with index(u) <= index(v), ordered by (u, v).
  std::vector<EdgeSpec> edges() const;
  std::vector<VertexSpec> vertex_specs() const;

  /// Labeled equality: same vertex order, ids and exact weights.
  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.ids_ == b.ids_ && a.vertex_weight_ == b.vertex_weight_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<Rational> vertex_weight_;
  std::vector<std::map<std::size_t, Rational>> adjacency_;
};

/// d(u) = w(u) + sum of w(u,v) over neighbors v; a loop counts once.
Rational degree(const WeightedGraph& g, std::size_t u);
Rational degree(const WeightedGraph& g, const VertexId& u);
std::vector<Rational> degrees(const WeightedGraph& g);

/// Multiplies every vertex and edge weight by alpha > 0.
WeightedGraph scale(const WeightedGraph& g, const Rational& alpha);

/// Induced subgraph on `keep`, in the vertex order of g.
WeightedGraph restrict(const WeightedGraph& g, std::span<const VertexId> keep);

/// Vertex-disjoint union. When any id of h collides with g, all of h's ids
/// get a prefix of the form "h." (lengthened until unique).
WeightedGraph disjoint_union(const WeightedGraph& g, const WeightedGraph& h);

std::size_t edge_count(const WeightedGraph& g);
Rational total_edge_weight(const WeightedGraph& g);
/// Unit edge weights, zero vertex weights, no loops.
bool is_simple(const WeightedGraph& g);

/// Copy of g with vertices reordered; `order` must be a permutation of g's ids.
WeightedGraph reorder(const WeightedGraph& g, std::span<const VertexId> order);

}  // namespace cospec
