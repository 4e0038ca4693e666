#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/polynomial.hpp"
#include "cospec/twins.hpp"

namespace cospec {

/// Copies per vertex; vertices not listed get one copy.
using Multiplicity = std::map<VertexId, int>;

/// Replaces each vertex v by m(v) independent copies and each edge uv by a
/// complete bipartite K_{m(u),m(v)} with unit weights. Copies are named
/// "v#1".."v#m"; a vertex with one copy keeps its id. Requires a simple graph
/// (DomainError otherwise).
WeightedGraph blowup(const WeightedGraph& g, const Multiplicity& m);

/// Whether (s, t) and (s2, t2) blow up a bipartite graph with parts of sizes
/// a and b to the same order: a*s + b*t == a*s2 + b*t2. False for
/// non-positive arguments.
bool blowup_pair_valid(long a, long b, long s, long t, long s2, long t2);

struct ScaledIsomorphism {
  std::map<VertexId, VertexId> map;  // G vertex -> H vertex
  Rational alpha;
};

/// A bijection phi and alpha > 0 with w_H(phi u, phi v) = alpha w_G(u, v) and
/// w_H(phi u) = alpha w_G(u) for all u, v. alpha is forced by the ratio of
/// total edge weights (vertex weight totals for edgeless graphs). Backtracking
/// with per-vertex weight-profile pruning.
std::optional<ScaledIsomorphism> scaled_isomorphism(const WeightedGraph& g, const WeightedGraph& h);

struct Theorem3Report {
  bool holds = false;
  CoalesceResult g;
  CoalesceResult h;
  std::optional<ScaledIsomorphism> iso;
};

/// Coalesces all twins of both graphs and checks equal removal counts plus a
/// scaled isomorphism of the results. A positive verdict is cross-checked
/// against the exact normalized-Laplacian verdict (InternalError on mismatch).
Theorem3Report theorem3_report(const WeightedGraph& g, const WeightedGraph& h);
bool theorem3_check(const WeightedGraph& g, const WeightedGraph& h);

enum class FamilyVariant { full, sub };

std::string_view to_string(FamilyVariant v);
FamilyVariant parse_family_variant(std::string_view name);

/// Apex "a" (k+1 copies) over middles "m1", "m2" and bottoms "b1", "b2"
/// (k copies each); edges a-m1, a-m2, m1-m2, m1-b1, m2-b2 and, for the full
/// variant, the K_{k,k} between b1 and b2. 3k+3 vertices.
WeightedGraph family_subgraph1(int k, FamilyVariant variant);

/// k+1 disjoint edges t1#j - t2#j hanging from middles "u1", "u2" (t1#j ~ u1,
/// t2#j ~ u2), edge u1-u2, bottoms "b1", "b2" with k copies each attached to
/// u1 and u2 respectively, and for the full variant the K_{k,k} between b1 and
/// b2. 4k+4 vertices, ordered t-gadgets, u1, u2, b1 copies, b2 copies.
WeightedGraph family_subgraph2(int k, FamilyVariant variant);

/// The coalesced 5- or 6-vertex graph of a family member. Family 1 only needs
/// vertex twins. Family 2 additionally folds the k+1 edge gadgets together
/// as twin subgraphs (quotient_graph with gadget 1 as V1), so the result is
/// ordered t1, t2, u1, u2, b1, b2.
CoalesceResult family_coalesced(int family, int k, FamilyVariant variant);

/// Closed-form transition polynomial of the coalesced family graphs.
CharPoly family_charpoly_closed(int family, int k);

/// Names accepted by fixture(), in catalog order.
std::vector<std::string> fixture_names();

/// Transcribed example graphs. Throws DomainError for an unknown name.
/// fig10_left is checked against its printed adjacency spectrum on
/// construction and throws InternalError on mismatch.
WeightedGraph fixture(std::string_view name);

/// Comb on n path vertices "c1".."cn" with pendants "p1".."pn".
WeightedGraph comb(int n);

/// Cycle "a", "b", ... with unit edges and zero vertex weights (n <= 26).
WeightedGraph cycle(int n);

}  // namespace cospec
