#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/rational.hpp"

namespace cospec {

// ---------------------------------------------------------------------------
// Twin vertices
// ---------------------------------------------------------------------------

/// The scaling factor alpha with alpha*w(u) = w(v), alpha*w(u,u) = w(v,v) and
/// alpha*w(u,t) = w(v,t) for every other t; nullopt when u and v are adjacent,
/// either is isolated, or no single alpha fits. Throws GraphError for unknown
/// vertices or u == v.
std::optional<Rational> twin_check(const WeightedGraph& g, const VertexId& u, const VertexId& v);

/// Maximal set of mutual twins. scales[i] is the alpha taking members[0] to
/// members[i], so scales[0] == 1.
struct TwinClass {
  std::vector<VertexId> members;
  std::vector<Rational> scales;
};

/// Partition of the non-isolated vertices into twin classes (singletons
/// included), ordered by first member. Throws InternalError if a greedy class
/// fails pairwise re-verification.
std::vector<TwinClass> twin_classes(const WeightedGraph& g);

/// Merges the class into one vertex placed at the first member's position,
/// labelled by joining member ids with '+'; its vertex, loop and edge weights
/// are the member sums. Throws DomainError for an invalid class.
///
/// For loopless twins this plants eigenvalue 1 of the normalized Laplacian
/// (root 0 of the transition polynomial) once per removed vertex.
WeightedGraph coalesce_class(const WeightedGraph& g, const TwinClass& c);

struct CoalesceResult {
  WeightedGraph graph;
  std::size_t removed = 0;
};

/// Coalesces every twin class of size >= 2, repeating until no twins remain.
CoalesceResult coalesce_all(const WeightedGraph& g);

// ---------------------------------------------------------------------------
// Twin subgraphs
// ---------------------------------------------------------------------------

/// Partition V1 | V2 | V3 of the vertex set with a bijection pi: V1 -> V2.
struct WitnessSets {
  std::vector<VertexId> v1;
  std::vector<VertexId> v2;
  std::vector<VertexId> v3;
  std::map<VertexId, VertexId> pi;
};

/// Verified twin-subgraph certificate.
struct TwinSubgraphWitness {
  WitnessSets sets;
  Rational alpha;
};

/// The unique alpha > 0 for which V1 and V2 induce twin subgraphs, or
/// nullopt. Throws DomainError when the sets are not a partition, V1 is
/// empty, or pi is not a bijection V1 -> V2.
std::optional<Rational> verify_twin_subgraphs(const WeightedGraph& g, const WitnessSets& sets);

/// verify_twin_subgraphs packaged as a witness; throws DomainError when the
/// sets do not certify twin subgraphs.
TwinSubgraphWitness make_witness(const WeightedGraph& g, WitnessSets sets);

/// G-hat: V2 deleted; V1 vertex weights and every edge with an endpoint in V1
/// scaled once by (1 + alpha). Throws DomainError for a witness that does not
/// verify on g.
WeightedGraph quotient_graph(const WeightedGraph& g, const TwinSubgraphWitness& w);

/// H-hat(side): g restricted to V_side with vertex weights
/// w'(u) = w(u) + sum over t in V3 of w(u,t). Loops are kept unchanged.
WeightedGraph hat_subgraph(const WeightedGraph& g, const TwinSubgraphWitness& w, int side);

/// Exact check that the transition polynomial of g factors as
/// p(G-hat) * p(H-hat(1)).
bool decomposition_check(const WeightedGraph& g, const TwinSubgraphWitness& w);

// ---------------------------------------------------------------------------
// Harmonic eigenvectors
// ---------------------------------------------------------------------------

/// y = D^-1/2 x for an eigenpair (lambda, x) of the normalized Laplacian;
/// satisfies sum_v w(u,v) y(v) = (1 - lambda) d(u) y(u) at every u.
struct HarmonicVector {
  std::map<VertexId, double> values;
  double lambda = 0.0;
};

/// Every harmonic eigenvector of g from the numeric normalized Laplacian.
std::vector<HarmonicVector> harmonic_eigenvectors(const WeightedGraph& g);

/// max over u of |sum_v w(u,v) y(v) - (1 - lambda) d(u) y(u)|. Throws
/// DomainError when y misses a vertex.
double harmonic_residual(const WeightedGraph& g, const HarmonicVector& y);

/// Extends xhat on G-hat to g: copied on V1 and V3, transported to V2 via pi.
HarmonicVector lift_from_quotient(const TwinSubgraphWitness& w, const HarmonicVector& xhat);

/// Extends yhat on H-hat(1) to g: alpha*yhat on V1, -yhat(pi^-1(u)) on V2, 0 on V3.
HarmonicVector lift_from_hat(const TwinSubgraphWitness& w, const HarmonicVector& yhat);

/// sum_u d(u) y(u) z(u).
double d_inner_product(const WeightedGraph& g, const HarmonicVector& y, const HarmonicVector& z);

}  // namespace cospec
