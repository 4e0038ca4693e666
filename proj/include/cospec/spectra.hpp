#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "cospec/charpoly.hpp"
#include "cospec/graph.hpp"
#include "cospec/polynomial.hpp"

namespace cospec {

/// A, L = D - A, Q = D + A, the normalized Laplacian D^-1/2 (D - A) D^-1/2,
/// and the random-walk transition matrix P = D^-1 A.
enum class MatrixKind { adjacency, laplacian, signless, normalized, transition };

std::string_view to_string(MatrixKind kind);
/// Throws ParseError for an unknown name.
MatrixKind parse_matrix_kind(std::string_view name);

/// Exact matrix in graph vertex order.
///
/// The normalized kind has irrational entries and throws DomainError here
/// (use normalized_laplacian). The transition kind throws DomainError when a
/// vertex has degree zero.
RationalMatrix build_matrix(const WeightedGraph& g, MatrixKind kind);

/// Floating-point normalized Laplacian; throws DomainError on a zero-degree
/// vertex instead of patching D^-1/2 with zeros.
Eigen::MatrixXd normalized_laplacian(const WeightedGraph& g);

/// Floating-point version of any kind (transition is not symmetric).
Eigen::MatrixXd build_numeric_matrix(const WeightedGraph& g, MatrixKind kind);

/// char_poly_exact(build_matrix(g, kind)). Normalized-Laplacian questions are
/// answered exactly through the transition kind: spec(L_norm) = 1 - spec(P).
CharPoly char_poly(const WeightedGraph& g, MatrixKind kind);

/// Exact verdict: equal orders and coefficient-identical characteristic
/// polynomials. kind=normalized compares transition polynomials.
bool cospectral(const WeightedGraph& g, const WeightedGraph& h, MatrixKind kind);

/// All eigenvalues ascending. Symmetric kinds go through the Jacobi solver;
/// transition returns 1 - (normalized Laplacian eigenvalues).
std::vector<double> eigenvalues_numeric(const WeightedGraph& g, MatrixKind kind);

}  // namespace cospec
