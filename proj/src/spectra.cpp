#include "cospec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cospec/errors.hpp"
#include "cospec/jacobi.hpp"

namespace cospec {

namespace {

void require_positive_degrees(const WeightedGraph& g, const std::vector<Rational>& d, MatrixKind kind) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].is_zero()) {
      throw DomainError("vertex " + g.id(i) + " has degree 0; the " + std::string(to_string(kind)) +
                        " matrix is only built for graphs without zero-degree vertices "
                        "(the zero-entry D^-1/2 convention is not applied)");
    }
  }
}

}  // namespace

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency:
      return "adjacency";
    case MatrixKind::laplacian:
      return "laplacian";
    case MatrixKind::signless:
      return "signless";
    case MatrixKind::normalized:
      return "normalized";
    case MatrixKind::transition:
      return "transition";
  }
  return "unknown";
}

MatrixKind parse_matrix_kind(std::string_view name) {
  for (auto k : {MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::signless, MatrixKind::normalized,
                 MatrixKind::transition}) {
    if (to_string(k) == name) return k;
  }
  throw ParseError("unknown matrix kind: " + std::string(name));
}

RationalMatrix build_matrix(const WeightedGraph& g, MatrixKind kind) {
  const auto n = static_cast<Eigen::Index>(g.order());
  if (kind == MatrixKind::normalized) {
    throw DomainError("the normalized Laplacian has irrational entries; use the transition matrix for exact work");
  }
  RationalMatrix a = RationalMatrix::Constant(n, n, Rational(0));
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (const auto& [v, w] : g.neighbors(u)) a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = w;
  }
  if (kind == MatrixKind::adjacency) return a;

  const auto d = degrees(g);
  if (kind == MatrixKind::transition) {
    require_positive_degrees(g, d, kind);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (!a(i, j).is_zero()) a(i, j) /= d[static_cast<std::size_t>(i)];
      }
    }
    return a;
  }

  const Rational sign = kind == MatrixKind::laplacian ? Rational(-1) : Rational(1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) *= sign;
    a(i, i) += d[static_cast<std::size_t>(i)];
  }
  return a;
}

Eigen::MatrixXd normalized_laplacian(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  const auto d = degrees(g);
  require_positive_degrees(g, d, MatrixKind::normalized);
  Eigen::VectorXd inv_sqrt(n);
  for (Eigen::Index i = 0; i < n; ++i) inv_sqrt(i) = 1.0 / std::sqrt(d[static_cast<std::size_t>(i)].to_double());

  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto iu = static_cast<Eigen::Index>(u);
    l(iu, iu) = 1.0;
    for (const auto& [v, w] : g.neighbors(u)) {
      const auto iv = static_cast<Eigen::Index>(v);
      l(iu, iv) -= w.to_double() * inv_sqrt(iu) * inv_sqrt(iv);
    }
  }
  return l;
}

Eigen::MatrixXd build_numeric_matrix(const WeightedGraph& g, MatrixKind kind) {
  if (kind == MatrixKind::normalized) return normalized_laplacian(g);
  return build_matrix(g, kind).unaryExpr([](const Rational& r) { return r.to_double(); });
}

CharPoly char_poly(const WeightedGraph& g, MatrixKind kind) { return char_poly_exact(build_matrix(g, kind)); }

bool cospectral(const WeightedGraph& g, const WeightedGraph& h, MatrixKind kind) {
  const MatrixKind exact = kind == MatrixKind::normalized ? MatrixKind::transition : kind;
  // Both graphs are validated even when the orders already differ.
  const CharPoly pg = char_poly(g, exact);
  const CharPoly ph = char_poly(h, exact);
  return g.order() == h.order() && pg == ph;
}

std::vector<double> eigenvalues_numeric(const WeightedGraph& g, MatrixKind kind) {
  if (g.order() == 0) return {};
  const MatrixKind solve_kind = kind == MatrixKind::transition ? MatrixKind::normalized : kind;
  const auto eig = jacobi_eigen(build_numeric_matrix(g, solve_kind));
  std::vector<double> values(eig.values.data(), eig.values.data() + eig.values.size());
  if (kind == MatrixKind::transition) {
    for (auto& v : values) v = 1.0 - v;
    std::sort(values.begin(), values.end());
  }
  return values;
}

}  // namespace cospec
