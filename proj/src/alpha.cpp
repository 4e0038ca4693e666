#include "cospec/alpha.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "cospec/errors.hpp"
#include "cospec/spectra.hpp"

namespace cospec {

std::string_view to_string(AlphaMode mode) {
  return mode == AlphaMode::exact_parity ? "exact-parity" : "exact-rational-alpha";
}

AlphaVerdict alpha_cospectral_check(const WeightedGraph& g, const WeightedGraph& h, const Rational& beta) {
  if (beta.sign() <= 0) throw DomainError("beta must be positive, got " + beta.str());
  if (g.order() != h.order()) {
    throw DomainError("alpha-cospectrality needs equal orders, got " + std::to_string(g.order()) + " and " +
                      std::to_string(h.order()));
  }
  const std::size_t n = g.order();
  const CharPoly pg = char_poly(g, MatrixKind::adjacency);
  const CharPoly ph = char_poly(h, MatrixKind::adjacency);

  const auto alpha = beta.exact_sqrt();
  AlphaVerdict verdict{true, beta, alpha ? AlphaMode::exact_rational_alpha : AlphaMode::exact_parity};
  for (std::size_t k = 0; k <= n && verdict.cospectral; ++k) {
    const std::size_t gap = n - k;
    if (alpha) {
      verdict.cospectral = ph[k] == pg[k] * pow(*alpha, static_cast<int>(gap));
    } else if (gap % 2 == 1) {
      verdict.cospectral = pg[k].is_zero() && ph[k].is_zero();
    } else {
      verdict.cospectral = ph[k] == pg[k] * pow(beta, static_cast<int>(gap / 2));
    }
  }
  return verdict;
}

std::optional<double> estimate_alpha(const WeightedGraph& g, const WeightedGraph& h) {
  constexpr double tol = 1e-8;
  if (g.order() != h.order()) return std::nullopt;
  const auto sg = eigenvalues_numeric(g, MatrixKind::adjacency);
  const auto sh = eigenvalues_numeric(h, MatrixKind::adjacency);

  std::size_t pivot = sg.size();
  for (std::size_t i = 0; i < sg.size(); ++i) {
    if (std::abs(sg[i]) > tol && (pivot == sg.size() || std::abs(sg[i]) > std::abs(sg[pivot]))) pivot = i;
  }
  if (pivot == sg.size()) {
    const bool all_zero = std::all_of(sh.begin(), sh.end(), [](double x) { return std::abs(x) <= tol; });
    return all_zero ? std::optional<double>(1.0) : std::nullopt;
  }
  const double alpha = sh[pivot] / sg[pivot];
  if (!(alpha > 0.0)) return std::nullopt;
  for (std::size_t i = 0; i < sg.size(); ++i) {
    const bool zg = std::abs(sg[i]) <= tol;
    const bool zh = std::abs(sh[i]) <= tol;
    if (zg != zh) return std::nullopt;
    if (std::abs(sh[i] - alpha * sg[i]) > tol * std::max(1.0, std::abs(sh[i]))) return std::nullopt;
  }
  return alpha;
}

}  // namespace cospec
