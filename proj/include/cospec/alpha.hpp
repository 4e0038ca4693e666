#pragma once

#include <optional>
#include <string_view>

#include "cospec/graph.hpp"
#include "cospec/rational.hpp"

namespace cospec {

enum class AlphaMode { exact_parity, exact_rational_alpha };

std::string_view to_string(AlphaMode mode);

struct AlphaVerdict {
  bool cospectral = false;
  Rational alpha_squared;
  AlphaMode mode = AlphaMode::exact_parity;
};

/// Decides spec_A(H) = sqrt(beta) * spec_A(G) exactly through
/// c_k(H) = c_k(G) * beta^((n-k)/2) on the adjacency polynomials. When beta is
/// a rational square every k is compared directly; otherwise odd n-k
/// coefficients must vanish on both sides and even ones satisfy the identity.
/// Throws DomainError on an order mismatch or beta <= 0.
AlphaVerdict alpha_cospectral_check(const WeightedGraph& g, const WeightedGraph& h, const Rational& beta);

/// The alpha > 0 with spec_A(H) = alpha * spec_A(G) to 1e-8 on sorted numeric
/// spectra (zeros matched to zeros), or nullopt. 1.0 when both spectra vanish.
std::optional<double> estimate_alpha(const WeightedGraph& g, const WeightedGraph& h);

}  // namespace cospec
