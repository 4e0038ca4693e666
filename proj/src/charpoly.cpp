#include "cospec/charpoly.hpp"

#include <stdexcept>

namespace cospec {

CharPoly char_poly_exact(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const Eigen::Index n = m.rows();

  BigInt s(1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) s = lcm(s, m(i, j).denominator());
  }
  IntegerMatrix scaled(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Rational& e = m(i, j);
      scaled(i, j) = e.numerator() * (s / e.denominator());
    }
  }

  const std::vector<BigInt> high_first = berkowitz(scaled);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  BigInt s_pow(1);
  for (Eigen::Index k = 0; k <= n; ++k) {
    // high_first[k] multiplies y^(n-k) in p_{sM}; it becomes x^(n-k) / s^k.
    coeffs[static_cast<std::size_t>(n - k)] = Rational(high_first[static_cast<std::size_t>(k)], s_pow);
    s_pow *= s;
  }
  return CharPoly(std::move(coeffs));
}

}  // namespace cospec
