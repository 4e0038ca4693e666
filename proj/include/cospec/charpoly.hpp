#pragma once

#include <vector>

#include <Eigen/Core>

#include "cospec/polynomial.hpp"
#include "cospec/rational.hpp"

namespace cospec {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

/// Coefficients of det(xI - A), highest power first, by Berkowitz's
/// division-free algorithm. Only ring operations on `Scalar` are used, so
/// integer matrices stay integral throughout. O(n^4) scalar operations.
template <typename Derived>
std::vector<typename Derived::Scalar> berkowitz(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(a.rows() == a.cols());
  const Eigen::Index n = a.rows();

  std::vector<Scalar> c{Scalar(1)};
  for (Eigen::Index r = 0; r < n; ++r) {
    // Leading (r+1)x(r+1) block: M = a[0:r,0:r], row R = a[r,0:r], column S = a[0:r,r].
    std::vector<Scalar> t(static_cast<std::size_t>(r) + 2, Scalar(0));
    t[0] = Scalar(1);
    t[1] = -Scalar(a(r, r));
    std::vector<Scalar> v(static_cast<std::size_t>(r));
    for (Eigen::Index i = 0; i < r; ++i) v[i] = a(i, r);
    for (Eigen::Index k = 2; k <= r + 1; ++k) {
      Scalar dot(0);
      for (Eigen::Index j = 0; j < r; ++j) dot += Scalar(a(r, j)) * v[j];
      t[k] = -dot;
      if (k == r + 1) break;
      std::vector<Scalar> mv(static_cast<std::size_t>(r), Scalar(0));
      for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index j = 0; j < r; ++j) mv[i] += Scalar(a(i, j)) * v[j];
      }
      v.swap(mv);
    }
    std::vector<Scalar> next(static_cast<std::size_t>(r) + 2, Scalar(0));
    for (std::size_t i = 0; i < next.size(); ++i) {
      for (std::size_t j = 0; j <= i && j < c.size(); ++j) next[i] += t[i - j] * c[j];
    }
    c.swap(next);
  }
  return c;
}

/// Exact det(xI - M). Denominators are cleared with s = lcm of all entry
/// denominators, Berkowitz runs on the integer matrix sM, and the result is
/// rescaled as p_M(x) = s^-n p_{sM}(s x).
CharPoly char_poly_exact(const RationalMatrix& m);

}  // namespace cospec
