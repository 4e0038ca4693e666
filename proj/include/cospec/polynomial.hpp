#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cospec/rational.hpp"

namespace cospec {

/// Dense univariate polynomial, coefficient i multiplies x^i.
///
/// The coefficient vector is kept trimmed: no trailing zeros, and the zero
/// polynomial has no coefficients (degree -1). Division needs `Scalar` to be a
/// field.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial monomial(const Scalar& c, std::size_t power) {
    std::vector<Scalar> v(power + 1, Scalar(0));
    v[power] = c;
    return Polynomial(std::move(v));
  }
  /// x - r
  static Polynomial linear_factor(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero beyond the degree.
  Scalar operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Scalar(1); }

  template <typename T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }
  Scalar operator()(const Scalar& x) const { return evaluate<Scalar>(x); }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Scalar> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Scalar(static_cast<int>(i));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    Polynomial r = *this;
    const Scalar lead = leading();
    for (auto& c : r.coeffs_) c = c / lead;
    return r;
  }

  /// Quotient and remainder of Euclidean division by a nonzero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < divisor.degree()) return {Polynomial(), *this};
    std::vector<Scalar> rem = coeffs_;
    std::vector<Scalar> quot(coeffs_.size() - divisor.coeffs_.size() + 1, Scalar(0));
    const std::size_t dn = divisor.coeffs_.size();
    for (std::size_t k = quot.size(); k-- > 0;) {
      const Scalar q = rem[k + dn - 1] / divisor.leading();
      quot[k] = q;
      if (q == Scalar(0)) continue;
      for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * divisor.coeffs_[j];
    }
    rem.resize(dn - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& p) { return Polynomial({s}) * p; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, unsigned exponent) {
  Polynomial<Scalar> r({Scalar(1)});
  for (unsigned i = 0; i < exponent; ++i) r = r * p;
  return r;
}

/// Monic greatest common divisor (zero when both inputs are zero).
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Monic characteristic polynomial with exact rational coefficients.
using CharPoly = Polynomial<Rational>;

/// Largest m such that (x - r)^m divides p, by repeated exact synthetic division.
/// The zero polynomial has no well-defined multiplicity and throws.
int root_multiplicity(const CharPoly& p, const Rational& r);

/// One factor of a square-free decomposition: p = prod factor^multiplicity.
struct SquareFreeFactor {
  CharPoly factor;
  int multiplicity;
};

/// Yun's square-free decomposition of a nonzero polynomial, monic factors,
/// increasing multiplicity. Constant factors are dropped.
std::vector<SquareFreeFactor> square_free_decomposition(const CharPoly& p);

struct RealRoot {
  double value;
  int multiplicity;
};

/// All real roots with multiplicity, ascending.
///
/// Multiplicities come from the exact square-free decomposition; each
/// square-free factor is isolated with a Sturm sequence and refined by exact
/// dyadic bisection until the bracket is narrower than `tolerance`. Complex
/// roots are ignored.
std::vector<RealRoot> real_roots(const CharPoly& p, double tolerance = 1e-14);

/// real_roots expanded by multiplicity.
std::vector<double> real_roots_flat(const CharPoly& p, double tolerance = 1e-14);

}  // namespace cospec
