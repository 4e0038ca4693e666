#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

namespace cospec {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Value wrapper over GMP's mpq_class. Arithmetic always yields a concrete
/// `Rational`, never a GMP expression template, so the type can be used as an
/// Eigen scalar.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(int value) : value_(static_cast<long>(value)) {}        // NOLINT
  explicit Rational(const BigInt& integer) : value_(integer) {}
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p" or "p/q" with optional leading sign; reduces to lowest terms.
  static Rational parse(std::string_view text);

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;
  double to_double() const { return value_.get_d(); }

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// The exact non-negative square root when this value is a perfect square
  /// of a rational.
  std::optional<Rational> exact_sqrt() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
/// Integer power; negative exponents invert (throws on 0^-k).
Rational pow(const Rational& base, int exponent);
/// Least common multiple of two positive integers.
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace cospec

namespace Eigen {

template <>
struct NumTraits<cospec::Rational> : GenericNumTraits<cospec::Rational> {
  using Real = cospec::Rational;
  using NonInteger = cospec::Rational;
  using Nested = cospec::Rational;
  using Literal = cospec::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 40,
    MulCost = 40
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
