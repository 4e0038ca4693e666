#include "cospec/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace cospec {

int root_multiplicity(const CharPoly& p, const Rational& r) {
  if (p.is_zero()) throw std::domain_error("root multiplicity of the zero polynomial");
  int m = 0;
  CharPoly cur = p;
  while (cur.degree() >= 1) {
    // Synthetic division by (x - r).
    const auto& c = cur.coeffs();
    std::vector<Rational> q(c.size() - 1);
    Rational acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
      q[i] = acc;
      acc = acc * r + c[i];
    }
    if (!acc.is_zero()) break;
    cur = CharPoly(std::move(q));
    ++m;
  }
  return m;
}

std::vector<SquareFreeFactor> square_free_decomposition(const CharPoly& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  std::vector<SquareFreeFactor> out;
  const CharPoly f = p.monic();
  if (f.degree() < 1) return out;

  const CharPoly df = f.derivative();
  const CharPoly a0 = gcd(f, df);
  CharPoly b = f.divmod(a0).first;
  CharPoly c = df.divmod(a0).first;
  CharPoly d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    const CharPoly a = gcd(b, d);
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
    if (a.degree() >= 1) out.push_back({a, i});
  }
  return out;
}

namespace {

using Chain = std::vector<CharPoly>;

Chain sturm_chain(const CharPoly& q) {
  Chain chain{q, q.derivative()};
  while (!chain.back().is_zero()) {
    const auto& prev = chain[chain.size() - 2];
    CharPoly rem = prev.divmod(chain.back()).second;
    if (rem.is_zero()) break;
    // Positive rescaling keeps signs and tames coefficient growth.
    const Rational lead = abs(rem.leading());
    chain.push_back(CharPoly({Rational(-1) / lead}) * rem);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign_changes(const Chain& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain) {
    const int sg = s(x).sign();
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

double refine(const CharPoly& q, const Chain& chain, Rational lo, Rational hi, double tolerance) {
  // Exactly one root lies in (lo, hi].
  if (q(hi).is_zero()) return hi.to_double();
  while (q(lo).is_zero()) {
    const Rational mid = midpoint(lo, hi);
    if (q(mid).is_zero()) return mid.to_double();
    if (sign_changes(chain, lo) - sign_changes(chain, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  int sign_lo = q(lo).sign();
  const Rational tol(BigInt(static_cast<long>(std::ldexp(tolerance, 60))), BigInt(1) << 60);
  while (true) {
    const Rational width = hi - lo;
    const Rational scale = std::max(Rational(1), std::max(abs(lo), abs(hi)));
    if (width <= tol * scale) break;
    const Rational mid = midpoint(lo, hi);
    const int sm = q(mid).sign();
    if (sm == 0) return mid.to_double();
    if (sm == sign_lo) {
      lo = mid;
      sign_lo = sm;
    } else {
      hi = mid;
    }
  }
  return midpoint(lo, hi).to_double();
}

void isolate(const CharPoly& q, const Chain& chain, const Rational& lo, const Rational& hi, int count,
             double tolerance, std::vector<double>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(refine(q, chain, lo, hi, tolerance));
    return;
  }
  const Rational mid = midpoint(lo, hi);
  const int left = sign_changes(chain, lo) - sign_changes(chain, mid);
  isolate(q, chain, lo, mid, left, tolerance, out);
  isolate(q, chain, mid, hi, count - left, tolerance, out);
}

std::vector<double> distinct_real_roots(const CharPoly& squarefree, double tolerance) {
  const CharPoly q = squarefree.monic();
  // Cauchy bound, rounded up to a power of two so bisection points stay dyadic.
  Rational bound(1);
  for (int i = 0; i < q.degree(); ++i) bound = std::max(bound, abs(q[static_cast<std::size_t>(i)]));
  bound += Rational(1);
  Rational pow2(1);
  while (pow2 < bound) pow2 *= Rational(2);
  const Chain chain = sturm_chain(q);
  const Rational lo = -pow2;
  const Rational hi = pow2;
  std::vector<double> out;
  isolate(q, chain, lo, hi, sign_changes(chain, lo) - sign_changes(chain, hi), tolerance, out);
  return out;
}

}  // namespace

std::vector<RealRoot> real_roots(const CharPoly& p, double tolerance) {
  std::vector<RealRoot> roots;
  for (const auto& [factor, mult] : square_free_decomposition(p)) {
    for (double r : distinct_real_roots(factor, tolerance)) roots.push_back({r, mult});
  }
  std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return roots;
}

std::vector<double> real_roots_flat(const CharPoly& p, double tolerance) {
  std::vector<double> flat;
  for (const auto& r : real_roots(p, tolerance)) flat.insert(flat.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return flat;
}

}  // namespace cospec
