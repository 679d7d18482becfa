#ifndef CFHANKEL_ORTHOPOLY_HPP
#define CFHANKEL_ORTHOPOLY_HPP

#include <string>
#include <vector>

#include "bseq.hpp"
#include "errors.hpp"
#include "hankel.hpp"
#include "matrix.hpp"
#include "series.hpp"

namespace cfhankel {

// r_k = x^{b_{k-1}-b_{k-2}} r_{k-1} - a_{k-2} r_{k-2}, r_0 = 1, r_1 = x.
// deg r_k = b_{k-1} + 1.
inline XPoly r_poly(const BSeq& b, const std::vector<Scalar>& numerators, long long k) {
  if (k < 0) throw IndexOutOfRangeError("negative polynomial index");
  if (k >= 2) {
    if (k - 1 > b.K())
      throw IndexOutOfRangeError("r_" + std::to_string(k) + " needs b_" + std::to_string(k - 1));
    if (static_cast<long long>(numerators.size()) < k - 1)
      throw IndexOutOfRangeError("r_" + std::to_string(k) + " needs a_" + std::to_string(k - 2));
  }
  Ring ring;
  for (long long j = 0; j + 2 <= k; ++j)
    ring = ring_union(ring, numerators[static_cast<std::size_t>(j)].ring());
  XPoly prev = XPoly::one(ring);
  if (k == 0) return prev;
  XPoly cur = XPoly::x(ring);
  for (long long n = 2; n <= k; ++n) {
    long long shift = b.b(n - 1) - b.b(n - 2);
    XPoly next = cur.shifted_up(shift) - numerators[static_cast<std::size_t>(n - 2)] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Fib_n = x Fib_{n-1} - Fib_{n-2}, Fib_0 = 0, Fib_1 = 1.
inline XPoly fibonacci_poly(long long n) {
  if (n < 0) throw ParamOutOfRangeError("negative index");
  Ring ring;
  XPoly prev = XPoly::zero(ring);
  if (n == 0) return prev;
  XPoly cur = XPoly::one(ring);
  for (long long i = 2; i <= n; ++i) {
    XPoly next = cur.shifted_up(1) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Moment functional of a series: L(x^n) = f_n, extended linearly.
inline Scalar lambda_apply(const PowerSeries& moments, const XPoly& p, long long shift) {
  if (shift < 0) throw ParamOutOfRangeError("negative moment shift");
  Scalar acc = Scalar::zero(ring_union(moments.ring(), p.ring()));
  for (long long j = 0; j <= p.degree(); ++j) {
    if (p.coeff(j).is_zero()) continue;
    acc += p.coeff(j) * moments.coeff(j + shift);
  }
  return acc;
}

// det of the bordered Hankel matrix whose first n columns are f_{i+j} and
// whose last column is 1, x, ..., x^n; expanded along that column so all
// eliminations stay in the coefficient ring.  p_0 = 1 by convention.
inline XPoly p_poly(const PowerSeries& s, long long n) {
  if (n < 0) throw ParamOutOfRangeError("negative polynomial index");
  if (n == 0) return XPoly::one(s.ring());
  if (s.order() < 2 * n - 1)
    throw InsufficientOrderError("p_" + std::to_string(n) + " needs coefficient " +
                                 std::to_string(2 * n - 1));
  std::vector<Scalar> coeffs;
  for (long long i = 0; i <= n; ++i) {
    SquareMatrix<Scalar> minor(static_cast<std::size_t>(n), Scalar::zero(s.ring()));
    long long rr = 0;
    for (long long r = 0; r <= n; ++r) {
      if (r == i) continue;
      for (long long c = 0; c < n; ++c)
        minor(static_cast<std::size_t>(rr), static_cast<std::size_t>(c)) = s.coeff(r + c);
      ++rr;
    }
    Scalar cof = det(minor, s.ring());
    coeffs.push_back(apply_sign(pow_sign(i + n), std::move(cof)));
  }
  return XPoly(s.ring(), std::move(coeffs));
}

// The same polynomial as det(f_{i+j} x - f_{i+j+1})_{i,j=0}^{n-1}, computed
// by cofactor expansion over polynomials in x.
inline XPoly p_poly_cross(const PowerSeries& s, long long n) {
  if (n < 0) throw ParamOutOfRangeError("negative polynomial index");
  if (n == 0) return XPoly::one(s.ring());
  SquareMatrix<XPoly> m(static_cast<std::size_t>(n), XPoly::zero(s.ring()));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      std::vector<Scalar> c = {-s.coeff(i + j + 1), s.coeff(i + j)};
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = XPoly(s.ring(), std::move(c));
    }
  return laplace_det(m, XPoly::one(s.ring()));
}

// How p_m relates to the orthogonal polynomials: p_{B+1} = d(B) r_k at each
// support value B, zero strictly between windows, and at the right edge of a
// window a signed monomial multiple of the left edge polynomial.
struct PRelation {
  enum class Kind { unit_normalized, zero, boundary_multiple };
  long long m = 0;
  Kind kind = Kind::zero;
  long long r_index = -1;   // unit_normalized: p_m = d(m-1) r_{r_index}
  long long base = -1;      // boundary_multiple: p_m = factor * p_base
  Scalar factor;            // boundary_multiple: resolved signed monomial
  bool verified = false;
  XPoly p;
};

inline const char* p_relation_kind_name(PRelation::Kind k) {
  switch (k) {
    case PRelation::Kind::unit_normalized: return "unit-normalized";
    case PRelation::Kind::zero: return "zero";
    case PRelation::Kind::boundary_multiple: return "boundary-multiple";
  }
  return "?";
}

// Classifies p_0..p_M for the series of the C-fraction attached to b, and
// checks every claimed relation by direct computation.
inline std::vector<PRelation> classify_p_polys(const BSeq& b,
                                               const std::vector<Scalar>& numerators,
                                               long long up_to) {
  if (up_to < 0) throw ParamOutOfRangeError("negative bound");
  if (b.b(b.K()) < up_to)
    throw InsufficientLengthError("b-sequence reaches " + std::to_string(b.b(b.K())) +
                                  " but classification up to " + std::to_string(up_to) +
                                  " was requested");
  const long long order = up_to >= 1 ? 2 * up_to - 1 : 0;
  CFrac cf;
  cf.powers = b.powers();
  cf.numerators = numerators;
  PowerSeries f = cfrac_expand(cf, order);

  const std::vector<long long> support = b.distinct_values();
  auto in_support = [&](long long v) {
    for (long long s : support)
      if (s == v) return true;
    return false;
  };

  std::vector<PRelation> out;
  for (long long m = 0; m <= up_to; ++m) {
    PRelation rel;
    rel.m = m;
    rel.p = p_poly(f, m);
    if (m == 0 || in_support(m - 1)) {
      rel.kind = PRelation::Kind::unit_normalized;
      const long long k = (m == 0) ? 0 : b.last_index_of(m - 1) + 1;
      rel.r_index = k;
      Scalar dB = (m == 0) ? Scalar::one(f.ring()) : hankel_det(f, {0, m - 1});
      rel.verified = rel.p == dB * r_poly(b, numerators, k);
    } else if (in_support(m)) {
      rel.kind = PRelation::Kind::boundary_multiple;
      long long prev = -1;
      for (long long s : support)
        if (s < m) prev = std::max(prev, s);
      const long long k = b.last_index_of(prev) + 1;
      if (static_cast<long long>(numerators.size()) < k)
        throw InsufficientDepthError("classification of p_" + std::to_string(m) + " needs a_" +
                                     std::to_string(k - 1));
      rel.base = prev + 1;
      Scalar run = Scalar::one(f.ring());
      for (long long j = 0; j < k; ++j) run *= numerators[static_cast<std::size_t>(j)];
      Scalar c = run.pow(m - prev - 1);
      XPoly p_base = p_poly(f, rel.base);
      if (rel.p == c * p_base) {
        rel.factor = c;
        rel.verified = true;
      } else if (rel.p == (-c) * p_base) {
        rel.factor = -c;
        rel.verified = true;
      } else {
        rel.factor = c;
        rel.verified = false;
      }
    } else {
      rel.kind = PRelation::Kind::zero;
      rel.verified = rel.p.is_zero();
    }
    out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace cfhankel

#endif
