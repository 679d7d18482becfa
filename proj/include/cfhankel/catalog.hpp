#pragma once

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hankel.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "scalar.hpp"
#include "series.hpp"

namespace cfhankel {

inline std::vector<BigInt> catalan_numbers(long long count) {
  std::vector<BigInt> c;
  if (count <= 0) return c;
  c.assign(static_cast<std::size_t>(count), BigInt(0));
  c[0] = 1;
  for (long long n = 1; n < count; ++n) {
    BigInt acc = 0;
    for (long long i = 0; i < n; ++i) acc += c[i] * c[n - 1 - i];
    c[n] = acc;
  }
  return c;
}

inline std::vector<BigInt> motzkin_numbers(long long count) {
  std::vector<BigInt> m;
  if (count <= 0) return m;
  m.assign(static_cast<std::size_t>(count), BigInt(0));
  m[0] = 1;
  for (long long n = 1; n < count; ++n) {
    BigInt acc = m[n - 1];
    for (long long i = 0; i + 2 <= n; ++i) acc += m[i] * m[n - 2 - i];
    m[n] = acc;
  }
  return m;
}

struct BuiltinParams {
  long long stretch = 2;
  std::optional<Scalar> a;
  std::optional<Scalar> u;
  std::optional<Scalar> q;
};

// Named coefficient streams used throughout the tests and the CLI.  All of
// them are exact; parameters may be rational or live in a symbolic ring.
inline PowerSeries builtin_series(const std::string& name, long long order,
                                  const BuiltinParams& prm = {}) {
  if (order < 0) throw ParamOutOfRangeError("series order must be nonnegative");
  const std::size_t count = static_cast<std::size_t>(order) + 1;

  auto from_bigints = [&](const std::vector<BigInt>& v) {
    Ring ring;
    std::vector<Scalar> coeffs;
    coeffs.reserve(count);
    for (std::size_t n = 0; n < count; ++n)
      coeffs.push_back(Scalar::constant(Rational(v[n]), ring));
    return PowerSeries(ring, coeffs);
  };

  if (name == "catalan") return from_bigints(catalan_numbers(order + 1));
  if (name == "motzkin") return from_bigints(motzkin_numbers(order + 1));

  if (name == "catalan-shifted") {
    std::vector<BigInt> c = catalan_numbers(order + 2);
    std::vector<BigInt> shifted(c.begin() + 1, c.end());
    return from_bigints(shifted);
  }

  if (name == "catalan-stretched") {
    const long long m = prm.stretch;
    if (m < 1) throw ParamOutOfRangeError("stretch factor must be at least 1");
    const Scalar a = prm.a ? *prm.a : Scalar::constant(Rational(1), Ring());
    std::vector<BigInt> c = catalan_numbers(order / m + 1);
    std::vector<Scalar> coeffs(count, Scalar::zero(a.ring()));
    for (long long n = 0; m * n <= order; ++n)
      coeffs[static_cast<std::size_t>(m * n)] = a.pow(n) * Rational(c[n]);
    return PowerSeries(a.ring(), coeffs);
  }

  if (name == "motzkin-u") {
    const Scalar u = prm.u ? *prm.u : Scalar::constant(Rational(1), Ring());
    std::vector<BigInt> c = catalan_numbers(order / 2 + 1);
    std::vector<Scalar> coeffs;
    coeffs.reserve(count);
    for (long long n = 0; n <= order; ++n) {
      Scalar acc = Scalar::zero(u.ring());
      for (long long k = 0; 2 * k <= n; ++k)
        acc += u.pow(n - 2 * k) * Rational(c[k] * binomial(n, 2 * k));
      coeffs.push_back(acc);
    }
    return PowerSeries(u.ring(), coeffs);
  }

  if (name == "eisenstein") {
    const Scalar q = prm.q ? *prm.q : Scalar::constant(Rational(2), Ring());
    std::vector<Scalar> coeffs;
    coeffs.reserve(count);
    for (long long n = 0; n <= order; ++n) coeffs.push_back(q.pow(n * (n + 1) / 2));
    return PowerSeries(q.ring(), coeffs);
  }

  throw UnknownNameError("unknown builtin series '" + name + "'");
}

// Recovering the numerators a_0, a_1, ... of an all-powers-one continued
// fraction from a series.  The ratios
//   d_1(n)/d(n) = a_0 a_2 ... a_{2n}   and   d(n)/d_1(n-1) = a_1 a_3 ... a_{2n-1}
// pin each numerator as a quotient of consecutive products, provided every
// determinant involved is nonzero.  The first vanishing determinant stops the
// process; the report keeps whatever prefix was recovered so callers can see
// how far the representation extends.
struct CFracReconstruction {
  std::vector<Scalar> numerators;
  bool complete = false;
  long long failure_index = -1;  // matrix size parameter n of the vanishing determinant
  int failure_offset = 0;        // 0 for d(n), 1 for d_1(n)
};

inline CFracReconstruction reconstruct_cfrac(const PowerSeries& s, long long up_to) {
  if (up_to < 0) throw ParamOutOfRangeError("reconstruction bound must be nonnegative");
  if (!s.coeff(0).is_one())
    throw NonUnitConstantTermError("reconstruction needs a series with constant term 1");
  if (s.order() < 2 * up_to + 2)
    throw InsufficientOrderError("reconstruction through a_" + std::to_string(2 * up_to + 1) +
                                 " needs order " + std::to_string(2 * up_to + 2) +
                                 ", series has " + std::to_string(s.order()));

  CFracReconstruction out;
  const Ring& ring = s.ring();
  Scalar d_n = Scalar::one(ring);       // d(0) = f_0 = 1
  Scalar u_prev = Scalar::one(ring);    // empty product
  Scalar v_prev = Scalar::one(ring);    // d(0)/d_1(-1)
  for (long long n = 0; n <= up_to; ++n) {
    const Scalar d1_n = hankel_det(s, {1, n});
    if (d1_n.is_zero()) {
      out.failure_index = n;
      out.failure_offset = 1;
      return out;
    }
    const Scalar u_n = Scalar::exact_div(d1_n, d_n);
    out.numerators.push_back(Scalar::exact_div(u_n, u_prev));  // a_{2n}
    u_prev = u_n;

    const Scalar d_next = hankel_det(s, {0, n + 1});
    if (d_next.is_zero()) {
      out.failure_index = n + 1;
      out.failure_offset = 0;
      return out;
    }
    const Scalar v_n = Scalar::exact_div(d_next, d1_n);
    out.numerators.push_back(Scalar::exact_div(v_n, v_prev));  // a_{2n+1}
    v_prev = v_n;
    d_n = d_next;
  }
  out.complete = true;
  return out;
}

// Gaussian binomial coefficient as a polynomial in q, built by the Pascal
// recurrence [n,k] = [n-1,k-1] + q^k [n-1,k] so no division ever happens.
inline Scalar qbinomial(const Ring& ring, long long n, long long k) {
  if (!ring.has_q()) throw RingMismatchError("qbinomial needs a ring containing q");
  if (n < 0 || k < 0 || k > n)
    throw IndexOutOfRangeError("qbinomial(" + std::to_string(n) + ", " + std::to_string(k) +
                               ") is out of range");
  std::vector<Scalar> row{Scalar::one(ring)};
  for (long long i = 1; i <= n; ++i) {
    std::vector<Scalar> next;
    next.reserve(static_cast<std::size_t>(i) + 1);
    next.push_back(Scalar::one(ring));
    for (long long j = 1; j < i; ++j)
      next.push_back(row[static_cast<std::size_t>(j - 1)] +
                     Scalar::q(ring).pow(j) * row[static_cast<std::size_t>(j)]);
    next.push_back(Scalar::one(ring));
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

inline Scalar qbinomial(long long n, long long k) { return qbinomial(Ring(0, true), n, k); }

}  // namespace cfhankel
