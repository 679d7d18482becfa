#ifndef CFHANKEL_CFRAC_HPP
#define CFHANKEL_CFRAC_HPP

#include <string>
#include <vector>

#include "bseq.hpp"
#include "errors.hpp"
#include "series.hpp"

namespace cfhankel {

// f(x) = 1/(1 - a_0 x^{m_0}/(1 - a_1 x^{m_1}/(1 - ...))).  Both supplies are
// finite lists; generators materialize as many entries as an expansion depth
// can ever consume.
struct CFrac {
  std::vector<long long> powers;
  std::vector<Scalar> numerators;
};

// Smallest d with m_0 + ... + m_{d-1} > order; levels at or beyond d cannot
// touch coefficients <= order.
inline long long expansion_depth(const std::vector<long long>& powers, long long order) {
  if (order < 0) throw ParamOutOfRangeError("negative expansion order");
  long long acc = 0, d = 0;
  while (acc <= order) {
    if (d >= static_cast<long long>(powers.size()))
      throw InsufficientDepthError("power supply exhausted at depth " + std::to_string(d) +
                                   " with coefficient sum " + std::to_string(acc) +
                                   " <= order " + std::to_string(order));
    long long mk = powers[static_cast<std::size_t>(d)];
    if (mk < 1) throw ParamOutOfRangeError("powers must be positive");
    acc += mk;
    ++d;
  }
  return d;
}

// Bottom-up expansion of the tails f^{(k)} = 1/(1 - a_k x^{m_k} f^{(k+1)})
// via f^{(k)} = 1 + a_k x^{m_k} f^{(k+1)} f^{(k)}, truncating level k at
// order - (m_0 + ... + m_{k-1}); no series division is ever needed.
inline PowerSeries cfrac_expand(const CFrac& cf, long long order) {
  const long long depth = expansion_depth(cf.powers, order);
  if (static_cast<long long>(cf.numerators.size()) < depth)
    throw InsufficientDepthError("numerator supply exhausted: depth " + std::to_string(depth) +
                                 " needs a_0..a_" + std::to_string(depth - 1));
  Ring ring;
  for (long long k = 0; k < depth; ++k)
    ring = ring_union(ring, cf.numerators[static_cast<std::size_t>(k)].ring());

  std::vector<long long> t(static_cast<std::size_t>(depth) + 1);
  t[0] = order;
  for (long long k = 0; k < depth; ++k)
    t[static_cast<std::size_t>(k) + 1] =
        t[static_cast<std::size_t>(k)] - cf.powers[static_cast<std::size_t>(k)];

  const Scalar zero = Scalar::zero(ring);
  std::vector<Scalar> next;  // f^{(k+1)}, possibly empty when never consulted
  std::vector<Scalar> cur;
  for (long long k = depth - 1; k >= 0; --k) {
    const long long tk = t[static_cast<std::size_t>(k)];
    const long long mk = cf.powers[static_cast<std::size_t>(k)];
    Scalar ak = cf.numerators[static_cast<std::size_t>(k)].promoted(ring);
    cur.assign(static_cast<std::size_t>(tk) + 1, zero);
    cur[0] = Scalar::one(ring);
    for (long long n = mk; n <= tk; ++n) {
      Scalar acc = zero;
      for (long long i = 0; i <= n - mk; ++i) {
        const Scalar& gi = next[static_cast<std::size_t>(i)];
        const Scalar& fj = cur[static_cast<std::size_t>(n - mk - i)];
        if (gi.is_zero() || fj.is_zero()) continue;
        acc += gi * fj;
      }
      cur[static_cast<std::size_t>(n)] = ak * acc;
    }
    next = std::move(cur);
  }
  if (depth == 0) return PowerSeries::one(ring, order);  // unreachable: depth >= 1
  return PowerSeries(ring, std::move(next));
}

// Convergent polynomials A_k, B_k of the C-fraction attached to b:
// A_n = A_{n-1} - a_{n-2} x^{b_{n-1}-b_{n-3}} A_{n-2}, same for B,
// A_0 = 0, A_1 = 1, B_0 = B_1 = 1.
struct Convergents {
  XPoly A;
  XPoly B;
};

inline Convergents convergents(const BSeq& b, const std::vector<Scalar>& numerators,
                               long long k) {
  if (k < 0) throw DepthOutOfRangeError("negative convergent index");
  if (k >= 2) {
    if (k - 1 > b.K())
      throw DepthOutOfRangeError("convergent " + std::to_string(k) + " needs b_" +
                                 std::to_string(k - 1));
    if (static_cast<long long>(numerators.size()) < k - 1)
      throw DepthOutOfRangeError("convergent " + std::to_string(k) + " needs a_" +
                                 std::to_string(k - 2));
  }
  Ring ring;
  for (long long j = 0; j + 2 <= k; ++j)
    ring = ring_union(ring, numerators[static_cast<std::size_t>(j)].ring());

  XPoly A_prev = XPoly::zero(ring), A_cur = XPoly::one(ring);
  XPoly B_prev = XPoly::one(ring), B_cur = XPoly::one(ring);
  if (k == 0) return {A_prev, B_prev};
  for (long long n = 2; n <= k; ++n) {
    const Scalar& a = numerators[static_cast<std::size_t>(n - 2)];
    long long shift = b.b(n - 1) - b.b(n - 3);
    XPoly A_next = A_cur - (a * A_prev).shifted_up(shift);
    XPoly B_next = B_cur - (a * B_prev).shifted_up(shift);
    A_prev = std::move(A_cur);
    A_cur = std::move(A_next);
    B_prev = std::move(B_cur);
    B_cur = std::move(B_next);
  }
  return {A_cur, B_cur};
}

// 1/(1 - d_0 x - l_1 x^2/(1 - d_1 x - l_2 x^2/(1 - ...))); sub[k] holds
// l_{k+1}.  Level k is truncated at order - 2k.
inline PowerSeries jfraction_expand(const std::vector<Scalar>& diag,
                                    const std::vector<Scalar>& sub, long long order) {
  if (order < 0) throw ParamOutOfRangeError("negative expansion order");
  const long long depth = order / 2 + 1;  // level k has truncation order - 2k
  Ring ring;
  for (long long k = 0; k < depth; ++k) {
    const long long tk = order - 2 * k;
    if (tk >= 1) {
      if (k >= static_cast<long long>(diag.size()))
        throw InsufficientDepthError("diagonal supply exhausted at level " + std::to_string(k));
      ring = ring_union(ring, diag[static_cast<std::size_t>(k)].ring());
    }
    if (tk >= 2) {
      if (k >= static_cast<long long>(sub.size()))
        throw InsufficientDepthError("subdiagonal supply exhausted at level " + std::to_string(k));
      ring = ring_union(ring, sub[static_cast<std::size_t>(k)].ring());
    }
  }

  const Scalar zero = Scalar::zero(ring);
  std::vector<Scalar> next;
  std::vector<Scalar> cur;
  for (long long k = depth - 1; k >= 0; --k) {
    const long long tk = order - 2 * k;
    cur.assign(static_cast<std::size_t>(tk) + 1, zero);
    cur[0] = Scalar::one(ring);
    Scalar dk = tk >= 1 ? diag[static_cast<std::size_t>(k)].promoted(ring) : zero;
    Scalar lk = tk >= 2 ? sub[static_cast<std::size_t>(k)].promoted(ring) : zero;
    for (long long n = 1; n <= tk; ++n) {
      Scalar acc = dk * cur[static_cast<std::size_t>(n - 1)];
      if (n >= 2 && !lk.is_zero()) {
        Scalar conv = zero;
        for (long long i = 0; i <= n - 2; ++i) {
          const Scalar& gi = next[static_cast<std::size_t>(i)];
          const Scalar& fj = cur[static_cast<std::size_t>(n - 2 - i)];
          if (gi.is_zero() || fj.is_zero()) continue;
          conv += gi * fj;
        }
        acc += lk * conv;
      }
      cur[static_cast<std::size_t>(n)] = std::move(acc);
    }
    next = std::move(cur);
  }
  return PowerSeries(ring, std::move(next));
}

}  // namespace cfhankel

#endif
