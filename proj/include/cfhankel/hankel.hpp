#ifndef CFHANKEL_HANKEL_HPP
#define CFHANKEL_HANKEL_HPP

#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "series.hpp"

namespace cfhankel {

// Matrix entries are s_{i+j+offset}, 0 <= i,j <= size; indices below zero
// read as 0.  size = -1 denotes the empty matrix, determinant 1.
struct HankelSpec {
  long long offset = 0;
  long long size = 0;
};

inline Scalar hankel_det(const PowerSeries& s, const HankelSpec& spec) {
  if (spec.size < -1) throw ParamOutOfRangeError("matrix size below -1");
  if (spec.size == -1) return Scalar::one(s.ring());
  const long long n = spec.size;
  const long long top = 2 * n + spec.offset;
  if (top > s.order())
    throw InsufficientOrderError("Hankel matrix of size " + std::to_string(n) + " at offset " +
                                 std::to_string(spec.offset) + " needs coefficient " +
                                 std::to_string(top) + " but series stops at " +
                                 std::to_string(s.order()));
  SquareMatrix<Scalar> m(static_cast<std::size_t>(n) + 1, Scalar::zero(s.ring()));
  for (long long i = 0; i <= n; ++i)
    for (long long j = 0; j <= n; ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s.coeff(i + j + spec.offset);
  return det(m, s.ring());
}

inline std::vector<Scalar> hankel_transform(const PowerSeries& s, long long offset,
                                            long long up_to) {
  if (up_to < 0) throw ParamOutOfRangeError("negative transform bound");
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(up_to) + 1);
  for (long long n = 0; n <= up_to; ++n) out.push_back(hankel_det(s, {offset, n}));
  return out;
}

inline int pow_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

inline Scalar apply_sign(int sign, Scalar v) { return sign < 0 ? -v : v; }

// Recovers g from f = 1/(1 - a x^p g): g = (1 - 1/f)/(a x^p).  a must be a
// unit times a monomial so the coefficientwise division stays exact.
inline PowerSeries solve_tail(const PowerSeries& f, const Scalar& a, long long p) {
  if (p < 1) throw ParamOutOfRangeError("tail power must be positive");
  if (a.is_zero()) throw DivisionByZeroError("zero tail coefficient");
  PowerSeries recip = series_reciprocal(f);
  PowerSeries numer = PowerSeries::one(recip.ring(), recip.order()) - recip;
  PowerSeries shifted = numer.shifted_down(p);
  PowerSeries g(ring_union(shifted.ring(), a.ring()), shifted.order());
  for (long long n = 0; n <= g.order(); ++n)
    g.set_coeff(n, Scalar::exact_div(shifted.coeff(n), a));
  return g;
}

enum class ReductionIdentity {
  reciprocal_shift2,  // det(s_{i+j})_0^n = (-1)^n det(t_{i+j+2})_0^{n-1}, t = 1/s
  backshift,          // det(s_{i+j-m})_0^{n+m} = (-1)^{n+C(m+1,2)} det(t_{i+j+m+2})_0^{n-1}
  reciprocal_shift1,  // det(s_{i+j+1})_0^n = (-1)^{n+1} det(t_{i+j+1})_0^n
  tail_factor,        // f = 1/(1-a x^p g): det(f_{i+j-m})_0^{n+m} = (-1)^{C(m+1,2)} a^n det(g_{i+j+m-p+2})_0^{n-1}
};

inline const char* reduction_identity_name(ReductionIdentity id) {
  switch (id) {
    case ReductionIdentity::reciprocal_shift2: return "reciprocal-shift2";
    case ReductionIdentity::backshift: return "backshift";
    case ReductionIdentity::reciprocal_shift1: return "reciprocal-shift1";
    case ReductionIdentity::tail_factor: return "tail-factor";
  }
  return "?";
}

inline ReductionIdentity parse_reduction_identity(const std::string& name) {
  if (name == "reciprocal-shift2") return ReductionIdentity::reciprocal_shift2;
  if (name == "backshift") return ReductionIdentity::backshift;
  if (name == "reciprocal-shift1") return ReductionIdentity::reciprocal_shift1;
  if (name == "tail-factor") return ReductionIdentity::tail_factor;
  throw UnknownNameError("unknown reduction identity '" + name + "'");
}

struct ReductionParams {
  long long m = 0;
  long long n = 0;
  long long p = 0;
  Scalar a;
};

struct ReductionReport {
  Scalar lhs;
  Scalar rhs;
  bool equal = false;
};

inline ReductionReport verify_reduction(const PowerSeries& s, ReductionIdentity id,
                                        const ReductionParams& prm) {
  if (!s.coeff(0).is_one())
    throw NonUnitConstantTermError("reduction identities need constant term 1");
  ReductionReport rep;
  switch (id) {
    case ReductionIdentity::reciprocal_shift2: {
      PowerSeries t = series_reciprocal(s);
      rep.lhs = hankel_det(s, {0, prm.n});
      rep.rhs = apply_sign(pow_sign(prm.n), hankel_det(t, {2, prm.n - 1}));
      break;
    }
    case ReductionIdentity::backshift: {
      if (prm.m < 0) throw ParamOutOfRangeError("negative back shift");
      PowerSeries t = series_reciprocal(s);
      rep.lhs = hankel_det(s, {-prm.m, prm.n + prm.m});
      rep.rhs = apply_sign(pow_sign(prm.n + parity_choose2(prm.m + 1)),
                           hankel_det(t, {prm.m + 2, prm.n - 1}));
      break;
    }
    case ReductionIdentity::reciprocal_shift1: {
      PowerSeries t = series_reciprocal(s);
      rep.lhs = hankel_det(s, {1, prm.n});
      rep.rhs = apply_sign(pow_sign(prm.n + 1), hankel_det(t, {1, prm.n}));
      break;
    }
    case ReductionIdentity::tail_factor: {
      if (prm.m < 0) throw ParamOutOfRangeError("negative back shift");
      PowerSeries g = solve_tail(s, prm.a, prm.p);
      rep.lhs = hankel_det(s, {-prm.m, prm.n + prm.m});
      rep.rhs = apply_sign(pow_sign(parity_choose2(prm.m + 1)),
                           prm.a.pow(prm.n) * hankel_det(g, {prm.m - prm.p + 2, prm.n - 1}));
      break;
    }
  }
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

// d_2(n)d(n) = d_2(n-1)d(n+1) + d_1(n)^2 with d_2(-1) the empty determinant.
struct CondensationReport {
  long long n = 0;
  Scalar d2_n, d_n, d2_prev, d_next, d1_n;
  bool holds = false;
};

inline CondensationReport condensation_check(const PowerSeries& s, long long n) {
  if (n < 0) throw ParamOutOfRangeError("negative index");
  CondensationReport rep;
  rep.n = n;
  rep.d2_n = hankel_det(s, {2, n});
  rep.d_n = hankel_det(s, {0, n});
  rep.d2_prev = hankel_det(s, {2, n - 1});
  rep.d_next = hankel_det(s, {0, n + 1});
  rep.d1_n = hankel_det(s, {1, n});
  rep.holds = rep.d2_n * rep.d_n == rep.d2_prev * rep.d_next + rep.d1_n * rep.d1_n;
  return rep;
}

}  // namespace cfhankel

#endif
