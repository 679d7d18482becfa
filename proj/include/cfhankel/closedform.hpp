#ifndef CFHANKEL_CLOSEDFORM_HPP
#define CFHANKEL_CLOSEDFORM_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bseq.hpp"
#include "cfrac.hpp"
#include "errors.hpp"
#include "hankel.hpp"

namespace cfhankel {

// A Hankel determinant value of a valid b-sequence: zero, or +-1 times a
// monomial in the partial numerators.
struct SignedMonomial {
  int sign = 0;
  std::vector<std::pair<int, long long>> exponents;  // (j, e_j), ascending j, e_j >= 1

  bool is_zero() const { return sign == 0; }

  Scalar to_scalar(const Ring& ring) const {
    if (sign == 0) return Scalar::zero(ring);
    Scalar v = Scalar::one(ring);
    for (const auto& [j, e] : exponents) v *= Scalar::var(ring, ring.a_var(j), e);
    return sign < 0 ? -v : v;
  }

  // Runs of consecutive indices sharing an exponent print as a group with an
  // explicit power, e.g. (a0*a1)^2*(a2*a3)^1; isolated factors as a2^3 or a5.
  std::string str() const {
    if (sign == 0) return "0";
    std::string out = sign < 0 ? "-" : "";
    if (exponents.empty()) return out + "1";
    std::size_t i = 0;
    bool first = true;
    while (i < exponents.size()) {
      std::size_t j = i;
      while (j + 1 < exponents.size() && exponents[j + 1].first == exponents[j].first + 1 &&
             exponents[j + 1].second == exponents[i].second)
        ++j;
      if (!first) out += "*";
      first = false;
      if (j > i) {
        out += "(";
        for (std::size_t t = i; t <= j; ++t) {
          if (t > i) out += "*";
          out += "a" + std::to_string(exponents[t].first);
        }
        out += ")^" + std::to_string(exponents[i].second);
      } else {
        out += "a" + std::to_string(exponents[i].first);
        if (exponents[i].second != 1) out += "^" + std::to_string(exponents[i].second);
      }
      i = j + 1;
    }
    return out;
  }
};

// d(b_k) = (-1)^{sum_{j=1}^{k} C(b_j - b_{j-1}, 2)} prod_{j<k} a_j^{b_k - b_j};
// both k choices for a multiplicity-2 value give the same result since the
// extra factor carries exponent 0.
inline SignedMonomial buslaev_d(const BSeq& b, long long k) {
  if (k < 0 || k > b.K())
    throw IndexOutOfRangeError("index " + std::to_string(k) + " beyond the listed b-sequence");
  SignedMonomial out;
  int par = 0;
  for (long long j = 1; j <= k; ++j) par ^= parity_choose2(b.b(j) - b.b(j - 1));
  out.sign = par ? -1 : 1;
  for (long long j = 0; j < k; ++j) {
    long long e = b.b(k) - b.b(j);
    if (e > 0) out.exponents.emplace_back(static_cast<int>(j), e);
  }
  return out;
}

// The transform is nonzero exactly on the values of the b-sequence.
inline std::vector<long long> transform_support(const BSeq& b, long long up_to) {
  if (up_to < 0) throw ParamOutOfRangeError("negative bound");
  if (b.b(b.K()) < up_to)
    throw InsufficientLengthError("b-sequence reaches " + std::to_string(b.b(b.K())) +
                                  " but support up to " + std::to_string(up_to) + " was requested");
  std::vector<long long> out;
  for (long long v : b.distinct_values())
    if (v <= up_to) out.push_back(v);
  return out;
}

// One step of the determinant recursion behind the closed form:
//   det(f_{i+j})_0^{n+b_k}
//     = (-1)^{sum_{j<k} C(b_{j+1}-b_j,2)} prod_{j=0}^{k} a_j^{n+b_k-b_j}
//       * det(f^(k+1)_{i+j-mu})_0^{n-1},  mu = b_{k+1} - b_k - 1,
// where f^(k+1) is the tail starting at level k+1.  Both sides are computed
// from scratch as symbolic series.
struct StepRecursionReport {
  Scalar lhs;
  Scalar rhs;
  bool equal = false;
};

inline StepRecursionReport step_recursion_check(const BSeq& b, long long k, long long n) {
  if (n < 0) throw ParamOutOfRangeError("negative size");
  if (k < 0 || k + 1 > b.K())
    throw IndexOutOfRangeError("step index " + std::to_string(k) + " needs b_" +
                               std::to_string(k + 1));
  const std::vector<long long> powers = b.powers();
  const long long order0 = 2 * (n + b.b(k));
  const long long depth0 = expansion_depth(powers, order0);

  const long long mu = b.b(k + 1) - b.b(k) - 1;
  long long deptht = 0;
  long long ordert = 0;
  if (n >= 1) {
    ordert = std::max<long long>(0, 2 * (n - 1) - mu);
    std::vector<long long> tail_powers(powers.begin() + static_cast<std::ptrdiff_t>(k + 1),
                                       powers.end());
    deptht = expansion_depth(tail_powers, ordert);
  }
  const long long acount = std::max({depth0, k + 1 + deptht, k + 1});
  Ring ring(static_cast<int>(acount));

  CFrac head;
  head.powers = powers;
  for (long long j = 0; j < depth0; ++j) head.numerators.push_back(Scalar::a(ring, static_cast<int>(j)));
  PowerSeries f0 = cfrac_expand(head, order0);

  StepRecursionReport rep;
  rep.lhs = hankel_det(f0, {0, n + b.b(k)});

  int par = 0;
  for (long long j = 0; j < k; ++j) par ^= parity_choose2(b.b(j + 1) - b.b(j));
  Scalar factor = Scalar::one(ring);
  for (long long j = 0; j <= k; ++j) {
    long long e = n + b.b(k) - b.b(j);
    if (e > 0) factor *= Scalar::a(ring, static_cast<int>(j)).pow(e);
  }

  Scalar tail_det;
  if (n == 0) {
    tail_det = Scalar::one(ring);
  } else {
    CFrac tail;
    tail.powers.assign(powers.begin() + static_cast<std::ptrdiff_t>(k + 1), powers.end());
    for (long long j = 0; j < deptht; ++j)
      tail.numerators.push_back(Scalar::a(ring, static_cast<int>(k + 1 + j)));
    PowerSeries ft = cfrac_expand(tail, ordert);
    tail_det = hankel_det(ft, {-mu, n - 1});
  }
  rep.rhs = apply_sign(par ? -1 : 1, factor * tail_det);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

// Closed-form determinant families from the worked examples.
enum class Family {
  linear_d1,      // b_n = n: d_1(2t-1) = (-1)^t a_0^{2t} (a_1a_2)^{2t-2}...(a_{2t-3}a_{2t-2})^2, even index 0
  sfraction_d1,   // all m = 1: d_1(n) = a_0^{n+1} (a_1a_2)^n ... (a_{2n-1}a_{2n})
  sfraction_d2,   // all m = 1: d_2(n) = e_n d_1(n), e_n = a_{2n+1} e_{n-1} + a_0 a_2...a_{2n}
  stretched_dn,   // f_{mn} = a^n C_n: d(s) nonzero only near multiples of m
  stretched_d1,   // same family: det(f_{i+j+1})_0^{m-1} = (-1)^{C(m,2)} a^m
  gap_linear,     // b_n = m+n (n>0): d(m+n) = (-1)^{C(m+1,2)} a_0^{n+m} a_1^{n-1}...a_{n-1}
  sfraction_bump, // powers (1,2,1,1,...): d(0..2) = 1, 0, -(a_0a_1)^2, then a shifted d_2 chain
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::linear_d1: return "linear-d1";
    case Family::sfraction_d1: return "sfraction-d1";
    case Family::sfraction_d2: return "sfraction-d2";
    case Family::stretched_dn: return "stretched-dn";
    case Family::stretched_d1: return "stretched-d1";
    case Family::gap_linear: return "gap-linear";
    case Family::sfraction_bump: return "sfraction-bump";
  }
  return "?";
}

inline Family parse_family(const std::string& name) {
  if (name == "linear-d1") return Family::linear_d1;
  if (name == "sfraction-d1") return Family::sfraction_d1;
  if (name == "sfraction-d2") return Family::sfraction_d2;
  if (name == "stretched-dn") return Family::stretched_dn;
  if (name == "stretched-d1") return Family::stretched_d1;
  if (name == "gap-linear") return Family::gap_linear;
  if (name == "sfraction-bump") return Family::sfraction_bump;
  throw UnknownNameError("unknown determinant family '" + name + "'");
}

struct FamilyParams {
  long long m = 1;  // stretch width / gap width
  long long n = 0;  // index or size, family-specific
  Scalar a;         // coefficient for the stretched families
};

namespace detail {

// d_1 of the all-ones-power C-fraction with numerators a_{base}, a_{base+1}, ...
inline Scalar shifted_sfraction_d1(const Ring& ring, long long n, long long base) {
  Scalar v = Scalar::a(ring, static_cast<int>(base)).pow(n + 1);
  for (long long i = 1; i <= n; ++i) {
    Scalar pair = Scalar::a(ring, static_cast<int>(base + 2 * i - 1)) *
                  Scalar::a(ring, static_cast<int>(base + 2 * i));
    v *= pair.pow(n + 1 - i);
  }
  return v;
}

// e_n = a_{base+2n+1} e_{n-1} + a_base a_{base+2} ... a_{base+2n}, e_{-1} = 1.
inline Scalar shifted_sfraction_e(const Ring& ring, long long n, long long base) {
  Scalar e = Scalar::one(ring);
  Scalar evens = Scalar::one(ring);
  for (long long t = 0; t <= n; ++t) {
    evens *= Scalar::a(ring, static_cast<int>(base + 2 * t));
    e = Scalar::a(ring, static_cast<int>(base + 2 * t + 1)) * e + evens;
  }
  return e;
}

}  // namespace detail

inline Scalar family_formula(Family family, const FamilyParams& prm) {
  switch (family) {
    case Family::linear_d1: {
      if (prm.n < 0) throw ParamOutOfRangeError("negative index");
      if (prm.n % 2 == 0) return Scalar();
      const long long t = (prm.n + 1) / 2;
      Ring ring(static_cast<int>(prm.n));
      Scalar v = Scalar::a(ring, 0).pow(2 * t);
      for (long long i = 1; i <= t - 1; ++i) {
        Scalar pair = Scalar::a(ring, static_cast<int>(2 * i - 1)) *
                      Scalar::a(ring, static_cast<int>(2 * i));
        v *= pair.pow(2 * t - 2 * i);
      }
      return apply_sign(pow_sign(t), v);
    }
    case Family::sfraction_d1: {
      if (prm.n < 0) throw ParamOutOfRangeError("negative index");
      Ring ring(static_cast<int>(2 * prm.n + 1));
      return detail::shifted_sfraction_d1(ring, prm.n, 0);
    }
    case Family::sfraction_d2: {
      if (prm.n < 0) throw ParamOutOfRangeError("negative index");
      Ring ring(static_cast<int>(2 * prm.n + 2));
      return detail::shifted_sfraction_e(ring, prm.n, 0) *
             detail::shifted_sfraction_d1(ring, prm.n, 0);
    }
    case Family::stretched_dn: {
      if (prm.m < 1) throw ParamOutOfRangeError("stretch width must be positive");
      if (prm.n < 0) throw ParamOutOfRangeError("negative size");
      const long long s = prm.n;
      if ((s + 1) % prm.m == 0) {
        const long long t = (s + 1) / prm.m;
        return apply_sign(pow_sign(parity_choose2(prm.m - 1) * t), prm.a.pow(t * s));
      }
      if (s % prm.m == 0) {
        const long long t = s / prm.m;
        return apply_sign(pow_sign(parity_choose2(prm.m - 1) * t), prm.a.pow(t * (s + 1)));
      }
      return Scalar();
    }
    case Family::stretched_d1: {
      // size-m shifted determinant is the antidiagonal (a, ..., a): one a per
      // row, sign of the order-m reversal
      if (prm.m < 1) throw ParamOutOfRangeError("stretch width must be positive");
      return apply_sign(pow_sign(parity_choose2(prm.m)), prm.a.pow(prm.m));
    }
    case Family::gap_linear: {
      if (prm.m < 1) throw ParamOutOfRangeError("gap width must be positive");
      if (prm.n < 1) throw ParamOutOfRangeError("index must be at least 1 past the gap");
      Ring ring(static_cast<int>(std::max<long long>(prm.n, 1)));
      Scalar v = Scalar::a(ring, 0).pow(prm.n + prm.m);
      for (long long i = 1; i <= prm.n - 1; ++i)
        v *= Scalar::a(ring, static_cast<int>(i)).pow(prm.n - i);
      return apply_sign(pow_sign(parity_choose2(prm.m + 1)), v);
    }
    case Family::sfraction_bump: {
      if (prm.n < 0) throw ParamOutOfRangeError("negative index");
      if (prm.n == 0) return Scalar(Rational(1));
      if (prm.n == 1) return Scalar();
      Ring ring(static_cast<int>(std::max<long long>(2 * prm.n - 1, 2)));
      if (prm.n == 2) {
        Scalar pair = Scalar::a(ring, 0) * Scalar::a(ring, 1);
        return -pair.pow(2);
      }
      const long long t = prm.n - 3;
      Scalar pair01 = Scalar::a(ring, 0) * Scalar::a(ring, 1);
      Scalar v = pair01.pow(prm.n) * Scalar::a(ring, 2).pow(t + 1);
      v *= detail::shifted_sfraction_d1(ring, t, 3);
      v *= detail::shifted_sfraction_e(ring, t, 3);
      return -v;
    }
  }
  throw UnsupportedFamilyError("unhandled family");
}

}  // namespace cfhankel

#endif
