#pragma once

#include <random>
#include <vector>

#include "cfhankel/cfhankel.hpp"

namespace testutil {

using namespace cfhankel;

// Random valid index sequence: repeatedly append b_K + delta with delta in
// {0..3}, never letting a value occur three times, values capped at 12, and
// long enough that the induced expansion funds order 20 (two consecutive
// values summing to 20 bound the coefficient budget).
inline BSeq random_bseq(std::mt19937& rng) {
  std::vector<long long> v = {-1, 0};
  auto bK = [&] { return v[v.size() - 1]; };
  auto bK1 = [&] { return v[v.size() - 2]; };
  while (bK() + bK1() < 20) {
    long long lo = (bK() == bK1()) ? 1 : 0;
    long long hi = std::min<long long>(3, 12 - bK());
    long long d = lo + static_cast<long long>(rng() % static_cast<unsigned long>(hi - lo + 1));
    v.push_back(bK() + d);
  }
  return BSeq(std::move(v));
}

// C-fraction of b with one fresh indeterminate per level, deep enough for
// the requested order.
inline CFrac symbolic_cfrac(const BSeq& b, long long order) {
  CFrac cf;
  cf.powers = b.powers();
  long long depth = expansion_depth(cf.powers, order);
  Ring ring(static_cast<int>(depth));
  for (long long j = 0; j < depth; ++j) cf.numerators.push_back(Scalar::a(ring, static_cast<int>(j)));
  return cf;
}

// All-powers-one variant used by the S-fraction families.
inline CFrac symbolic_sfrac(long long order) {
  CFrac cf;
  long long depth = order + 1;
  cf.powers.assign(static_cast<std::size_t>(depth), 1);
  Ring ring(static_cast<int>(depth));
  for (long long j = 0; j < depth; ++j) cf.numerators.push_back(Scalar::a(ring, static_cast<int>(j)));
  return cf;
}

// Value of a polynomial at a point with every indeterminate set to 1.
inline Rational at_ones(const Scalar& s) {
  Rational total(0);
  for (const auto& t : s.terms()) total += t.coeff;
  return total;
}

// Full evaluation: vals[v] substituted for variable v.
inline Rational eval_at(const Scalar& s, const std::vector<Rational>& vals) {
  Rational total(0);
  for (const auto& t : s.terms()) {
    Rational prod = t.coeff;
    for (std::size_t v = 1; v < t.mon.size(); ++v)
      for (Exponent e = 0; e < t.mon[v]; ++e) prod *= vals[v - 1];
    total += prod;
  }
  return total;
}

inline Rational random_rational(std::mt19937& rng, int span = 5) {
  long long num = static_cast<long long>(rng() % static_cast<unsigned>(2 * span + 1)) - span;
  long long den = 1 + static_cast<long long>(rng() % 3u);
  return Rational(BigInt(num), BigInt(den));
}

inline Scalar random_scalar(std::mt19937& rng, const Ring& ring, int max_terms = 4,
                            long long max_exp = 3) {
  Scalar s = Scalar::zero(ring);
  int terms = static_cast<int>(rng() % static_cast<unsigned>(max_terms + 1));
  for (int t = 0; t < terms; ++t) {
    Scalar mono = Scalar::constant(random_rational(rng), ring);
    for (int v = 0; v < ring.vars(); ++v) {
      long long e = static_cast<long long>(rng() % static_cast<unsigned>(max_exp + 1));
      if (e > 0) mono *= Scalar::var(ring, v, e);
    }
    s += mono;
  }
  return s;
}

// Random series with unit constant term and small rational coefficients.
inline PowerSeries random_unit_series(std::mt19937& rng, long long order) {
  Ring ring;
  std::vector<Scalar> coeffs;
  coeffs.reserve(static_cast<std::size_t>(order) + 1);
  coeffs.push_back(Scalar::one(ring));
  for (long long n = 1; n <= order; ++n)
    coeffs.push_back(Scalar::constant(random_rational(rng), ring));
  return PowerSeries(ring, coeffs);
}

}  // namespace testutil
