#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "helpers.hpp"

using namespace cfhankel;
using testutil::random_rational;
using testutil::random_unit_series;

namespace {

PowerSeries ones_cfrac(const std::vector<long long>& powers, long long order) {
  CFrac cf;
  cf.powers = powers;
  Ring ints;
  cf.numerators.assign(powers.size(), Scalar::one(ints));
  return cfrac_expand(cf, order);
}

std::vector<Rational> rationals(const std::vector<Scalar>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(testutil::at_ones(x));
  return out;
}

}  // namespace

TEST_CASE("determinant pinned values", "[hankel]") {
  PowerSeries aerated = ones_cfrac(std::vector<long long>(9, 2), 16);
  for (long long n = 0; n <= 8; ++n)
    CHECK(hankel_det(aerated, {0, n}) == Scalar::one(aerated.ring()));

  CHECK(hankel_det(aerated, {0, -1}).is_one());

  PowerSeries mot = ones_cfrac({1, 1, 2, 1, 1, 2, 1}, 6);
  CHECK(hankel_det(mot, {1, 2}) == Scalar::constant(Rational(-1), mot.ring()));

  CHECK_THROWS_AS(hankel_det(mot, {0, 4}), InsufficientOrderError);
  CHECK_THROWS_AS(hankel_det(mot, {3, 2}), InsufficientOrderError);
}

TEST_CASE("shifted-down determinants of small sizes", "[hankel]") {
  std::mt19937 rng(7301);
  for (int i = 0; i < 10; ++i) {
    PowerSeries f = random_unit_series(rng, 11);
    for (long long m = 1; m <= 3; ++m)
      for (long long n = 0; n < m; ++n) CHECK(hankel_det(f, {-m, n}).is_zero());
    for (long long m = 0; m <= 5; ++m) {
      Scalar d = hankel_det(f, {-m, m});
      CHECK(d == apply_sign(pow_sign(parity_choose2(m + 1)), Scalar::one(f.ring())));
    }
  }
}

TEST_CASE("transform pinned sequences", "[hankel]") {
  std::vector<long long> bump = {1, 2};
  bump.insert(bump.end(), 12, 1);
  PowerSeries f38 = ones_cfrac(bump, 14);
  std::vector<Rational> got38 = rationals(hankel_transform(f38, 0, 7));
  std::vector<Rational> want38 = {1, 0, -1, -2, -3, -4, -5, -6};
  CHECK(got38 == want38);

  std::vector<long long> alt;
  for (int i = 0; i < 8; ++i) {
    alt.push_back(2);
    alt.push_back(1);
  }
  PowerSeries f37 = ones_cfrac(alt, 22);
  std::vector<Rational> got37 = rationals(hankel_transform(f37, 0, 11));
  std::vector<Rational> want37 = {1, 1, 0, -1, -1, -1, 0, 1, 1, 1, 0, -1};
  CHECK(got37 == want37);

  PowerSeries eis = builtin_series("eisenstein", 2);
  std::vector<Scalar> te = hankel_transform(eis, 0, 1);
  CHECK(te[0].is_one());
  CHECK(te[1] == Scalar::constant(Rational(4), eis.ring()));
}

TEST_CASE("reduction identities on random series", "[hankel]") {
  std::mt19937 rng(7302);
  Ring ints;

  for (int i = 0; i < 20; ++i) {
    PowerSeries s = random_unit_series(rng, 12);
    for (long long n = 1; n <= 4; ++n) {
      ReductionParams prm;
      prm.n = n;
      ReductionReport rep = verify_reduction(s, ReductionIdentity::reciprocal_shift2, prm);
      CHECK(rep.equal);
      rep = verify_reduction(s, ReductionIdentity::reciprocal_shift1, prm);
      CHECK(rep.equal);
    }
    for (long long m = 1; m <= 3; ++m)
      for (long long n = 1; n <= 3; ++n) {
        ReductionParams prm;
        prm.m = m;
        prm.n = n;
        CHECK(verify_reduction(s, ReductionIdentity::backshift, prm).equal);
      }
  }

  for (int i = 0; i < 20; ++i) {
    PowerSeries g = random_unit_series(rng, 12);
    Rational av = random_rational(rng);
    if (av == Rational(0)) av = Rational(1);
    Scalar a = Scalar::constant(av, ints);
    for (long long p = 1; p <= 3; ++p) {
      PowerSeries head(ints, 12);
      head.set_coeff(0, Scalar::one(ints));
      PowerSeries f = series_reciprocal(head - (a * g).shifted_up(p));
      for (long long m = 0; m <= 3; ++m) {
        ReductionParams prm;
        prm.m = m;
        prm.n = 3;
        prm.p = p;
        prm.a = a;
        CHECK(verify_reduction(f, ReductionIdentity::tail_factor, prm).equal);
      }
    }
  }

  // same shape with a symbolic head coefficient
  Ring ring(1);
  Scalar a = Scalar::a(ring, 0);
  for (int i = 0; i < 5; ++i) {
    PowerSeries g = random_unit_series(rng, 10);
    PowerSeries head(ring, 10);
    head.set_coeff(0, Scalar::one(ring));
    PowerSeries f = series_reciprocal(head - (a * g).shifted_up(2));
    ReductionParams prm;
    prm.m = 2;
    prm.n = 2;
    prm.p = 2;
    prm.a = a;
    CHECK(verify_reduction(f, ReductionIdentity::tail_factor, prm).equal);
  }
}

TEST_CASE("reduction names round-trip", "[hankel]") {
  for (ReductionIdentity id :
       {ReductionIdentity::reciprocal_shift2, ReductionIdentity::backshift,
        ReductionIdentity::reciprocal_shift1, ReductionIdentity::tail_factor})
    CHECK(parse_reduction_identity(reduction_identity_name(id)) == id);
  CHECK_THROWS_AS(parse_reduction_identity("no-such-identity"), UnknownNameError);
}

TEST_CASE("determinants of one- and two-step reciprocals factor through the tail", "[hankel]") {
  std::mt19937 rng(7303);
  Ring ints;
  for (int i = 0; i < 10; ++i) {
    PowerSeries c = random_unit_series(rng, 12);
    Rational av = random_rational(rng);
    if (av == Rational(0)) av = Rational(2);
    Scalar a = Scalar::constant(av, ints);
    PowerSeries head(ints, 12);
    head.set_coeff(0, Scalar::one(ints));

    PowerSeries f2 = series_reciprocal(head - (a * c).shifted_up(2));
    for (long long n = 1; n <= 4; ++n)
      CHECK(hankel_det(f2, {0, n}) == a.pow(n) * hankel_det(c, {0, n - 1}));

    PowerSeries f1 = series_reciprocal(head - (a * c).shifted_up(1));
    for (long long n = 1; n <= 4; ++n) {
      CHECK(hankel_det(f1, {0, n}) == a.pow(n) * hankel_det(c, {1, n - 1}));
      CHECK(hankel_det(f1, {1, n}) == a.pow(n + 1) * hankel_det(c, {0, n}));
    }
  }
}

TEST_CASE("tail solving", "[hankel]") {
  std::mt19937 rng(7304);
  Ring ints;
  for (int i = 0; i < 10; ++i) {
    PowerSeries g = random_unit_series(rng, 9);
    Scalar a = Scalar::constant(Rational(3), ints);
    PowerSeries head(ints, 9);
    head.set_coeff(0, Scalar::one(ints));
    PowerSeries f = series_reciprocal(head - (a * g).shifted_up(2));
    PowerSeries back = solve_tail(f, a, 2);
    CHECK(back.equals_to_order(g, back.order()));
  }
}

TEST_CASE("condensation identity", "[hankel]") {
  PowerSeries cat = ones_cfrac(std::vector<long long>(13, 1), 12);
  CondensationReport r3 = condensation_check(cat, 3);
  CHECK(r3.holds);
  CHECK(r3.d2_n == Scalar::constant(Rational(5), cat.ring()));
  CHECK(r3.d2_prev == Scalar::constant(Rational(4), cat.ring()));
  CHECK(r3.d_n.is_one());
  CHECK(r3.d_next.is_one());
  CHECK(r3.d1_n.is_one());

  CondensationReport r0 = condensation_check(cat, 0);
  CHECK(r0.holds);
  CHECK(r0.d2_prev.is_one());  // empty determinant behind the window

  std::mt19937 rng(7305);
  for (int i = 0; i < 8; ++i) {
    PowerSeries s = random_unit_series(rng, 12);
    for (long long n = 0; n <= 4; ++n) CHECK(condensation_check(s, n).holds);
  }

  for (const char* name : {"motzkin", "eisenstein", "catalan-stretched"}) {
    PowerSeries s = builtin_series(name, 10);
    for (long long n = 0; n <= 4; ++n) CHECK(condensation_check(s, n).holds);
  }
}
