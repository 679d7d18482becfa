#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "helpers.hpp"

using namespace cfhankel;

namespace {

PowerSeries ones_cfrac(const std::vector<long long>& powers, long long order) {
  CFrac cf;
  cf.powers = powers;
  Ring ints;
  cf.numerators.assign(powers.size(), Scalar::one(ints));
  return cfrac_expand(cf, order);
}

std::vector<long long> repeat_block(const std::vector<long long>& block, std::size_t copies) {
  std::vector<long long> out;
  for (std::size_t c = 0; c < copies; ++c) out.insert(out.end(), block.begin(), block.end());
  return out;
}

}  // namespace

TEST_CASE("index sequence validation", "[cfrac]") {
  CHECK_NOTHROW(BSeq::parse("-1,0,0,1,1,2,2"));
  CHECK_NOTHROW(BSeq::parse("-1,0,1,2,3"));
  CHECK(BSeq::parse("-1,0,0,3,3,7,8,9").b(-1) == -1);
  CHECK(BSeq::parse("-1,0,0,3,3,7,8,9").b(0) == 0);
  CHECK(BSeq::parse("-1,0,2").K() == 1);
  CHECK_THROWS_AS(BSeq::parse("-1,1,2"), InvalidBSeqError);       // must start at 0
  CHECK_THROWS_AS(BSeq::parse("0,1,2"), InvalidBSeqError);        // leading -1 missing
  CHECK_THROWS_AS(BSeq::parse("-1,0,0,0,1"), InvalidBSeqError);   // triple value
  CHECK_THROWS_AS(BSeq::parse("-1,0,2,1"), InvalidBSeqError);     // decreasing
  CHECK_THROWS_AS(BSeq::parse("-1"), InvalidBSeqError);           // no b_0
  CHECK_THROWS_AS(BSeq::parse("-1,0,x"), ParseError);
  BSeq b = BSeq::parse("-1,0,0,1,1,2,2");
  CHECK_THROWS_AS(b.b(6), IndexOutOfRangeError);
  CHECK(b.multiplicity(1) == 2);
  CHECK(b.last_index_of(2) == 5);
  CHECK(b.distinct_values() == std::vector<long long>{0, 1, 2});
}

TEST_CASE("index sequence to powers and back", "[cfrac]") {
  CHECK(bseq_to_powers(BSeq::parse("-1,0,1,2,3,4")) == std::vector<long long>{2, 2, 2, 2});
  CHECK(bseq_to_powers(BSeq::parse("-1,0,0,1,1,2,2")) == std::vector<long long>{1, 1, 1, 1, 1});
  CHECK(bseq_to_powers(BSeq::parse("-1,0,0,1,2,2,3,4,4")) ==
        std::vector<long long>{1, 1, 2, 1, 1, 2, 1});

  BSeqCandidate c1 = powers_to_bseq({2, 2, 2, 2});
  CHECK(c1.valid);
  CHECK(c1.values == std::vector<long long>{-1, 0, 1, 2, 3, 4});

  BSeqCandidate c2 = powers_to_bseq({1, 2, 1, 1, 1});
  CHECK_FALSE(c2.valid);
  CHECK(c2.values == std::vector<long long>{-1, 0, 0, 2, 1, 3, 2});

  BSeqCandidate c3 = powers_to_bseq({1, 1, 2, 1, 1, 2});
  CHECK(c3.valid);
  CHECK(c3.values == std::vector<long long>{-1, 0, 0, 1, 2, 2, 3, 4});

  std::mt19937 rng(7201);
  for (int i = 0; i < 30; ++i) {
    BSeq b = testutil::random_bseq(rng);
    BSeqCandidate back = powers_to_bseq(b.powers());
    CHECK(back.valid);
    CHECK(back.values == b.values());
  }
}

TEST_CASE("expansion pinned coefficient lists", "[cfrac]") {
  PowerSeries even = ones_cfrac({2, 2, 2, 2, 2}, 8);
  std::vector<long long> even_expect = {1, 0, 1, 0, 2, 0, 5, 0, 14};
  for (long long n = 0; n <= 8; ++n)
    CHECK(even.coeff(n) == Scalar::constant(Rational(even_expect[static_cast<std::size_t>(n)]),
                                            even.ring()));

  PowerSeries cat = ones_cfrac({1, 1, 1, 1, 1, 1}, 5);
  std::vector<long long> cat_expect = {1, 1, 2, 5, 14, 42};
  for (long long n = 0; n <= 5; ++n)
    CHECK(cat.coeff(n) ==
          Scalar::constant(Rational(cat_expect[static_cast<std::size_t>(n)]), cat.ring()));

  PowerSeries mot = ones_cfrac(repeat_block({1, 1, 2}, 3), 6);
  std::vector<long long> mot_expect = {1, 1, 2, 4, 9, 21, 51};
  for (long long n = 0; n <= 6; ++n)
    CHECK(mot.coeff(n) ==
          Scalar::constant(Rational(mot_expect[static_cast<std::size_t>(n)]), mot.ring()));
}

TEST_CASE("expansion depth accounting", "[cfrac]") {
  CHECK(expansion_depth({1, 1, 1}, 2) == 3);
  CHECK(expansion_depth({2, 2, 2}, 3) == 2);
  CFrac shallow;
  shallow.powers = {1, 1};
  Ring ints;
  shallow.numerators.assign(2, Scalar::one(ints));
  CHECK_THROWS_AS(cfrac_expand(shallow, 2), InsufficientDepthError);
  CHECK_NOTHROW(cfrac_expand(shallow, 1));
}

TEST_CASE("expansion truncation stability", "[cfrac]") {
  BSeq b = BSeq::parse("-1,0,0,1,2,2,3,4,4,5,6,6,7,8");
  CFrac deep = testutil::symbolic_cfrac(b, 12);
  CFrac shallow = testutil::symbolic_cfrac(b, 7);
  PowerSeries big = cfrac_expand(deep, 12);
  PowerSeries small = cfrac_expand(shallow, 7);
  CHECK(big.truncated(7) == small);
  // widening the requested order never rewrites earlier coefficients
  for (long long n = 0; n <= 7; ++n) CHECK(big.coeff(n) == small.coeff(n));
}

TEST_CASE("convergent polynomials", "[cfrac]") {
  BSeq b = BSeq::parse("-1,0,0,1,2,2,3,4,4,5,6,6");
  long long depth = expansion_depth(b.powers(), 10);
  Ring ring(static_cast<int>(depth));
  std::vector<Scalar> a;
  for (long long j = 0; j < depth; ++j) a.push_back(Scalar::a(ring, static_cast<int>(j)));

  Convergents c1 = convergents(b, a, 1);
  CHECK(c1.A == XPoly::one(ring));
  CHECK(c1.B == XPoly::one(ring));
  Convergents c0 = convergents(b, a, 0);
  CHECK(c0.A == XPoly::zero(ring));
  CHECK(c0.B == XPoly::one(ring));

  Convergents c2 = convergents(b, a, 2);
  CHECK(c2.B == XPoly::one(ring) - XPoly::monomial(ring, Scalar::a(ring, 0), b.b(1) + 1));

  for (long long k = 0; k <= 6; ++k) {
    Convergents lo = convergents(b, a, k);
    Convergents hi = convergents(b, a, k + 1);
    Scalar prod = Scalar::one(ring);
    for (long long j = 0; j < k; ++j) prod = prod * a[static_cast<std::size_t>(j)];
    XPoly expect = XPoly::monomial(ring, prod, 1 + b.b(k - 1) + b.b(k));
    CHECK(hi.A * lo.B - hi.B * lo.A == expect);
    CHECK(hi.B.degree() <= b.b(k) + 1);
  }
}

TEST_CASE("convergent tails against the full expansion", "[cfrac]") {
  BSeq b = BSeq::parse("-1,0,0,1,2,2,3,4,4,5,6,6");
  long long order = b.b(5) + b.b(6) + 1;
  CFrac cf = testutil::symbolic_cfrac(b, order);
  PowerSeries f = cfrac_expand(cf, order);
  const Ring& ring = f.ring();
  for (long long k = 1; k <= 6; ++k) {
    Convergents c = convergents(b, cf.numerators, k);
    PowerSeries residue = poly_times_series(c.B, f) -
                          poly_times_series(c.A, PowerSeries::one(ring, order));
    long long split = b.b(k - 1) + b.b(k) + 1;
    for (long long n = 0; n < split; ++n) CHECK(residue.coeff(n).is_zero());
    Scalar prod = Scalar::one(ring);
    for (long long j = 0; j < k; ++j) prod = prod * cf.numerators[static_cast<std::size_t>(j)];
    CHECK(residue.coeff(split) == prod);
  }
}

TEST_CASE("series reciprocal", "[cfrac]") {
  Ring ints;
  PowerSeries geo(ints, std::vector<Scalar>(7, Scalar::one(ints)));
  PowerSeries r = series_reciprocal(geo);
  CHECK(r.coeff(0).is_one());
  CHECK(r.coeff(1) == -Scalar::one(ints));
  for (long long n = 2; n <= 6; ++n) CHECK(r.coeff(n).is_zero());

  PowerSeries cat = ones_cfrac({1, 1, 1, 1, 1, 1, 1}, 6);
  PowerSeries ic = series_reciprocal(cat);
  // 1/f = 1 - x f for the fixed point f = 1 + x f^2
  std::vector<long long> expect = {1, -1, -1, -2, -5, -14, -42};
  for (long long n = 0; n <= 6; ++n)
    CHECK(ic.coeff(n) ==
          Scalar::constant(Rational(expect[static_cast<std::size_t>(n)]), ints));

  std::mt19937 rng(7202);
  for (int i = 0; i < 25; ++i) {
    PowerSeries s = testutil::random_unit_series(rng, 8);
    CHECK(series_reciprocal(series_reciprocal(s)) == s);
    PowerSeries prod = s * series_reciprocal(s);
    CHECK(prod == PowerSeries::one(s.ring(), 8));
  }

  PowerSeries bad(ints, std::vector<Scalar>{Scalar::zero(ints), Scalar::one(ints)});
  CHECK_THROWS_AS(series_reciprocal(bad), NonUnitConstantTermError);
}

TEST_CASE("tridiagonal expansion", "[cfrac]") {
  Ring ints;
  Scalar one = Scalar::one(ints);
  Scalar zero = Scalar::zero(ints);

  PowerSeries mot = jfraction_expand({one, one, one, one}, {one, one, one}, 6);
  std::vector<long long> mot_expect = {1, 1, 2, 4, 9, 21, 51};
  for (long long n = 0; n <= 6; ++n)
    CHECK(mot.coeff(n) ==
          Scalar::constant(Rational(mot_expect[static_cast<std::size_t>(n)]), ints));

  PowerSeries cat2 = jfraction_expand({zero, zero, zero, zero}, {one, one, one}, 6);
  std::vector<long long> cat2_expect = {1, 0, 1, 0, 2, 0, 5};
  for (long long n = 0; n <= 6; ++n)
    CHECK(cat2.coeff(n) ==
          Scalar::constant(Rational(cat2_expect[static_cast<std::size_t>(n)]), ints));
}

TEST_CASE("tridiagonal expansion matches the contracted fraction", "[cfrac]") {
  // powers 1,1,2,1,1,2,... expand to the same series as the tridiagonal form
  // with level weights a_{3j}, a_{3j+1} and products a_{3j}a_{3j+1}, a_{3j+2}
  long long order = 5;
  std::vector<long long> powers = {1, 1, 2, 1, 1};
  Ring ring(5);
  CFrac cf;
  cf.powers = powers;
  for (int j = 0; j < 5; ++j) cf.numerators.push_back(Scalar::a(ring, j));

  std::vector<Scalar> diag = {Scalar::a(ring, 0), Scalar::a(ring, 1), Scalar::a(ring, 3)};
  std::vector<Scalar> sub = {Scalar::a(ring, 0) * Scalar::a(ring, 1), Scalar::a(ring, 2)};
  CHECK(jfraction_expand(diag, sub, order) == cfrac_expand(cf, order));
}
