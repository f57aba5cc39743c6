#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linkmod/ideal.hpp"
#include "linkmod/polynomial.hpp"

using namespace linkmod;

namespace {

RingSpec qq_xy(MonomialOrder ord = MonomialOrder::grevlex_global) {
  return parse_ring(FieldSpec::rationals(), {"x", "y"}, ord);
}

Polynomial rand_poly(const RingSpec& R, std::mt19937& rng, int maxdeg = 3, int nterms = 4) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  Polynomial f;
  for (int t = 0; t < nterms; ++t) {
    Monomial m(R.nvars());
    for (size_t v = 0; v < R.nvars(); ++v) m.exp[v] = deg(rng) / 2;
    int c = coeff(rng);
    f = poly_add(R, f, poly_term(R, Scalar::from_int(R.field, c), m));
  }
  return f;
}

}  // namespace

TEST_CASE("bigint arithmetic against int64") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> d(-1000000, 1000000);
  for (int i = 0; i < 300; ++i) {
    long long a = d(rng), b = d(rng);
    CHECK((BigInt(a) + BigInt(b)).to_string() == std::to_string(a + b));
    CHECK((BigInt(a) - BigInt(b)).to_string() == std::to_string(a - b));
    CHECK((BigInt(a) * BigInt(b)).to_string() == std::to_string(a * b));
    if (b != 0) {
      CHECK((BigInt(a) / BigInt(b)).to_string() == std::to_string(a / b));
      CHECK((BigInt(a) % BigInt(b)).to_string() == std::to_string(a % b));
    }
  }
  CHECK(BigInt::from_string("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  BigInt big = BigInt::from_string("340282366920938463463374607431768211456");
  CHECK((big * big).to_string() ==
        "115792089237316195423570985008687907853269984665640564039457584007913129639936");
  CHECK(BigInt::gcd(BigInt(48), BigInt(-36)).to_string() == "12");
}

TEST_CASE("prime field arithmetic agrees with bigint mod p") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> d(-100000, 100000);
  FieldSpec gf = FieldSpec::prime(32003);
  for (int i = 0; i < 200; ++i) {
    long long a = d(rng), b = d(rng);
    Scalar sa = Scalar::from_int(gf, a), sb = Scalar::from_int(gf, b);
    auto via_big = [&](const BigInt& v) { return v.mod_small(32003); };
    CHECK((sa * sb).to_string() == std::to_string(via_big(BigInt(a) * BigInt(b))));
    CHECK((sa + sb).to_string() == std::to_string(via_big(BigInt(a) + BigInt(b))));
    if (!sb.is_zero()) CHECK(((sa / sb) * sb) == sa);
  }
  // scale over GF(5): 3 * 4x = 2x
  FieldSpec g5 = FieldSpec::prime(5);
  RingSpec R = parse_ring(g5, {"x"}, MonomialOrder::grevlex_global);
  Polynomial f = poly_scale(parse_poly("4*x", R), Scalar::from_int(g5, 3));
  CHECK(poly_to_string(R, f) == "2*x");
}

TEST_CASE("monomial order axioms and examples") {
  RingSpec R = qq_xy();
  Monomial x2y(2), xy2(2), one(2);
  x2y.exp = {2, 1};
  xy2.exp = {1, 2};
  CHECK(compare_monomials(x2y, xy2, MonomialOrder::grevlex_global) == Cmp::GT);
  CHECK(compare_monomials(x2y, x2y, MonomialOrder::grevlex_global) == Cmp::EQ);
  Monomial x(2);
  x.exp = {1, 0};
  CHECK(compare_monomials(one, x, MonomialOrder::antigraded_revlex_local) == Cmp::GT);
  CHECK(compare_monomials(one, x, MonomialOrder::grevlex_global) == Cmp::LT);

  // totality + multiplicativity on random samples
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(0, 4);
  for (int i = 0; i < 500; ++i) {
    Monomial a(3), b(3), c(3);
    for (int v = 0; v < 3; ++v) { a.exp[v] = e(rng); b.exp[v] = e(rng); c.exp[v] = e(rng); }
    for (MonomialOrder ord : {MonomialOrder::grevlex_global, MonomialOrder::antigraded_revlex_local}) {
      Cmp ab = compare_monomials(a, b, ord);
      if (ab == Cmp::EQ) CHECK(a == b);
      // a > b => ac > bc
      CHECK(compare_monomials(mono_mul(a, c), mono_mul(b, c), ord) == ab);
      // antisymmetry
      Cmp ba = compare_monomials(b, a, ord);
      CHECK(static_cast<int>(ab) == -static_cast<int>(ba));
    }
    // grevlex well-order: 1 is smallest
    Monomial one3(3);
    if (!(a == one3))
      CHECK(compare_monomials(a, one3, MonomialOrder::grevlex_global) == Cmp::GT);
  }
}

TEST_CASE("parser examples and errors") {
  RingSpec R = qq_xy();
  CHECK(parse_poly("0", R).is_zero());
  CHECK(parse_poly("x*y - y*x", R).is_zero());
  Polynomial f = parse_poly("(x+y)^2", R);
  CHECK(poly_to_string(R, f) == "x^2 + 2*x*y + y^2");
  CHECK(poly_to_string(R, parse_poly("1/2*x - 3", R)) == "1/2*x - 3");

  CHECK_THROWS_AS(parse_poly("x + z", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x +", R), ParseError);
  CHECK_THROWS_AS(parse_poly("(x", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x/y", R), ParseError);
  try {
    parse_poly("x + q", R);
  } catch (const ParseError& e) {
    CHECK(e.pos == 4);
  }
}

TEST_CASE("print/parse round-trip on random polynomials") {
  std::mt19937 rng(5);
  for (MonomialOrder ord : {MonomialOrder::grevlex_global, MonomialOrder::antigraded_revlex_local}) {
    RingSpec R = parse_ring(FieldSpec::rationals(), {"x", "y", "z"}, ord);
    RingSpec Rp = parse_ring(FieldSpec::prime(32003), {"x", "y", "z"}, ord);
    for (int i = 0; i < 100; ++i) {
      Polynomial f = rand_poly(R, rng);
      CHECK(poly_eq(parse_poly(poly_to_string(R, f), R), f));
      Polynomial g = rand_poly(Rp, rng);
      CHECK(poly_eq(parse_poly(poly_to_string(Rp, g), Rp), g));
    }
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(13);
  RingSpec R = parse_ring(FieldSpec::rationals(), {"x", "y"}, MonomialOrder::grevlex_global);
  for (int i = 0; i < 100; ++i) {
    Polynomial f = rand_poly(R, rng), g = rand_poly(R, rng), h = rand_poly(R, rng);
    CHECK(poly_eq(poly_add(R, f, g), poly_add(R, g, f)));
    CHECK(poly_eq(poly_mul(R, f, g), poly_mul(R, g, f)));
    CHECK(poly_eq(poly_mul(R, f, poly_mul(R, g, h)), poly_mul(R, poly_mul(R, f, g), h)));
    CHECK(poly_eq(poly_mul(R, f, poly_add(R, g, h)),
                  poly_add(R, poly_mul(R, f, g), poly_mul(R, f, h))));
    CHECK(poly_add(R, f, poly_neg(f)).is_zero());
  }
  // mul(x, y) = xy
  CHECK(poly_to_string(R, poly_mul(R, parse_poly("x", R), parse_poly("y", R))) == "x*y");
}
