#include <doctest.h>

#include <random>
#include <vector>

#include "hpoly/errors.hpp"
#include "hpoly/intpoly.hpp"

using namespace hpoly;

namespace {

IntPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 6);
  std::uniform_int_distribution<int> exp(0, 12);
  std::uniform_int_distribution<int> coeff(-50, 50);
  IntPoly p;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    p += IntPoly::monomial(coeff(rng), exp(rng));
  return p;
}

}  // namespace

TEST_CASE("constructors and accessors") {
  CHECK(IntPoly::zero().is_zero());
  CHECK(IntPoly::zero().degree() == IntPoly::kZeroDegree);
  CHECK(IntPoly::one().degree() == 0);
  CHECK(IntPoly::variable().degree() == 1);
  CHECK(IntPoly::monomial(0, 5).is_zero());

  IntPoly p = IntPoly::from_dense({1, 0, 3});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == 3);
  CHECK(p.coeff(7) == 0);
  CHECK(p.dense_coeffs() == std::vector<BigInt>{1, 0, 3});
  CHECK(IntPoly::zero().dense_coeffs().empty());

  IntPoly q(IntPoly::CoeffMap{{0, 1}, {2, 3}, {5, 0}});
  CHECK(q == p + IntPoly::zero() - IntPoly::from_dense({0, 0, 3}) +
                 IntPoly::monomial(3, 2) - IntPoly::from_dense({}));
  CHECK_THROWS_AS((void)IntPoly(IntPoly::CoeffMap{{-1, 2}}),
                  invalid_input_error);
}

TEST_CASE("ring axioms hold on random polynomials") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + IntPoly::zero() == a);
    CHECK(a * IntPoly::one() == a);
    CHECK(a * IntPoly::zero() == IntPoly::zero());
    CHECK(a - a == IntPoly::zero());

    // Evaluation is a ring morphism.
    for (int x : {-2, 0, 1, 3}) {
      CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
      CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
  }
}

TEST_CASE("degree arithmetic") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly a = random_poly(rng), b = random_poly(rng);
    if (a.is_zero() || b.is_zero()) {
      CHECK((a * b).is_zero());
    } else {
      CHECK((a * b).degree() == a.degree() + b.degree());
    }
  }
}

TEST_CASE("evaluation uses exact big integers") {
  // (t+1)^64 at t = 1 is 2^64, which overflows every built-in integer.
  IntPoly p = IntPoly::one();
  IntPoly base = IntPoly::from_dense({1, 1});
  for (int i = 0; i < 64; ++i) p *= base;
  CHECK(p.eval(1) == BigInt(1) << 64);
  CHECK(p.coeff(32) == BigInt("1832624140942590534"));  // C(64,32)
  CHECK(p.is_palindromic());
}

TEST_CASE("exponent scaling") {
  IntPoly p = IntPoly::from_dense({1, 4, 1});
  CHECK(p.substitute_square() == IntPoly(IntPoly::CoeffMap{
                                     {0, 1}, {2, 4}, {4, 1}}));
  CHECK(p.scale_exponents(3).degree() == 6);
  CHECK(p.scale_exponents(1) == p);
  CHECK_THROWS_AS((void)p.scale_exponents(0), invalid_input_error);

  // p(x^2) == (square substitution of p)(x), on random data.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    IntPoly a = random_poly(rng);
    for (int x : {-3, 2, 5})
      CHECK(a.substitute_square().eval(x) == a.eval(BigInt(x) * x));
  }
}

TEST_CASE("palindromicity") {
  CHECK(IntPoly::from_dense({1, 11, 11, 1}).is_palindromic());
  CHECK(IntPoly::from_dense({1, 2, 1}).is_palindromic());
  CHECK(IntPoly::from_dense({2}).is_palindromic());
  CHECK(IntPoly::zero().is_palindromic());
  CHECK_FALSE(IntPoly::from_dense({1, 2}).is_palindromic());
  CHECK_FALSE(IntPoly::from_dense({1, 0, 2}).is_palindromic());
  CHECK_FALSE(IntPoly::variable().is_palindromic());  // coeff(0) == 0
}

TEST_CASE("negative coefficient detection") {
  CHECK_FALSE(IntPoly::from_dense({1, 2, 3}).has_negative_coeff());
  CHECK(IntPoly::from_dense({1, -2, 3}).has_negative_coeff());
  CHECK_FALSE(IntPoly::zero().has_negative_coeff());
  CHECK_FALSE((IntPoly::from_dense({1, 1}) -
               IntPoly::variable()).has_negative_coeff());
}

TEST_CASE("orbit terms expand (t-1)^a t^b") {
  CHECK(orbit_term(0, 0) == IntPoly::one());
  CHECK(orbit_term(0, 3) == IntPoly::monomial(1, 3));
  CHECK(orbit_term(1, 0) == IntPoly(IntPoly::CoeffMap{{0, -1}, {1, 1}}));
  CHECK(orbit_term(2, 1) ==
        IntPoly(IntPoly::CoeffMap{{1, 1}, {2, -2}, {3, 1}}));
  // Values at t = q must be (q-1)^a q^b.
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int q : {2, 3, 4}) {
        BigInt expect = 1;
        for (int i = 0; i < a; ++i) expect *= (q - 1);
        for (int i = 0; i < b; ++i) expect *= q;
        CHECK(orbit_term(a, b).eval(q) == expect);
      }
  CHECK_THROWS_AS((void)orbit_term(-1, 0), invalid_input_error);
  CHECK_THROWS_AS((void)orbit_term(0, -1), invalid_input_error);
}

TEST_CASE("geometric ranges") {
  CHECK(geometric_range(0, 3) == IntPoly::from_dense({1, 1, 1, 1}));
  CHECK(geometric_range(2, 2) == IntPoly::monomial(1, 2));
  CHECK(geometric_range(3, 2).is_zero());
  CHECK(geometric_range(1, 4).eval(1) == 4);
}

TEST_CASE("string rendering") {
  CHECK(IntPoly::zero().str() == "0");
  CHECK(IntPoly::one().str() == "1");
  CHECK(IntPoly::from_dense({1, 11, 11, 1}).str() == "1 + 11t + 11t^2 + t^3");
  CHECK(IntPoly::monomial(-2, 1).str() == "-2t");
  CHECK(IntPoly::from_dense({0, 1, -3}).str() == "t - 3t^2");
  CHECK(IntPoly::monomial(1, 12).str() == "t^12");
  CHECK(IntPoly::monomial(1, 12).str(true) == "t^{12}");
  CHECK(IntPoly::from_dense({1, 4, 1}).str(true) == "1 + 4t + t^2");
}

TEST_CASE("two-variable polynomials") {
  IntPoly2 zero;
  CHECK(zero.is_zero());
  IntPoly2 p = IntPoly2::monomial(2, 1, 0) + IntPoly2::monomial(1, 0, 2);
  CHECK(p.coeff(1, 0) == 2);
  CHECK(p.coeff(0, 2) == 1);
  CHECK(p.coeff(1, 1) == 0);
  CHECK(p.eval(3, 2) == 2 * 3 + 4);

  IntPoly2 q = IntPoly2::monomial(1, 1, 1);
  CHECK(p * q == IntPoly2::monomial(2, 2, 1) + IntPoly2::monomial(1, 1, 3));
  CHECK(p + p == IntPoly2::monomial(4, 1, 0) + IntPoly2::monomial(2, 0, 2));

  // Specializing both variables to powers of t collapses to one variable.
  IntPoly s = p.specialize(2, 2);
  CHECK(s == IntPoly(IntPoly::CoeffMap{{2, 2}, {4, 1}}));
  CHECK(p.specialize(1, 1) == IntPoly(IntPoly::CoeffMap{{1, 2}, {2, 1}}));

  // Terms are ordered by (t1 exponent, t2 exponent).
  CHECK(p.str() == "t2^2 + 2t1");
  CHECK(p.str(true) == "t_2^2 + 2t_1");
}

TEST_CASE("random two-variable identities") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> exp(0, 5);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly2 a, b;
    for (int i = 0; i < 4; ++i) {
      a += IntPoly2::monomial(coeff(rng), exp(rng), exp(rng));
      b += IntPoly2::monomial(coeff(rng), exp(rng), exp(rng));
    }
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    for (int x : {-1, 2})
      for (int y : {1, 3})
        CHECK((a * b).eval(x, y) == a.eval(x, y) * b.eval(x, y));
    // Specialization commutes with multiplication.
    CHECK((a * b).specialize(2, 3) ==
          a.specialize(2, 3) * b.specialize(2, 3));
  }
}
