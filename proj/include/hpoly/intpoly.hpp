#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hpoly/bigint.hpp"

namespace hpoly {

// Sparse univariate polynomial in t with exact BigInt coefficients.
// Immutable-value style: all operations return new polynomials.
class IntPoly {
 public:
  using CoeffMap = std::map<int, BigInt>;

  IntPoly() = default;  // zero
  explicit IntPoly(CoeffMap m);
  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return monomial(1, 0); }
  static IntPoly monomial(BigInt coeff, int exp);
  static IntPoly variable() { return monomial(1, 1); }
  // Dense constructor: coeffs[i] is the coefficient of t^i.
  static IntPoly from_dense(const std::vector<BigInt>& coeffs);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is the sentinel -1.
  static constexpr int kZeroDegree = -1;
  int degree() const { return c_.empty() ? kZeroDegree : c_.rbegin()->first; }
  BigInt coeff(int exp) const;
  const std::map<int, BigInt>& coeffs() const { return c_; }
  std::vector<BigInt> dense_coeffs() const;  // index = exponent, empty if zero

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  BigInt eval(const BigInt& x) const;
  // t -> t^k substitution; substitute_square is the k=2 case.
  IntPoly scale_exponents(int k) const;
  IntPoly substitute_square() const { return scale_exponents(2); }
  // Palindromic around its degree: coeff(i) == coeff(deg - i) for all i.
  bool is_palindromic() const;
  bool has_negative_coeff() const;

  // "1 + 11t + 11t^2 + t^3"; latex wraps exponents >= 10 in braces.
  std::string str(bool latex = false) const;

 private:
  CoeffMap c_;  // exponent -> nonzero coefficient
  void prune();
};

// (t-1)^a * t^b, the contribution of a cell with a-dimensional orbit part.
IntPoly orbit_term(int a, int b);
// t^lo + t^{lo+1} + ... + t^hi (zero when hi < lo).
IntPoly geometric_range(int lo, int hi);

// Sparse polynomial in two variables t1, t2 with BigInt coefficients.
class IntPoly2 {
 public:
  IntPoly2() = default;
  static IntPoly2 monomial(BigInt coeff, int e1, int e2);

  bool is_zero() const { return c_.empty(); }
  const std::map<std::pair<int, int>, BigInt>& coeffs() const { return c_; }
  BigInt coeff(int e1, int e2) const;

  IntPoly2 operator+(const IntPoly2& o) const;
  IntPoly2 operator*(const IntPoly2& o) const;
  IntPoly2& operator+=(const IntPoly2& o) { return *this = *this + o; }
  bool operator==(const IntPoly2& o) const { return c_ == o.c_; }

  BigInt eval(const BigInt& x1, const BigInt& x2) const;
  // Substitute t1 -> t^p1, t2 -> t^p2.
  IntPoly specialize(int p1, int p2) const;

  std::string str(bool latex = false) const;

 private:
  std::map<std::pair<int, int>, BigInt> c_;
  void prune();
};

}  // namespace hpoly
