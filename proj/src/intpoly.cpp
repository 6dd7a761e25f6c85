#include "hpoly/intpoly.hpp"

#include <sstream>

#include "hpoly/errors.hpp"

namespace hpoly {

// ------------------------------------------------------------------ IntPoly

void IntPoly::prune() {
  for (auto it = c_.begin(); it != c_.end();)
    it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

IntPoly::IntPoly(CoeffMap m) : c_(std::move(m)) {
  prune();
  if (!c_.empty() && c_.begin()->first < 0)
    throw invalid_input_error("negative exponent in polynomial");
}

IntPoly IntPoly::monomial(BigInt coeff, int exp) {
  if (exp < 0) throw invalid_input_error("negative exponent in monomial");
  IntPoly p;
  if (coeff != 0) p.c_[exp] = std::move(coeff);
  return p;
}

IntPoly IntPoly::from_dense(const std::vector<BigInt>& coeffs) {
  IntPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.c_[static_cast<int>(i)] = coeffs[i];
  return p;
}

BigInt IntPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> IntPoly::dense_coeffs() const {
  if (c_.empty()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(degree()) + 1, 0);
  for (const auto& [e, v] : c_) out[static_cast<std::size_t>(e)] = v;
  return out;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [e, v] : o.c_) r.c_[e] += v;
  r.prune();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [e, v] : o.c_) r.c_[e] -= v;
  r.prune();
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  IntPoly r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) r.c_[e1 + e2] += v1 * v2;
  r.prune();
  return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
  // Horner over the sparse exponent gaps.
  BigInt acc = 0;
  int prev = -1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (prev >= 0)
      for (int i = 0; i < prev - it->first; ++i) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0)
    for (int i = 0; i < prev; ++i) acc *= x;
  return acc;
}

IntPoly IntPoly::scale_exponents(int k) const {
  if (k < 1) throw invalid_input_error("exponent scale must be >= 1");
  IntPoly r;
  for (const auto& [e, v] : c_) r.c_[e * k] = v;
  return r;
}

bool IntPoly::is_palindromic() const {
  if (c_.empty()) return true;
  const int d = degree();
  for (const auto& [e, v] : c_)
    if (coeff(d - e) != v) return false;
  return true;
}

bool IntPoly::has_negative_coeff() const {
  for (const auto& [e, v] : c_)
    if (v < 0) return true;
  return false;
}

namespace {

void append_term(std::string& out, const BigInt& v, const std::string& mono,
                 bool first) {
  BigInt a = v < 0 ? BigInt(-v) : v;
  if (first) {
    if (v < 0) out += "-";
  } else {
    out += v < 0 ? " - " : " + ";
  }
  if (a != 1 || mono.empty()) out += a.str();
  out += mono;
}

std::string power_str(const std::string& var, int e, bool latex) {
  if (e == 0) return "";
  if (e == 1) return var;
  if (latex && e >= 10) return var + "^{" + std::to_string(e) + "}";
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string IntPoly::str(bool latex) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, v] : c_) {
    append_term(out, v, power_str("t", e, latex), first);
    first = false;
  }
  return out;
}

IntPoly orbit_term(int a, int b) {
  if (a < 0 || b < 0) throw invalid_input_error("orbit_term needs a,b >= 0");
  IntPoly t_minus_1 = IntPoly::monomial(1, 1) - IntPoly::one();
  IntPoly r = IntPoly::monomial(1, b);
  for (int i = 0; i < a; ++i) r *= t_minus_1;
  return r;
}

IntPoly geometric_range(int lo, int hi) {
  IntPoly r;
  for (int e = lo; e <= hi; ++e) r += IntPoly::monomial(1, e);
  return r;
}

// ----------------------------------------------------------------- IntPoly2

void IntPoly2::prune() {
  for (auto it = c_.begin(); it != c_.end();)
    it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

IntPoly2 IntPoly2::monomial(BigInt coeff, int e1, int e2) {
  if (e1 < 0 || e2 < 0)
    throw invalid_input_error("negative exponent in monomial");
  IntPoly2 p;
  if (coeff != 0) p.c_[{e1, e2}] = std::move(coeff);
  return p;
}

BigInt IntPoly2::coeff(int e1, int e2) const {
  auto it = c_.find({e1, e2});
  return it == c_.end() ? BigInt(0) : it->second;
}

IntPoly2 IntPoly2::operator+(const IntPoly2& o) const {
  IntPoly2 r = *this;
  for (const auto& [e, v] : o.c_) r.c_[e] += v;
  r.prune();
  return r;
}

IntPoly2 IntPoly2::operator*(const IntPoly2& o) const {
  IntPoly2 r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_)
      r.c_[{e1.first + e2.first, e1.second + e2.second}] += v1 * v2;
  r.prune();
  return r;
}

BigInt IntPoly2::eval(const BigInt& x1, const BigInt& x2) const {
  BigInt acc = 0;
  for (const auto& [e, v] : c_) {
    BigInt term = v;
    for (int i = 0; i < e.first; ++i) term *= x1;
    for (int i = 0; i < e.second; ++i) term *= x2;
    acc += term;
  }
  return acc;
}

IntPoly IntPoly2::specialize(int p1, int p2) const {
  if (p1 < 0 || p2 < 0)
    throw invalid_input_error("specialize needs nonnegative powers");
  IntPoly out;
  for (const auto& [e, v] : c_)
    out += IntPoly::monomial(v, e.first * p1 + e.second * p2);
  return out;
}

std::string IntPoly2::str(bool latex) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, v] : c_) {
    std::string mono = power_str(latex ? "t_1" : "t1", e.first, latex) +
                       power_str(latex ? "t_2" : "t2", e.second, latex);
    append_term(out, v, mono, first);
    first = false;
  }
  return out;
}

}  // namespace hpoly
