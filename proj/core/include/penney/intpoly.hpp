#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace penney {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Univariate polynomial in p with arbitrary-precision integer
// coefficients, ascending powers, no trailing zeros. The zero
// polynomial has an empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long long> ascending);
  explicit IntPoly(std::vector<Int> ascending);

  static IntPoly monomial(Int coeff, int power);
  static IntPoly constant(Int c) { return monomial(std::move(c), 0); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Int coeff(int i) const;
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return c_; }

  // Lowest index with a nonzero coefficient; -1 for the zero polynomial.
  int order_at_zero() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly scaled(const Int& k) const;

  IntPoly derivative() const;
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;

  Int content() const;          // gcd of coefficients, >= 0
  IntPoly primitive_part() const;  // self / content, sign of leading kept

  // p^(1-p) substitution: returns f(1-p).
  IntPoly reflected() const;

  // Exact quotient; throws if b does not divide a.
  static IntPoly div_exact(const IntPoly& a, const IntPoly& b);
  // Pseudo-remainder of lc(b)^(deg a - deg b + 1) * a modulo b.
  static IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);
  // Subresultant gcd, returned primitive with positive leading coefficient.
  static IntPoly gcd(IntPoly a, IntPoly b);
  // Divide out the largest power of p (all roots at 0).
  IntPoly deflate_at_zero() const;

  // Ascending-power text, e.g. "1 + 1p^1 - 1p^2"; "0" for zero.
  std::string str() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<Int> c_;
};

}  // namespace penney
