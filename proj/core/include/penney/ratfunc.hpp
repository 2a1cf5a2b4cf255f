#pragma once

#include <string>
#include <utility>
#include <vector>

#include "penney/intpoly.hpp"

namespace penney {

class pole_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reduced ratio of integer polynomials in p. Canonical form: polynomial
// gcd cancelled, joint integer content 1, positive leading denominator
// coefficient. Equality is coefficient-wise equality.
class RatFunc {
 public:
  RatFunc() : num_{}, den_{1} {}  // zero

  // normalize(num, den); rejects a zero denominator.
  static RatFunc from(IntPoly num, IntPoly den);
  static RatFunc constant(const Rat& q);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;

  // f(1-p), canonical. An involution.
  RatFunc reflect() const;

  // Exact value at q; throws pole_error on a denominator root.
  Rat evaluate(const Rat& q) const;

  // lim_{p->0+} f(p) from lowest-order coefficients; throws pole_error
  // when the limit blows up.
  Rat limit_at_zero() const;

  // Number of sign changes of f' on (0,1), counted exactly via Sturm
  // root isolation. Requires den to have no root in (0,1).
  int derivative_sign_changes() const;

  // Isolating rational intervals for the sign-change points of f' in
  // (0,1), one per change, in increasing order.
  std::vector<std::pair<Rat, Rat>> critical_intervals() const;

  // "num / den" with the numerator's p-power factored out, e.g.
  // "(1 + 1p^1 - 1p^2)*p^4 / (1 + 1p^3)".
  std::string str() const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  IntPoly num_, den_;
};

namespace sturm {

// Sturm chain of h (sign-preserving primitive pseudo-remainders).
std::vector<IntPoly> chain(const IntPoly& h);
// Sign variation count of the chain at x.
int variations(const std::vector<IntPoly>& ch, const Rat& x);
// Distinct real roots of h in the open interval (lo, hi); h must not
// vanish at either endpoint.
int count_roots(const IntPoly& h, const Rat& lo, const Rat& hi);
// Disjoint isolating intervals, one per distinct root of h in (lo, hi).
std::vector<std::pair<Rat, Rat>> isolate_roots(const IntPoly& h, const Rat& lo,
                                               const Rat& hi);

}  // namespace sturm

}  // namespace penney
