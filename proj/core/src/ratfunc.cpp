#include "penney/ratfunc.hpp"

#include <sstream>

namespace penney {

namespace {
Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

RatFunc RatFunc::from(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw pole_error("zero denominator");
  RatFunc f;
  if (num.is_zero()) {
    f.num_ = IntPoly{};
    f.den_ = IntPoly{1};
    return f;
  }
  IntPoly g = IntPoly::gcd(num, den);
  if (g.degree() > 0) {
    num = IntPoly::div_exact(num, g);
    den = IntPoly::div_exact(den, g);
  }
  Int c = int_gcd(num.content(), den.content());
  if (c > 1) {
    std::vector<Int> nc = num.coeffs(), dc = den.coeffs();
    for (auto& x : nc) x /= c;
    for (auto& x : dc) x /= c;
    num = IntPoly(std::move(nc));
    den = IntPoly(std::move(dc));
  }
  if (den.leading() < 0) {
    num = -num;
    den = -den;
  }
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  return f;
}

RatFunc RatFunc::constant(const Rat& q) {
  return from(IntPoly::constant(numerator(q)), IntPoly::constant(denominator(q)));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc::from(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc::from(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc::from(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw pole_error("division by zero rational function");
  return RatFunc::from(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc::from(-num_, den_); }

RatFunc RatFunc::reflect() const {
  return from(num_.reflected(), den_.reflected());
}

Rat RatFunc::evaluate(const Rat& q) const {
  Rat d = den_.eval(q);
  if (d == 0) throw pole_error("pole at evaluation point");
  return num_.eval(q) / d;
}

Rat RatFunc::limit_at_zero() const {
  if (num_.is_zero()) return Rat{0};
  int on = num_.order_at_zero();
  int od = den_.order_at_zero();
  if (on > od) return Rat{0};
  if (on == od) {
    Int a = num_.coeff(on), b = den_.coeff(od);
    // the rational constructor rejects a negative denominator
    if (b < 0) { a = -a; b = -b; }
    return Rat(std::move(a), std::move(b));
  }
  throw pole_error("blow-up at p = 0");
}

namespace sturm {

std::vector<IntPoly> chain(const IntPoly& h) {
  std::vector<IntPoly> ch;
  if (h.is_zero()) return ch;
  ch.push_back(h);
  IntPoly d = h.derivative();
  if (d.is_zero()) return ch;
  ch.push_back(d);
  while (true) {
    const IntPoly& a = ch[ch.size() - 2];
    const IntPoly& b = ch.back();
    if (b.degree() <= 0) break;
    int delta = a.degree() - b.degree();
    // prem scales a by lc(b)^(delta+1); force the factor positive so
    // the sign structure of the remainder is preserved.
    IntPoly aa = a;
    if (b.leading() < 0 && (delta + 1) % 2 == 1) aa = -aa;
    IntPoly r = IntPoly::pseudo_rem(aa, b);
    if (r.is_zero()) break;
    r = -r;
    r = r.primitive_part();  // positive scalar, sign kept
    ch.push_back(std::move(r));
  }
  return ch;
}

int variations(const std::vector<IntPoly>& ch, const Rat& x) {
  int count = 0, prev = 0;
  for (const auto& p : ch) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int count_roots(const IntPoly& h, const Rat& lo, const Rat& hi) {
  if (h.sign_at(lo) == 0 || h.sign_at(hi) == 0)
    throw std::logic_error("sturm::count_roots endpoint is a root");
  auto ch = chain(h);
  return variations(ch, lo) - variations(ch, hi);
}

namespace {

// A point in (lo, hi) where h does not vanish; tries the midpoint first,
// then deterministic alternates (h has finitely many roots).
Rat split_point(const IntPoly& h, const Rat& lo, const Rat& hi) {
  static const std::pair<int, int> knots[] = {
      {1, 2}, {5, 11}, {7, 13}, {9, 17}, {11, 23}, {13, 29}, {17, 37}};
  for (auto [a, b] : knots) {
    Rat t = lo + (hi - lo) * Rat(a, b);
    if (h.sign_at(t) != 0) return t;
  }
  throw std::logic_error("could not find a non-root split point");
}

void isolate_rec(const IntPoly& h, const std::vector<IntPoly>& ch,
                 const Rat& lo, const Rat& hi,
                 std::vector<std::pair<Rat, Rat>>& out) {
  int n = variations(ch, lo) - variations(ch, hi);
  if (n == 0) return;
  if (n == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rat mid = split_point(h, lo, hi);
  isolate_rec(h, ch, lo, mid, out);
  isolate_rec(h, ch, mid, hi, out);
}

}  // namespace

std::vector<std::pair<Rat, Rat>> isolate_roots(const IntPoly& h, const Rat& lo,
                                               const Rat& hi) {
  if (h.sign_at(lo) == 0 || h.sign_at(hi) == 0)
    throw std::logic_error("sturm::isolate_roots endpoint is a root");
  auto ch = chain(h);
  std::vector<std::pair<Rat, Rat>> out;
  isolate_rec(h, ch, lo, hi, out);
  return out;
}

}  // namespace sturm

namespace {

// Square-free part of g with the roots at 0 and 1 removed.
IntPoly interior_squarefree(const IntPoly& g) {
  IntPoly h = IntPoly::div_exact(g, IntPoly::gcd(g, g.derivative()));
  h = h.deflate_at_zero();
  while (h.sign_at(Rat{1}) == 0) h = IntPoly::div_exact(h, IntPoly{1, -1});
  return h;
}

}  // namespace

std::vector<std::pair<Rat, Rat>> RatFunc::critical_intervals() const {
  // Poles at the endpoints are fine (the interval is open); interior
  // poles are not.
  IntPoly d = den_.deflate_at_zero();
  while (d.sign_at(Rat{1}) == 0) d = IntPoly::div_exact(d, IntPoly{1, -1});
  if (d.degree() > 0 && sturm::count_roots(d, Rat{0}, Rat{1}) != 0)
    throw pole_error("pole in (0,1)");
  IntPoly g = num_.derivative() * den_ - num_ * den_.derivative();
  std::vector<std::pair<Rat, Rat>> out;
  if (g.is_zero()) return out;
  IntPoly h = interior_squarefree(g);
  if (h.degree() <= 0) return out;
  for (auto [lo, hi] : sturm::isolate_roots(h, Rat{0}, Rat{1})) {
    // An endpoint at 0 or 1 can itself be a root of g even though h is
    // nonzero there; shrink toward the isolated root until g has a
    // definite sign at both ends.  Interior roots of g coincide with
    // roots of h, so any interior replacement endpoint gives g a sign.
    while (g.sign_at(lo) == 0 || g.sign_at(hi) == 0) {
      Rat mid = (lo + hi) / 2;
      int sm = h.sign_at(mid);
      if (sm == 0) {
        Rat q = (hi - lo) / 4;
        lo = mid - q;
        hi = mid + q;
      } else if (sm == h.sign_at(lo)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    // Odd multiplicity iff g changes sign across the isolating interval.
    if (g.sign_at(lo) * g.sign_at(hi) < 0) out.emplace_back(lo, hi);
  }
  return out;
}

int RatFunc::derivative_sign_changes() const {
  return static_cast<int>(critical_intervals().size());
}

std::string RatFunc::str() const {
  if (num_.is_zero()) return "0 / (" + den_.str() + ")";
  std::ostringstream os;
  int ord = num_.order_at_zero();
  IntPoly inner = num_.deflate_at_zero();
  os << "(" << inner.str() << ")";
  if (ord == 1) os << "*p";
  if (ord > 1) os << "*p^" << ord;
  os << " / (" << den_.str() << ")";
  return os.str();
}

}  // namespace penney
