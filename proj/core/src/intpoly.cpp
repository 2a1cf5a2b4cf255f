#include "penney/intpoly.hpp"

#include <sstream>
#include <stdexcept>

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

IntPoly::IntPoly(std::initializer_list<long long> ascending) {
  c_.assign(ascending.begin(), ascending.end());
  trim();
}

IntPoly::IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(Int coeff, int power) {
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(power + 1, Int{0});
    p.c_[power] = std::move(coeff);
  }
  return p;
}

Int IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Int{0};
  return c_[i];
}

const Int& IntPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

int IntPoly::order_at_zero() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int{0});
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly{};
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int{0});
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const Int& k) const {
  IntPoly r = *this;
  for (auto& x : r.c_) x *= k;
  r.trim();
  return r;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly{};
  std::vector<Int> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Int(i);
  return IntPoly(std::move(d));
}

Rat IntPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rat(*it);
  return r;
}

int IntPoly::sign_at(const Rat& x) const {
  Rat v = eval(x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& x : c_) {
    g = int_gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly{};
  Int g = content();
  IntPoly r = *this;
  for (auto& x : r.c_) x /= g;
  return r;
}

IntPoly IntPoly::reflected() const {
  // Horner in the polynomial ring: f(1-p).
  IntPoly q{1, -1};  // 1 - p
  IntPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * q + IntPoly::constant(*it);
  return r;
}

IntPoly IntPoly::div_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.is_zero()) return IntPoly{};
  std::vector<Int> rem = a.c_;
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) throw std::invalid_argument("inexact polynomial division");
  std::vector<Int> q(dq + 1, Int{0});
  for (int i = dq; i >= 0; --i) {
    Int num = rem[i + db];
    if (num % b.c_[db] != 0) throw std::invalid_argument("inexact polynomial division");
    Int qi = num / b.c_[db];
    q[i] = qi;
    for (int j = 0; j <= db; ++j) rem[i + j] -= qi * b.c_[j];
  }
  for (const auto& x : rem)
    if (x != 0) throw std::invalid_argument("inexact polynomial division");
  return IntPoly(std::move(q));
}

IntPoly IntPoly::pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_rem by zero polynomial");
  int da = a.degree(), db = b.degree();
  if (da < db) return a;
  std::vector<Int> r = a.c_;
  const Int& lb = b.c_[db];
  for (int i = da; i >= db; --i) {
    Int ri = r[i];
    for (auto& x : r) x *= lb;
    if (ri == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= ri * b.c_[j];
  }
  r.resize(db);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
  if (a.is_zero() && b.is_zero()) return IntPoly{};
  if (a.is_zero()) std::swap(a, b);
  if (b.is_zero()) {
    IntPoly r = a.primitive_part();
    if (r.leading() < 0) r = -r;
    return r;
  }
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  // Subresultant remainder sequence keeps coefficient growth linear.
  Int g = 1, h = 1;
  while (true) {
    int delta = a.degree() - b.degree();
    IntPoly r = pseudo_rem(a, b);
    if (r.is_zero()) break;
    if (r.degree() < 0) break;
    a = b;
    Int divisor = g;
    for (int i = 0; i < delta; ++i) divisor *= h;
    std::vector<Int> rc = r.coeffs();
    for (auto& x : rc) x /= divisor;
    b = IntPoly(std::move(rc));
    g = a.leading();
    // h = g^delta * h^(1-delta)
    if (delta == 0) {
      // h unchanged
    } else {
      Int gn = 1;
      for (int i = 0; i < delta; ++i) gn *= g;
      for (int i = 0; i < delta - 1; ++i) gn /= h;
      h = gn;
    }
    if (b.degree() == 0) break;
  }
  IntPoly res = b.degree() == 0 ? IntPoly{1} : b.primitive_part();
  if (res.leading() < 0) res = -res;
  return res;
}

IntPoly IntPoly::deflate_at_zero() const {
  int k = order_at_zero();
  if (k <= 0) return *this;
  return IntPoly(std::vector<Int>(c_.begin() + k, c_.end()));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    os << a.str();
    if (i > 0) os << "p^" << i;
  }
  return os.str();
}

}  // namespace penney
