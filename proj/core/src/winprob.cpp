#include "penney/winprob.hpp"

namespace penney {

void require_race_pair(Word v, Word w) {
  if (v.empty() || w.empty()) throw domain_error("empty word in race pair");
  if (v == w) throw domain_error("identical words");
  Word shorter = v.length() <= w.length() ? v : w;
  Word longer = v.length() <= w.length() ? w : v;
  if (occurrences(shorter, longer) > 0) {
    // locate a witness position for the error message
    for (int i = 0; i + shorter.length() <= longer.length(); ++i) {
      if (longer.suffix(longer.length() - i).starts_with(shorter)) {
        throw domain_error("word " + shorter.str() + " occurs in " +
                           longer.str() + " at position " + std::to_string(i + 1));
      }
    }
  }
}

namespace {

// Clear a correlation table to the polynomial
// sum c * p^(A-i) (1-p)^(B-j), for common exponents (A, B).
IntPoly cleared(const CorrelationPoly& cp, int A, int B) {
  IntPoly acc;
  for (const auto& [ij, c] : cp.terms) {
    IntPoly term = IntPoly::constant(Int(c));
    term = term * IntPoly::monomial(1, A - ij.first);
    IntPoly omp{1, -1};  // 1 - p
    for (int k = 0; k < B - ij.second; ++k) term = term * omp;
    acc = acc + term;
  }
  return acc;
}

}  // namespace

RatFunc win_probability(Word v, Word w) {
  require_race_pair(v, w);
  CorrelationPoly vv = correlation_poly(v, v), ww = correlation_poly(w, w);
  CorrelationPoly vw = correlation_poly(v, w), wv = correlation_poly(w, v);
  int A = std::max({vv.max_ones_exponent(), ww.max_ones_exponent(),
                    vw.max_ones_exponent(), wv.max_ones_exponent()});
  int B = std::max({vv.max_zeros_exponent(), ww.max_zeros_exponent(),
                    vw.max_zeros_exponent(), wv.max_zeros_exponent()});
  IntPoly pvv = cleared(vv, A, B), pww = cleared(ww, A, B);
  IntPoly pvw = cleared(vw, A, B), pwv = cleared(wv, A, B);
  return RatFunc::from(pww - pwv, pww + pvv - pwv - pvw);
}

RatFunc expected_hitting_time(Word v) {
  if (v.empty()) throw domain_error("empty word");
  CorrelationPoly vv = correlation_poly(v, v);
  int A = vv.max_ones_exponent(), B = vv.max_zeros_exponent();
  IntPoly num = cleared(vv, A, B);
  IntPoly den = IntPoly::monomial(1, A);
  IntPoly omp{1, -1};
  for (int k = 0; k < B; ++k) den = den * omp;
  return RatFunc::from(num, den);
}

namespace {

Rat corr_value_at(Word v, Word w, const Rat& q, const Rat& one_minus_q) {
  Rat s = 0;
  for (int r : overlap_set(v, w).lengths) {
    Word u = w.prefix(r);
    Rat t = 1;
    for (int k = 0; k < u.ones_count(); ++k) t *= q;
    for (int k = 0; k < u.zeros_count(); ++k) t *= one_minus_q;
    s += 1 / t;
  }
  return s;
}

}  // namespace

Rat win_probability_at(Word v, Word w, const Rat& q) {
  require_race_pair(v, w);
  Rat omq = 1 - q;
  Rat vv = corr_value_at(v, v, q, omq), ww = corr_value_at(w, w, q, omq);
  Rat vw = corr_value_at(v, w, q, omq), wv = corr_value_at(w, v, q, omq);
  return (ww - wv) / (ww + vv - wv - vw);
}

bool longer_at_least_half(Word v, Word w) {
  // Win >= 1/2 <=> ww - wv >= vv - vw (denominator positive).
  std::uint64_t vv = correlation_at_half(v, v), ww = correlation_at_half(w, w);
  std::uint64_t vw = correlation_at_half(v, w), wv = correlation_at_half(w, v);
  return ww + vw >= vv + wv;
}

SymmetryFlags classify_symmetry(const RatFunc& win) {
  SymmetryFlags s;
  IntPoly two_num = win.num().scaled(2);
  if (two_num == win.den()) {
    s.constant = s.odd = s.even = true;
    return s;
  }
  RatFunc r = win.reflect();
  if (win + r == RatFunc::constant(Rat{1})) s.odd = true;
  if (win == r) s.even = true;
  return s;
}

SymmetryFlags classify_symmetry(Word v, Word w) {
  return classify_symmetry(win_probability(v, w));
}

Rat zero_limit_combinatorial(Word v, Word w) {
  require_race_pair(v, w);
  int r = v.ones_count();
  if (r == w.ones_count()) {
    bool full_weight_cross = false;
    for (const auto& pair : {overlap_set(v, w), overlap_set(w, v)}) {
      for (int k : pair.lengths)
        if (pair.overlap_word(k).ones_count() == r) full_weight_cross = true;
    }
    if (!full_weight_cross) return Rat(1, 2);
  }
  return win_probability(v, w).limit_at_zero();
}

}  // namespace penney
