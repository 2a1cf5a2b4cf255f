#include "penney/correlation.hpp"

#include <algorithm>
#include <set>

namespace penney {

OverlapSet overlap_set(Word v, Word w) {
  if (v.empty() || w.empty())
    throw domain_error("overlap_set requires non-empty words");
  OverlapSet o{v, w, {}};
  int m = std::min(v.length(), w.length());
  for (int r = 1; r <= m; ++r) {
    // suffix_r(v) == prefix_r(w), as packed bits
    if ((v.bits() >> (v.length() - r)) ==
        (w.bits() & ((std::uint64_t{1} << r) - 1)))
      o.lengths.push_back(r);
  }
  return o;
}

int CorrelationPoly::max_ones_exponent() const {
  int m = 0;
  for (const auto& [ij, c] : terms) m = std::max(m, ij.first);
  return m;
}

int CorrelationPoly::max_zeros_exponent() const {
  int m = 0;
  for (const auto& [ij, c] : terms) m = std::max(m, ij.second);
  return m;
}

CorrelationPoly correlation_poly(Word v, Word w) {
  CorrelationPoly cp;
  OverlapSet o = overlap_set(v, w);
  for (int r : o.lengths) {
    Word u = o.overlap_word(r);
    cp.terms[{u.ones_count(), u.zeros_count()}] += 1;
  }
  return cp;
}

std::uint64_t correlation_at_half(Word v, Word w) {
  std::uint64_t s = 0;
  int m = std::min(v.length(), w.length());
  std::uint64_t vb = v.bits(), wb = w.bits();
  for (int r = 1; r <= m; ++r) {
    if ((vb >> (v.length() - r)) == (wb & ((std::uint64_t{1} << r) - 1)))
      s += std::uint64_t{1} << r;
  }
  return s;
}

std::vector<Word> d_set(Word x, Word y) {
  std::vector<Word> d;
  int n = x.length();
  for (int k : overlap_set(x, y).lengths) {
    if (n - k >= 1) d.push_back(x.prefix(n - k));
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<Word> f_set(Word v, Word w) {
  std::set<Word> f;
  for (const auto& part : {d_set(v, v), d_set(w, w), d_set(w, v), d_set(v, w)})
    f.insert(part.begin(), part.end());
  return {f.begin(), f.end()};
}

BadPrefixSets bad_prefix_sets(Word v, Word w) {
  if (v.length() != w.length())
    throw domain_error("bad_prefix_sets requires equal-length words");
  return {d_set(v, v), d_set(w, w), d_set(v, w), d_set(w, v), f_set(v, w)};
}

bool forward_propagation_holds(Word v) {
  int n = v.length();
  std::set<int> periods;  // n - i for prefixes of length i in O(v,v)
  for (int r : overlap_set(v, v).lengths) periods.insert(n - r);
  for (int s : periods) {
    for (int t : periods) {
      if (s + t < n && !periods.count(s + t)) return false;
    }
  }
  return true;
}

}  // namespace penney
