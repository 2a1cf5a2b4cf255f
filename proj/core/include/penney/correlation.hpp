#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "penney/word.hpp"

namespace penney {

// Overlap lengths r (1 <= r <= min(|v|,|w|)) such that the length-r
// suffix of source equals the length-r prefix of target. Overlap words
// are reconstructed on demand as prefixes of the target.
struct OverlapSet {
  Word source;
  Word target;
  std::vector<int> lengths;  // strictly increasing

  Word overlap_word(int r) const { return target.prefix(r); }
};

OverlapSet overlap_set(Word v, Word w);

// Sum over overlap words u of c * p^{-i} (1-p)^{-j} with (i,j) =
// (ones(u), zeros(u)). Term exponents are stored as (i, j).
struct CorrelationPoly {
  std::map<std::pair<int, int>, std::int64_t> terms;

  int max_ones_exponent() const;
  int max_zeros_exponent() const;

  friend bool operator==(const CorrelationPoly&, const CorrelationPoly&) = default;
};

CorrelationPoly correlation_poly(Word v, Word w);

// Sum of 2^r over the overlap lengths of (v, w): the value of the
// correlation polynomial at p = 1/2. Exact for lengths <= 63.
std::uint64_t correlation_at_half(Word v, Word w);

// General bad-prefix set D(x, y): the prefixes x_1..x_{n-k} of x, for
// overlap lengths k of (x, y) with n-k >= 1. Sorted by (length, bits).
std::vector<Word> d_set(Word x, Word y);

// F(v, w) = D(v,v) u D(w,w) u D(w,v) u D(v,w). No length restriction.
std::vector<Word> f_set(Word v, Word w);

struct BadPrefixSets {
  std::vector<Word> dvv, dww, dvw, dwv, f;
};

// The equal-length packaging used by the property-R machinery.
// Rejects |v| != |w|; use d_set / f_set for the general form.
BadPrefixSets bad_prefix_sets(Word v, Word w);

// Validity oracle for the self-overlap period set: the set
// { n - i : prefix of length i in O(v,v) } is closed under addition
// below n. Holds for every word; exercised as a test oracle.
bool forward_propagation_holds(Word v);

}  // namespace penney
