#pragma once

#include "penney/correlation.hpp"
#include "penney/ratfunc.hpp"
#include "penney/word.hpp"

namespace penney {

struct SymmetryFlags {
  bool odd = false;
  bool even = false;
  bool constant = false;  // Win == 1/2; implies odd and even

  friend bool operator==(const SymmetryFlags&, const SymmetryFlags&) = default;
};

// Exact win probability P_p(tau_v < tau_w) as a canonical rational
// function of the bias p. Requires v != w with neither word a subword
// of the other.
RatFunc win_probability(Word v, Word w);

// E_p tau_v = vv_p cleared to a single rational function.
RatFunc expected_hitting_time(Word v);

// Exact value of the win probability at a fixed rational bias, computed
// from the correlation tables without building a RatFunc.
Rat win_probability_at(Word v, Word w, const Rat& q);

// At p = 1/2 the four correlation sums are plain integers; returns
// Win(v,w;1/2) >= 1/2, the hot comparison of the exhaustive searches.
bool longer_at_least_half(Word v, Word w);

SymmetryFlags classify_symmetry(Word v, Word w);
SymmetryFlags classify_symmetry(const RatFunc& win);

// Both halves of the p->0 trichotomy: the combinatorial criterion for
// the 1/2 case, the analytic limit otherwise. Always in {0, 1/2, 1}.
Rat zero_limit_combinatorial(Word v, Word w);

// Precondition shared by the Conway-formula operations; throws
// domain_error naming a witness occurrence on violation.
void require_race_pair(Word v, Word w);

}  // namespace penney
