#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "penney/ratfunc.hpp"
#include "penney/winprob.hpp"
#include "penney/word.hpp"

namespace penney::search {

using WordPair = std::pair<Word, Word>;

// Theorem check: among |v| = n+1, |w| = n with v not containing w,
// Win(v,w;1/2) >= 1/2 forces w constant.
struct LongerByOneReport {
  int n = 0;
  bool pass = false;
  long long pairs_checked = 0;
  std::vector<WordPair> favorable_pairs;  // all pairs with Win >= 1/2
  // best pair among non-constant w, with its exact win value
  std::optional<WordPair> best_nonconstant;
  Rat best_nonconstant_win;
  double elapsed_s = 0;
};
LongerByOneReport verify_longer_by_one(int n, unsigned threads = 0);

// Exact gap 1/2 - Win(v,w;1/2) for the near-tight pair
// v = 11(10)^m, w = (10)^m 1.
Rat tightness_gap(int m);

// Theorem check: Win(v,w;1/2) < 2/(1+2^k) for |v| = n+k, |w| = n.
struct GapBoundReport {
  int n = 0, k = 0;
  bool pass = false;
  long long pairs_checked = 0;
  Rat bound;
  std::optional<WordPair> maximizer;
  Rat max_win;
  WordPair extremal_pair;  // (0^{k+1} 1^{n-1}, 1^n)
  Rat extremal_win;
  double elapsed_s = 0;
};
GapBoundReport verify_length_gap_bound(int n, int k, unsigned threads = 0);

// Exact argmax of Win over W(n,k) at bias q, lexicographic tie-break.
struct ArgmaxReport {
  int n = 0, k = 0;
  Rat q;
  long long pairs_checked = 0;
  std::optional<WordPair> best;
  Rat best_win;
  WordPair conjectured;      // shape predicted for this side of the threshold
  bool matches_conjecture = false;
  std::string tie_break = "lexicographic (v, w), digit 0 < 1";
  double elapsed_s = 0;
};
ArgmaxReport argmax_win(int n, int k, const Rat& q, unsigned threads = 0);

// Conjectured optimizer shape in W(n,k) for bias q (q below / above the
// k-threshold picks the branch).
WordPair conjectured_optimal_pair(int n, int k, bool below_threshold);

struct RootInterval {
  Rat lo, hi;
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

// Isolating interval of width <= tol for the unique root in (0, 1/2) of
// (1-2z)(1-z)^k - z^2, by exact-sign bisection. k = 1 isolates
// (3 - sqrt 5)/2.
RootInterval threshold_root(int k, const Rat& tol);

struct BranchBounds {
  Rat low_branch;   // applicable for q below the threshold
  Rat high_branch;  // applicable above
  int applicable;   // 0 = low, 1 = high, 2 = within threshold interval
};
BranchBounds closed_form_bounds(int k, const Rat& q);

struct CurvePoint {
  Rat p;
  long long favorable = 0;
  long long n_pairs = 0;
  double ci_half_width = 0;  // 0 for exhaustive runs
  double proportion() const {
    return n_pairs ? static_cast<double>(favorable) / static_cast<double>(n_pairs) : 0.0;
  }
};

struct CurveReport {
  int max_len = 0;
  bool sampled = false;
  long long samples = 0;
  std::uint64_t seed = 0;
  std::string rng = "mt19937_64";
  std::vector<CurvePoint> points;
  double elapsed_s = 0;
};

// Proportion of valid pairs with |v| > |w|, lengths <= max_len, where
// the longer word is favorable, per grid bias. Exhaustive: exact counts.
CurveReport longer_favorable_curve(int max_len, const std::vector<Rat>& grid,
                                   unsigned threads = 0);
// Seeded uniform pair sampling; reproducible bit-for-bit from the seed.
CurveReport longer_favorable_curve_sampled(int max_len,
                                           const std::vector<Rat>& grid,
                                           long long samples,
                                           std::uint64_t seed,
                                           unsigned threads = 0);

struct DensityReport {
  int n = 0;
  long long r_count = 0;
  long long trivial_count = 0;  // pairs with fully trivial auto/cross overlaps
  Rat r_density;
  Rat trivial_density;
  double elapsed_s = 0;
};
// Exact count of ordered length-n pairs with property R over 4^n.
// n >= 13 requires confirm_long_run; progress checkpoints by shard when
// a checkpoint path is given.
DensityReport property_r_density(int n, unsigned threads = 0,
                                 const std::string& checkpoint_path = "",
                                 bool confirm_long_run = false);

struct CensusBucket {
  long long total = 0;
  long long with_r = 0;
  long long with_e = 0;
  long long bitflip_pair = 0;  // w == bitflip(v)
};

struct CensusReport {
  int n = 0;
  long long pairs_checked = 0;
  CensusBucket odd_only, even_only, constant, none;
  bool weight_invariant_ok = false;  // even/constant force equal one-counts
  bool constant_limit_ok = false;    // constant pairs have p->0 limit 1/2
  double elapsed_s = 0;
};
CensusReport symmetry_census(int n, unsigned threads = 0);

}  // namespace penney::search
