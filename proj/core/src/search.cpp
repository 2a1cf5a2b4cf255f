#include "penney/search.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <random>

#include "penney/correlation.hpp"
#include "penney/parallel.hpp"
#include "penney/properties.hpp"

namespace penney::search {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void require_range(bool ok, const std::string& what) {
  if (!ok) throw domain_error("parameter out of range: " + what);
}

bool is_constant_word(Word u) {
  return u.ones_count() == 0 || u.ones_count() == u.length();
}

Rat win_at_half(Word v, Word w) {
  Int vv = correlation_at_half(v, v), ww = correlation_at_half(w, w);
  Int vw = correlation_at_half(v, w), wv = correlation_at_half(w, v);
  return Rat(ww - wv, ww + vv - wv - vw);
}

bool lex_pair_less(const WordPair& a, const WordPair& b) {
  if (a.first != b.first) return lex_less(a.first, b.first);
  return lex_less(a.second, b.second);
}

}  // namespace

LongerByOneReport verify_longer_by_one(int n, unsigned threads) {
  require_range(2 <= n && n <= 12, "verify_longer_by_one needs 2 <= n <= 12");
  auto t0 = Clock::now();

  struct Partial {
    long long checked = 0;
    std::vector<WordPair> favorable;
    std::optional<WordPair> best_nc;
    Rat best_nc_win;
  };
  std::uint64_t n_v = std::uint64_t{1} << (n + 1), n_w = std::uint64_t{1} << n;
  auto parts = parallel_shards<Partial>(n_v, threads, [&](std::size_t vb) {
    Partial p;
    Word v = Word::from_bits(vb, n + 1);
    for (std::uint64_t wb = 0; wb < n_w; ++wb) {
      Word w = Word::from_bits(wb, n);
      if (occurrences(w, v) > 0) continue;
      ++p.checked;
      if (longer_at_least_half(v, w)) p.favorable.emplace_back(v, w);
      if (!is_constant_word(w)) {
        Rat win = win_at_half(v, w);
        if (!p.best_nc || win > p.best_nc_win) {
          p.best_nc = WordPair{v, w};
          p.best_nc_win = win;
        }
      }
    }
    return p;
  });

  LongerByOneReport rep;
  rep.n = n;
  rep.pass = true;
  for (auto& p : parts) {
    rep.pairs_checked += p.checked;
    for (auto& pr : p.favorable) {
      if (!is_constant_word(pr.second)) rep.pass = false;
      rep.favorable_pairs.push_back(pr);
    }
    if (p.best_nc && (!rep.best_nonconstant || p.best_nc_win > rep.best_nonconstant_win)) {
      rep.best_nonconstant = p.best_nc;
      rep.best_nonconstant_win = p.best_nc_win;
    }
  }
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

Rat tightness_gap(int m) {
  require_range(m >= 1, "tightness_gap needs m >= 1");
  Word unit = Word::parse("10");
  Word v = concat(Word::parse("11"), unit.pow(m));
  Word w = concat(unit.pow(m), Word::parse("1"));
  return Rat(1, 2) - win_at_half(v, w);
}

GapBoundReport verify_length_gap_bound(int n, int k, unsigned threads) {
  require_range(2 <= n && n <= 10, "verify_length_gap_bound needs 2 <= n <= 10");
  require_range(0 <= k && k <= 4, "verify_length_gap_bound needs 0 <= k <= 4");
  auto t0 = Clock::now();

  struct Partial {
    long long checked = 0;
    std::optional<WordPair> best;
    Rat best_win;
  };
  std::uint64_t n_v = std::uint64_t{1} << (n + k), n_w = std::uint64_t{1} << n;
  auto parts = parallel_shards<Partial>(n_v, threads, [&](std::size_t vb) {
    Partial p;
    Word v = Word::from_bits(vb, n + k);
    for (std::uint64_t wb = 0; wb < n_w; ++wb) {
      Word w = Word::from_bits(wb, n);
      if (v == w || occurrences(w, v) > 0) continue;
      ++p.checked;
      Rat win = win_at_half(v, w);
      if (!p.best || win > p.best_win) {
        p.best = WordPair{v, w};
        p.best_win = win;
      }
    }
    return p;
  });

  GapBoundReport rep;
  rep.n = n;
  rep.k = k;
  rep.bound = Rat(2, 1 + (Int{1} << k));
  for (auto& p : parts) {
    rep.pairs_checked += p.checked;
    if (p.best && (!rep.maximizer || p.best_win > rep.max_win)) {
      rep.maximizer = p.best;
      rep.max_win = p.best_win;
    }
  }
  rep.pass = rep.maximizer && rep.max_win < rep.bound;
  rep.extremal_pair = {concat(Word::repeated(0, k + 1), Word::repeated(1, n - 1)),
                       Word::repeated(1, n)};
  rep.extremal_win = win_at_half(rep.extremal_pair.first, rep.extremal_pair.second);
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

WordPair conjectured_optimal_pair(int n, int k, bool below_threshold) {
  if (k == 1) {
    if (below_threshold)
      return {concat(Word::repeated(0, 2), Word::repeated(1, n - 1)),
              concat(Word::repeated(1, n - 1), Word::repeated(0, 1))};
    return {concat(Word::repeated(1, 1),
                   concat(Word::repeated(0, 1), Word::repeated(1, n - 1))),
            Word::repeated(1, n)};
  }
  if (below_threshold) {
    Word ten = Word::parse("10"), zeroone = Word::parse("01");
    if (n % 2 == 0) {
      int m = n / 2;
      return {concat(Word::repeated(0, k + 1),
                     concat(ten.pow(m - 1), Word::parse("1"))),
              ten.pow(m)};
    }
    int m = (n - 1) / 2;
    return {concat(Word::repeated(0, k + 1), zeroone.pow(m)),
            concat(zeroone.pow(m), Word::parse("0"))};
  }
  return {concat(Word::repeated(0, k - 1),
                 concat(Word::parse("10"), Word::repeated(1, n - 1))),
          Word::repeated(1, n)};
}

ArgmaxReport argmax_win(int n, int k, const Rat& q, unsigned threads) {
  require_range(2 <= n && n <= 11, "argmax_win needs 2 <= n <= 11");
  require_range(0 <= k && k <= 4, "argmax_win needs 0 <= k <= 4");
  require_range(q > 0 && q < 1, "argmax_win needs q in (0,1)");
  auto t0 = Clock::now();

  struct Partial {
    long long checked = 0;
    std::optional<WordPair> best;
    Rat best_win;
  };
  std::uint64_t n_v = std::uint64_t{1} << (n + k), n_w = std::uint64_t{1} << n;
  auto parts = parallel_shards<Partial>(n_v, threads, [&](std::size_t vb) {
    Partial p;
    Word v = Word::from_bits(vb, n + k);
    for (std::uint64_t wb = 0; wb < n_w; ++wb) {
      Word w = Word::from_bits(wb, n);
      if (v.ones_count() != w.ones_count()) continue;
      if (occurrences(w, v) > 0) continue;
      ++p.checked;
      Rat win = win_probability_at(v, w, q);
      WordPair cand{v, w};
      if (!p.best || win > p.best_win ||
          (win == p.best_win && lex_pair_less(cand, *p.best))) {
        p.best = cand;
        p.best_win = win;
      }
    }
    return p;
  });

  ArgmaxReport rep;
  rep.n = n;
  rep.k = k;
  rep.q = q;
  for (auto& p : parts) {
    rep.pairs_checked += p.checked;
    if (!p.best) continue;
    if (!rep.best || p.best_win > rep.best_win ||
        (p.best_win == rep.best_win && lex_pair_less(*p.best, *rep.best))) {
      rep.best = p.best;
      rep.best_win = p.best_win;
    }
  }
  if (rep.best && k >= 1) {
    RootInterval r = threshold_root(k, Rat(1, 1000000000));
    if (r.contains(q)) {
      // near the crossover either branch may win
      rep.conjectured = conjectured_optimal_pair(n, k, true);
      rep.matches_conjecture =
          *rep.best == rep.conjectured ||
          *rep.best == conjectured_optimal_pair(n, k, false);
    } else {
      rep.conjectured = conjectured_optimal_pair(n, k, q < r.lo);
      rep.matches_conjecture = *rep.best == rep.conjectured;
    }
  }
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

RootInterval threshold_root(int k, const Rat& tol) {
  require_range(k >= 1, "threshold_root needs k >= 1");
  require_range(tol > 0, "threshold_root needs tol > 0");
  IntPoly omz{1, -1};
  IntPoly f{1, -2};
  for (int i = 0; i < k; ++i) f = f * omz;
  f = f - IntPoly{0, 0, 1};
  Rat lo = 0, hi = Rat(1, 2);
  // sign(+) at 0, sign(-) at 1/2; bisect the unique interior root
  while (hi - lo > tol) {
    Rat mid = (lo + hi) / 2;
    int s = f.sign_at(mid);
    if (s == 0) return {mid, mid};
    (s > 0 ? lo : hi) = mid;
  }
  return {lo, hi};
}

BranchBounds closed_form_bounds(int k, const Rat& q) {
  require_range(k >= 1, "closed_form_bounds needs k >= 1");
  require_range(q > 0 && q < Rat(1, 2), "closed_form_bounds needs q in (0,1/2)");
  BranchBounds b;
  Rat omq = 1 - q;
  if (k == 1) {
    b.low_branch = omq;
    b.high_branch = 1 / (2 - q);
  } else {
    Rat omqk = 1;
    for (int i = 0; i < k; ++i) omqk *= omq;
    b.low_branch = omqk / (1 - q * (1 - omqk) + q * q);
    b.high_branch = (omqk / omq) / (1 + omqk);
  }
  RootInterval r = threshold_root(k, Rat(1, 1000000000));
  b.applicable = q < r.lo ? 0 : (q > r.hi ? 1 : 2);
  return b;
}

namespace {

struct LengthCombos {
  // all (len_v, len_w) with len_v > len_w, both <= max_len
  std::vector<std::pair<int, int>> combos;
  explicit LengthCombos(int max_len) {
    for (int m = 2; m <= max_len; ++m)
      for (int n = 1; n < m; ++n) combos.emplace_back(m, n);
  }
};

}  // namespace

CurveReport longer_favorable_curve(int max_len, const std::vector<Rat>& grid,
                                   unsigned threads) {
  require_range(2 <= max_len && max_len <= 9,
                "exhaustive curve needs max_len <= 9");
  for (const auto& p : grid)
    require_range(p > 0 && p < Rat(1, 2), "grid point in (0,1/2)");
  auto t0 = Clock::now();
  LengthCombos lc(max_len);

  struct Partial {
    std::vector<long long> favorable;
    long long pairs = 0;
  };
  auto parts = parallel_shards<Partial>(lc.combos.size(), threads, [&](std::size_t i) {
    auto [m, n] = lc.combos[i];
    Partial part;
    part.favorable.assign(grid.size(), 0);
    for (std::uint64_t vb = 0; vb < (std::uint64_t{1} << m); ++vb) {
      Word v = Word::from_bits(vb, m);
      for (std::uint64_t wb = 0; wb < (std::uint64_t{1} << n); ++wb) {
        Word w = Word::from_bits(wb, n);
        if (occurrences(w, v) > 0) continue;
        ++part.pairs;
        for (std::size_t gi = 0; gi < grid.size(); ++gi) {
          if (win_probability_at(v, w, grid[gi]) > Rat(1, 2))
            ++part.favorable[gi];
        }
      }
    }
    return part;
  });

  CurveReport rep;
  rep.max_len = max_len;
  rep.points.resize(grid.size());
  long long total = 0;
  for (auto& p : parts) total += p.pairs;
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    rep.points[gi].p = grid[gi];
    rep.points[gi].n_pairs = total;
    for (auto& p : parts) rep.points[gi].favorable += p.favorable[gi];
  }
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

CurveReport longer_favorable_curve_sampled(int max_len,
                                           const std::vector<Rat>& grid,
                                           long long samples,
                                           std::uint64_t seed,
                                           unsigned threads) {
  require_range(2 <= max_len && max_len <= 17, "sampled curve needs max_len <= 17");
  require_range(samples >= 1000, "sampled curve needs >= 1000 samples");
  for (const auto& p : grid)
    require_range(p > 0 && p < Rat(1, 2), "grid point in (0,1/2)");
  auto t0 = Clock::now();

  LengthCombos lc(max_len);
  std::vector<std::uint64_t> weights;
  std::uint64_t total_weight = 0;
  for (auto [m, n] : lc.combos) {
    weights.push_back(std::uint64_t{1} << (m + n));
    total_weight += weights.back();
  }

  // Fixed shard count: results depend on the seed only, never on the
  // worker count.
  const std::size_t n_shards = 64;
  struct Partial {
    std::vector<long long> favorable;
  };
  auto parts = parallel_shards<Partial>(n_shards, threads, [&](std::size_t si) {
    std::mt19937_64 rng(splitmix64(seed ^ (0x5851f42d4c957f2dull * (si + 1))));
    Partial part;
    part.favorable.assign(grid.size(), 0);
    long long quota = samples / n_shards + (si < samples % n_shards ? 1 : 0);
    for (long long s = 0; s < quota; ++s) {
      Word v, w;
      while (true) {
        std::uint64_t r = rng() % total_weight;
        std::size_t ci = 0;
        while (r >= weights[ci]) r -= weights[ci++];
        auto [m, n] = lc.combos[ci];
        v = Word::from_bits(rng(), m);
        w = Word::from_bits(rng(), n);
        if (occurrences(w, v) == 0) break;
      }
      for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        if (win_probability_at(v, w, grid[gi]) > Rat(1, 2)) ++part.favorable[gi];
      }
    }
    return part;
  });

  CurveReport rep;
  rep.max_len = max_len;
  rep.sampled = true;
  rep.samples = samples;
  rep.seed = seed;
  rep.points.resize(grid.size());
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    auto& pt = rep.points[gi];
    pt.p = grid[gi];
    pt.n_pairs = samples;
    for (auto& p : parts) pt.favorable += p.favorable[gi];
    double ph = pt.proportion();
    pt.ci_half_width = 1.96 * std::sqrt(ph * (1 - ph) / static_cast<double>(samples));
  }
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

DensityReport property_r_density(int n, unsigned threads,
                                 const std::string& checkpoint_path,
                                 bool confirm_long_run) {
  require_range(2 <= n && n <= 15, "property_r_density needs 2 <= n <= 15");
  if (n >= 13 && !confirm_long_run)
    throw domain_error("n >= 13 is a long run; pass confirm_long_run");
  auto t0 = Clock::now();

  std::map<std::size_t, std::pair<long long, long long>> done;
  if (!checkpoint_path.empty()) {
    std::ifstream in(checkpoint_path);
    std::size_t shard;
    long long r, t;
    while (in >> shard >> r >> t) done[shard] = {r, t};
  }
  std::mutex ckpt_mu;

  std::uint64_t n_words = std::uint64_t{1} << n;
  struct Partial {
    long long r = 0, trivial = 0;
  };
  auto parts = parallel_shards<Partial>(n_words, threads, [&](std::size_t vb) {
    if (auto it = done.find(vb); it != done.end())
      return Partial{it->second.first, it->second.second};
    Partial p;
    Word v = Word::from_bits(vb, n);
    bool v_auto_trivial = overlap_set(v, v).lengths.size() == 1;
    for (std::uint64_t wb = 0; wb < n_words; ++wb) {
      if (wb == vb) continue;
      Word w = Word::from_bits(wb, n);
      if (has_property_r(v, w)) ++p.r;
      if (v_auto_trivial && overlap_set(w, w).lengths.size() == 1 &&
          overlap_set(v, w).lengths.empty() && overlap_set(w, v).lengths.empty())
        ++p.trivial;
    }
    if (!checkpoint_path.empty()) {
      std::lock_guard<std::mutex> lock(ckpt_mu);
      std::ofstream out(checkpoint_path, std::ios::app);
      out << vb << ' ' << p.r << ' ' << p.trivial << '\n';
    }
    return p;
  });

  DensityReport rep;
  rep.n = n;
  for (auto& p : parts) {
    rep.r_count += p.r;
    rep.trivial_count += p.trivial;
  }
  Int denom = Int{1} << (2 * n);
  rep.r_density = Rat(rep.r_count, denom);
  rep.trivial_density = Rat(rep.trivial_count, denom);
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

CensusReport symmetry_census(int n, unsigned threads) {
  require_range(2 <= n && n <= 10, "symmetry_census needs 2 <= n <= 10");
  auto t0 = Clock::now();

  struct Partial {
    CensusBucket odd_only, even_only, constant, none;
    long long checked = 0;
    bool weight_ok = true, limit_ok = true;
  };
  std::uint64_t n_words = std::uint64_t{1} << n;
  auto parts = parallel_shards<Partial>(n_words, threads, [&](std::size_t vb) {
    Partial p;
    Word v = Word::from_bits(vb, n);
    for (std::uint64_t wb = 0; wb < n_words; ++wb) {
      if (wb == vb) continue;
      Word w = Word::from_bits(wb, n);
      ++p.checked;
      RatFunc f = win_probability(v, w);
      SymmetryFlags sym = classify_symmetry(f);
      CensusBucket& bucket = sym.constant ? p.constant
                             : sym.odd    ? p.odd_only
                             : sym.even   ? p.even_only
                                          : p.none;
      ++bucket.total;
      if (has_property_r(v, w)) ++bucket.with_r;
      if (property_e_witness(v, w)) ++bucket.with_e;
      if (w == v.bitflip()) ++bucket.bitflip_pair;
      if ((sym.even || sym.constant) && v.ones_count() != w.ones_count())
        p.weight_ok = false;
      if (sym.constant && f.limit_at_zero() != Rat(1, 2)) p.limit_ok = false;
    }
    return p;
  });

  CensusReport rep;
  rep.n = n;
  rep.weight_invariant_ok = true;
  rep.constant_limit_ok = true;
  auto add = [](CensusBucket& a, const CensusBucket& b) {
    a.total += b.total;
    a.with_r += b.with_r;
    a.with_e += b.with_e;
    a.bitflip_pair += b.bitflip_pair;
  };
  for (auto& p : parts) {
    rep.pairs_checked += p.checked;
    add(rep.odd_only, p.odd_only);
    add(rep.even_only, p.even_only);
    add(rep.constant, p.constant);
    add(rep.none, p.none);
    rep.weight_invariant_ok &= p.weight_ok;
    rep.constant_limit_ok &= p.limit_ok;
  }
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

}  // namespace penney::search
