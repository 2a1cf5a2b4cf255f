// Brute-force reference implementations used to cross-check the library.
// Everything here works on plain strings and exhaustive enumeration, on
// purpose: slow, obvious, and independent of the code under test.
#pragma once

#include <string>
#include <vector>

#include "penney/intpoly.hpp"
#include "penney/word.hpp"

namespace oracle {

inline int naive_occurrences(const std::string& pat, const std::string& text) {
  if (pat.empty() || pat.size() > text.size()) return 0;
  int count = 0;
  for (std::size_t i = 0; i + pat.size() <= text.size(); ++i)
    if (text.compare(i, pat.size(), pat) == 0) ++count;
  return count;
}

// Overlap lengths r: suffix of v of length r equals prefix of w.
inline std::vector<int> naive_overlaps(const std::string& v, const std::string& w) {
  std::vector<int> out;
  for (std::size_t r = 1; r <= std::min(v.size(), w.size()); ++r)
    if (v.compare(v.size() - r, r, w, 0, r) == 0) out.push_back(static_cast<int>(r));
  return out;
}

// u ends with v, contains v exactly once and w never.
inline bool naive_in_omega_v(const std::string& u, const std::string& v,
                             const std::string& w) {
  return u.size() >= v.size() &&
         u.compare(u.size() - v.size(), v.size(), v) == 0 &&
         naive_occurrences(v, u) == 1 && naive_occurrences(w, u) == 0;
}

inline std::vector<std::string> all_words(int len) {
  std::vector<std::string> out;
  for (unsigned long b = 0; b < (1ul << len); ++b) {
    std::string s(len, '0');
    for (int i = 0; i < len; ++i)
      if ((b >> i) & 1) s[i] = '1';
    out.push_back(s);
  }
  return out;
}

// Direct check of the suffix-swap property: the prefix sets
// {x : xv avoids both words except the final v} coincide for v and w.
// Quantifies over all x of length n-1, per the equivalent finite form.
inline bool brute_property_r(const std::string& v, const std::string& w) {
  int n = static_cast<int>(v.size());
  for (const std::string& x : all_words(n - 1)) {
    bool xv = naive_in_omega_v(x + v, v, w);
    bool xw = naive_in_omega_v(x + w, w, v);
    if (xv != xw) return false;
  }
  return true;
}

// Win probability at exact bias q by exhausting the race tree to depth
// `horizon` and renormalizing over decided branches. Exact as a bound:
// the true value lies within the undecided mass of the returned value.
struct BruteWin {
  penney::Rat v_mass, w_mass, undecided;
};

inline BruteWin brute_win_mass(const std::string& v, const std::string& w,
                               const penney::Rat& q, int horizon) {
  using penney::Rat;
  BruteWin r{0, 0, 0};
  struct Node { std::string s; Rat mass; };
  std::vector<Node> frontier{{"", Rat(1)}};
  for (int step = 0; step < horizon && !frontier.empty(); ++step) {
    std::vector<Node> next;
    for (auto& node : frontier) {
      for (int digit : {0, 1}) {
        Node child{node.s + static_cast<char>('0' + digit),
                   node.mass * (digit ? q : 1 - q)};
        bool hit_v = child.s.size() >= v.size() &&
                     child.s.compare(child.s.size() - v.size(), v.size(), v) == 0;
        bool hit_w = child.s.size() >= w.size() &&
                     child.s.compare(child.s.size() - w.size(), w.size(), w) == 0;
        if (hit_v)
          r.v_mass += child.mass;
        else if (hit_w)
          r.w_mass += child.mass;
        else
          next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  for (auto& node : frontier) r.undecided += node.mass;
  return r;
}

}  // namespace oracle
