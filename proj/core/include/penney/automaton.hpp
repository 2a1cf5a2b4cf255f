#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "penney/intpoly.hpp"
#include "penney/word.hpp"

namespace penney {

// The labeled prefix-pair graph of the word race. Vertices track the
// longest suffix of the bit stream that is a prefix of v (resp. w);
// reaching a full copy of either word absorbs. Absorbing vertices are
// labeled with the raw appended prefixes (so the rival component shows
// the last letters read, matching the race transcript).
struct PrefixPairAutomaton {
  enum class Kind { Transient, AbsorbV, AbsorbW };

  struct Vertex {
    Word v_part, w_part;
    Kind kind = Kind::Transient;
    int succ[2] = {-1, -1};  // edge targets for labels 0 and 1
  };

  Word v, w;
  bool single_word = false;  // rival tracking disabled (w ignored)
  std::vector<Vertex> vertices;  // BFS discovery order; index 0 = start

  const Vertex& start() const { return vertices.front(); }
};

// Algorithm-style construction, BFS from the empty pair, label 0
// explored before label 1. Requires a valid race pair.
PrefixPairAutomaton build(Word v, Word w);

// Single-word variant used as the expected-hitting-time oracle: the
// same construction with the rival component disabled.
PrefixPairAutomaton build_single(Word v);

// Probability that the q-biased walk from the start is absorbed in a
// v-type vertex. Exact, via fraction-free Gaussian elimination.
Rat absorption_win(const PrefixPairAutomaton& g, const Rat& q);

// Expected number of steps to absorption from the start, exact.
Rat expected_absorption_time(const PrefixPairAutomaton& g, const Rat& q);

// All members of Omega_{v,w}(v) u Omega_{v,w}(w) of length <= max_len,
// with their class, ordered by length then dictionary order.
std::vector<std::pair<Word, OmegaClass>> enumerate_omega(Word v, Word w,
                                                         int max_len);

// Member counts by (zeros, ones) profile, per class, by dynamic
// programming over the automaton (no word materialization, so the
// length bound may exceed the 63-digit word limit, up to 64).
struct ProfileCounts {
  std::map<std::pair<int, int>, Int> for_v;  // keyed by (zeros, ones)
  std::map<std::pair<int, int>, Int> for_w;
};
ProfileCounts profile_counts(Word v, Word w, int max_len);

// Deterministic DOT rendering: vertices in BFS order, edge label 0
// before 1, absorbing vertices double-circled.
std::string to_dot(const PrefixPairAutomaton& g);

}  // namespace penney
