#pragma once

#include <optional>
#include <string>
#include <vector>

#include "penney/word.hpp"

namespace penney {

// Witness for the ab/ba split property: v = a.b, w = b.a with equal
// one-counts and the bad-prefix conditions below checked up to bound_m.
struct EWitness {
  Word a, b;
  std::vector<Word> s_set;
  int bound_m = 0;
};

// Suffix-swap invariance of race transcripts, decided by the bad-prefix
// criterion: every f in F(v,w) has both fv and fw outside Omega_{v,w}.
// Requires |v| = |w|, v != w, neither containing the other.
bool has_property_r(Word v, Word w);

// Searches split points in increasing |a| order; returns the first
// witness, or nullopt. strict_printed_form additionally checks the
// variant set combination D(v,a^m) u D(w,b^m).
std::optional<EWitness> property_e_witness(Word v, Word w,
                                           bool strict_printed_form = false);

// The measure-preserving map x.a^j.v -> x.b^j.w with j maximal.
// Requires z in Omega_{v,w}(v).
Word phi_map(Word z, const EWitness& witness, Word v, Word w);

struct PhiReport {
  bool pass = false;
  long long checked = 0;
  long long omega_v_count = 0;
  long long omega_w_count = 0;
  std::string counterexample;  // empty when pass
};

// Exhaustively exercises phi over all members of Omega(v) of length
// <= max_len: image class, profile preservation, injectivity, and the
// reversed-roles composition being the identity.
PhiReport verify_phi_bijection(Word v, Word w, const EWitness& witness,
                               int max_len);

}  // namespace penney
