#include "penney/properties.hpp"

#include <algorithm>
#include <set>

#include "penney/automaton.hpp"
#include "penney/correlation.hpp"

namespace penney {

bool has_property_r(Word v, Word w) {
  if (v.length() != w.length())
    throw domain_error("property R requires equal-length words");
  if (v == w) throw domain_error("identical words");
  for (Word f : f_set(v, w)) {
    if (omega_class(concat(f, v), v, w) != OmegaClass::NotInOmega) return false;
    if (omega_class(concat(f, w), v, w) != OmegaClass::NotInOmega) return false;
  }
  return true;
}

namespace {

std::set<Word> word_union(const std::vector<Word>& x, const std::vector<Word>& y) {
  std::set<Word> s(x.begin(), x.end());
  s.insert(y.begin(), y.end());
  return s;
}

bool subset_of(const std::set<Word>& sub, const std::set<Word>& super) {
  return std::all_of(sub.begin(), sub.end(),
                     [&](const Word& u) { return super.count(u) > 0; });
}

std::optional<EWitness> try_split(Word v, Word w, int alen,
                                  bool strict_printed_form) {
  int n = v.length();
  Word a = v.prefix(alen), b = v.suffix(n - alen);
  if (a == b) return std::nullopt;
  if (concat(b, a) != w) return std::nullopt;                    // II
  // I: the swap map multiplies the measure by P(b)/P(a) per replaced
  // block, so a and b must have the same digit profile, not just the
  // same weight: equal ones AND equal lengths.
  if (a.length() != b.length()) return std::nullopt;
  if (a.ones_count() != b.ones_count()) return std::nullopt;

  // III: blocked-suffix sets; appending v is blocked by b plus the
  // shared set S, appending w by a plus the same S.
  auto dv = word_union(d_set(v, v), d_set(w, v));
  auto dw = word_union(d_set(w, w), d_set(v, w));
  if (!dv.count(b) || !dw.count(a)) return std::nullopt;
  std::set<Word> s = dv;
  s.erase(b);
  std::set<Word> s2 = dw;
  s2.erase(a);
  if (s != s2) return std::nullopt;

  std::set<Word> allowed = s;
  allowed.insert(a);
  allowed.insert(b);

  // Conditions IV-VI stabilize once m*|a| exceeds |v| + |a|.
  int bound = (n + alen + alen - 1) / alen + 1;
  int m_checked = 0;
  for (int m = 1; m <= bound; ++m) {
    long long max_needed =
        static_cast<long long>(m) * std::max(alen, n - alen) + n;
    if (max_needed > Word::kMaxLen) break;
    Word am = a.pow(m), bm = b.pow(m);
    if (m >= 2) {
      if (!subset_of(word_union(d_set(v, am), d_set(w, am)), allowed))  // IV
        return std::nullopt;
      if (!subset_of(word_union(d_set(v, bm), d_set(w, bm)), allowed))  // IV
        return std::nullopt;
      if (strict_printed_form &&
          !subset_of(word_union(d_set(v, am), d_set(w, bm)), allowed))
        return std::nullopt;
      if (occurrences(v, am) > 0 || occurrences(w, am) > 0) return std::nullopt;  // V
      if (occurrences(v, bm) > 0 || occurrences(w, bm) > 0) return std::nullopt;  // V
    }
    if (omega_class(concat(am, b), v, w) != OmegaClass::InOmegaV)  // VI
      return std::nullopt;
    if (omega_class(concat(bm, a), v, w) != OmegaClass::InOmegaW)  // VI
      return std::nullopt;
    m_checked = m;
  }
  if (m_checked < 2) return std::nullopt;
  return EWitness{a, b, {s.begin(), s.end()}, m_checked};
}

}  // namespace

std::optional<EWitness> property_e_witness(Word v, Word w,
                                           bool strict_printed_form) {
  if (v.length() != w.length() || v.length() < 2)
    throw domain_error("property E requires equal lengths >= 2");
  for (int alen = 1; alen < v.length(); ++alen) {
    if (auto wit = try_split(v, w, alen, strict_printed_form)) return wit;
  }
  return std::nullopt;
}

Word phi_map(Word z, const EWitness& witness, Word v, Word w) {
  if (omega_class(z, v, w) != OmegaClass::InOmegaV)
    throw domain_error("phi_map input not in Omega(v)");
  Word y = z.prefix(z.length() - v.length());
  int j = 0;
  while (y.ends_with(witness.a)) {
    y = y.prefix(y.length() - witness.a.length());
    ++j;
  }
  return concat(concat(y, witness.b.pow(j)), w);
}

PhiReport verify_phi_bijection(Word v, Word w, const EWitness& witness,
                               int max_len) {
  PhiReport rep;
  EWitness reversed{witness.b, witness.a, witness.s_set, witness.bound_m};
  std::set<Word> images;
  auto members = enumerate_omega(v, w, max_len);
  for (const auto& [z, cls] : members) {
    if (cls == OmegaClass::InOmegaW) {
      ++rep.omega_w_count;
      continue;
    }
    ++rep.omega_v_count;
    ++rep.checked;
    try {
      Word img = phi_map(z, witness, v, w);
      if (omega_class(img, v, w) != OmegaClass::InOmegaW)
        throw domain_error("image not in Omega(w)");
      if (img.length() != z.length() || img.ones_count() != z.ones_count())
        throw domain_error("profile not preserved");
      if (!images.insert(img).second) throw domain_error("image collision");
      if (phi_map(img, reversed, w, v) != z)
        throw domain_error("reverse composition not identity");
    } catch (const domain_error& e) {
      rep.counterexample = z.str() + ": " + e.what();
      return rep;
    }
  }
  if (rep.omega_v_count != rep.omega_w_count) {
    rep.counterexample = "class sizes differ: " +
                         std::to_string(rep.omega_v_count) + " vs " +
                         std::to_string(rep.omega_w_count);
    return rep;
  }
  rep.pass = true;
  return rep;
}

}  // namespace penney
