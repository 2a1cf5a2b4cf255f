#include "penney/word.hpp"

#include <bit>

namespace penney {

Word Word::parse(std::string_view text) {
  if (text.empty()) throw parse_error("empty word", 0);
  if (text.size() > kMaxLen)
    throw parse_error("word longer than 63 digits", kMaxLen + 1);
  Word u;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '0' && c != '1')
      throw parse_error(std::string("invalid digit '") + c + "' at position " +
                            std::to_string(i + 1),
                        static_cast<int>(i + 1));
    u.bits_ |= static_cast<std::uint64_t>(c - '0') << i;
  }
  u.len_ = static_cast<std::uint8_t>(text.size());
  return u;
}

Word Word::from_bits(std::uint64_t bits, int len) {
  if (len < 0 || len > kMaxLen) throw domain_error("word length out of range");
  Word u;
  u.bits_ = len == 0 ? 0 : (bits & ((std::uint64_t{1} << len) - 1));
  u.len_ = static_cast<std::uint8_t>(len);
  return u;
}

Word Word::repeated(int digit, int m) {
  if (m < 0 || m > kMaxLen) throw domain_error("repetition count out of range");
  if (digit == 0) return from_bits(0, m);
  return from_bits(m == 0 ? 0 : (std::uint64_t{1} << m) - 1, m);
}

int Word::ones_count() const { return std::popcount(bits_); }

Word Word::bitflip() const {
  return from_bits(~bits_, len_);
}

Word Word::reversed() const {
  Word u;
  for (int i = 0; i < len_; ++i)
    u.bits_ |= static_cast<std::uint64_t>(at(len_ - 1 - i)) << i;
  u.len_ = len_;
  return u;
}

Word Word::prefix(int r) const {
  if (r < 0 || r > len_) throw domain_error("prefix length out of range");
  return from_bits(bits_, r);
}

Word Word::suffix(int r) const {
  if (r < 0 || r > len_) throw domain_error("suffix length out of range");
  return from_bits(bits_ >> (len_ - r), r);
}

Word Word::append(int digit) const {
  if (len_ >= kMaxLen) throw domain_error("word longer than 63 digits");
  Word u = *this;
  u.bits_ |= static_cast<std::uint64_t>(digit & 1) << len_;
  u.len_ = static_cast<std::uint8_t>(len_ + 1);
  return u;
}

Word Word::pow(int m) const {
  if (m < 0 || m * length() > kMaxLen)
    throw domain_error("power exceeds maximum word length");
  Word u;
  for (int i = 0; i < m; ++i) u = concat(u, *this);
  return u;
}

bool Word::starts_with(Word p) const {
  if (p.len_ > len_) return false;
  return prefix(p.len_) == p;
}

bool Word::ends_with(Word s) const {
  if (s.len_ > len_) return false;
  return suffix(s.len_) == s;
}

std::string Word::str() const {
  std::string s(len_, '0');
  for (int i = 0; i < len_; ++i) s[i] = static_cast<char>('0' + at(i));
  return s;
}

Word concat(Word x, Word y) {
  if (x.length() + y.length() > Word::kMaxLen)
    throw domain_error("concatenation exceeds maximum word length");
  return Word::from_bits(x.bits() | (y.bits() << x.length()),
                         x.length() + y.length());
}

bool lex_less(Word a, Word b) {
  int m = std::min(a.length(), b.length());
  for (int i = 0; i < m; ++i) {
    if (a.at(i) != b.at(i)) return a.at(i) < b.at(i);
  }
  return a.length() < b.length();
}

int occurrences(Word pattern, Word text) {
  int m = pattern.length(), n = text.length();
  if (m < 1) throw domain_error("empty pattern");
  if (m > n) return 0;
  // KMP failure-function scan; the naive window scan is the test oracle.
  int fail[Word::kMaxLen + 1];
  fail[0] = -1;
  int k = -1;
  for (int i = 0; i < m; ++i) {
    while (k >= 0 && pattern.at(k) != pattern.at(i)) k = fail[k];
    fail[i + 1] = ++k;
  }
  int count = 0, q = 0;
  for (int i = 0; i < n; ++i) {
    while (q >= 0 && (q == m || pattern.at(q) != text.at(i))) q = fail[q];
    ++q;
    if (q == m) ++count;
  }
  return count;
}

OmegaClass omega_class(Word u, Word v, Word w) {
  if (v == w) throw domain_error("omega_class requires v != w");
  if (v.empty() || w.empty()) throw domain_error("omega_class requires non-empty words");
  if (u.ends_with(v) && occurrences(v, u) == 1 && occurrences(w, u) == 0)
    return OmegaClass::InOmegaV;
  if (u.ends_with(w) && occurrences(w, u) == 1 && occurrences(v, u) == 0)
    return OmegaClass::InOmegaW;
  return OmegaClass::NotInOmega;
}

}  // namespace penney
