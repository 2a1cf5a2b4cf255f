#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace penney {

// Raised when input text cannot be parsed as a binary word.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int position)
      : std::runtime_error(what), position_(position) {}
  // 1-based position of the offending character (0 for "empty input").
  int position() const { return position_; }

 private:
  int position_;
};

// Raised when an operation's precondition on its word arguments fails.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite binary word of length <= 63, packed into one machine word.
// Digit i (0-based, leftmost first) lives in bit i. The empty word is
// permitted only as an automaton vertex label; all combinatorial
// operations require length >= 1.
class Word {
 public:
  static constexpr int kMaxLen = 63;

  constexpr Word() = default;

  static Word parse(std::string_view text);
  static Word from_bits(std::uint64_t bits, int len);
  // m copies of digit a.
  static Word repeated(int digit, int m);

  int length() const { return len_; }
  bool empty() const { return len_ == 0; }
  int at(int i) const { return static_cast<int>((bits_ >> i) & 1u); }
  std::uint64_t bits() const { return bits_; }

  int ones_count() const;
  int zeros_count() const { return len_ - ones_count(); }

  Word bitflip() const;
  Word reversed() const;
  Word prefix(int r) const;
  Word suffix(int r) const;
  Word append(int digit) const;
  // m-fold self-concatenation.
  Word pow(int m) const;

  bool starts_with(Word p) const;
  bool ends_with(Word s) const;

  std::string str() const;

  friend bool operator==(Word a, Word b) = default;
  // Total order by (length, packed bits): a cheap container key, not
  // lexicographic on digits. See lex_less for the latter.
  friend auto operator<=>(Word a, Word b) {
    if (auto c = a.len_ <=> b.len_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t len_ = 0;
};

Word concat(Word x, Word y);

// Dictionary order on digit strings, 0 < 1, shorter prefix first.
bool lex_less(Word a, Word b);

// Number of (possibly overlapping) occurrences of pattern in text.
int occurrences(Word pattern, Word text);

enum class OmegaClass { InOmegaV, InOmegaW, NotInOmega };

// InOmegaV iff u ends with v, v occurs exactly once in u and w never;
// symmetrically for w. Requires v != w, both non-empty.
OmegaClass omega_class(Word u, Word v, Word w);

}  // namespace penney
