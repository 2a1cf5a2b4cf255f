#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "penney/word.hpp"

using namespace penney;

TEST_CASE("parse round-trips and validates") {
  CHECK(Word::parse("1101110").str() == "1101110");
  CHECK(Word::parse("0").str() == "0");
  CHECK(Word::parse("1").length() == 1);
  CHECK(Word::parse(std::string(63, '1')).length() == 63);

  CHECK_THROWS_AS(Word::parse(""), parse_error);
  CHECK_THROWS_AS(Word::parse(std::string(64, '0')), parse_error);
  CHECK_THROWS_AS(Word::parse("0120"), parse_error);
  CHECK_THROWS_AS(Word::parse("01 0"), parse_error);

  try {
    Word::parse("0120");
  } catch (const parse_error& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("digit access uses leftmost-first indexing") {
  Word u = Word::parse("1101");
  CHECK(u.at(0) == 1);
  CHECK(u.at(1) == 1);
  CHECK(u.at(2) == 0);
  CHECK(u.at(3) == 1);
  CHECK(u.ones_count() == 3);
  CHECK(u.zeros_count() == 1);
}

TEST_CASE("structural operations") {
  Word u = Word::parse("1101");
  CHECK(u.bitflip().str() == "0010");
  CHECK(u.reversed().str() == "1011");
  CHECK(u.prefix(2).str() == "11");
  CHECK(u.suffix(2).str() == "01");
  CHECK(u.append(0).str() == "11010");
  CHECK(u.pow(3).str() == "110111011101");
  CHECK(concat(Word::parse("10"), Word::parse("01")).str() == "1001");
  CHECK(Word::repeated(1, 5).str() == "11111");
  CHECK(Word::repeated(0, 2).str() == "00");
  CHECK(u.starts_with(Word::parse("110")));
  CHECK_FALSE(u.starts_with(Word::parse("111")));
  CHECK(u.ends_with(Word::parse("01")));
  CHECK_FALSE(u.ends_with(Word::parse("11")));

  CHECK_THROWS_AS(concat(Word::repeated(1, 40), Word::repeated(0, 40)),
                  domain_error);
  CHECK_THROWS_AS(Word::parse("10").pow(32), domain_error);
}

TEST_CASE("from_bits matches parse") {
  for (int len = 1; len <= 10; ++len) {
    for (const std::string& s : oracle::all_words(len)) {
      std::uint64_t bits = 0;
      for (int i = 0; i < len; ++i)
        if (s[i] == '1') bits |= std::uint64_t{1} << i;
      CHECK(Word::from_bits(bits, len) == Word::parse(s));
    }
  }
}

TEST_CASE("lexicographic order agrees with string order") {
  std::vector<Word> words;
  for (int len = 1; len <= 5; ++len)
    for (const std::string& s : oracle::all_words(len)) words.push_back(Word::parse(s));
  for (Word a : words)
    for (Word b : words)
      CHECK(lex_less(a, b) == (a.str() < b.str()));
}

TEST_CASE("occurrences agrees with naive scan") {
  for (int pl = 1; pl <= 4; ++pl) {
    for (const std::string& p : oracle::all_words(pl)) {
      for (int tl = 1; tl <= 8; ++tl) {
        for (const std::string& t : oracle::all_words(tl)) {
          CHECK(occurrences(Word::parse(p), Word::parse(t)) ==
                oracle::naive_occurrences(p, t));
        }
      }
    }
  }
}

TEST_CASE("occurrences counts overlapping copies") {
  CHECK(occurrences(Word::parse("11"), Word::parse("1111")) == 3);
  CHECK(occurrences(Word::parse("101"), Word::parse("10101")) == 2);
  CHECK(occurrences(Word::parse("10"), Word::parse("0101")) == 1);
}

TEST_CASE("omega_class agrees with naive membership") {
  Word v = Word::parse("110"), w = Word::parse("011");
  for (int len = 1; len <= 9; ++len) {
    for (const std::string& s : oracle::all_words(len)) {
      OmegaClass cls = omega_class(Word::parse(s), v, w);
      bool in_v = oracle::naive_in_omega_v(s, "110", "011");
      bool in_w = oracle::naive_in_omega_v(s, "011", "110");
      if (in_v)
        CHECK(cls == OmegaClass::InOmegaV);
      else if (in_w)
        CHECK(cls == OmegaClass::InOmegaW);
      else
        CHECK(cls == OmegaClass::NotInOmega);
    }
  }
}

TEST_CASE("omega_class handles nested and equal-length rivals") {
  // v ends with a copy of w
  Word v = Word::parse("0110"), w = Word::parse("110");
  CHECK(omega_class(v, v, w) == OmegaClass::NotInOmega);
  CHECK(omega_class(w, v, w) == OmegaClass::InOmegaW);
  CHECK_THROWS_AS(omega_class(v, v, v), domain_error);
}
