#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "penney/intpoly.hpp"
#include "penney/ratfunc.hpp"

using namespace penney;

TEST_CASE("polynomial arithmetic basics") {
  IntPoly f{1, 2, 3};  // 1 + 2p + 3p^2
  IntPoly g{0, 1};     // p

  CHECK((f + g) == IntPoly{1, 3, 3});
  CHECK((f - f).is_zero());
  CHECK((f * g) == IntPoly{0, 1, 2, 3});
  CHECK(f.degree() == 2);
  CHECK(IntPoly{}.degree() == -1);
  CHECK(f.derivative() == IntPoly{2, 6});
  CHECK(f.eval(Rat(1, 2)) == Rat(11, 4));
  CHECK(f.scaled(-2) == IntPoly{-2, -4, -6});
  CHECK(IntPoly::monomial(5, 3) == IntPoly{0, 0, 0, 5});
}

TEST_CASE("trailing zeros are trimmed") {
  CHECK((IntPoly{1, 1} - IntPoly{0, 1}) == IntPoly{1});
  CHECK((IntPoly{0, 1} * IntPoly{}).is_zero());
}

TEST_CASE("content and primitive part") {
  IntPoly f{6, -9, 12};
  CHECK(f.content() == 3);
  CHECK(f.primitive_part() == IntPoly{2, -3, 4});
  IntPoly neg{-4, -8};
  CHECK(neg.content() == 4);
  CHECK(neg.primitive_part() == IntPoly{-1, -2});
}

TEST_CASE("reflection substitutes 1-p and is an involution") {
  IntPoly f{0, 1};  // p -> 1-p
  CHECK(f.reflected() == IntPoly{1, -1});
  IntPoly g{3, -2, 5, 7};
  CHECK(g.reflected().reflected() == g);
  for (int i = 0; i <= 6; ++i) {
    Rat x(i, 7);
    CHECK(g.reflected().eval(x) == g.eval(1 - x));
  }
}

TEST_CASE("exact division and pseudo-remainder") {
  IntPoly a{-1, 0, 1};  // (p-1)(p+1)
  IntPoly b{1, 1};
  CHECK(IntPoly::div_exact(a, b) == IntPoly{-1, 1});
  CHECK_THROWS(IntPoly::div_exact(IntPoly{1, 0, 1}, b));

  IntPoly r = IntPoly::pseudo_rem(IntPoly{1, 0, 1}, b);
  CHECK(r.degree() == 0);  // remainder of p^2+1 by p+1 is constant 2
  CHECK(r.eval(0) == 2);
}

TEST_CASE("subresultant gcd finds common factors") {
  IntPoly common{-1, 3};  // 3p - 1
  IntPoly a = common * IntPoly{1, 0, 2};
  IntPoly b = common * IntPoly{5, 1};
  IntPoly g = IntPoly::gcd(a, b);
  CHECK(g == IntPoly{-1, 3});

  CHECK(IntPoly::gcd(IntPoly{1, 1}, IntPoly{1, 0, 1}).degree() == 0);
  // large coefficients: gcd of f*h and g*h recovers h up to sign/content
  IntPoly h{7, 0, -13, 1};
  CHECK(IntPoly::gcd(h * IntPoly{1000000007, 3}, h * IntPoly{-5, 999999937})
            .primitive_part() == h.primitive_part());
}

TEST_CASE("deflation at zero") {
  IntPoly f{0, 0, 3, 1};
  CHECK(f.order_at_zero() == 2);
  CHECK(f.deflate_at_zero() == IntPoly{3, 1});
  CHECK(IntPoly{5}.order_at_zero() == 0);
  CHECK(IntPoly{}.order_at_zero() == -1);
}

TEST_CASE("polynomial text form") {
  CHECK(IntPoly{1, 1, -1}.str() == "1 + 1p^1 - 1p^2");
  CHECK(IntPoly{}.str() == "0");
}

TEST_CASE("rational function canonical form") {
  // (p^2-1)/(p-1) reduces to p+1
  RatFunc f = RatFunc::from(IntPoly{-1, 0, 1}, IntPoly{-1, 1});
  CHECK(f == RatFunc::from(IntPoly{1, 1}, IntPoly{1}));

  // common content cancels, denominator leading coefficient positive
  RatFunc g = RatFunc::from(IntPoly{2, 4}, IntPoly{-2, -6});
  CHECK(g.den().leading() > 0);
  CHECK(g == RatFunc::from(IntPoly{-1, -2}, IntPoly{1, 3}));

  CHECK_THROWS(RatFunc::from(IntPoly{1}, IntPoly{}));
}

TEST_CASE("rational function arithmetic and evaluation") {
  RatFunc f = RatFunc::from(IntPoly{0, 1}, IntPoly{1, 1});   // p/(1+p)
  RatFunc g = RatFunc::from(IntPoly{1}, IntPoly{1, 1});      // 1/(1+p)
  CHECK(f + g == RatFunc::constant(Rat(1)));
  CHECK((f * g).evaluate(Rat(1, 2)) == Rat(2, 9));
  CHECK((f - f).is_zero());
  CHECK((f / g).evaluate(Rat(1, 3)) == Rat(1, 3));
  CHECK((-f).evaluate(Rat(1, 2)) == Rat(-1, 3));

  RatFunc pole = RatFunc::from(IntPoly{1}, IntPoly{-1, 2});  // 1/(2p-1)
  CHECK_THROWS_AS(pole.evaluate(Rat(1, 2)), pole_error);
  CHECK(pole.evaluate(Rat(1, 4)) == Rat(-2));
}

TEST_CASE("reflection of rational functions") {
  RatFunc f = RatFunc::from(IntPoly{0, 1}, IntPoly{1, 1});  // p/(1+p)
  CHECK(f.reflect().evaluate(Rat(1, 3)) == Rat(2, 5));      // (1-p)/(2-p)
  CHECK(f.reflect().reflect() == f);
}

TEST_CASE("limit at zero") {
  CHECK(RatFunc::from(IntPoly{0, 0, 5}, IntPoly{0, 0, 10, 3}).limit_at_zero() == Rat(1, 2));
  CHECK(RatFunc::from(IntPoly{0, 0, 1}, IntPoly{0, 1}).limit_at_zero() == Rat(0));
  CHECK(RatFunc::from(IntPoly{2, 1}, IntPoly{4, 1}).limit_at_zero() == Rat(1, 2));
  CHECK(RatFunc::from(IntPoly{0, 7}, IntPoly{0, 7, 3}).limit_at_zero() == Rat(1));
  CHECK_THROWS_AS(RatFunc::from(IntPoly{1}, IntPoly{0, 1}).limit_at_zero(),
                  pole_error);
}

TEST_CASE("sturm root counting on known polynomials") {
  // (2p-1)(3p-1)(5p-4) has roots 1/2, 1/3, 4/5
  IntPoly f = IntPoly{-1, 2} * IntPoly{-1, 3} * IntPoly{-4, 5};
  CHECK(sturm::count_roots(f, Rat(0), Rat(1)) == 3);
  CHECK(sturm::count_roots(f, Rat(0), Rat(2, 5)) == 1);
  CHECK(sturm::count_roots(f, Rat(2, 5), Rat(1)) == 2);

  // p^2 + 1 has no real roots
  CHECK(sturm::count_roots(IntPoly{1, 0, 1}, Rat(0), Rat(1)) == 0);

  auto ivs = sturm::isolate_roots(f, Rat(0), Rat(1));
  REQUIRE(ivs.size() == 3);
  Rat roots[] = {Rat(1, 3), Rat(1, 2), Rat(4, 5)};
  for (int i = 0; i < 3; ++i) {
    CHECK(ivs[i].first < roots[i]);
    CHECK(roots[i] < ivs[i].second);
    if (i) CHECK(ivs[i - 1].second <= ivs[i].first);
  }
}

TEST_CASE("derivative sign changes") {
  // monotone: p/(1+p)
  CHECK(RatFunc::from(IntPoly{0, 1}, IntPoly{1, 1}).derivative_sign_changes() == 0);
  // single interior extremum: p(1-p) at p = 1/2
  RatFunc hump = RatFunc::from(IntPoly{0, 1, -1}, IntPoly{1});
  CHECK(hump.derivative_sign_changes() == 1);
  auto ivs = hump.critical_intervals();
  REQUIRE(ivs.size() == 1);
  CHECK(ivs[0].first < Rat(1, 2));
  CHECK(Rat(1, 2) < ivs[0].second);
  // constant
  CHECK(RatFunc::constant(Rat(1, 2)).derivative_sign_changes() == 0);
  // two extrema: p(1-p)(2p-1) has critical points at (3 +- sqrt(3))/6
  CHECK(RatFunc::from(IntPoly{0, 1, -1} * IntPoly{-1, 2}, IntPoly{1})
            .derivative_sign_changes() == 2);
}

TEST_CASE("rational function text form factors the p power") {
  RatFunc f = RatFunc::from(IntPoly{0, 0, 0, 0, 1, 1, -1}, IntPoly{1, 0, 0, 1});
  CHECK(f.str() == "(1 + 1p^1 - 1p^2)*p^4 / (1 + 1p^3)");
}
