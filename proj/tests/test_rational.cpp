#include "doctest.h"

#include <stdexcept>

#include "fnega/rational.hpp"

using fnega::Polynomial;
using fnega::Rational;
using fnega::RationalFunction;

TEST_CASE("rational arithmetic stays canonical") {
  const Rational a(6, 4);
  CHECK(a.numerator() == "3");
  CHECK(a.denominator() == "2");
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK((Rational(1, 3) - Rational(1, 3)).is_zero());
  CHECK(Rational(-2, 6).str() == "-1/3");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(3, 2).pow(3) == Rational(27, 8));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK(Rational::from_string("-22/7") == Rational(-22, 7));
}

TEST_CASE("binomials and factorials") {
  CHECK(fnega::binomial(6, 3) == Rational(20));
  CHECK(fnega::binomial(4, 0) == Rational(1));
  CHECK(fnega::binomial(3, 5) == Rational(0));
  CHECK(fnega::factorial(6) == Rational(720));
}

TEST_CASE("polynomial evaluation and arithmetic") {
  // p(x) = x^2 - x + 1/6
  const Polynomial p({Rational(1, 6), Rational(-1), Rational(1)});
  CHECK(p.eval(Rational(1, 2)) == Rational(-1, 12));
  CHECK(p.degree() == 2);

  const Polynomial q = p * Polynomial::x();
  CHECK(q.degree() == 3);
  CHECK(q.eval(Rational(2)) == p.eval(Rational(2)) * Rational(2));

  const Polynomial sum = p + (-p);
  CHECK(sum.is_zero());
}

TEST_CASE("polynomial affine composition") {
  // p(x) = x^2; p((n+1)/2) = (n^2 + 2n + 1)/4
  const Polynomial p = Polynomial::monomial(Rational(1), 2);
  const Polynomial c = p.compose_affine(Rational(1, 2), Rational(1, 2));
  CHECK(c.coeff(0) == Rational(1, 4));
  CHECK(c.coeff(1) == Rational(1, 2));
  CHECK(c.coeff(2) == Rational(1, 4));
}

TEST_CASE("polynomial synthetic division") {
  // x^2 - 1 = (x - 1)(x + 1)
  const Polynomial p({Rational(-1), Rational(0), Rational(1)});
  const Polynomial q = p.divide_by_linear(Rational(1));
  CHECK(q == Polynomial({Rational(1), Rational(1)}));
  CHECK_THROWS_AS(p.divide_by_linear(Rational(2)), std::invalid_argument);
}

TEST_CASE("rational function equality is representation independent") {
  const Polynomial num({Rational(0), Rational(-1), Rational(0), Rational(1)});  // n^3 - n
  const Polynomial den = Polynomial::monomial(Rational(6), 1);                  // 6n
  const RationalFunction f(num, den);
  // same function, scaled representation
  const RationalFunction g(num * Rational(7, 3), den * Rational(7, 3));
  CHECK(f == g);
  CHECK(f.eval(Rational(2)) == Rational(1, 2));
}

TEST_CASE("rational function removable limit") {
  // (n^2 - 1) / (n - 1) -> 2 at n = 1
  const RationalFunction f(Polynomial({Rational(-1), Rational(0), Rational(1)}),
                           Polynomial({Rational(-1), Rational(1)}));
  CHECK_THROWS_AS(f.eval(Rational(1)), std::invalid_argument);
  CHECK(f.limit(Rational(1)) == Rational(2));
  // genuine pole still throws
  const RationalFunction g(Polynomial(Rational(1)), Polynomial({Rational(-1), Rational(1)}));
  CHECK_THROWS_AS(g.limit(Rational(1)), std::invalid_argument);
}

TEST_CASE("rational function rendering") {
  const RationalFunction f(Polynomial({Rational(1, 6), Rational(0), Rational(-1, 6)}),
                           Polynomial::monomial(Rational(1), 1));
  CHECK(f.str("n") == "(-n^2 + 1)/(6*n)");
}
