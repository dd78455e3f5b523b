#include "doctest.h"

#include <stdexcept>

#include "fnega/cumulants.hpp"
#include "fnega/expansion.hpp"

using namespace fnega;

namespace {

// The printed closed forms for the order-2 and order-4 negativity
// coefficients, as rational functions of the even replica index.
RationalFunction closed_form(long c4, long c2, long c0, long den_scale, unsigned den_pow) {
  return RationalFunction(
      Polynomial({Rational(c0), Rational(0), Rational(c2), Rational(0), Rational(c4)}),
      Polynomial::monomial(Rational(den_scale), den_pow));
}

}  // namespace

TEST_CASE("Bernoulli numbers and polynomials") {
  CHECK(bernoulli_number(0) == Rational(1));
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(3) == Rational(0));
  CHECK(bernoulli_number(4) == Rational(-1, 30));
  CHECK(bernoulli_number(8) == Rational(-1, 30));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));

  const Polynomial b3 = bernoulli_polynomial(3);  // x^3 - 3/2 x^2 + 1/2 x
  CHECK(b3.eval(Rational(3, 2)) == Rational(3, 4));
  CHECK(b3.eval(Rational(0)) == Rational(0));
  CHECK(bernoulli_polynomial(2).eval(Rational(0)) == Rational(1, 6));
}

TEST_CASE("faulhaber sums over the symmetric replica range") {
  CHECK(faulhaber_sum(2, 2) == Rational(1, 2));     // (1/2)^2 + (1/2)^2
  CHECK(faulhaber_sum(3, 3) == Rational(0));        // odd power, symmetric range
  CHECK(faulhaber_sum(4, 2) == Rational(5));        // 2 (1/4 + 9/4)
  CHECK(faulhaber_sum(1, 4) == Rational(0));        // single p = 0
  CHECK(faulhaber_sum(5, 0) == Rational(5));        // counts terms
  for (unsigned M : {1u, 3u, 5u, 7u})
    for (unsigned n = 1; n <= 9; ++n) CHECK(faulhaber_sum(n, M) == Rational(0));
}

TEST_CASE("Hurwitz zeta at negative integers") {
  CHECK(hurwitz_zeta_neg_int(2, Rational(1)) == Rational(0));
  CHECK(hurwitz_zeta_neg_int(2, Rational(3, 2)) == Rational(-1, 4));
  CHECK(hurwitz_zeta_neg_int(2, Rational(1, 2)) == Rational(0));
  CHECK(hurwitz_zeta_neg_int(4, Rational(1)) == Rational(0));
  CHECK(hurwitz_zeta_neg_int(4, Rational(1, 2)) == Rational(0));
  // zeta(-1, 1) = -1/12
  CHECK(hurwitz_zeta_neg_int(1, Rational(1)) == Rational(-1, 12));
}

TEST_CASE("harmonic number relation to Hurwitz zeta") {
  // H_n^{(s)}(z) = zeta(s, z+1) - zeta(s, z+n+1) at s = -M
  for (unsigned n : {1u, 2u, 5u})
    for (unsigned M : {1u, 2u, 3u, 4u})
      for (long znum : {0L, 1L, -1L}) {
        const Rational z(znum, 2);
        CHECK(generalized_harmonic_neg(n, M, z) ==
              hurwitz_zeta_neg_int(M, z + Rational(1)) -
                  hurwitz_zeta_neg_int(M, z + Rational(n) + Rational(1)));
      }
  // paper's even-n decomposition: sum_p p^M = 2 H_{n/2}^{(-M)}(-1/2), even M
  for (unsigned n : {2u, 4u, 6u})
    for (unsigned M : {2u, 4u, 6u})
      CHECK(faulhaber_sum(n, M) ==
            Rational(2) * generalized_harmonic_neg(n / 2, M, Rational(-1, 2)));
}

TEST_CASE("exact even zeta values") {
  CHECK(riemann_zeta_even_over_pi_pow(2) == Rational(1, 6));    // zeta(2) = pi^2/6
  CHECK(riemann_zeta_even_over_pi_pow(4) == Rational(1, 90));   // zeta(4) = pi^4/90
  CHECK(riemann_zeta_even_over_pi_pow(6) == Rational(1, 945));  // zeta(6) = pi^6/945
  CHECK_THROWS_AS(riemann_zeta_even_over_pi_pow(3), std::invalid_argument);
}

TEST_CASE("half-integer power sums close over Bernoulli polynomials") {
  for (unsigned m = 0; m <= 8; ++m) {
    const Polynomial p = half_integer_power_sum(m);
    for (unsigned n : {2u, 4u, 6u, 8u}) {
      Rational direct(0);
      for (unsigned k = 0; k < n / 2; ++k) direct += Rational(2 * k + 1, 2).pow(m);
      CHECK(p.eval(Rational(n)) == direct);
    }
    CHECK(p.eval(Rational(0)) == Rational(0));  // shared root makes n_e -> 1 literal
  }
}

TEST_CASE("entropy coefficients: zeta route, direct route, replica limit") {
  // n = 2, M = 2: zeta(-2, 3/2) = -1/4 gives pi^2/4
  CHECK(entropy_coefficient(2, 2) == Rational(1, 4));
  // von Neumann limit: 2 zeta(M)
  CHECK(entropy_coefficient(1, 2) == Rational(1, 3));   // pi^2/3
  CHECK(entropy_coefficient(1, 4) == Rational(1, 45));  // pi^4/45 = 2 zeta(4)
  for (unsigned M : {2u, 4u, 6u})
    CHECK(entropy_coefficient(1, M) == Rational(2) * riemann_zeta_even_over_pi_pow(M));
  // the two independent derivations agree exactly
  for (unsigned n = 2; n <= 8; ++n)
    for (unsigned M : {2u, 4u, 6u})
      CHECK(entropy_coefficient(n, M) == entropy_coefficient_direct(n, M));
  // odd orders vanish
  CHECK(entropy_coefficient(3, 3) == Rational(0));
  CHECK(entropy_coefficient_fn(5).is_zero());
}

TEST_CASE("negativity coefficients match the printed closed forms") {
  const ExpansionCoefficients m2 = negativity_coefficients(2);
  REQUIRE(m2.terms.size() == 3);
  const RationalFunction c20 = closed_form(0, -1, 1, 6, 1);  // -(n^2-1)/(6n)
  const RationalFunction c11 = closed_form(0, -1, -2, 6, 1); // -(n^2+2)/(6n)
  CHECK(m2.terms.at({2, 0}) == c20);
  CHECK(m2.terms.at({0, 2}) == c20);
  CHECK(m2.terms.at({1, 1}) == c11);

  const ExpansionCoefficients m4 = negativity_coefficients(4);
  REQUIRE(m4.terms.size() == 5);
  CHECK(m4.terms.at({4, 0}) == closed_form(3, -10, 7, 360, 3));
  CHECK(m4.terms.at({0, 4}) == closed_form(3, -10, 7, 360, 3));
  CHECK(m4.terms.at({3, 1}) == closed_form(3, 10, -28, 360, 3));
  CHECK(m4.terms.at({1, 3}) == closed_form(3, 10, -28, 360, 3));
  CHECK(m4.terms.at({2, 2}) == closed_form(1, 0, 14, 120, 3));

  // order-4 values at n_e = 2
  CHECK(m4.eval(4, 0, 2) == Rational(1, 192));
  CHECK(m4.eval(3, 1, 2) == Rational(1, 48));
  CHECK(m4.eval(2, 2, 2) == Rational(1, 32));
}

TEST_CASE("negativity coefficients replica limit") {
  const auto lim2 = negativity_coefficients_replica_limit(2);
  CHECK(lim2.at({2, 0}) == Rational(0));
  CHECK(lim2.at({0, 2}) == Rational(0));
  CHECK(lim2.at({1, 1}) == Rational(-1, 2));
  const auto lim4 = negativity_coefficients_replica_limit(4);
  CHECK(lim4.at({4, 0}) == Rational(0));
  CHECK(lim4.at({0, 4}) == Rational(0));
  CHECK(lim4.at({3, 1}) == Rational(-1, 24));
  CHECK(lim4.at({1, 3}) == Rational(-1, 24));
  CHECK(lim4.at({2, 2}) == Rational(1, 8));
  // the limit is literal substitution of the symbolic form
  const ExpansionCoefficients m4 = negativity_coefficients(4);
  for (const auto& [key, fn] : m4.terms) CHECK(fn.eval(Rational(1)) == lim4.at(key));
}

TEST_CASE("symbolic coefficients equal the brute-force p-sum") {
  for (unsigned M : {2u, 4u, 6u}) {
    const ExpansionCoefficients sym = negativity_coefficients(M);
    for (unsigned n_e : {2u, 4u, 6u, 8u})
      for (unsigned a = 0; a <= M; ++a)
        CHECK(sym.eval(a, M - a, n_e) == negativity_coefficient_direct(M, a, M - a, n_e));
  }
}

TEST_CASE("odd orders cancel symbolically") {
  for (unsigned M : {1u, 3u, 5u, 7u}) {
    CHECK(negativity_coefficients(M).terms.empty());
    for (unsigned a = 0; a <= M; ++a)
      CHECK(negativity_coefficient_direct(M, a, M - a, 4) == Rational(0));
  }
}

TEST_CASE("A/B exchange symmetry of the coefficients") {
  for (unsigned M : {2u, 4u, 6u}) {
    const ExpansionCoefficients sym = negativity_coefficients(M);
    for (const auto& [key, fn] : sym.terms)
      CHECK(fn == sym.terms.at({key.second, key.first}));
  }
}

TEST_CASE("evaluate_expansion contracts coefficients against cumulants") {
  CumulantSet cums;
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; a + b <= 4; ++b) cums.set(a, b, 0.0);

  SUBCASE("all cumulants zero gives all orders zero") {
    const ExpansionValue v = negativity_expansion(cums, 2, {2, 4});
    CHECK(v.order_terms.at(2) == 0.0);
    CHECK(v.order_terms.at(4) == 0.0);
    CHECK(v.cumulative.at(4) == 0.0);
  }

  SUBCASE("only <QAQB> nonzero at n_e = 2 gives -pi^2 x / 2") {
    const double x = 0.37;
    cums.set(1, 1, x);
    const ExpansionValue v = negativity_expansion(cums, 2, {2});
    // -(n^2+2)/(6n) at n=2 is -1/2
    CHECK(v.order_terms.at(2) == doctest::Approx(-0.5 * M_PI * M_PI * x).epsilon(1e-15));
  }

  SUBCASE("missing cumulant is reported by pair") {
    CumulantSet partial;
    partial.set(2, 0, 1.0);
    partial.set(0, 2, 1.0);
    CHECK_THROWS_WITH_AS(negativity_expansion(partial, 2, {2}),
                         doctest::Contains("(1,1)"), std::invalid_argument);
  }
}
