#pragma once

#include <map>
#include <set>
#include <utility>

#include "fnega/rational.hpp"

namespace fnega {

class CumulantSet;

// Exact special-function layer and the charge-correlator expansion
// coefficients for Renyi/logarithmic negativity and Renyi/von Neumann
// entropy. Everything here is exact rational arithmetic; coefficients are
// carried as rationals (or rational functions of the replica index) times
// pi^M, and floating point only enters in evaluate_expansion.

// Bernoulli number B_k (B_1 = -1/2 convention), cached.
Rational bernoulli_number(unsigned k);

// Bernoulli polynomial B_k(x).
Polynomial bernoulli_polynomial(unsigned k);

// Sum of p^M over the symmetric replica momenta
// p = -(n-1)/2, -(n-3)/2, ..., (n-1)/2 (half-integers for even n, integers
// for odd n), by direct exact enumeration.
Rational faulhaber_sum(unsigned n, unsigned M);

// zeta(-M, a) = -B_{M+1}(a) / (M+1) for integer M >= 1.
Rational hurwitz_zeta_neg_int(unsigned M, const Rational& a);

// zeta(M) / pi^M for even M >= 2, i.e. 2^M |B_M| / (2 M!).
Rational riemann_zeta_even_over_pi_pow(unsigned M);

// Generalized harmonic number H_n^{(-M)}(z) = sum_{j=1..n} (j+z)^M, exact.
// Used only to check the zeta relation H_n^{(s)}(z) = zeta(s,z+1)-zeta(s,z+n+1).
Rational generalized_harmonic_neg(unsigned n, unsigned M, const Rational& z);

// Power sum over positive half-integers q = 1/2, 3/2, ..., (n-1)/2 expressed
// as an exact polynomial in n (closed via Bernoulli polynomials, so the
// replica index can stay symbolic). For even integer n it equals the direct
// sum; its polynomial form is what defines the n_e -> 1 continuation.
Polynomial half_integer_power_sum(unsigned m);

// --- entropy expansion -----------------------------------------------------

// Coefficient of <Q_A^M>_c in S_A^{(n)} divided by pi^M, as a rational
// function of the replica index n (Hurwitz-zeta route). Removable at n = 1,
// where its limit is the von Neumann coefficient 2 zeta(M)/pi^M.
RationalFunction entropy_coefficient_fn(unsigned M);

// Evaluation at integer n >= 1; n = 1 takes the replica limit.
Rational entropy_coefficient(unsigned n, unsigned M);

// Independent route: (1/(1-n)) * faulhaber_sum(n,M) * (2 pi i / n)^M / M!
// with the p-sum enumerated directly. Defined for n >= 2.
Rational entropy_coefficient_direct(unsigned n, unsigned M);

// --- negativity expansion --------------------------------------------------

// Coefficients of pi^M <Q_A^a Q_B^b>_c in the order-M term of the Renyi
// negativity expansion, symbolic in the (even) replica index n_e. The i^M
// phase and overall sign are folded in, so the order-M contribution is
//   E^(M) = pi^M * sum_{a+b=M} terms[(a,b)] * <Q_A^a Q_B^b>_c.
// Odd-M coefficients reduce to zero symbolically and yield an empty map.
struct ExpansionCoefficients {
  unsigned order = 0;
  std::map<std::pair<unsigned, unsigned>, RationalFunction> terms;

  Rational eval(unsigned a, unsigned b, unsigned n_e) const;
  Rational replica_limit(unsigned a, unsigned b) const;
};

ExpansionCoefficients negativity_coefficients(unsigned M);

// Symbolic coefficients substituted at n_e = 1 (the replica limit used for
// the logarithmic negativity).
std::map<std::pair<unsigned, unsigned>, Rational> negativity_coefficients_replica_limit(unsigned M);

// Brute-force route for cross-checks: enumerate the two half-integer p
// ranges directly at a given even n_e with the multinomial weight.
Rational negativity_coefficient_direct(unsigned M, unsigned a, unsigned b, unsigned n_e);

// --- numeric evaluation ----------------------------------------------------

struct ExpansionValue {
  std::map<unsigned, double> order_terms;  // E^(M)
  std::map<unsigned, double> cumulative;   // sum of E^(M') for M' <= M in `orders`
};

// Contract the order-M coefficient tables against measured cumulants. The
// coefficient map per order must hold every (a,b) with a+b = M; a missing
// cumulant is an error naming the pair.
ExpansionValue evaluate_expansion(
    const std::map<unsigned, std::map<std::pair<unsigned, unsigned>, Rational>>& coeffs,
    const CumulantSet& cums, const std::set<unsigned>& orders);

// Convenience: evaluate the negativity expansion at even n_e (or the replica
// limit for n_e = 1) for the given orders.
ExpansionValue negativity_expansion(const CumulantSet& cums, unsigned n_e,
                                    const std::set<unsigned>& orders);

}  // namespace fnega
