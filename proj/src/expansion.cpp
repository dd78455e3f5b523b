#include "fnega/expansion.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "fnega/cumulants.hpp"

namespace fnega {

Rational bernoulli_number(unsigned k) {
  static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= k) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    const unsigned m = static_cast<unsigned>(cache.size());
    Rational acc(0);
    for (unsigned j = 0; j < m; ++j) acc += binomial(m + 1, j) * cache[j];
    cache.push_back(-acc / binomial(m + 1, m));
  }
  return cache[k];
}

Polynomial bernoulli_polynomial(unsigned k) {
  // B_k(x) = sum_j C(k, j) B_j x^{k-j}
  std::vector<Rational> c(k + 1, Rational(0));
  for (unsigned j = 0; j <= k; ++j) c[k - j] = binomial(k, j) * bernoulli_number(j);
  return Polynomial(std::move(c));
}

Rational faulhaber_sum(unsigned n, unsigned M) {
  if (n < 1) throw std::invalid_argument("faulhaber_sum: n must be positive");
  Rational acc(0);
  for (unsigned k = 0; k < n; ++k) {
    // p runs over -(n-1)/2, -(n-3)/2, ..., (n-1)/2
    const Rational p(2 * static_cast<long>(k) - static_cast<long>(n) + 1, 2);
    acc += p.pow(M);
  }
  return acc;
}

Rational hurwitz_zeta_neg_int(unsigned M, const Rational& a) {
  if (M < 1) throw std::invalid_argument("hurwitz_zeta_neg_int: M must be >= 1");
  return -bernoulli_polynomial(M + 1).eval(a) / Rational(M + 1);
}

Rational riemann_zeta_even_over_pi_pow(unsigned M) {
  if (M < 2 || M % 2 != 0)
    throw std::invalid_argument("riemann_zeta_even_over_pi_pow: M must be even and >= 2");
  // zeta(M) = (2 pi)^M |B_M| / (2 M!)
  return Rational(2).pow(M) * bernoulli_number(M).abs() / (Rational(2) * factorial(M));
}

Rational generalized_harmonic_neg(unsigned n, unsigned M, const Rational& z) {
  Rational acc(0);
  for (unsigned j = 1; j <= n; ++j) acc += (Rational(j) + z).pow(M);
  return acc;
}

Polynomial half_integer_power_sum(unsigned m) {
  // sum_{q=1/2}^{(n-1)/2} q^m = [B_{m+1}((n+1)/2) - B_{m+1}(1/2)] / (m+1)
  const Polynomial b = bernoulli_polynomial(m + 1);
  Polynomial p = b.compose_affine(Rational(1, 2), Rational(1, 2));
  p -= Polynomial(b.eval(Rational(1, 2)));
  p *= Rational(1) / Rational(m + 1);
  return p;
}

// (-1)^{M/2}, the real value of i^M for even M.
static Rational even_i_power(unsigned M) {
  return (M / 2) % 2 == 0 ? Rational(1) : Rational(-1);
}

RationalFunction entropy_coefficient_fn(unsigned M) {
  if (M % 2 != 0) return RationalFunction();  // odd orders vanish
  // -(1/(1-n)) * 2 zeta(-M, (n+1)/2) * (2 pi i / n)^M / M!, divided by pi^M.
  Polynomial zeta_poly = bernoulli_polynomial(M + 1).compose_affine(Rational(1, 2), Rational(1, 2));
  zeta_poly *= Rational(-1) / Rational(M + 1);  // zeta(-M, (n+1)/2)
  Polynomial num = zeta_poly;
  num *= Rational(-2) * even_i_power(M) * Rational(2).pow(M) / factorial(M);
  Polynomial den = Polynomial({Rational(1), Rational(-1)}) *  // (1 - n)
                   Polynomial::monomial(Rational(1), M);      // n^M
  return RationalFunction(num, den);
}

Rational entropy_coefficient(unsigned n, unsigned M) {
  if (n < 1) throw std::invalid_argument("entropy_coefficient: n must be >= 1");
  const RationalFunction fn = entropy_coefficient_fn(M);
  if (fn.is_zero()) return Rational(0);
  return n == 1 ? fn.limit(Rational(1)) : fn.eval(Rational(n));
}

Rational entropy_coefficient_direct(unsigned n, unsigned M) {
  if (n < 2) throw std::invalid_argument("entropy_coefficient_direct: n must be >= 2");
  if (M % 2 != 0) return Rational(0);
  // (1/(1-n)) * sum_p p^M * (2 pi i / n)^M / M!, divided by pi^M.
  return faulhaber_sum(n, M) * even_i_power(M) * Rational(2).pow(M) /
         (Rational(1 - static_cast<long>(n)) * Rational(n).pow(M) * factorial(M));
}

Rational ExpansionCoefficients::eval(unsigned a, unsigned b, unsigned n_e) const {
  auto it = terms.find({a, b});
  if (it == terms.end()) return Rational(0);
  return it->second.eval(Rational(n_e));
}

Rational ExpansionCoefficients::replica_limit(unsigned a, unsigned b) const {
  auto it = terms.find({a, b});
  if (it == terms.end()) return Rational(0);
  return it->second.limit(Rational(1));
}

ExpansionCoefficients negativity_coefficients(unsigned M) {
  ExpansionCoefficients out;
  out.order = M;
  for (unsigned a = 0; a <= M; ++a) {
    const unsigned b = M - a;
    // Sum over the two p half-ranges, each expanded in powers of q = |p|.
    // Negative half, p = -q: (-2p/n)^a (2p/n + 1)^b = (2q/n)^a (1 - 2q/n)^b.
    // Positive half, p = +q: (-2q/n)^a (2q/n - 1)^b.
    RationalFunction sum;
    for (unsigned j = 0; j <= b; ++j) {
      Polynomial num = half_integer_power_sum(a + j);
      num *= binomial(b, j) * Rational(2).pow(a + j);
      const Polynomial den = Polynomial::monomial(Rational(1), a + j);
      const Rational sign_neg = (j % 2 == 0) ? Rational(1) : Rational(-1);
      const Rational sign_pos = ((a + b - j) % 2 == 0) ? Rational(1) : Rational(-1);
      Polynomial scaled = num;
      scaled *= sign_neg + sign_pos;
      sum += RationalFunction(scaled, den);
    }
    if (sum.is_zero()) continue;  // all odd-M terms cancel here
    if (M % 2 != 0) throw std::logic_error("negativity_coefficients: odd order did not cancel");
    sum = sum * RationalFunction(even_i_power(M) * binomial(M, a) / factorial(M));
    out.terms.emplace(std::make_pair(a, b), sum);
  }
  return out;
}

std::map<std::pair<unsigned, unsigned>, Rational> negativity_coefficients_replica_limit(unsigned M) {
  std::map<std::pair<unsigned, unsigned>, Rational> out;
  const ExpansionCoefficients sym = negativity_coefficients(M);
  for (const auto& [key, fn] : sym.terms) out.emplace(key, fn.limit(Rational(1)));
  return out;
}

Rational negativity_coefficient_direct(unsigned M, unsigned a, unsigned b, unsigned n_e) {
  if (a + b != M) throw std::invalid_argument("negativity_coefficient_direct: a + b must equal M");
  if (n_e < 2 || n_e % 2 != 0)
    throw std::invalid_argument("negativity_coefficient_direct: n_e must be even and >= 2");
  Rational bracket(0);
  for (unsigned k = 0; k < n_e / 2; ++k) {
    const Rational q(2 * static_cast<long>(k) + 1, 2);  // 1/2, 3/2, ...
    const Rational u = Rational(2) * q / Rational(n_e);
    bracket += u.pow(a) * (Rational(1) - u).pow(b);            // p = -q
    bracket += (-u).pow(a) * (u - Rational(1)).pow(b);         // p = +q
  }
  if (M % 2 != 0) {
    if (!bracket.is_zero())
      throw std::logic_error("negativity_coefficient_direct: odd order did not cancel");
    return Rational(0);
  }
  return even_i_power(M) * binomial(M, a) / factorial(M) * bracket;
}

ExpansionValue evaluate_expansion(
    const std::map<unsigned, std::map<std::pair<unsigned, unsigned>, Rational>>& coeffs,
    const CumulantSet& cums, const std::set<unsigned>& orders) {
  ExpansionValue out;
  double running = 0.0;
  for (unsigned M : orders) {
    auto it = coeffs.find(M);
    if (it == coeffs.end()) throw std::invalid_argument("evaluate_expansion: no coefficients for order " + std::to_string(M));
    double term = 0.0;
    for (const auto& [key, c] : it->second) {
      const auto [a, b] = key;
      if (!cums.contains(a, b))
        throw std::invalid_argument("evaluate_expansion: missing cumulant (" + std::to_string(a) +
                                    "," + std::to_string(b) + ")");
      term += c.to_double() * cums.at(a, b);
    }
    term *= std::pow(M_PI, static_cast<int>(M));
    running += term;
    out.order_terms[M] = term;
    out.cumulative[M] = running;
  }
  return out;
}

ExpansionValue negativity_expansion(const CumulantSet& cums, unsigned n_e,
                                    const std::set<unsigned>& orders) {
  std::map<unsigned, std::map<std::pair<unsigned, unsigned>, Rational>> coeffs;
  for (unsigned M : orders) {
    const ExpansionCoefficients sym = negativity_coefficients(M);
    std::map<std::pair<unsigned, unsigned>, Rational> at;
    for (const auto& [key, fn] : sym.terms)
      at.emplace(key, n_e == 1 ? fn.limit(Rational(1)) : fn.eval(Rational(n_e)));
    // Even orders always carry the full (a,b) range; odd orders are empty and
    // evaluate to zero without consulting the cumulants.
    coeffs.emplace(M, std::move(at));
  }
  return evaluate_expansion(coeffs, cums, orders);
}

}  // namespace fnega
