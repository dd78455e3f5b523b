#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fnega {

// Exact rational number. Backed by GMP's mpq so numerator/denominator are
// arbitrary-precision; always kept canonical (gcd 1, denominator > 0).
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long num) : q_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  static Rational from_string(const std::string& s);  // "num" or "num/den"

  const mpq_class& raw() const { return q_; }
  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  Rational pow(unsigned e) const;
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

 private:
  mpq_class q_;
};

Rational binomial(unsigned n, unsigned k);
Rational factorial(unsigned n);

// Dense univariate polynomial with Rational coefficients, ascending order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational constant);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial x();
  static Polynomial monomial(const Rational& c, unsigned degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational coeff(unsigned k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // p(scale*x + shift), exact.
  Polynomial compose_affine(const Rational& scale, const Rational& shift) const;

  // Exact division by (x - root); throws std::invalid_argument if the
  // remainder is nonzero.
  Polynomial divide_by_linear(const Rational& root) const;

  // Lowest k with nonzero coefficient (0 for the zero polynomial).
  unsigned low_degree() const;
  Polynomial shift_down(unsigned k) const;  // divide by x^k, coefficients below k must vanish

  std::string str(const std::string& var) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Ratio of two polynomials in one symbol (the replica index). Only light
// normalization is done (common x^k factors cancelled, denominator content
// scaled to primitive integers with positive leading coefficient); equality
// is decided by cross-multiplication, which is exact regardless of form.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial(Rational(1))) {}
  explicit RationalFunction(const Rational& constant);
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  // Value at x; throws numerical domain error (std::invalid_argument) at a pole.
  Rational eval(const Rational& x) const;

  // Limit as the symbol approaches x: removable 0/0 factors (x - r)^k are
  // cancelled exactly before evaluating. Throws on a genuine pole.
  Rational limit(const Rational& x) const;

  std::string str(const std::string& var) const;

 private:
  void normalize();
  Polynomial num_, den_;
};

}  // namespace fnega
