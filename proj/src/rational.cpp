#include "fnega/rational.hpp"

#include <stdexcept>

namespace fnega {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::pow(unsigned e) const {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), e);
  r.canonicalize();
  return Rational(r);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(mpq_class(b));
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::x() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(const Rational& c, unsigned degree) {
  if (c.is_zero()) return Polynomial();
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coeff(unsigned k) const {
  return k < c_.size() ? c_[k] : Rational(0);
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Polynomial Polynomial::compose_affine(const Rational& scale, const Rational& shift) const {
  // Horner in the affine argument.
  Polynomial arg({shift, scale});
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * arg + Polynomial(*it);
  return acc;
}

Polynomial Polynomial::divide_by_linear(const Rational& root) const {
  if (is_zero()) return Polynomial();
  // Synthetic division by (x - root).
  std::vector<Rational> q(c_.size() - 1, Rational(0));
  Rational carry(0);
  for (size_t i = c_.size(); i-- > 1;) {
    carry = c_[i] + carry * root;
    q[i - 1] = carry;
  }
  Rational remainder = c_[0] + carry * root;
  if (!remainder.is_zero())
    throw std::invalid_argument("Polynomial: not divisible by (x - " + root.str() + ")");
  return Polynomial(std::move(q));
}

unsigned Polynomial::low_degree() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<unsigned>(i);
  return 0;
}

Polynomial Polynomial::shift_down(unsigned k) const {
  if (k == 0 || is_zero()) return *this;
  for (unsigned i = 0; i < k && i < c_.size(); ++i)
    if (!c_[i].is_zero()) throw std::invalid_argument("Polynomial: shift_down below low degree");
  if (k >= c_.size()) return Polynomial();
  return Polynomial(std::vector<Rational>(c_.begin() + k, c_.end()));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    const Rational& c = c_[i];
    const bool first = out.empty();
    std::string mag = c.abs().str();
    if (!first) out += (c.sign() < 0) ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    if (i == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(const Rational& constant)
    : num_(Polynomial(constant)), den_(Polynomial(Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  const unsigned k = std::min(num_.low_degree(), den_.low_degree());
  num_ = num_.shift_down(k);
  den_ = den_.shift_down(k);
  // Scale so num and den are jointly primitive integer polynomials with a
  // positive denominator leader.
  mpz_class lcm = 1, gcd = 0;
  for (const Polynomial* p : {&num_, &den_})
    for (const auto& c : p->coeffs())
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  num_ *= Rational(mpq_class(lcm));
  den_ *= Rational(mpq_class(lcm));
  for (const Polynomial* p : {&num_, &den_})
    for (const auto& c : p->coeffs())
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), c.raw().get_num_mpz_t());
  if (gcd == 0) gcd = 1;
  Rational scale = Rational(1) / Rational(mpq_class(gcd));
  if (den_.coeffs().back().sign() < 0) scale = -scale;
  num_ *= scale;
  den_ *= scale;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw std::invalid_argument("RationalFunction: pole at " + x.str());
  return num_.eval(x) / d;
}

Rational RationalFunction::limit(const Rational& x) const {
  Polynomial n = num_, d = den_;
  while (d.eval(x).is_zero()) {
    if (n.eval(x).is_zero()) {
      n = n.divide_by_linear(x);
      d = d.divide_by_linear(x);
    } else {
      throw std::invalid_argument("RationalFunction: pole at " + x.str());
    }
  }
  return n.eval(x) / d.eval(x);
}

std::string RationalFunction::str(const std::string& var) const {
  if (num_.is_zero()) return "0";
  if (den_ == Polynomial(Rational(1))) return num_.str(var);
  const bool num_compound = num_.degree() > 0;
  const bool den_compound = den_.degree() > 0;
  std::string n = num_compound ? "(" + num_.str(var) + ")" : num_.str(var);
  std::string d = den_compound ? "(" + den_.str(var) + ")" : den_.str(var);
  return n + "/" + d;
}

}  // namespace fnega
