#include "fnega/cumulants.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "fnega/errors.hpp"
#include "fnega/gaussian.hpp"
#include "fnega/kernels.hpp"
#include "fnega/model.hpp"

namespace fnega {

double CumulantSet::at(unsigned a, unsigned b) const {
  auto it = values_.find({a, b});
  if (it == values_.end())
    throw std::invalid_argument("CumulantSet: no value for (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
  return it->second;
}

void CumulantSet::merge(const CumulantSet& other) {
  for (const auto& [k, v] : other.values_) values_[k] = v;
}

unsigned CumulantSet::max_order() const {
  unsigned m = 0;
  for (const auto& [k, v] : values_) m = std::max(m, k.first + k.second);
  return m;
}

nlohmann::json CumulantSet::to_json() const {
  nlohmann::json vals = nlohmann::json::object();
  for (const auto& [k, v] : values_)
    vals[std::to_string(k.first) + "," + std::to_string(k.second)] = v;
  return {{"order", max_order()}, {"values", vals}};
}

namespace {

constexpr double kImagTol = 1e-10;

double real_trace(const std::complex<double>& z, const char* label) {
  if (std::abs(z.imag()) > kImagTol)
    throw numerical_error(std::string("cumulants: imaginary residue ") +
                          std::to_string(z.imag()) + " in " + label);
  return z.real();
}

double tr(const Eigen::MatrixXcd& X, const char* label) {
  return real_trace(X.trace(), label);
}

double tr2(const Eigen::MatrixXcd& X, const Eigen::MatrixXcd& Y, const char* label) {
  return real_trace(kernels::trace_product(X, Y), label);
}

}  // namespace

CumulantSet cumulants_order2(const BlockViews& B) {
  CumulantSet out;
  out.set(2, 0, tr(B.C11, "<QA^2>") - tr2(B.C11, B.C11, "<QA^2>"));
  out.set(1, 1, -tr2(B.C12, B.C21, "<QAQB>"));
  out.set(0, 2, tr(B.C22, "<QB^2>") - tr2(B.C22, B.C22, "<QB^2>"));
  return out;
}

CumulantSet cumulants_order4(const BlockViews& B) {
  const Eigen::MatrixXcd C11sq = B.C11 * B.C11;
  const Eigen::MatrixXcd C22sq = B.C22 * B.C22;
  const Eigen::MatrixXcd cross = B.C12 * B.C21;  // A x A

  CumulantSet out;
  out.set(4, 0, tr(B.C11, "<QA^4>") - 7.0 * tr2(B.C11, B.C11, "<QA^4>") +
                    12.0 * tr2(C11sq, B.C11, "<QA^4>") - 6.0 * tr2(C11sq, C11sq, "<QA^4>"));
  out.set(3, 1, -tr2(B.C12, B.C21, "<QA^3QB>") + 6.0 * tr2(B.C11 * B.C12, B.C21, "<QA^3QB>") -
                    6.0 * tr2(C11sq * B.C12, B.C21, "<QA^3QB>"));
  out.set(2, 2, -tr2(B.C12, B.C21, "<QA^2QB^2>") + 2.0 * tr2(B.C11 * B.C12, B.C21, "<QA^2QB^2>") +
                    2.0 * tr2(B.C22 * B.C21, B.C12, "<QA^2QB^2>") -
                    4.0 * tr2(B.C11 * B.C12 * B.C22, B.C21, "<QA^2QB^2>") -
                    2.0 * tr2(cross, cross, "<QA^2QB^2>"));
  out.set(1, 3, -tr2(B.C12, B.C21, "<QAQB^3>") + 6.0 * tr2(B.C22 * B.C21, B.C12, "<QAQB^3>") -
                    6.0 * tr2(C22sq * B.C21, B.C12, "<QAQB^3>"));
  out.set(0, 4, tr(B.C22, "<QB^4>") - 7.0 * tr2(B.C22, B.C22, "<QB^4>") +
                    12.0 * tr2(C22sq, B.C22, "<QB^4>") - 6.0 * tr2(C22sq, C22sq, "<QB^4>"));
  return out;
}

CumulantSet wick_cumulants(const BlockViews& B, unsigned max_order) {
  if (max_order < 1 || max_order == 3 || max_order > 4)
    throw std::invalid_argument("wick_cumulants: closed trace formulas exist for orders 1, 2, 4");
  CumulantSet out;
  out.set(1, 0, tr(B.C11, "<QA>"));
  out.set(0, 1, tr(B.C22, "<QB>"));
  if (max_order >= 2) out.merge(cumulants_order2(B));
  if (max_order >= 4) out.merge(cumulants_order4(B));
  return out;
}

// --- generating-function oracle --------------------------------------------
//
// K(lA, lB) = log det(I + C_AB (exp(i Lambda) - I)) evaluated in
// complex<long double>; the determinant is a hand-rolled partially pivoted
// LU so the extended precision survives. For the step sizes used the matrix
// stays near the identity and the principal-branch log of the pivots is the
// smooth branch of K.

namespace {

using CLD = std::complex<long double>;

CLD log_det_near_identity(std::vector<std::vector<CLD>>& m) {
  const std::size_t n = m.size();
  CLD logdet = 0.0L;
  int swaps = 0;
  long double min_pivot = 1e300L;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      ++swaps;
    }
    const CLD p = m[col][col];
    const long double ap = std::abs(p);
    min_pivot = std::min(min_pivot, ap);
    if (ap < 1e-280L)
      throw numerical_error("generating_function: determinant underflow, pivot " +
                            std::to_string(static_cast<double>(ap)) + " at size " +
                            std::to_string(n));
    logdet += std::log(p);
    for (std::size_t r = col + 1; r < n; ++r) {
      const CLD f = m[r][col] / p;
      if (f == CLD(0.0L)) continue;
      for (std::size_t c = col + 1; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  if (swaps % 2 == 1) logdet += CLD(0.0L, static_cast<long double>(M_PI));
  return logdet;
}

CLD gen_function(const Eigen::MatrixXcd& C_AB, int n_a, long double la, long double lb) {
  const std::size_t n = static_cast<std::size_t>(C_AB.rows());
  std::vector<std::vector<CLD>> m(n, std::vector<CLD>(n));
  std::vector<CLD> d(n);
  for (std::size_t j = 0; j < n; ++j) {
    const long double lam = j < static_cast<std::size_t>(n_a) ? la : lb;
    d[j] = std::exp(CLD(0.0L, lam)) - CLD(1.0L);
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::complex<double> cc = C_AB(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      m[r][c] = CLD(cc.real(), cc.imag()) * d[c];
      if (r == c) m[r][c] += CLD(1.0L);
    }
  return log_det_near_identity(m);
}

double binom_d(unsigned n, unsigned k) {
  double b = 1.0;
  for (unsigned i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

// Central tensor-product difference of order (a, b) at step h, O(h^2).
CLD central_difference(const Eigen::MatrixXcd& C_AB, int n_a, unsigned a, unsigned b,
                       long double h) {
  CLD acc = 0.0L;
  for (unsigned k = 0; k <= a; ++k) {
    const long double xa = (static_cast<long double>(a) / 2.0L - k) * h;
    const double wa = ((k % 2 == 0) ? 1.0 : -1.0) * binom_d(a, k);
    for (unsigned l = 0; l <= b; ++l) {
      const long double xb = (static_cast<long double>(b) / 2.0L - l) * h;
      const double wb = ((l % 2 == 0) ? 1.0 : -1.0) * binom_d(b, l);
      acc += CLD(wa * wb) * gen_function(C_AB, n_a, xa, xb);
    }
  }
  return acc / std::pow(CLD(h), static_cast<int>(a + b));
}

}  // namespace

double generating_function_cumulant(const CorrelationMatrix& C, const RegionPartition& P,
                                    unsigned a, unsigned b) {
  const unsigned m = a + b;
  if (m < 1) throw std::invalid_argument("generating_function_cumulant: a + b must be >= 1");
  if (m > 8) throw std::invalid_argument("generating_function_cumulant: a + b capped at 8");
  const Eigen::MatrixXcd C_AB = restrict_correlations(C, P);
  const int n_a = static_cast<int>(P.A.size());
  // Base step 1e-2; above order 4 it is widened to balance the h^6
  // extrapolation error against long-double roundoff eps/h^m.
  const long double h0 = m <= 4 ? 1e-2L : std::pow(1e-19L, 1.0L / (m + 6));
  const CLD d0 = central_difference(C_AB, n_a, a, b, h0);
  const CLD d1 = central_difference(C_AB, n_a, a, b, h0 / 2.0L);
  const CLD d2 = central_difference(C_AB, n_a, a, b, h0 / 4.0L);
  const CLD r1a = (CLD(4.0L) * d1 - d0) / CLD(3.0L);
  const CLD r1b = (CLD(4.0L) * d2 - d1) / CLD(3.0L);
  const CLD r2 = (CLD(16.0L) * r1b - r1a) / CLD(15.0L);
  static const CLD i_pow[4] = {CLD(1, 0), CLD(0, 1), CLD(-1, 0), CLD(0, -1)};
  const CLD kappa = r2 / i_pow[m % 4];
  return static_cast<double>(kappa.real());
}

}  // namespace fnega
