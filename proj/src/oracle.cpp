#include "fnega/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "fnega/errors.hpp"
#include "fnega/linalg.hpp"

namespace fnega {

namespace {

constexpr int kMaxModes = 12;

int popcount_below(std::uint32_t s, int mode) {
  return __builtin_popcount(s & ((1u << mode) - 1u));
}

}  // namespace

DenseState dense_thermal_state(const HoppingMatrix& H, double beta) {
  if (H.n > kMaxModes)
    throw resource_limit_error("dense_thermal_state: " + std::to_string(H.n) +
                               " modes exceeds the cap of " + std::to_string(kMaxModes));
  if (beta < 0) throw std::invalid_argument("dense_thermal_state: beta must be >= 0");
  const int n = H.n;
  const std::uint32_t dim = 1u << n;
  Eigen::MatrixXcd Hm = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint32_t s = 0; s < dim; ++s) {
    for (int j = 0; j < n; ++j) {
      if (!((s >> j) & 1u)) continue;
      const std::uint32_t s1 = s & ~(1u << j);
      const int sign1 = popcount_below(s, j) % 2 ? -1 : 1;
      for (int i = 0; i < n; ++i) {
        if ((s1 >> i) & 1u) continue;
        const std::uint32_t s2 = s1 | (1u << i);
        const int sign2 = popcount_below(s1, i) % 2 ? -1 : 1;
        Hm(s2, s) += H.t(i, j) * static_cast<double>(sign1 * sign2);
      }
    }
  }
  const HermitianEigen eig = hermitian_eigensystem(Hm);
  const double e0 = eig.eigenvalues.minCoeff();
  Eigen::VectorXd w(dim);
  for (std::uint32_t k = 0; k < dim; ++k) w(k) = std::exp(-beta * (eig.eigenvalues(k) - e0));
  w /= w.sum();
  const Eigen::MatrixXcd V =
      eig.real_path ? Eigen::MatrixXcd(eig.eigenvectors_real.cast<std::complex<double>>())
                    : eig.eigenvectors;
  DenseState out;
  out.n_modes = n;
  out.rho = V * w.cast<std::complex<double>>().asDiagonal() * V.adjoint();
  return out;
}

DenseState partial_trace(const DenseState& state, const std::vector<int>& keep) {
  const int n = state.n_modes;
  std::vector<bool> kept(n, false);
  for (int m : keep) {
    if (m < 0 || m >= n) throw std::invalid_argument("partial_trace: mode out of range");
    if (kept[m]) throw std::invalid_argument("partial_trace: duplicate mode");
    kept[m] = true;
  }
  // New order: keep (as given), then traced modes ascending.
  std::vector<int> new_pos(n, -1);
  int pos = 0;
  for (int m : keep) new_pos[m] = pos++;
  for (int m = 0; m < n; ++m)
    if (!kept[m]) new_pos[m] = pos++;

  const std::uint32_t dim = 1u << n;
  std::vector<std::uint32_t> perm(dim);
  std::vector<int> sign(dim);
  for (std::uint32_t s = 0; s < dim; ++s) {
    // Occupied modes appear in ascending old order; count inversions of
    // their new positions to get the reordering parity.
    std::uint32_t t = 0;
    int inv = 0;
    std::vector<int> seq;
    for (int m = 0; m < n; ++m) {
      if (!((s >> m) & 1u)) continue;
      const int p = new_pos[m];
      for (int q : seq)
        if (q > p) ++inv;
      seq.push_back(p);
      t |= 1u << p;
    }
    perm[s] = t;
    sign[s] = inv % 2 ? -1 : 1;
  }

  const int nk = static_cast<int>(keep.size());
  const std::uint32_t dim_keep = 1u << nk;
  const std::uint32_t dim_rest = 1u << (n - nk);
  DenseState out;
  out.n_modes = nk;
  out.rho = Eigen::MatrixXcd::Zero(dim_keep, dim_keep);
  // rho'(p(s), p(s')) = sign(s) sign(s') rho(s, s'); then trace the tail bits.
  std::vector<std::uint32_t> inv_perm(dim);
  for (std::uint32_t s = 0; s < dim; ++s) inv_perm[perm[s]] = s;
  for (std::uint32_t r = 0; r < dim_keep; ++r)
    for (std::uint32_t c = 0; c < dim_keep; ++c) {
      std::complex<double> acc = 0.0;
      for (std::uint32_t t = 0; t < dim_rest; ++t) {
        const std::uint32_t rr = inv_perm[r | (t << nk)];
        const std::uint32_t cc = inv_perm[c | (t << nk)];
        acc += static_cast<double>(sign[rr] * sign[cc]) * state.rho(rr, cc);
      }
      out.rho(r, c) = acc;
    }
  return out;
}

PartialTRState partial_time_reversal(const DenseState& state, int n_a) {
  const int n = state.n_modes;
  if (n_a < 1 || n_a >= n)
    throw std::invalid_argument("partial_time_reversal: need 1 <= n_a < n_modes");
  const std::uint32_t dim = 1u << n;
  const std::uint32_t mask_a = (1u << n_a) - 1u;
  PartialTRState out;
  out.n_modes = n;
  out.n_a = n_a;
  out.matrix = Eigen::MatrixXcd::Zero(dim, dim);
  static const std::complex<double> quarter_phase[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // i^k
  for (std::uint32_t r = 0; r < dim; ++r) {
    const int tau1 = __builtin_popcount(r & mask_a);
    const int tau2 = __builtin_popcount(r >> n_a);
    for (std::uint32_t c = 0; c < dim; ++c) {
      const int tbar1 = __builtin_popcount(c & mask_a);
      const int tbar2 = __builtin_popcount(c >> n_a);
      // 2*phi, phi = tau1(tau1+2)/2 + tbar1(tbar1+2)/2 + tau2 tbar2
      //            + tau1 tau2 + tbar1 tbar2 + (tbar1+tbar2)(tau1+tau2)
      const int two_phi = tau1 * (tau1 + 2) + tbar1 * (tbar1 + 2) +
                          2 * (tau2 * tbar2 + tau1 * tau2 + tbar1 * tbar2 +
                               (tbar1 + tbar2) * (tau1 + tau2));
      const std::uint32_t new_r = (c & mask_a) | (r & ~mask_a);  // |mA nB>
      const std::uint32_t new_c = (r & mask_a) | (c & ~mask_a);  // <nA mB|
      out.matrix(new_r, new_c) += quarter_phase[((two_phi % 4) + 4) % 4] * state.rho(r, c);
    }
  }
  return out;
}

namespace {

// Eigenvalues of R R^dag (Hermitian PSD up to roundoff).
Eigen::VectorXd singular_values_squared(const Eigen::MatrixXcd& R) {
  Eigen::VectorXd ev = hermitian_eigenvalues(R * R.adjoint());
  for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = std::max(ev(i), 0.0);
  return ev;
}

}  // namespace

double trace_norm_negativity(const PartialTRState& state) {
  const Eigen::VectorXd s2 = singular_values_squared(state.matrix);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < s2.size(); ++i) sum += std::sqrt(s2(i));
  return std::log(sum);
}

double renyi_negativity_exact(const PartialTRState& state, int n) {
  if (n < 2) throw std::invalid_argument("renyi_negativity_exact: n must be >= 2");
  const Eigen::MatrixXcd& R = state.matrix;
  if (n % 2 == 0) {
    const Eigen::VectorXd g = singular_values_squared(R);
    double tr = 0.0;
    for (Eigen::Index i = 0; i < g.size(); ++i) tr += std::pow(g(i), n / 2);
    return std::log(tr);
  }
  // odd: Tr[(R R^dag)^{(n-1)/2} R]
  Eigen::MatrixXcd acc = R;
  const Eigen::MatrixXcd G = R * R.adjoint();
  for (int k = 0; k < (n - 1) / 2; ++k) acc = G * acc;
  return std::log(acc.trace().real());
}

CumulantSet charge_cumulants_exact(const DenseState& state, int n_a, unsigned max_order) {
  if (max_order > 8) throw std::invalid_argument("charge_cumulants_exact: max_order capped at 8");
  if (n_a < 1 || n_a >= state.n_modes)
    throw std::invalid_argument("charge_cumulants_exact: need 1 <= n_a < n_modes");
  const std::uint32_t dim = 1u << state.n_modes;
  const std::uint32_t mask_a = (1u << n_a) - 1u;
  const unsigned N = max_order + 1;
  // Scaled moment series M[a][b] = <Q_A^a Q_B^b> / (a! b!), then K = log M
  // truncated at total degree max_order; cumulants are a! b! K[a][b].
  std::vector<std::vector<double>> M(N, std::vector<double>(N, 0.0));
  for (std::uint32_t s = 0; s < dim; ++s) {
    const double p = state.rho(s, s).real();
    const double qa = __builtin_popcount(s & mask_a);
    const double qb = __builtin_popcount(s >> n_a);
    double fa = 1.0;  // qa^a / a!
    for (unsigned a = 0; a < N; ++a) {
      double fb = 1.0;
      for (unsigned b = 0; a + b < N; ++b) {
        M[a][b] += p * fa * fb;
        fb *= qb / (b + 1);
      }
      fa *= qa / (a + 1);
    }
  }
  const auto mul = [&](const std::vector<std::vector<double>>& X,
                       const std::vector<std::vector<double>>& Y) {
    std::vector<std::vector<double>> Z(N, std::vector<double>(N, 0.0));
    for (unsigned a = 0; a < N; ++a)
      for (unsigned b = 0; a + b < N; ++b)
        for (unsigned c = 0; c + a < N; ++c)
          for (unsigned d = 0; a + b + c + d < N; ++d) Z[a + c][b + d] += X[a][b] * Y[c][d];
    return Z;
  };
  std::vector<std::vector<double>> Mt = M;
  Mt[0][0] -= 1.0;  // Tr rho
  std::vector<std::vector<double>> K(N, std::vector<double>(N, 0.0)), term = Mt;
  for (unsigned k = 1; k <= max_order; ++k) {
    const double c = (k % 2 == 1 ? 1.0 : -1.0) / k;
    for (unsigned a = 0; a < N; ++a)
      for (unsigned b = 0; a + b < N; ++b) K[a][b] += c * term[a][b];
    if (k < max_order) term = mul(term, Mt);
  }
  CumulantSet out;
  double fact_a = 1.0;
  for (unsigned a = 0; a < N; ++a) {
    double fact_ab = fact_a;
    for (unsigned b = 0; a + b < N; ++b) {
      if (a + b >= 1) out.set(a, b, K[a][b] * fact_ab);
      fact_ab *= (b + 1);
    }
    fact_a *= (a + 1);
  }
  return out;
}

Eigen::MatrixXcd occupation_correlations(const DenseState& state) {
  const int n = state.n_modes;
  const std::uint32_t dim = 1u << n;
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  // <c_i^dag c_j>: c_i^dag c_j |s> = sign |s'>, so Tr picks rho(s, s').
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (std::uint32_t s = 0; s < dim; ++s) {
        if (!((s >> j) & 1u)) continue;
        const std::uint32_t s1 = s & ~(1u << j);
        if ((s1 >> i) & 1u) continue;
        const std::uint32_t s2 = s1 | (1u << i);
        const int sign = (popcount_below(s, j) + popcount_below(s1, i)) % 2 ? -1 : 1;
        C(i, j) += static_cast<double>(sign) * state.rho(s, s2);
      }
  return C;
}

}  // namespace fnega
