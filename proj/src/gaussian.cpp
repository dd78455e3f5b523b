#include "fnega/gaussian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fnega/errors.hpp"
#include "fnega/kernels.hpp"
#include "fnega/linalg.hpp"

namespace fnega {

namespace {

double fermi(double eps, double beta) {
  if (std::isinf(beta)) return eps < 0 ? 1.0 : (eps > 0 ? 0.0 : 0.5);
  const double x = beta * eps;
  // branch on the sign to keep the exponential bounded
  return x > 0 ? std::exp(-x) / (1.0 + std::exp(-x)) : 1.0 / (1.0 + std::exp(x));
}

std::vector<int> all_sites(int n) {
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

// C_ij = sum_k conj(V_ik) f_k V_jk over the full site range.
Eigen::MatrixXcd assemble_full(const HermitianEigen& eig, const Eigen::VectorXd& f, int n) {
  const auto sites = all_sites(n);
  Eigen::MatrixXcd C = eig.real_path
                           ? kernels::subset_correlation(eig.eigenvectors_real, f, sites, sites)
                           : kernels::subset_correlation(eig.eigenvectors, f, sites, sites);
  // symmetrize away roundoff
  C = ((C + C.adjoint()) * 0.5).eval();
  return C;
}

Eigen::VectorXd occupation_weights(const Eigen::VectorXd& eigenvalues, double filling, int n) {
  const long k_occ = std::llround(filling * n);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(n);
  for (long k = 0; k < k_occ; ++k) f(k) = 1.0;  // ascending order; ties by index
  return f;
}

}  // namespace

CorrelationMatrix thermal_correlations(const HoppingMatrix& H, double beta, double mu) {
  if (beta < 0) throw std::invalid_argument("thermal_correlations: beta must be >= 0");
  Eigen::MatrixXcd h = H.t;
  h.diagonal().array() -= mu;
  const HermitianEigen eig = hermitian_eigensystem(h);
  Eigen::VectorXd f(H.n);
  for (int k = 0; k < H.n; ++k) f(k) = fermi(eig.eigenvalues(k), beta);
  CorrelationMatrix out;
  out.n = H.n;
  out.beta = beta;
  out.mu = mu;
  out.C = assemble_full(eig, f, H.n);
  return out;
}

CorrelationMatrix ground_state_correlations(const HoppingMatrix& H, double filling) {
  if (filling < 0.0 || filling > 1.0)
    throw std::invalid_argument("ground_state_correlations: filling must be in [0, 1]");
  const HermitianEigen eig = hermitian_eigensystem(H.t);
  const Eigen::VectorXd f = occupation_weights(eig.eigenvalues, filling, H.n);
  CorrelationMatrix out;
  out.n = H.n;
  out.beta = std::numeric_limits<double>::infinity();
  const long k_occ = std::llround(filling * H.n);
  out.mu = (k_occ > 0 && k_occ < H.n)
               ? 0.5 * (eig.eigenvalues(k_occ - 1) + eig.eigenvalues(k_occ))
               : 0.0;
  out.C = assemble_full(eig, f, H.n);
  return out;
}

Eigen::MatrixXcd ground_state_correlations_on(const HoppingMatrix& H, double filling,
                                              const std::vector<int>& sites) {
  if (filling < 0.0 || filling > 1.0)
    throw std::invalid_argument("ground_state_correlations_on: filling must be in [0, 1]");
  for (int s : sites)
    if (s < 0 || s >= H.n) throw std::invalid_argument("ground_state_correlations_on: site out of range");
  const HermitianEigen eig = hermitian_eigensystem(H.t);
  const Eigen::VectorXd f = occupation_weights(eig.eigenvalues, filling, H.n);
  return eig.real_path ? kernels::subset_correlation(eig.eigenvectors_real, f, sites, sites)
                       : kernels::subset_correlation(eig.eigenvectors, f, sites, sites);
}

Eigen::MatrixXcd restrict_correlations(const CorrelationMatrix& C, const RegionPartition& P) {
  const auto sites = P.joint();
  for (int s : sites)
    if (s < 0 || s >= C.n) throw std::invalid_argument("restrict_correlations: index out of range");
  Eigen::MatrixXcd sub(sites.size(), sites.size());
  for (std::size_t r = 0; r < sites.size(); ++r)
    for (std::size_t c = 0; c < sites.size(); ++c)
      sub(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = C.C(sites[r], sites[c]);
  return sub;
}

BlockViews blocks(const CorrelationMatrix& C, const RegionPartition& P) {
  return blocks_from_joint(restrict_correlations(C, P), static_cast<int>(P.A.size()));
}

BlockViews blocks_from_joint(const Eigen::MatrixXcd& C_AB, int n_a) {
  const Eigen::Index na = n_a;
  const Eigen::Index nb = C_AB.rows() - na;
  if (na <= 0 || nb <= 0) throw std::invalid_argument("blocks_from_joint: empty block");
  BlockViews B;
  B.C11 = C_AB.topLeftCorner(na, na);
  B.C12 = C_AB.topRightCorner(na, nb);
  B.C21 = C_AB.bottomLeftCorner(nb, na);
  B.C22 = C_AB.bottomRightCorner(nb, nb);
  return B;
}

}  // namespace fnega
