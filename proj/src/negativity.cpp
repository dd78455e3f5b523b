#include "fnega/negativity.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fnega/errors.hpp"
#include "fnega/gaussian.hpp"
#include "fnega/linalg.hpp"
#include "fnega/model.hpp"

namespace fnega {

CovariancePipeline covariance_pipeline(const CorrelationMatrix& C, const RegionPartition& P) {
  const Eigen::MatrixXcd C_AB = restrict_correlations(C, P);
  const Eigen::Index na = static_cast<Eigen::Index>(P.A.size());
  const Eigen::Index nb = static_cast<Eigen::Index>(P.B.size());
  const Eigen::Index n = na + nb;
  const std::complex<double> im(0.0, 1.0);

  CovariancePipeline out;
  out.Gamma = Eigen::MatrixXcd::Identity(n, n) - 2.0 * C_AB;
  out.GammaPlus.resize(n, n);
  out.GammaMinus.resize(n, n);
  out.GammaPlus.topLeftCorner(na, na) = -out.Gamma.topLeftCorner(na, na);
  out.GammaPlus.bottomRightCorner(nb, nb) = out.Gamma.bottomRightCorner(nb, nb);
  out.GammaPlus.topRightCorner(na, nb) = im * out.Gamma.topRightCorner(na, nb);
  out.GammaPlus.bottomLeftCorner(nb, na) = im * out.Gamma.bottomLeftCorner(nb, na);
  out.GammaMinus = out.GammaPlus;
  out.GammaMinus.topRightCorner(na, nb) *= -1.0;
  out.GammaMinus.bottomLeftCorner(nb, na) *= -1.0;

  const Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(n, n) + out.GammaPlus * out.GammaMinus;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-12))
    throw numerical_error("covariance_pipeline: (I + G+G-) condition " +
                          std::to_string(rcond > 0 ? 1.0 / rcond : INFINITY) +
                          " beyond 1e12");
  out.C_Xi = 0.5 * (Eigen::MatrixXcd::Identity(n, n) - lu.solve(out.GammaPlus + out.GammaMinus));
  out.xi = general_eigenvalues(out.C_Xi);

  Eigen::VectorXd zeta = hermitian_eigenvalues(C_AB);
  clamp_unit_interval(zeta);
  out.zeta = zeta;

  // Diagnostic only: how well the complex xi organize into conjugate pairs.
  double residual = 0.0;
  for (Eigen::Index i = 0; i < out.xi.size(); ++i) {
    if (std::abs(out.xi(i).imag()) < 1e-10) continue;
    double best = INFINITY;
    for (Eigen::Index j = 0; j < out.xi.size(); ++j)
      if (j != i) best = std::min(best, std::abs(out.xi(j) - std::conj(out.xi(i))));
    residual = std::max(residual, best);
  }
  out.xi_pairing_residual = residual;
  return out;
}

namespace {

constexpr double kImagTol = 1e-8;

// sum_j log[xi_j^q + (1 - xi_j)^q] over the complex xi spectrum with the
// principal branch; the total must come out real.
double xi_log_sum(const Eigen::VectorXcd& xi, double q) {
  std::complex<double> acc = 0.0;
  for (Eigen::Index j = 0; j < xi.size(); ++j) {
    const std::complex<double> x = xi(j);
    acc += std::log(std::pow(x, q) + std::pow(1.0 - x, q));
  }
  if (std::abs(acc.imag()) > kImagTol)
    throw numerical_error("negativity: xi sum has imaginary residue " +
                          std::to_string(acc.imag()));
  return acc.real();
}

double zeta_log_sum(const Eigen::VectorXd& zeta) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < zeta.size(); ++j) {
    const double z = zeta(j);
    acc += std::log(z * z + (1.0 - z) * (1.0 - z));
  }
  return acc;
}

}  // namespace

NegativityResult log_negativity(const CorrelationMatrix& C, const RegionPartition& P) {
  const CovariancePipeline pipe = covariance_pipeline(C, P);
  NegativityResult out;
  out.kind = "logarithmic";
  out.term1 = xi_log_sum(pipe.xi, 0.5);
  out.term2 = 0.5 * zeta_log_sum(pipe.zeta);
  out.value = out.term1 + out.term2;
  return out;
}

NegativityResult renyi_negativity(const CorrelationMatrix& C, const RegionPartition& P, int n_e) {
  if (n_e < 2 || n_e % 2 != 0)
    throw std::invalid_argument("renyi_negativity: n_e must be even and >= 2");
  const CovariancePipeline pipe = covariance_pipeline(C, P);
  NegativityResult out;
  out.kind = "renyi";
  out.n_e = n_e;
  out.term1 = xi_log_sum(pipe.xi, n_e / 2.0);
  out.term2 = (n_e / 2.0) * zeta_log_sum(pipe.zeta);
  out.value = out.term1 + out.term2;
  return out;
}

nlohmann::json NegativityResult::to_json() const {
  nlohmann::json j{{"kind", kind}, {"value", value}, {"term1", term1}, {"term2", term2}};
  if (kind == "renyi") j["n_e"] = n_e;
  return j;
}

Entropies exact_entropies(const Eigen::MatrixXcd& C_region, const std::vector<double>& renyi_orders) {
  Eigen::VectorXd zeta = hermitian_eigenvalues(C_region);
  clamp_unit_interval(zeta);
  Entropies out;
  const auto xlogx = [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; };
  for (Eigen::Index j = 0; j < zeta.size(); ++j)
    out.von_neumann -= xlogx(zeta(j)) + xlogx(1.0 - zeta(j));
  for (double n : renyi_orders) {
    if (!(n > 0.0) || n == 1.0)
      throw std::invalid_argument("exact_entropies: Renyi order must be positive and != 1");
    double acc = 0.0;
    for (Eigen::Index j = 0; j < zeta.size(); ++j)
      acc += std::log(std::pow(zeta(j), n) + std::pow(1.0 - zeta(j), n));
    out.renyi[n] = acc / (1.0 - n);
  }
  return out;
}

}  // namespace fnega
