#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>

#include "json.hpp"

namespace fnega {

struct CorrelationMatrix;
struct RegionPartition;

// Covariance-matrix pipeline for partial time-reversal negativity:
//   Gamma  = I - 2 C_AB
//   Gamma± = [[-G11, ±i G12], [±i G21, G22]]
//   C_Xi   = (I - (I + G+ G-)^{-1} (G+ + G-)) / 2
// The xi spectrum is a general complex eigenproblem; observed conjugate
// pairing is surfaced as a diagnostic, only the reality of the summed logs
// is enforced downstream.
struct CovariancePipeline {
  Eigen::MatrixXcd Gamma, GammaPlus, GammaMinus, C_Xi;
  Eigen::VectorXcd xi;    // eigenvalues of C_Xi
  Eigen::VectorXd zeta;   // eigenvalues of C_AB, clamped into [0,1]
  double xi_pairing_residual = 0.0;
};

CovariancePipeline covariance_pipeline(const CorrelationMatrix& C, const RegionPartition& P);

struct NegativityResult {
  std::string kind;  // "logarithmic" | "renyi"
  int n_e = 0;       // 0 for logarithmic
  double value = 0.0;
  double term1 = 0.0;  // xi sum
  double term2 = 0.0;  // zeta sum

  nlohmann::json to_json() const;
};

// E = sum_j log[xi_j^(1/2) + (1-xi_j)^(1/2)] + (1/2) sum_j log[zeta_j^2 + (1-zeta_j)^2]
NegativityResult log_negativity(const CorrelationMatrix& C, const RegionPartition& P);

// E_ne = sum_j log[xi_j^(ne/2) + (1-xi_j)^(ne/2)] + (ne/2) sum_j log[...],
// even n_e only (the odd case has no Gaussian closed form here).
NegativityResult renyi_negativity(const CorrelationMatrix& C, const RegionPartition& P, int n_e);

struct Entropies {
  double von_neumann = 0.0;
  std::map<double, double> renyi;
};

// Peschel-type entropies from the occupation spectrum of a region's
// correlation matrix. Renyi orders are real (n > 0, n != 1), so the n -> 1
// limit can be probed numerically.
Entropies exact_entropies(const Eigen::MatrixXcd& C_region,
                          const std::vector<double>& renyi_orders = {2, 3, 4});

}  // namespace fnega
