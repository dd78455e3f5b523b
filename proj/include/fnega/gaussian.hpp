#pragma once

#include <Eigen/Dense>

#include "fnega/model.hpp"

namespace fnega {

// Two-point correlator C_ij = <c_i^dag c_j> of a Gaussian state. With the
// mode expansion c_i = sum_k V_ik d_k this is the transpose of f(h) (not
// f(h) itself); the convention is pinned by a closed-form 2-site check and
// by exact Fock-space cross-validation.
struct CorrelationMatrix {
  int n = 0;
  Eigen::MatrixXcd C;
  double beta = 0.0;  // +inf for ground states
  double mu = 0.0;
};

// Thermal state rho = e^{-beta (H - mu N)} / Z.
CorrelationMatrix thermal_correlations(const HoppingMatrix& H, double beta, double mu = 0.0);

// Projector onto the round(filling * n) lowest modes (transposed); ties at
// the Fermi level broken by ascending eigenvalue index.
CorrelationMatrix ground_state_correlations(const HoppingMatrix& H, double filling);

// Restriction C_AB in A-then-B index order; the correlation matrix of rho_AB.
Eigen::MatrixXcd restrict_correlations(const CorrelationMatrix& C, const RegionPartition& P);

struct BlockViews {
  Eigen::MatrixXcd C11, C12, C21, C22;
};

BlockViews blocks(const CorrelationMatrix& C, const RegionPartition& P);
BlockViews blocks_from_joint(const Eigen::MatrixXcd& C_AB, int n_a);

// Ground-state correlations on a site subset only, without forming the full
// n x n matrix (the large-chain scaling path). Sites are returned in the
// given order.
Eigen::MatrixXcd ground_state_correlations_on(const HoppingMatrix& H, double filling,
                                              const std::vector<int>& sites);

}  // namespace fnega
