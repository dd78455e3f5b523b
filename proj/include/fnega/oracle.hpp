#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fnega/cumulants.hpp"
#include "fnega/model.hpp"

namespace fnega {

// Brute-force Fock-space reference (<= 12 modes, clarity over speed).
// Occupation basis: bit k of the index is the occupation of mode k, with
// |s> = (c_0^dag)^{s_0} (c_1^dag)^{s_1} ... |0>, so annihilating mode i picks
// up (-1)^(number of occupied modes below i).

struct DenseState {
  int n_modes = 0;
  Eigen::MatrixXcd rho;  // 2^n x 2^n
};

// Non-Hermitian in general; trace-preserving.
struct PartialTRState {
  int n_modes = 0;
  int n_a = 0;
  Eigen::MatrixXcd matrix;
};

// rho = e^{-beta H} / Z with H = sum t_ij c_i^dag c_j lifted to Fock space.
DenseState dense_thermal_state(const HoppingMatrix& H, double beta);

// Trace out every mode not in `keep`; the kept modes are reordered to the
// front (in the order given) with Jordan-Wigner sign tracking, then the
// contiguous tail is traced.
DenseState partial_trace(const DenseState& state, const std::vector<int>& keep);

// Partial time reversal on the first n_a modes of a state living on exactly
// A u B (A modes first):
//   (|nA nB><mA mB|)^{R_A} -> (-1)^phi |mA nB><nA mB|
// with the combinatorial phase phi of the occupation totals; phi may be
// half-integer, so the phase is a fourth root of unity.
PartialTRState partial_time_reversal(const DenseState& state, int n_a);

// E = log sum of singular values of rho^{R_A}.
double trace_norm_negativity(const PartialTRState& state);

// E_n = log Tr[(rho^R rho^R_dag)^{n/2}] for even n,
//       log Tr[(rho^R rho^R_dag)^{(n-1)/2} rho^R] for odd n.
double renyi_negativity_exact(const PartialTRState& state, int n);

// Joint cumulants of (Q_A, Q_B) on a state over A u B (A modes first),
// via exact moments and a truncated bivariate log series.
CumulantSet charge_cumulants_exact(const DenseState& state, int n_a, unsigned max_order);

// C_ij = Tr(rho c_i^dag c_j), for cross-checks against the Gaussian pipeline.
Eigen::MatrixXcd occupation_correlations(const DenseState& state);

}  // namespace fnega
