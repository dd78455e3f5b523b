#pragma once

#include <Eigen/Dense>

namespace fnega {

// Eigendecomposition of a Hermitian matrix, eigenvalues ascending. Backed by
// LAPACK (dsyevd for real-symmetric input, zheevd otherwise). The residual
// ||h V - V diag(eps)|| <= 1e-10 ||h|| is verified after every solve (exactly
// for small matrices, by random probes above 1024 sites) and a violation
// raises numerical_error.
struct HermitianEigen {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;   // columns; empty when the real path was taken
  Eigen::MatrixXd eigenvectors_real;
  bool real_path = false;
};

HermitianEigen hermitian_eigensystem(const Eigen::MatrixXcd& h);

// Eigenvalues of a general (non-Hermitian) complex matrix.
Eigen::VectorXcd general_eigenvalues(const Eigen::MatrixXcd& m);

// Eigenvalues of a Hermitian matrix only (no vectors).
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& h);

// Clamp values into [0, 1]; an excursion beyond tol raises numerical_error.
void clamp_unit_interval(Eigen::VectorXd& v, double tol = 1e-12);

}  // namespace fnega
