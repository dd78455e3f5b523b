#include "fnega/linalg.hpp"

#include <complex>
#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include <random>
#include <string>

#include "fnega/errors.hpp"

namespace fnega {

namespace {

// Residual QA for the eigensolver contract. Full ||hV - Veps||_F for small
// matrices; for large ones an unbiased Frobenius estimate from Gaussian
// probes (E||R x||^2 = ||R||_F^2 for unit-variance x).
void check_residual(const Eigen::MatrixXcd& h, const HermitianEigen& eig) {
  const auto n = h.rows();
  if (n == 0) return;
  const double href = h.norm();
  const double tol = 1e-10 * std::max(href, 1.0);
  double resid = 0.0;
  const Eigen::MatrixXcd V = eig.real_path
                                 ? Eigen::MatrixXcd(eig.eigenvectors_real.cast<std::complex<double>>())
                                 : eig.eigenvectors;
  const Eigen::VectorXcd evals = eig.eigenvalues.cast<std::complex<double>>();
  if (n <= 1024) {
    resid = (h * V - V * evals.asDiagonal()).norm();
  } else {
    std::mt19937_64 gen(0x7e57);
    std::normal_distribution<double> dist;
    const int probes = 8;
    double acc = 0.0;
    for (int p = 0; p < probes; ++p) {
      Eigen::VectorXcd x(n);
      for (Eigen::Index i = 0; i < n; ++i) x(i) = std::complex<double>(dist(gen), dist(gen));
      x /= std::sqrt(2.0);
      const Eigen::VectorXcd r = h * (V * x) - V * x.cwiseProduct(evals);
      acc += r.squaredNorm();
    }
    resid = std::sqrt(acc / probes);
  }
  if (resid > tol)
    throw numerical_error("hermitian_eigensystem: residual " + std::to_string(resid) +
                          " exceeds contract " + std::to_string(tol));
}

}  // namespace

HermitianEigen hermitian_eigensystem(const Eigen::MatrixXcd& h) {
  const lapack_int n = static_cast<lapack_int>(h.rows());
  if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_eigensystem: matrix not square");
  HermitianEigen out;
  out.eigenvalues.resize(n);
  const bool is_real = h.imag().cwiseAbs().maxCoeff() == 0.0;
  lapack_int info;
  if (is_real) {
    out.real_path = true;
    out.eigenvectors_real = h.real();
    info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, out.eigenvectors_real.data(), n,
                          out.eigenvalues.data());
  } else {
    out.eigenvectors = h;
    info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                          reinterpret_cast<lapack_complex_double*>(out.eigenvectors.data()), n,
                          out.eigenvalues.data());
  }
  if (info != 0)
    throw numerical_error("hermitian_eigensystem: LAPACK info = " + std::to_string(info));
  check_residual(h, out);
  return out;
}

Eigen::VectorXcd general_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw numerical_error("general_eigenvalues: eigensolver did not converge");
  return solver.eigenvalues();
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& h) {
  const lapack_int n = static_cast<lapack_int>(h.rows());
  Eigen::VectorXd vals(n);
  Eigen::MatrixXcd work = h;
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n,
                     reinterpret_cast<lapack_complex_double*>(work.data()), n, vals.data());
  if (info != 0)
    throw numerical_error("hermitian_eigenvalues: LAPACK info = " + std::to_string(info));
  return vals;
}

void clamp_unit_interval(Eigen::VectorXd& v, double tol) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) < -tol || v(i) > 1.0 + tol)
      throw numerical_error("spectrum leaves [0,1] by " +
                            std::to_string(std::max(-v(i), v(i) - 1.0)));
    v(i) = std::min(1.0, std::max(0.0, v(i)));
  }
}

}  // namespace fnega
