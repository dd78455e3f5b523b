#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace fnega::kernels {

// Data-parallel inner loops, each in an OpenMP variant and a serial
// reference. The OpenMP variants parallelize over output entries (or fold
// per-row partials in index order), so results are bitwise identical to the
// serial reference and across repeated runs.

bool openmp_enabled();
int max_threads();

// out(r, c) = sum_k conj(V(rows[r], k)) * w(k) * V(cols[c], k)
// The mode-sum that assembles a correlation-matrix block from eigenvectors
// V and occupation weights w without forming the full n x n matrix.
Eigen::MatrixXcd subset_correlation_serial(const Eigen::MatrixXcd& V, const Eigen::VectorXd& w,
                                           const std::vector<int>& rows, const std::vector<int>& cols);
Eigen::MatrixXcd subset_correlation_serial(const Eigen::MatrixXd& V, const Eigen::VectorXd& w,
                                           const std::vector<int>& rows, const std::vector<int>& cols);
Eigen::MatrixXcd subset_correlation_omp(const Eigen::MatrixXcd& V, const Eigen::VectorXd& w,
                                        const std::vector<int>& rows, const std::vector<int>& cols);
Eigen::MatrixXcd subset_correlation_omp(const Eigen::MatrixXd& V, const Eigen::VectorXd& w,
                                        const std::vector<int>& rows, const std::vector<int>& cols);

// Dispatches to the OpenMP variant when compiled with OpenMP.
template <class Mat>
Eigen::MatrixXcd subset_correlation(const Mat& V, const Eigen::VectorXd& w,
                                    const std::vector<int>& rows, const std::vector<int>& cols) {
#ifdef _OPENMP
  return subset_correlation_omp(V, w, rows, cols);
#else
  return subset_correlation_serial(V, w, rows, cols);
#endif
}

// tr(X * Y) without materializing the product.
std::complex<double> trace_product_serial(const Eigen::MatrixXcd& X, const Eigen::MatrixXcd& Y);
std::complex<double> trace_product_omp(const Eigen::MatrixXcd& X, const Eigen::MatrixXcd& Y);
std::complex<double> trace_product(const Eigen::MatrixXcd& X, const Eigen::MatrixXcd& Y);

}  // namespace fnega::kernels
