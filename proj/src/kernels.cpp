#include "fnega/kernels.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fnega::kernels {

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

template <class Mat>
Eigen::MatrixXcd subset_correlation_impl_serial(const Mat& V, const Eigen::VectorXd& w,
                                                const std::vector<int>& rows,
                                                const std::vector<int>& cols) {
  const Eigen::Index nk = V.cols();
  if (w.size() != nk) throw std::invalid_argument("subset_correlation: weight size mismatch");
  Eigen::MatrixXcd out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::complex<double> acc = 0.0;
      for (Eigen::Index k = 0; k < nk; ++k)
        acc += std::conj(std::complex<double>(V(rows[r], k))) * w(k) *
               std::complex<double>(V(cols[c], k));
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  return out;
}

template <class Mat>
Eigen::MatrixXcd subset_correlation_impl_omp(const Mat& V, const Eigen::VectorXd& w,
                                             const std::vector<int>& rows,
                                             const std::vector<int>& cols) {
  const Eigen::Index nk = V.cols();
  if (w.size() != nk) throw std::invalid_argument("subset_correlation: weight size mismatch");
  Eigen::MatrixXcd out(rows.size(), cols.size());
  const std::ptrdiff_t nr = static_cast<std::ptrdiff_t>(rows.size());
  const std::ptrdiff_t nc = static_cast<std::ptrdiff_t>(cols.size());
  // Each output entry is an independent serial mode-sum, so the schedule
  // cannot change the result.
#pragma omp parallel for collapse(2) schedule(static)
  for (std::ptrdiff_t r = 0; r < nr; ++r)
    for (std::ptrdiff_t c = 0; c < nc; ++c) {
      std::complex<double> acc = 0.0;
      for (Eigen::Index k = 0; k < nk; ++k)
        acc += std::conj(std::complex<double>(V(rows[r], k))) * w(k) *
               std::complex<double>(V(cols[c], k));
      out(r, c) = acc;
    }
  return out;
}

}  // namespace

Eigen::MatrixXcd subset_correlation_serial(const Eigen::MatrixXcd& V, const Eigen::VectorXd& w,
                                           const std::vector<int>& rows, const std::vector<int>& cols) {
  return subset_correlation_impl_serial(V, w, rows, cols);
}

Eigen::MatrixXcd subset_correlation_serial(const Eigen::MatrixXd& V, const Eigen::VectorXd& w,
                                           const std::vector<int>& rows, const std::vector<int>& cols) {
  return subset_correlation_impl_serial(V, w, rows, cols);
}

Eigen::MatrixXcd subset_correlation_omp(const Eigen::MatrixXcd& V, const Eigen::VectorXd& w,
                                        const std::vector<int>& rows, const std::vector<int>& cols) {
  return subset_correlation_impl_omp(V, w, rows, cols);
}

Eigen::MatrixXcd subset_correlation_omp(const Eigen::MatrixXd& V, const Eigen::VectorXd& w,
                                        const std::vector<int>& rows, const std::vector<int>& cols) {
  return subset_correlation_impl_omp(V, w, rows, cols);
}

std::complex<double> trace_product_serial(const Eigen::MatrixXcd& X, const Eigen::MatrixXcd& Y) {
  if (X.cols() != Y.rows() || Y.cols() != X.rows())
    throw std::invalid_argument("trace_product: shape mismatch");
  std::complex<double> acc = 0.0;
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    std::complex<double> row = 0.0;
    for (Eigen::Index k = 0; k < X.cols(); ++k) row += X(i, k) * Y(k, i);
    acc += row;
  }
  return acc;
}

std::complex<double> trace_product_omp(const Eigen::MatrixXcd& X, const Eigen::MatrixXcd& Y) {
  if (X.cols() != Y.rows() || Y.cols() != X.rows())
    throw std::invalid_argument("trace_product: shape mismatch");
  const Eigen::Index n = X.rows();
  std::vector<std::complex<double>> partial(static_cast<std::size_t>(n));
  // Per-row partials computed in parallel, folded serially in index order.
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    std::complex<double> acc = 0.0;
    for (Eigen::Index k = 0; k < X.cols(); ++k) acc += X(i, k) * Y(k, i);
    partial[static_cast<std::size_t>(i)] = acc;
  }
  std::complex<double> acc = 0.0;
  for (const auto& p : partial) acc += p;
  return acc;
}

std::complex<double> trace_product(const Eigen::MatrixXcd& X, const Eigen::MatrixXcd& Y) {
#ifdef _OPENMP
  return trace_product_omp(X, Y);
#else
  return trace_product_serial(X, Y);
#endif
}

}  // namespace fnega::kernels
