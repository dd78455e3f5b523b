#include "doctest.h"

#include <complex>
#include <vector>

#include "fnega/kernels.hpp"

using namespace fnega;

namespace {

std::vector<int> iota_sites(int first, int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = first + i;
  return v;
}

}  // namespace

TEST_CASE("subset correlation: OpenMP variant is bitwise equal to serial") {
  const int n = 37, k = 23;
  const Eigen::MatrixXcd V = Eigen::MatrixXcd::Random(n, k);
  const Eigen::VectorXd w = Eigen::VectorXd::Random(k).cwiseAbs();
  const auto rows = iota_sites(3, 11);
  const auto cols = iota_sites(9, 19);
  const Eigen::MatrixXcd a = kernels::subset_correlation_serial(V, w, rows, cols);
  const Eigen::MatrixXcd b = kernels::subset_correlation_omp(V, w, rows, cols);
  REQUIRE(a.rows() == b.rows());
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);

  SUBCASE("matches a dense reference contraction") {
    Eigen::MatrixXcd ref(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::complex<double> acc = 0.0;
        for (int m = 0; m < k; ++m) acc += std::conj(V(rows[r], m)) * w(m) * V(cols[c], m);
        ref(r, c) = acc;
      }
    CHECK((a - ref).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("subset correlation real overload equals complex path") {
  const int n = 20, k = 20;
  const Eigen::MatrixXd V = Eigen::MatrixXd::Random(n, k);
  const Eigen::VectorXd w = Eigen::VectorXd::Random(k).cwiseAbs();
  const auto sites = iota_sites(2, 9);
  const Eigen::MatrixXcd real_path = kernels::subset_correlation_serial(V, w, sites, sites);
  const Eigen::MatrixXcd complex_path =
      kernels::subset_correlation_serial(Eigen::MatrixXcd(V.cast<std::complex<double>>()), w,
                                         sites, sites);
  CHECK((real_path - complex_path).cwiseAbs().maxCoeff() == 0.0);
  CHECK(real_path.imag().cwiseAbs().maxCoeff() == 0.0);
  CHECK((kernels::subset_correlation_omp(V, w, sites, sites) - real_path).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("trace product: serial, OpenMP, and Eigen agree") {
  const Eigen::MatrixXcd X = Eigen::MatrixXcd::Random(31, 17);
  const Eigen::MatrixXcd Y = Eigen::MatrixXcd::Random(17, 31);
  const std::complex<double> s = kernels::trace_product_serial(X, Y);
  const std::complex<double> p = kernels::trace_product_omp(X, Y);
  CHECK(s == p);  // identical fold order, bitwise equal
  const std::complex<double> dense = (X * Y).trace();
  CHECK(std::abs(s - dense) < 1e-12);
  CHECK_THROWS(kernels::trace_product_serial(X, X));
}
