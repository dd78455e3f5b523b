#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fnega/linalg.hpp"
#include "fnega/model.hpp"

using namespace fnega;

namespace {

double hermiticity_defect(const HoppingMatrix& H) {
  return (H.t - H.t.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("all-connected ensemble") {
  const HoppingMatrix H = build_all_connected(2, 42, 1.0);
  CHECK(H.t(0, 1) == std::conj(H.t(1, 0)));
  CHECK(H.t(0, 0).imag() == 0.0);
  CHECK(hermiticity_defect(H) == 0.0);

  SUBCASE("sampled amplitudes have unit second moment") {
    const HoppingMatrix big = build_all_connected(100, 7, 1.0);
    double sum = 0.0;
    int count = 0;
    for (int i = 0; i < big.n; ++i)
      for (int j = i + 1; j < big.n; ++j) {
        sum += std::norm(big.t(i, j));
        ++count;
      }
    CHECK(count == 4950);
    CHECK(sum / count == doctest::Approx(1.0).epsilon(0.10));
  }

  SUBCASE("same parameters reproduce bit-identical matrices") {
    const HoppingMatrix a = build_all_connected(30, 99, 0.5);
    const HoppingMatrix b = build_all_connected(30, 99, 0.5);
    CHECK((a.t - b.t).cwiseAbs().maxCoeff() == 0.0);
    const HoppingMatrix c = build_all_connected(30, 100, 0.5);
    CHECK((a.t - c.t).cwiseAbs().maxCoeff() > 0.0);
  }

  CHECK_THROWS_AS(build_all_connected(0, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_all_connected(4, 1, 0.0), std::invalid_argument);
}

TEST_CASE("local ensemble decays with distance") {
  const HoppingMatrix H = build_local(64, 5, 1.0, 1.0);
  CHECK(hermiticity_defect(H) == 0.0);
  // std at |i-j| = 10 is e^{-10}; any draw is far below order one
  CHECK(std::abs(H.t(0, 10)) < 1e-3);

  // second moments at distance 1 vs 2 differ by ~e^2
  double m1 = 0, m2 = 0;
  const HoppingMatrix big = build_local(400, 11, 1.0, 1.0);
  for (int i = 0; i + 2 < big.n; ++i) {
    m1 += std::norm(big.t(i, i + 1));
    m2 += std::norm(big.t(i, i + 2));
  }
  CHECK(m1 / m2 == doctest::Approx(std::exp(2.0)).epsilon(0.5));

  SUBCASE("degenerate single site") {
    const HoppingMatrix one = build_local(1, 3, 1.0, 1.0);
    CHECK(one.n == 1);
    CHECK(one.t(0, 0).imag() == 0.0);
  }

  SUBCASE("reproducible") {
    CHECK((build_local(16, 8, 2.0, 1.0).t - build_local(16, 8, 2.0, 1.0).t).cwiseAbs().maxCoeff() ==
          0.0);
  }

  CHECK_THROWS_AS(build_local(4, 1, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_local(4, 1, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("translation-invariant ensemble") {
  SUBCASE("range 0 is a constant diagonal") {
    const HoppingMatrix H = build_translation_invariant(6, 4, 0, 1.0);
    for (int i = 0; i < 6; ++i) {
      CHECK(H.t(i, i) == H.t(0, 0));
      for (int j = i + 1; j < 6; ++j) CHECK(H.t(i, j) == std::complex<double>(0, 0));
    }
  }

  SUBCASE("range 3 band structure on 100 sites") {
    const HoppingMatrix H = build_translation_invariant(100, 21, 3, 1.0);
    CHECK(hermiticity_defect(H) == 0.0);
    CHECK(H.t(5, 8) == H.t(20, 23));
    CHECK(H.t(1, 2) == H.t(50, 51));
    CHECK(H.t(0, 4) == std::complex<double>(0, 0));
    // bulk shift invariance within the band
    for (int d = 0; d <= 3; ++d)
      for (int i = 10; i < 90; ++i) CHECK(H.t(i, i + d) == H.t(i + 1, i + d + 1));
  }

  CHECK_THROWS_AS(build_translation_invariant(4, 1, 4, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_translation_invariant(4, 1, -1, 1.0), std::invalid_argument);
}

TEST_CASE("tight-binding chain spectra") {
  const HoppingMatrix h2 = build_tight_binding_chain(2, 1.0, 0.0);
  const Eigen::VectorXd ev2 = hermitian_eigenvalues(h2.t);
  CHECK(ev2(0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ev2(1) == doctest::Approx(1.0).epsilon(1e-12));

  const HoppingMatrix h3 = build_tight_binding_chain(3, 1.0, 0.0);
  const Eigen::VectorXd ev3 = hermitian_eigenvalues(h3.t);
  CHECK(ev3(0) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(ev3(1)) < 1e-12);
  CHECK(ev3(2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  SUBCASE("half-filled spectrum is particle-hole symmetric") {
    const HoppingMatrix h8 = build_tight_binding_chain(8, 1.0, 0.0);
    const Eigen::VectorXd ev = hermitian_eigenvalues(h8.t);
    for (int k = 0; k < 8; ++k) CHECK(ev(k) + ev(7 - k) == doctest::Approx(0.0).epsilon(1e-12));
  }

  CHECK_THROWS_AS(build_tight_binding_chain(1, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("region partitions") {
  const RegionPartition P = make_partition(100, 21, 30, 34, 54);
  CHECK(P.A.size() == 10);
  CHECK(P.B.size() == 21);
  CHECK(P.A.front() == 21);
  CHECK(P.B.back() == 54);

  CHECK_THROWS_AS(make_partition(100, 10, 20, 15, 30), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(100, 10, 9, 20, 30), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(10, 0, 4, 5, 10), std::invalid_argument);

  // adjacent regions (zero separation) are a valid geometry
  const RegionPartition adj = make_partition(10, 0, 4, 5, 9);
  CHECK(adj.A.back() + 1 == adj.B.front());
  CHECK(adj.joint().size() == 10);
}

TEST_CASE("hopping JSON round trip is exact") {
  for (const HoppingMatrix& H :
       {build_all_connected(12, 3, 1.5), build_local(12, 4, 2.0, 1.0),
        build_translation_invariant(12, 5, 2, 1.0), build_tight_binding_chain(12, 1.0, 0.25)}) {
    const HoppingMatrix back = hopping_from_json(to_json(H));
    CHECK(back.n == H.n);
    CHECK(back.ensemble == H.ensemble);
    CHECK((back.t - H.t).cwiseAbs().maxCoeff() == 0.0);
  }
}
