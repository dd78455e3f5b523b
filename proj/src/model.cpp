#include "fnega/model.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>

#include "fnega/rng.hpp"

namespace fnega {

std::string ensemble_name(Ensemble e) {
  switch (e) {
    case Ensemble::AllConnected: return "all-connected";
    case Ensemble::Local: return "local";
    case Ensemble::TranslationInvariant: return "translation-invariant";
    case Ensemble::TightBinding: return "tight-binding";
  }
  throw std::logic_error("ensemble_name: unreachable");
}

Ensemble ensemble_from_name(const std::string& name) {
  if (name == "all-connected") return Ensemble::AllConnected;
  if (name == "local") return Ensemble::Local;
  if (name == "translation-invariant") return Ensemble::TranslationInvariant;
  if (name == "tight-binding") return Ensemble::TightBinding;
  throw std::invalid_argument("unknown ensemble '" + name + "'");
}

namespace {

std::complex<double> random_coupling(Rng& rng, double stddev) {
  // Amplitude from a normal distribution (sign folds into the phase),
  // phase uniform in [0, 2pi).
  const double amp = rng.normal(stddev);
  const double phase = rng.uniform(0.0, 2.0 * M_PI);
  return std::polar(amp, phase);
}

}  // namespace

HoppingMatrix build_all_connected(int n, std::uint64_t seed, double scale) {
  if (n < 1) throw std::invalid_argument("build_all_connected: n must be >= 1");
  if (scale <= 0) throw std::invalid_argument("build_all_connected: scale must be positive");
  HoppingMatrix H;
  H.n = n;
  H.ensemble = Ensemble::AllConnected;
  H.seed = seed;
  H.scale = scale;
  H.t = Eigen::MatrixXcd::Zero(n, n);
  Rng rng(seed);
  for (int i = 0; i < n; ++i) H.t(i, i) = rng.normal(scale);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      H.t(i, j) = random_coupling(rng, scale);
      H.t(j, i) = std::conj(H.t(i, j));
    }
  return H;
}

HoppingMatrix build_local(int n, std::uint64_t seed, double decay_length, double scale) {
  if (n < 1) throw std::invalid_argument("build_local: n must be >= 1");
  if (decay_length <= 0) throw std::invalid_argument("build_local: decay_length must be positive");
  if (scale <= 0) throw std::invalid_argument("build_local: scale must be positive");
  HoppingMatrix H;
  H.n = n;
  H.ensemble = Ensemble::Local;
  H.seed = seed;
  H.scale = scale;
  H.decay_length = decay_length;
  H.t = Eigen::MatrixXcd::Zero(n, n);
  Rng rng(seed);
  for (int i = 0; i < n; ++i) H.t(i, i) = rng.normal(scale);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double stddev = scale * std::exp(-static_cast<double>(j - i) / decay_length);
      H.t(i, j) = random_coupling(rng, stddev);
      H.t(j, i) = std::conj(H.t(i, j));
    }
  return H;
}

HoppingMatrix build_translation_invariant(int n, std::uint64_t seed, int range, double scale) {
  if (n < 1) throw std::invalid_argument("build_translation_invariant: n must be >= 1");
  if (range < 0 || range >= n)
    throw std::invalid_argument("build_translation_invariant: need 0 <= range < n");
  if (scale <= 0) throw std::invalid_argument("build_translation_invariant: scale must be positive");
  HoppingMatrix H;
  H.n = n;
  H.ensemble = Ensemble::TranslationInvariant;
  H.seed = seed;
  H.scale = scale;
  H.range = range;
  H.t = Eigen::MatrixXcd::Zero(n, n);
  Rng rng(seed);
  std::vector<std::complex<double>> coupling(range + 1);
  coupling[0] = rng.normal(scale);  // on-site term is real
  for (int d = 1; d <= range; ++d) coupling[d] = random_coupling(rng, scale);
  for (int i = 0; i < n; ++i)
    for (int d = 0; d <= range && i + d < n; ++d) {
      H.t(i, i + d) = coupling[d];
      H.t(i + d, i) = std::conj(coupling[d]);
    }
  return H;
}

HoppingMatrix build_tight_binding_chain(int n, double hopping, double chemical_potential) {
  if (n < 2) throw std::invalid_argument("build_tight_binding_chain: n must be >= 2");
  HoppingMatrix H;
  H.n = n;
  H.ensemble = Ensemble::TightBinding;
  H.hopping = hopping;
  H.chemical_potential = chemical_potential;
  H.t = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) H.t(i, i) = -chemical_potential;
  for (int i = 0; i + 1 < n; ++i) {
    H.t(i, i + 1) = -hopping;
    H.t(i + 1, i) = -hopping;
  }
  return H;
}

std::vector<int> RegionPartition::joint() const {
  std::vector<int> s = A;
  s.insert(s.end(), B.begin(), B.end());
  return s;
}

RegionPartition make_partition(int n, int a_start, int a_end, int b_start, int b_end) {
  if (a_start > a_end || b_start > b_end)
    throw std::invalid_argument("make_partition: empty range");
  if (a_start < 0 || b_start < 0 || a_end >= n || b_end >= n)
    throw std::invalid_argument("make_partition: range outside [0, n)");
  if (a_start <= b_end && b_start <= a_end)
    throw std::invalid_argument("make_partition: ranges overlap");
  RegionPartition P;
  P.n = n;
  for (int i = a_start; i <= a_end; ++i) P.A.push_back(i);
  for (int i = b_start; i <= b_end; ++i) P.B.push_back(i);
  return P;
}

RegionPartition partition_from_sets(int n, std::vector<int> A, std::vector<int> B) {
  if (A.empty() || B.empty()) throw std::invalid_argument("partition: empty region");
  std::set<int> seen;
  for (int i : A) {
    if (i < 0 || i >= n) throw std::invalid_argument("partition: index outside [0, n)");
    if (!seen.insert(i).second) throw std::invalid_argument("partition: duplicate index");
  }
  for (int i : B) {
    if (i < 0 || i >= n) throw std::invalid_argument("partition: index outside [0, n)");
    if (!seen.insert(i).second) throw std::invalid_argument("partition: regions overlap");
  }
  RegionPartition P;
  P.n = n;
  P.A = std::move(A);
  P.B = std::move(B);
  return P;
}

nlohmann::json to_json(const HoppingMatrix& H) {
  nlohmann::json params;
  switch (H.ensemble) {
    case Ensemble::AllConnected:
      params = {{"scale", H.scale}};
      break;
    case Ensemble::Local:
      params = {{"scale", H.scale}, {"decay_length", H.decay_length}};
      break;
    case Ensemble::TranslationInvariant:
      params = {{"scale", H.scale}, {"range", H.range}};
      break;
    case Ensemble::TightBinding:
      params = {{"hopping", H.hopping}, {"chemical_potential", H.chemical_potential}};
      break;
  }
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < H.n; ++i)
    for (int j = i; j < H.n; ++j)
      entries.push_back({i, j, H.t(i, j).real(), H.t(i, j).imag()});
  return {{"n", H.n},
          {"ensemble", ensemble_name(H.ensemble)},
          {"seed", H.seed},
          {"params", params},
          {"entries", entries}};
}

HoppingMatrix hopping_from_json(const nlohmann::json& j) {
  HoppingMatrix H;
  H.n = j.at("n").get<int>();
  if (H.n < 1) throw std::invalid_argument("hopping_from_json: n must be >= 1");
  H.ensemble = ensemble_from_name(j.at("ensemble").get<std::string>());
  H.seed = j.at("seed").get<std::uint64_t>();
  const auto& params = j.at("params");
  if (params.contains("scale")) H.scale = params.at("scale").get<double>();
  if (params.contains("decay_length")) H.decay_length = params.at("decay_length").get<double>();
  if (params.contains("range")) H.range = params.at("range").get<int>();
  if (params.contains("hopping")) H.hopping = params.at("hopping").get<double>();
  if (params.contains("chemical_potential"))
    H.chemical_potential = params.at("chemical_potential").get<double>();
  H.t = Eigen::MatrixXcd::Zero(H.n, H.n);
  for (const auto& e : j.at("entries")) {
    const int i = e.at(0).get<int>(), k = e.at(1).get<int>();
    if (i < 0 || k < i || k >= H.n) throw std::invalid_argument("hopping_from_json: bad entry index");
    const std::complex<double> v(e.at(2).get<double>(), e.at(3).get<double>());
    H.t(i, k) = v;
    H.t(k, i) = std::conj(v);
  }
  return H;
}

}  // namespace fnega
