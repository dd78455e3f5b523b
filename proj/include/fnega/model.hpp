#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace fnega {

enum class Ensemble { AllConnected, Local, TranslationInvariant, TightBinding };

std::string ensemble_name(Ensemble e);
Ensemble ensemble_from_name(const std::string& name);

// Hermitian single-particle hopping matrix t_ij plus the metadata needed to
// regenerate it. Hermiticity is exact by construction (upper triangle drawn,
// lower triangle mirror-conjugated, real diagonal).
struct HoppingMatrix {
  int n = 0;
  Eigen::MatrixXcd t;
  Ensemble ensemble = Ensemble::AllConnected;
  std::uint64_t seed = 0;
  double scale = 1.0;
  double decay_length = 0.0;      // local ensemble
  int range = 0;                  // translation-invariant ensemble
  double hopping = 0.0;           // tight-binding chain
  double chemical_potential = 0.0;
};

// Random all-to-all hopping: |t_ij| ~ N(0, scale), phase uniform in [0, 2pi),
// real normal diagonal. Draw order: diagonal first, then upper triangle
// row-major, so matrices are bit-reproducible for a fixed seed.
HoppingMatrix build_all_connected(int n, std::uint64_t seed, double scale);

// Random hopping with amplitude std scale * exp(-|i-j| / decay_length).
HoppingMatrix build_local(int n, std::uint64_t seed, double decay_length, double scale);

// Random couplings t_d for d = 0..range (t_0 real), t_{i,i+d} = t_d with open
// boundaries; zero beyond the band.
HoppingMatrix build_translation_invariant(int n, std::uint64_t seed, int range, double scale);

// Deterministic open chain: t_{i,i+1} = -hopping, t_ii = -chemical_potential.
HoppingMatrix build_tight_binding_chain(int n, double hopping, double chemical_potential);

// Two disjoint site sets A and B inside n sites; the complement is implicit.
struct RegionPartition {
  int n = 0;
  std::vector<int> A, B;

  std::vector<int> joint() const;  // A followed by B
};

// Contiguous regions, inclusive index ranges [a_start, a_end], [b_start, b_end].
RegionPartition make_partition(int n, int a_start, int a_end, int b_start, int b_end);
RegionPartition partition_from_sets(int n, std::vector<int> A, std::vector<int> B);

nlohmann::json to_json(const HoppingMatrix& H);
HoppingMatrix hopping_from_json(const nlohmann::json& j);

}  // namespace fnega
