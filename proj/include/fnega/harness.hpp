#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "fnega/model.hpp"

namespace fnega {

// Plot-ready result table. Cells are typed so CSV output can pin the number
// format (17 significant digits) and JSON output can stay numeric.
using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string render_csv(const Table& table);
nlohmann::json table_to_json(const Table& table);

// Write as "csv" or "json". Deterministic byte-for-byte for equal tables.
void emit(const Table& table, const std::string& format, const std::string& path);

// Convergence study of the charge-correlator expansion against the exact
// Gaussian negativity over an ensemble x temperature grid.
struct SweepConfig {
  Ensemble ensemble = Ensemble::TranslationInvariant;
  int n = 100;
  double scale = 1.0;
  double decay_length = 1.0;  // local ensemble
  int range = 3;              // translation-invariant ensemble
  double mu = 0.0;
  std::vector<std::uint64_t> seeds;
  std::vector<double> temperatures;  // strictly increasing, positive
  int a_start = 21, a_end = 30, b_start = 34, b_end = 54;

  // 100-site chain, regions 21-30 / 34-54, 10 seeds, T in [0.1, 10].
  static SweepConfig defaults();
  void validate() const;
};

std::vector<double> log_spaced(double lo, double hi, int count);

// Columns: seed, T, beta, E_exact, E2_exact, E4_exact, E2_ord2, E2_ord24,
// E4_ord2, E4_ord24, Elim_ord2, Elim_ord24, the eight cumulants, status.
// Rows are independent work items; they are computed in parallel and stored
// in (seed, T) order. A failed row is flagged in `status` and the sweep
// continues.
Table convergence_sweep(const SweepConfig& cfg);

// Zero-temperature scaling experiments on the half-filled open chain.
struct ScalingConfig {
  int n = 2048;
  double filling = 0.5;
  int l1 = 8, l2 = 8;                 // distant-interval mode
  std::vector<int> lengths;           // adjacent mode ladder (l1 = l2 = l)
  std::vector<int> separations;       // distant mode ladder
  int fit_min = 0;                    // fit window on l (adjacent) or d (distant)
  int fit_max = std::numeric_limits<int>::max();

  static ScalingConfig adjacent_defaults();
  static ScalingConfig distant_defaults();
  void validate_adjacent() const;
  void validate_distant() const;
};

struct FitReport {
  Table table;
  // adjacent: slope/intercept/residual of <Q_A^2>_c vs log l, plus the
  // E^(2) replica-limit fit (slope expected chi_F/4) and its cutoff epsilon.
  double slope = 0.0, intercept = 0.0, residual_rms = 0.0;
  double e2lim_slope = 0.0, e2lim_intercept = 0.0, e2lim_residual_rms = 0.0;
  double epsilon = 0.0;
  // distant: power law of E^(2) replica limit vs separation.
  double power = 0.0, prefactor = 0.0;
};

// Adjacent intervals (d = 0): <Q_A^2>_c, <Q_B^2>_c, <Q_AQ_B>_c and the
// replica-limit second-order term over a ladder of l = l1 = l2.
FitReport scaling_adjacent(const ScalingConfig& cfg);

// Distant intervals: E^(2) replica limit over a ladder of separations d at
// fixed l1, l2; lattice parity oscillations are averaged by fitting the
// midpoints of (d, d+1) pairs. Values below 1e-14 are excluded from the fit.
FitReport scaling_distant(const ScalingConfig& cfg);

}  // namespace fnega
