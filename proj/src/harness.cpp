#include "fnega/harness.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "fnega/cumulants.hpp"
#include "fnega/errors.hpp"
#include "fnega/expansion.hpp"
#include "fnega/gaussian.hpp"
#include "fnega/kernels.hpp"
#include "fnega/linalg.hpp"
#include "fnega/negativity.hpp"

namespace fnega {

namespace {

std::string format_cell(const Cell& cell) {
  if (std::holds_alternative<long long>(cell)) return std::to_string(std::get<long long>(cell));
  if (std::holds_alternative<double>(cell)) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(cell));
    return buf;
  }
  std::string s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  }
  return s;
}

}  // namespace

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_cell(row[c]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json table_to_json(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      const Cell& cell = row[c];
      if (std::holds_alternative<long long>(cell))
        obj[table.columns[c]] = std::get<long long>(cell);
      else if (std::holds_alternative<double>(cell))
        obj[table.columns[c]] = std::get<double>(cell);
      else
        obj[table.columns[c]] = std::get<std::string>(cell);
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

void emit(const Table& table, const std::string& format, const std::string& path) {
  if (table.rows.empty()) throw std::invalid_argument("emit: empty table");
  std::string payload;
  if (format == "csv") {
    payload = render_csv(table);
  } else if (format == "json") {
    payload = table_to_json(table).dump(2);
    payload += '\n';
  } else {
    throw std::invalid_argument("emit: unknown format '" + format + "'");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("emit: cannot open '" + path + "' for writing");
  out << payload;
  if (!out) throw io_error("emit: write to '" + path + "' failed");
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0) || !(hi > lo) || count < 2)
    throw std::invalid_argument("log_spaced: need 0 < lo < hi and count >= 2");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
  return out;
}

SweepConfig SweepConfig::defaults() {
  SweepConfig cfg;
  for (std::uint64_t s = 1; s <= 10; ++s) cfg.seeds.push_back(s);
  cfg.temperatures = log_spaced(0.1, 10.0, 13);
  return cfg;
}

void SweepConfig::validate() const {
  if (seeds.empty()) throw std::invalid_argument("sweep: seed list empty");
  if (temperatures.empty()) throw std::invalid_argument("sweep: temperature grid empty");
  for (std::size_t i = 0; i < temperatures.size(); ++i) {
    if (!(temperatures[i] > 0)) throw std::invalid_argument("sweep: temperatures must be positive");
    if (i > 0 && !(temperatures[i] > temperatures[i - 1]))
      throw std::invalid_argument("sweep: temperatures must be strictly increasing");
  }
  if (ensemble == Ensemble::TightBinding)
    throw std::invalid_argument("sweep: tight-binding has no random ensemble to average");
  make_partition(n, a_start, a_end, b_start, b_end);  // throws on bad geometry
}

namespace {

HoppingMatrix build_sweep_hamiltonian(const SweepConfig& cfg, std::uint64_t seed) {
  switch (cfg.ensemble) {
    case Ensemble::AllConnected:
      return build_all_connected(cfg.n, seed, cfg.scale);
    case Ensemble::Local:
      return build_local(cfg.n, seed, cfg.decay_length, cfg.scale);
    case Ensemble::TranslationInvariant:
      return build_translation_invariant(cfg.n, seed, cfg.range, cfg.scale);
    case Ensemble::TightBinding:
      break;
  }
  throw std::invalid_argument("sweep: unsupported ensemble");
}

}  // namespace

Table convergence_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const RegionPartition P = make_partition(cfg.n, cfg.a_start, cfg.a_end, cfg.b_start, cfg.b_end);

  // Coefficient tables are exact rationals; build them once, outside the loop.
  const std::set<unsigned> orders{2, 4};
  std::map<unsigned, std::map<std::pair<unsigned, unsigned>, Rational>> coeff2, coeff4, coeff_lim;
  for (unsigned M : orders) {
    const ExpansionCoefficients sym = negativity_coefficients(M);
    for (const auto& [key, fn] : sym.terms) {
      coeff2[M][key] = fn.eval(Rational(2));
      coeff4[M][key] = fn.eval(Rational(4));
      coeff_lim[M][key] = fn.limit(Rational(1));
    }
    coeff2.try_emplace(M);
    coeff4.try_emplace(M);
    coeff_lim.try_emplace(M);
  }

  Table table;
  table.columns = {"seed",     "T",        "beta",     "E_exact",  "E2_exact", "E4_exact",
                   "E2_ord2",  "E2_ord24", "E4_ord2",  "E4_ord24", "Elim_ord2", "Elim_ord24",
                   "c20",      "c11",      "c02",      "c40",      "c31",       "c22",
                   "c13",      "c04",      "status"};
  const std::size_t n_tasks = cfg.seeds.size() * cfg.temperatures.size();
  table.rows.resize(n_tasks);

  // Rows are independent; output order is (seed, T) regardless of schedule.
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t task = 0; task < static_cast<std::ptrdiff_t>(n_tasks); ++task) {
    const std::size_t si = task / cfg.temperatures.size();
    const std::size_t ti = task % cfg.temperatures.size();
    const std::uint64_t seed = cfg.seeds[si];
    const double T = cfg.temperatures[ti];
    std::vector<Cell> row;
    row.emplace_back(static_cast<long long>(seed));
    row.emplace_back(T);
    row.emplace_back(1.0 / T);
    try {
      const HoppingMatrix H = build_sweep_hamiltonian(cfg, seed);
      const CorrelationMatrix C = thermal_correlations(H, 1.0 / T, cfg.mu);
      const BlockViews B = blocks(C, P);
      const CumulantSet cums = wick_cumulants(B, 4);
      const NegativityResult e = log_negativity(C, P);
      const NegativityResult e2 = renyi_negativity(C, P, 2);
      const NegativityResult e4 = renyi_negativity(C, P, 4);
      const ExpansionValue x2 = evaluate_expansion(coeff2, cums, orders);
      const ExpansionValue x4 = evaluate_expansion(coeff4, cums, orders);
      const ExpansionValue xl = evaluate_expansion(coeff_lim, cums, orders);
      row.emplace_back(e.value);
      row.emplace_back(e2.value);
      row.emplace_back(e4.value);
      row.emplace_back(x2.cumulative.at(2));
      row.emplace_back(x2.cumulative.at(4));
      row.emplace_back(x4.cumulative.at(2));
      row.emplace_back(x4.cumulative.at(4));
      row.emplace_back(xl.cumulative.at(2));
      row.emplace_back(xl.cumulative.at(4));
      for (auto [a, b] : {std::pair{2u, 0u}, {1u, 1u}, {0u, 2u}, {4u, 0u}, {3u, 1u}, {2u, 2u},
                          {1u, 3u}, {0u, 4u}})
        row.emplace_back(cums.at(a, b));
      row.emplace_back(std::string("ok"));
    } catch (const std::exception& err) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      while (row.size() < table.columns.size() - 1) row.emplace_back(nan);
      row.emplace_back(std::string("error: ") + err.what());
    }
    table.rows[task] = std::move(row);
  }
  return table;
}

// --- zero-temperature scaling ------------------------------------------------

ScalingConfig ScalingConfig::adjacent_defaults() {
  ScalingConfig cfg;
  cfg.n = 2048;
  cfg.lengths = {32, 64, 128, 256, 512};
  return cfg;
}

ScalingConfig ScalingConfig::distant_defaults() {
  ScalingConfig cfg;
  cfg.n = 4096;
  cfg.l1 = cfg.l2 = 8;
  cfg.separations = {64, 91, 128, 181, 256, 362, 512};
  return cfg;
}

void ScalingConfig::validate_adjacent() const {
  if (lengths.empty()) throw std::invalid_argument("scaling: length ladder empty");
  for (int l : lengths)
    if (l < 1 || 2 * l + 4 > n) throw std::invalid_argument("scaling: interval does not fit chain");
  if (!(filling >= 0 && filling <= 1)) throw std::invalid_argument("scaling: bad filling");
}

void ScalingConfig::validate_distant() const {
  if (separations.empty()) throw std::invalid_argument("scaling: separation ladder empty");
  if (l1 < 1 || l2 < 1) throw std::invalid_argument("scaling: interval lengths must be positive");
  for (int d : separations)
    if (d < 1 || l1 + l2 + d + 1 + 4 > n)
      throw std::invalid_argument("scaling: geometry does not fit chain");
  if (!(filling >= 0 && filling <= 1)) throw std::invalid_argument("scaling: bad filling");
}

namespace {

struct ChainSpectrum {
  HermitianEigen eig;
  Eigen::VectorXd weights;
};

ChainSpectrum half_filled_spectrum(int n, double filling) {
  const HoppingMatrix H = build_tight_binding_chain(n, 1.0, 0.0);
  ChainSpectrum s{hermitian_eigensystem(H.t), Eigen::VectorXd::Zero(n)};
  const long k_occ = std::llround(filling * n);
  for (long k = 0; k < k_occ; ++k) s.weights(k) = 1.0;
  return s;
}

Eigen::MatrixXcd correlations_on(const ChainSpectrum& s, const std::vector<int>& sites) {
  return s.eig.real_path
             ? kernels::subset_correlation(s.eig.eigenvectors_real, s.weights, sites, sites)
             : kernels::subset_correlation(s.eig.eigenvectors, s.weights, sites, sites);
}

std::vector<int> interval(int first, int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = first + i;
  return v;
}

struct LineFit {
  double slope = 0.0, intercept = 0.0, residual_rms = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t m = x.size();
  if (m < 2) throw numerical_error("fit_line: need at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = m * sxx - sx * sx;
  if (det == 0) throw numerical_error("fit_line: singular normal equations");
  LineFit f;
  f.slope = (m * sxy - sx * sy) / det;
  f.intercept = (sy * sxx - sx * sxy) / det;
  double ss = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = y[i] - (f.slope * x[i] + f.intercept);
    ss += r * r;
  }
  f.residual_rms = std::sqrt(ss / m);
  return f;
}

// The second-order replica-limit term from order-2 cumulants alone.
double e2_replica_limit(const CumulantSet& cums) {
  static const std::map<unsigned, std::map<std::pair<unsigned, unsigned>, Rational>> coeff = {
      {2u, negativity_coefficients_replica_limit(2)}};
  return evaluate_expansion(coeff, cums, {2}).order_terms.at(2);
}

CumulantSet order2_on(const ChainSpectrum& s, int a_first, int la, int b_first, int lb) {
  std::vector<int> sites = interval(a_first, la);
  const std::vector<int> bsites = interval(b_first, lb);
  sites.insert(sites.end(), bsites.begin(), bsites.end());
  const Eigen::MatrixXcd C_AB = correlations_on(s, sites);
  return cumulants_order2(blocks_from_joint(C_AB, la));
}

}  // namespace

FitReport scaling_adjacent(const ScalingConfig& cfg) {
  cfg.validate_adjacent();
  const ChainSpectrum spectrum = half_filled_spectrum(cfg.n, cfg.filling);
  FitReport report;
  report.table.columns = {"l", "qa2", "qb2", "qab", "e2_replica_limit"};
  std::vector<double> log_l, qa2, log_geo, e2lim;
  for (int l : cfg.lengths) {
    const int mid = cfg.n / 2;
    const CumulantSet cums = order2_on(spectrum, mid - l, l, mid, l);
    const double e2 = e2_replica_limit(cums);
    report.table.rows.push_back({static_cast<long long>(l), cums.at(2, 0), cums.at(0, 2),
                                 cums.at(1, 1), e2});
    if (l >= cfg.fit_min && l <= cfg.fit_max) {
      log_l.push_back(std::log(static_cast<double>(l)));
      qa2.push_back(cums.at(2, 0));
      log_geo.push_back(std::log(static_cast<double>(l) * l / (2.0 * l)));
      e2lim.push_back(e2);
    }
  }
  const LineFit var_fit = fit_line(log_l, qa2);
  report.slope = var_fit.slope;
  report.intercept = var_fit.intercept;
  report.residual_rms = var_fit.residual_rms;
  const LineFit e2_fit = fit_line(log_geo, e2lim);
  report.e2lim_slope = e2_fit.slope;
  report.e2lim_intercept = e2_fit.intercept;
  report.e2lim_residual_rms = e2_fit.residual_rms;
  report.epsilon = std::exp(-e2_fit.intercept / e2_fit.slope);
  return report;
}

FitReport scaling_distant(const ScalingConfig& cfg) {
  cfg.validate_distant();
  const ChainSpectrum spectrum = half_filled_spectrum(cfg.n, cfg.filling);
  FitReport report;
  report.table.columns = {"d", "qab", "e2_replica_limit", "qab_next", "e2_next", "e2_midpoint"};
  std::vector<double> log_d, log_e;
  for (int d : cfg.separations) {
    double e2[2], qab[2];
    for (int parity = 0; parity < 2; ++parity) {
      const int dd = d + parity;
      const int a_first = (cfg.n - (cfg.l1 + dd + cfg.l2)) / 2;
      const CumulantSet cums =
          order2_on(spectrum, a_first, cfg.l1, a_first + cfg.l1 + dd, cfg.l2);
      qab[parity] = cums.at(1, 1);
      e2[parity] = e2_replica_limit(cums);
    }
    const double midpoint = 0.5 * (e2[0] + e2[1]);
    report.table.rows.push_back({static_cast<long long>(d), qab[0], e2[0], qab[1], e2[1],
                                 midpoint});
    if (d >= cfg.fit_min && d <= cfg.fit_max && midpoint > 1e-14) {
      log_d.push_back(std::log(d + 0.5));
      log_e.push_back(std::log(midpoint));
    }
  }
  const LineFit fit = fit_line(log_d, log_e);
  report.slope = fit.slope;
  report.intercept = fit.intercept;
  report.residual_rms = fit.residual_rms;
  report.power = fit.slope;
  report.prefactor = std::exp(fit.intercept);
  return report;
}

}  // namespace fnega
