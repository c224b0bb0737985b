#include "qes/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qes/errors.hpp"

namespace qes {

namespace {

constexpr double kScanOffset = 1e-3;

double base_tolerance(const CatalogEntry& entry) { return entry.family == Family::coulomb ? 5e-3 : 1e-3; }

// Index of the numeric value closest to target.
std::size_t nearest(const std::vector<double>& values, double target) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (std::abs(values[i] - target) < std::abs(values[best] - target)) best = i;
  return best;
}

LevelCheck compare(int j, double algebraic, const std::vector<double>& numeric, const std::vector<double>& convergence,
                   double base, std::size_t* index) {
  LevelCheck check;
  check.j = j;
  check.algebraic_E = algebraic;
  const std::size_t i = nearest(numeric, algebraic);
  check.numeric_E = numeric[i];
  check.abs_diff = std::abs(numeric[i] - algebraic);
  check.convergence_estimate = convergence.empty() ? 0.0 : convergence[i];
  check.tolerance = level_tolerance(base, check.convergence_estimate);
  check.pass = check.abs_diff <= check.tolerance;
  if (index) *index = i;
  return check;
}

}  // namespace

bool VerificationReport::pass() const {
  if (levels.empty()) return false;
  return std::all_of(levels.begin(), levels.end(), [](const LevelCheck& l) { return l.pass; });
}

double level_tolerance(double base, double convergence_estimate) { return std::max(base, 10.0 * convergence_estimate); }

Interval fd_domain(const PotentialModel& potential, double e_max) {
  // reference point: lowest sample of V on a coarse scan
  const double lo_scan = std::isfinite(potential.domain.lo) ? potential.domain.lo + kScanOffset : -20.0;
  const double hi_scan = std::isfinite(potential.domain.hi) ? potential.domain.hi - kScanOffset : 20.0;
  double x_ref = lo_scan, v_ref = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 400; ++i) {
    const double x = lo_scan + (hi_scan - lo_scan) * i / 400.0;
    const double v = potential(x);
    if (std::isfinite(v) && v < v_ref) {
      v_ref = v;
      x_ref = x;
    }
  }
  Interval out;
  // a finite end becomes the Dirichlet wall itself; boundary nodes are never sampled
  out.lo = std::isfinite(potential.domain.lo) ? potential.domain.lo : truncation_point(potential, e_max, x_ref, -1);
  out.hi = std::isfinite(potential.domain.hi) ? potential.domain.hi : truncation_point(potential, e_max, x_ref, +1);
  return out;
}

int default_points(const Interval& domain) {
  const double n = (domain.hi - domain.lo) / 5e-3 + 1.0;
  return static_cast<int>(std::clamp(n, 2001.0, 40001.0));
}

std::vector<PredictedLevel> predicted_levels(const CatalogEntry& entry, int j_max) {
  std::vector<PredictedLevel> out;
  if (entry.is_qes()) {
    const SpectralResult sector = compose_energies(solve_algebraic_sector(entry.algebra), energy_offset(entry));
    for (std::size_t j = 0; j < sector.levels.size(); ++j)
      out.push_back({static_cast<int>(j), sector.levels[j].energy, sector.levels[j].b});
    return out;
  }
  const auto count = bound_state_count(entry);
  const int last = count ? std::min(j_max, *count - 1) : j_max;
  if (last < 0) throw NoBoundStateError(entry.info().key + ": no bound states for these parameters");
  for (int j = 0; j <= last; ++j) out.push_back({j, closed_form_energy(entry, j), {}});
  return out;
}

VerificationReport verify_entry(const CatalogEntry& entry, const VerifyOptions& options) {
  const PotentialModel potential = potential_model(entry);
  const std::vector<PredictedLevel> predicted = predicted_levels(entry, options.j_max);
  const double base = base_tolerance(entry);

  if (entry.period) {
    const double start = entry.param("a");
    PotentialModel shifted = potential;
    shifted.domain = Interval{start, start + *entry.period};
    double e_max = -std::numeric_limits<double>::infinity();
    for (const auto& level : predicted) e_max = std::max(e_max, level.energy);
    const int points = options.points.value_or(2001);
    // algebraic levels need not be the lowest edges: widen until they are covered
    int count = sector_count(entry) + 2;
    std::vector<BandEdge> edges = band_edges(shifted, *entry.period, count, points);
    while (edges.back().energy < e_max + 1.0 && 2 * count <= points - 2) {
      count *= 2;
      edges = band_edges(shifted, *entry.period, count, points);
    }
    std::vector<double> energies, convergence;
    for (const auto& e : edges) {
      energies.push_back(e.energy);
      convergence.push_back(e.convergence_estimate);
    }
    const Grid grid(start, start + *entry.period, points);
    VerificationReport report{entry.info().name, "band-edges", grid, {}};
    for (const auto& level : predicted) {
      LevelCheck check = compare(level.j, level.energy, energies, convergence, base, nullptr);
      check.psi_residual = residual(
          potential, [&](double x) { return closed_form_wavefunction(entry, level.b, x); }, level.energy, grid);
      report.levels.push_back(check);
    }
    return report;
  }

  double e_max = -std::numeric_limits<double>::infinity();
  for (const auto& level : predicted) e_max = std::max(e_max, level.energy);
  const Interval domain = options.domain.value_or(fd_domain(potential, e_max));
  const Grid grid(domain.lo, domain.hi, options.points.value_or(default_points(domain)));
  int k = std::min(grid.points() - 2, static_cast<int>(predicted.size()) + (entry.is_qes() ? 4 : 0));
  FdSpectrum fd = fd_eigensolve(potential, grid, BoundaryCondition::dirichlet, k, FdOptions{false, false});
  while (entry.is_qes() && fd.eigenvalues.back() < e_max + 1.0 && 2 * k <= grid.points() - 2) {
    k *= 2;
    fd = fd_eigensolve(potential, grid, BoundaryCondition::dirichlet, k, FdOptions{false, false});
  }
  fd = fd_eigensolve(potential, grid, BoundaryCondition::dirichlet, k);

  VerificationReport report{entry.info().name, "dirichlet", grid, {}};
  for (const auto& level : predicted) {
    std::size_t index = 0;
    LevelCheck check = compare(level.j, level.energy, fd.eigenvalues, fd.convergence_estimate, base, &index);
    if (entry.is_qes()) {
      check.psi_residual = residual(
          potential, [&](double x) { return closed_form_wavefunction(entry, level.b, x); }, level.energy, grid);
    } else {
      check.nodes_expected = level.j;
      check.nodes_found = count_nodes(fd.eigenvectors[static_cast<std::size_t>(level.j)]);
      check.pass = check.pass && index == static_cast<std::size_t>(level.j) && check.nodes_found == level.j;
      check.psi_residual = residual(
          potential, [&](double x) { return closed_form_wavefunction(entry, level.j, x); }, level.energy, grid);
    }
    report.levels.push_back(check);
  }
  return report;
}

void to_json(nlohmann::ordered_json& j, const LevelCheck& level) {
  j = nlohmann::ordered_json::object();
  j["j"] = level.j;
  j["algebraic_E"] = level.algebraic_E;
  j["numeric_E"] = level.numeric_E;
  j["abs_diff"] = level.abs_diff;
  j["tolerance"] = level.tolerance;
  j["convergence_estimate"] = level.convergence_estimate;
  j["pass"] = level.pass;
  if (level.nodes_expected) j["nodes_expected"] = *level.nodes_expected;
  if (level.nodes_found) j["nodes_found"] = *level.nodes_found;
  if (level.psi_residual) j["psi_residual"] = *level.psi_residual;
}

void to_json(nlohmann::ordered_json& j, const VerificationReport& report) {
  j = nlohmann::ordered_json::object();
  j["family"] = report.family;
  j["mode"] = report.mode;
  j["grid"] = {{"x_min", report.grid.x_min()},
               {"x_max", report.grid.x_max()},
               {"points", report.grid.points()},
               {"spacing", report.grid.spacing()}};
  j["levels"] = report.levels;
  j["pass"] = report.pass();
}

}  // namespace qes
