#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qes/catalog.hpp"
#include "qes/fd_solver.hpp"

namespace qes {

struct LevelCheck {
  int j = 0;
  double algebraic_E = 0.0;
  double numeric_E = 0.0;
  double abs_diff = 0.0;
  double tolerance = 0.0;
  double convergence_estimate = 0.0;
  bool pass = false;
  std::optional<int> nodes_expected;
  std::optional<int> nodes_found;
  std::optional<double> psi_residual;
};

struct VerificationReport {
  std::string family;
  std::string mode;  ///< "dirichlet" or "band-edges"
  Grid grid;
  std::vector<LevelCheck> levels;

  bool pass() const;
};

struct VerifyOptions {
  int j_max = 3;                       ///< highest ES level checked (clipped to bound states)
  std::optional<Interval> domain;      ///< FD interval override
  std::optional<int> points;           ///< FD grid override (per period for band edges)
};

/// max(base, 10 * convergence estimate).
double level_tolerance(double base, double convergence_estimate);

/// FD interval for a Dirichlet check up to energy e_max: a finite domain end
/// is used as the wall (the first sampled node sits one spacing inside), an
/// unbounded side follows truncation_point.
Interval fd_domain(const PotentialModel& potential, double e_max);

/// Default FD point count for an interval: spacing 5e-3, within [2001, 40001].
int default_points(const Interval& domain);

/// Levels the entry predicts: closed-form ES energies for j <= j_max, or the
/// whole algebraic sector of a QES entry.
struct PredictedLevel {
  int j;
  double energy;
  std::vector<double> b;  ///< QES only
};
std::vector<PredictedLevel> predicted_levels(const CatalogEntry& entry, int j_max);

VerificationReport verify_entry(const CatalogEntry& entry, const VerifyOptions& options = {});

void to_json(nlohmann::ordered_json& j, const LevelCheck& level);
void to_json(nlohmann::ordered_json& j, const VerificationReport& report);

}  // namespace qes
