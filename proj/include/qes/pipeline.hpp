#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "qes/catalog.hpp"

namespace qes {

enum class Command { list_families, build, verify, general };

struct RunConfig {
  Command command = Command::build;
  std::string family;
  Params params;
  int sign = +1;
  int n = 0;
  std::optional<int> j_max;            ///< ES levels written/checked; default 3
  std::filesystem::path algebra_path;  ///< general mode input
  double offset = 0.0;                 ///< general mode: u = x - offset
  std::optional<double> x_min, x_max;  ///< sampling interval override
  int samples = 401;
  std::optional<int> fd_points;
  std::filesystem::path out_dir = ".";
};

enum ExitCode { exit_ok = 0, exit_verification_failed = 1, exit_usage = 2 };

/// Runs one command, writing artifacts into config.out_dir. Errors are
/// reported on `err` and mapped to the exit-code contract.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Spectrum document for a catalog entry (what `build` writes).
nlohmann::ordered_json spectrum_json(const CatalogEntry& entry, int j_max);

/// Eigenvector of the sector at n = j belonging to d(j), or empty when d(j)
/// is not an eigenvalue there.
std::vector<double> es_coefficients(const CatalogEntry& entry, int j);

}  // namespace qes
