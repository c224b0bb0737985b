#include "qes/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "qes/errors.hpp"
#include "qes/master_equation.hpp"
#include "qes/output.hpp"
#include "qes/verification.hpp"

namespace qes {

namespace {

const char* kBanner = "unvalidated normalizability";

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> xs(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) xs[static_cast<std::size_t>(i)] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  if (count > 1) xs.back() = hi;
  return xs;
}

// Trapezoid L2 normalization on the sample grid.
void normalize_samples(const std::vector<double>& xs, std::vector<double>& psi) {
  double norm2 = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!std::isfinite(psi[i]) || !std::isfinite(psi[i - 1])) continue;
    norm2 += 0.5 * (xs[i] - xs[i - 1]) * (psi[i] * psi[i] + psi[i - 1] * psi[i - 1]);
  }
  if (norm2 > 0)
    for (double& p : psi) p /= std::sqrt(norm2);
}

nlohmann::ordered_json params_json(const Params& params) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

CatalogEntry entry_from(const RunConfig& config) {
  if (config.family.empty()) throw ParameterError("--family is required");
  return make_entry(parse_family(config.family), config.params, config.sign, config.n);
}

Interval sample_interval(const RunConfig& config, const CatalogEntry& entry, double e_max) {
  Interval iv;
  if (entry.period) {
    iv = Interval{entry.param("a"), entry.param("a") + *entry.period};
  } else {
    iv = fd_domain(potential_model(entry), e_max);
    // V is singular at a finite end of a half-line domain; sample just inside it
    if (std::isfinite(entry.domain.lo) && iv.lo == entry.domain.lo) iv.lo += 1e-3;
  }
  if (config.x_min) iv.lo = *config.x_min;
  if (config.x_max) iv.hi = *config.x_max;
  if (!(iv.hi > iv.lo)) throw ParameterError("sampling interval needs x-min < x-max");
  if (config.samples < 2) throw ParameterError("samples must be at least 2");
  return iv;
}

void write_catalog_artifacts(const RunConfig& config, const CatalogEntry& entry, const std::vector<PredictedLevel>& levels,
                             std::vector<std::string>& written) {
  std::filesystem::create_directories(config.out_dir);
  const int j_max = config.j_max.value_or(3);

  double e_max = levels.front().energy;
  for (const auto& l : levels) e_max = std::max(e_max, l.energy);
  const Interval iv = sample_interval(config, entry, e_max);
  const std::vector<double> xs = linspace(iv.lo, iv.hi, config.samples);

  std::vector<double> v;
  for (double x : xs) v.push_back(closed_form_potential(entry, x));
  write_atomic(config.out_dir / "potential.csv", to_csv({"x", "V"}, {xs, v}));
  written.push_back("potential.csv");

  write_atomic(config.out_dir / "spectrum.json", to_text(spectrum_json(entry, j_max)));
  written.push_back("spectrum.json");

  std::vector<std::string> header{"x"};
  std::vector<std::vector<double>> columns{xs};
  for (const auto& level : levels) {
    std::vector<double> psi;
    for (double x : xs)
      psi.push_back(entry.is_qes() ? closed_form_wavefunction(entry, level.b, x)
                                   : closed_form_wavefunction(entry, level.j, x));
    normalize_samples(xs, psi);
    header.push_back("psi_" + std::to_string(level.j));
    columns.push_back(std::move(psi));
  }
  write_atomic(config.out_dir / "wavefunctions.csv", to_csv(header, columns));
  written.push_back("wavefunctions.csv");
}

int run_general(const RunConfig& config, std::ostream& err) {
  std::ifstream in(config.algebra_path);
  if (!in) throw ParameterError("cannot read algebra file " + config.algebra_path.string());
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("algebra file is not valid JSON: ") + e.what());
  }
  const AlgebraCoefficients algebra = algebra_from_json(doc);
  algebra.validate();
  const BPolynomials b = b_polynomials(algebra);
  const Branch branch = default_branch(b.b4);
  const Mapping mapping = build_mapping(b, branch, CoordinateChange::shift(config.offset));
  const SpectralResult sector = solve_algebraic_sector(algebra);

  err << "warning: " << kBanner << " (general mode does not check square integrability)\n";
  for (const auto& w : sector.warnings) err << "warning: " << w << "\n";

  // sample strictly inside the principal branch, clipped to +/-10 around the offset
  const Interval ur = mapping.principal_u_range();
  double lo = config.offset + std::max(ur.lo, -10.0);
  double hi = config.offset + std::min(ur.hi, 10.0);
  if (config.x_min) lo = *config.x_min;
  if (config.x_max) hi = *config.x_max;
  if (!(hi > lo)) throw ParameterError("sampling interval needs x-min < x-max");
  std::vector<double> xs;
  for (int i = 0; i < config.samples; ++i) xs.push_back(lo + (hi - lo) * (i + 1) / (config.samples + 1));

  const PotentialModel v = master_potential(b, 0.0, mapping, 0.0);
  std::vector<double> vs;
  for (double x : xs) {
    try {
      vs.push_back(v(x));
    } catch (const Error&) {
      vs.push_back(std::nan(""));
    }
  }

  const double u_ref = ur.contains(0.0) && ur.lo < 0.0 && ur.hi > 0.0 ? 0.0 : 0.5 * (std::max(ur.lo, -10.0) + std::min(ur.hi, 10.0));
  const double x0 = config.offset + u_ref;
  std::vector<std::string> header{"x"};
  std::vector<std::vector<double>> columns{xs};
  for (std::size_t j = 0; j < sector.levels.size(); ++j) {
    const WaveFunction psi = assemble_wavefunction(numeric_gauge(b, mapping, x0), sector.levels[j].b, mapping);
    std::vector<double> samples;
    for (double x : xs) {
      try {
        samples.push_back(psi(x));
      } catch (const Error&) {
        samples.push_back(std::nan(""));
      }
    }
    normalize_samples(xs, samples);
    header.push_back("psi_" + std::to_string(j));
    columns.push_back(std::move(samples));
  }

  nlohmann::ordered_json spectrum;
  spectrum["banner"] = kBanner;
  spectrum["algebra"] = algebra;
  spectrum["branch"] = {{"xi_min", branch.xi.lo ? nlohmann::ordered_json(to_string(*branch.xi.lo)) : nullptr},
                        {"xi_max", branch.xi.hi ? nlohmann::ordered_json(to_string(*branch.xi.hi)) : nullptr},
                        {"mapping", to_string(mapping.shape())},
                        {"root_sign", mapping.root_sign()}};
  spectrum["n"] = sector.n.value();
  nlohmann::ordered_json levels = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < sector.levels.size(); ++j) {
    nlohmann::ordered_json l = {{"j", static_cast<int>(j)}};
    l.update(nlohmann::ordered_json(sector.levels[j]));
    levels.push_back(l);
  }
  spectrum["levels"] = levels;
  spectrum["warnings"] = sector.warnings;

  std::filesystem::create_directories(config.out_dir);
  write_atomic(config.out_dir / "potential.csv", to_csv({"x", "V"}, {xs, vs}));
  write_atomic(config.out_dir / "spectrum.json", to_text(spectrum));
  write_atomic(config.out_dir / "wavefunctions.csv", to_csv(header, columns));
  return exit_ok;
}

}  // namespace

std::vector<double> es_coefficients(const CatalogEntry& entry, int j) {
  const CatalogEntry at_j = make_entry(entry.family, entry.params, entry.sign, j);
  const double d = to_double(*at_j.algebra.d);
  const SpectralResult sector = solve_algebraic_sector(at_j.algebra);
  for (const auto& level : sector.levels)
    if (level.imag_residual == 0.0 && std::abs(level.d - d) <= 1e-8 * (1.0 + std::abs(d))) return level.b;
  return {};
}

nlohmann::ordered_json spectrum_json(const CatalogEntry& entry, int j_max) {
  nlohmann::ordered_json s;
  s["family"] = entry.info().name;
  s["kind"] = entry.is_qes() ? "QES" : "ES";
  s["params"] = params_json(entry.params);
  if (entry.is_qes()) s["sign"] = entry.sign > 0 ? "+" : "-";
  s["n"] = entry.n.value();
  nlohmann::ordered_json levels = nlohmann::ordered_json::array();
  std::vector<std::string> warnings;
  if (entry.is_qes()) {
    s["sector_count"] = sector_count(entry);
    const SpectralResult sector = compose_energies(solve_algebraic_sector(entry.algebra), energy_offset(entry));
    warnings = sector.warnings;
    for (std::size_t j = 0; j < sector.levels.size(); ++j) {
      nlohmann::ordered_json l = {{"j", static_cast<int>(j)}};
      l.update(nlohmann::ordered_json(sector.levels[j]));
      levels.push_back(l);
    }
  } else {
    for (const auto& level : predicted_levels(entry, j_max)) {
      nlohmann::ordered_json l;
      l["j"] = level.j;
      l["d"] = to_double(*make_entry(entry.family, entry.params, entry.sign, level.j).algebra.d);
      l["E"] = level.energy;
      l["b"] = es_coefficients(entry, level.j);
      l["imag_residual"] = 0.0;
      levels.push_back(l);
    }
  }
  s["levels"] = levels;
  s["warnings"] = warnings;
  return s;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::list_families:
        out << to_text(list_families_json());
        return exit_ok;
      case Command::general:
        return run_general(config, err);
      case Command::build:
      case Command::verify: {
        const CatalogEntry entry = entry_from(config);
        const int j_max = config.j_max.value_or(3);
        if (j_max < 0) throw ParameterError("j-max must be non-negative");
        const std::vector<PredictedLevel> levels = predicted_levels(entry, j_max);
        std::vector<std::string> written;
        write_catalog_artifacts(config, entry, levels, written);
        if (config.command == Command::build) return exit_ok;

        VerifyOptions options;
        options.j_max = j_max;
        options.points = config.fd_points;
        const VerificationReport report = verify_entry(entry, options);
        nlohmann::ordered_json doc = report;
        doc["params"] = params_json(entry.params);
        if (entry.is_qes()) doc["sign"] = entry.sign > 0 ? "+" : "-";
        doc["n"] = entry.n.value();
        write_atomic(config.out_dir / "verification.json", to_text(doc));
        if (!report.pass()) {
          err << "verification failed: see " << (config.out_dir / "verification.json").string() << "\n";
          return exit_verification_failed;
        }
        return exit_ok;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace qes
