#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qes/algebra.hpp"
#include "qes/mapping.hpp"
#include "qes/potential.hpp"
#include "qes/spectral.hpp"
#include "qes/wavefunction.hpp"

namespace qes {

enum class Family {
  harmonic,
  morse,
  poschl_teller,
  scarf2,
  coulomb,
  periodic_v1,
  periodic_v2,
  periodic_v3,
  periodic_v4,
  hyperbolic_v1,
  hyperbolic_v2,
  hyperbolic_v3,
  hyperbolic_v4,
};

struct ParameterSpec {
  std::string name;
  std::string range;
  double default_value;
};

struct FamilyInfo {
  Family family;
  std::string key;   ///< command-line name, e.g. "periodic-v1"
  std::string name;  ///< display name, e.g. "PeriodicV1"
  bool qes;
  std::vector<ParameterSpec> parameters;
  std::string domain;
  std::optional<std::string> period;
  std::optional<std::string> sector_count;
};

const std::vector<FamilyInfo>& families();
const FamilyInfo& family_info(Family family);
/// Accepts the command-line key or the display name. Throws ParameterError.
Family parse_family(std::string_view text);

nlohmann::ordered_json list_families_json();

using Params = std::map<std::string, double>;

struct CatalogEntry {
  Family family;
  Params params;
  int sign = +1;  ///< upper (+1) or lower (-1) algebraization; +1 for ES entries
  SpinIndex n;
  AlgebraCoefficients algebra;  ///< d fixed to d(n) for ES, free for QES
  Branch branch;
  CoordinateChange coordinate = CoordinateChange::shift(0.0);
  Interval domain;
  std::optional<double> period;
  double gauge_reference = 0.0;

  const FamilyInfo& info() const { return family_info(family); }
  bool is_qes() const { return info().qes; }
  double param(const std::string& name) const;
  BPolynomials b() const { return b_polynomials(algebra); }
  Mapping mapping() const { return build_mapping(b(), branch, coordinate); }
};

/// Missing parameters take the family defaults; unknown names and failed
/// validity predicates throw ParameterError naming the predicate.
CatalogEntry make_entry(Family family, const Params& params, int sign, int n);

/// Energy formula of an ES family at level j, without the bound-state check.
double energy_formula(const CatalogEntry& entry, int j);
/// Number of bound states of an ES family; nullopt when unbounded.
std::optional<int> bound_state_count(const CatalogEntry& entry);
/// ES: closed-form E_j, NoBoundStateError past the last bound state.
double closed_form_energy(const CatalogEntry& entry, int j);
/// QES: offset + d_j from a solved algebraic sector (levels in result order).
double closed_form_energy(const CatalogEntry& entry, const SpectralResult& sector, int j);
/// QES energy offset, E_j = offset + d_j.
double energy_offset(const CatalogEntry& entry);

/// Closed-form V(x).
double closed_form_potential(const CatalogEntry& entry, double x);
PotentialModel potential_model(const CatalogEntry& entry);

/// The (d, E) pair under which the master equation reproduces V exactly:
/// (d(n), E_n) for ES entries, (0, offset) for QES entries.
std::pair<double, double> master_convention(const CatalogEntry& entry);

/// ES: unnormalized closed-form psi_j(x).
double closed_form_wavefunction(const CatalogEntry& entry, int j, double x);
/// QES: prefactor * exponential gauge * sum_r b^(r) xi^r.
double closed_form_wavefunction(const CatalogEntry& entry, std::span<const double> b, double x);

/// QES exponential gauge part, equal to 1 at x = a.
GaugeFactor closed_form_gauge(const CatalogEntry& entry);
Prefactor prefactor(const CatalogEntry& entry);
WaveFunction qes_wavefunction(const CatalogEntry& entry, std::vector<double> b);

/// 2|m| for periodic, 2|t| for hyperbolic families; NotApplicableError for ES.
int sector_count(const CatalogEntry& entry);

}  // namespace qes
