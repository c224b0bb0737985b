#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "qes/algebra.hpp"

namespace qes {

struct SpectralLevel {
  double d = 0.0;
  double energy = 0.0;
  std::vector<double> b;  ///< coefficients of xi^0..xi^n
  double imag_residual = 0.0;
};

/// Algebraic sector of H on P_n. Levels are sorted by energy, ties broken by
/// lexicographic order of b.
struct SpectralResult {
  SpinIndex n;
  std::vector<SpectralLevel> levels;
  std::vector<std::string> warnings;  ///< non-real eigenvalues, one line each
};

Eigen::MatrixXd to_eigen(const RationalMatrix& m);

/// Values of d for which H chi = 0 has a solution in P_n, i.e. the eigenvalues
/// of the d = 0 matrix, with eigenvectors refined by one inverse-iteration step.
/// Energies are initialized to d (zero offset). A fixed d in the input is
/// ignored. Complex pairs are reported through warnings, not dropped.
SpectralResult solve_algebraic_sector(const AlgebraCoefficients& c);

/// E_j = offset + d_j, re-sorted.
SpectralResult compose_energies(SpectralResult s, double offset);

/// Max-norm 1 with the first significant entry positive.
void normalize_coefficients(std::vector<double>& b);

void to_json(nlohmann::ordered_json& j, const SpectralLevel& level);
void to_json(nlohmann::ordered_json& j, const SpectralResult& s);

}  // namespace qes
