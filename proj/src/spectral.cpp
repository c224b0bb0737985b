#include "qes/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qes/errors.hpp"

namespace qes {

namespace {

constexpr int kMaxDimension = 64;

void sort_levels(std::vector<SpectralLevel>& levels) {
  std::stable_sort(levels.begin(), levels.end(), [](const SpectralLevel& a, const SpectralLevel& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return std::lexicographical_compare(a.b.begin(), a.b.end(), b.b.begin(), b.b.end());
  });
}

double residual_norm(const Eigen::MatrixXd& m, double lambda, const Eigen::VectorXd& v) {
  return (m * v - lambda * v).cwiseAbs().maxCoeff() / std::max(v.cwiseAbs().maxCoeff(), 1e-300);
}

// One step of inverse iteration with a slightly shifted eigenvalue; keeps the
// original vector if the step does not help.
Eigen::VectorXd refine(const Eigen::MatrixXd& m, double lambda, const Eigen::VectorXd& v) {
  const long size = m.rows();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double shift = lambda + 64.0 * std::numeric_limits<double>::epsilon() * scale;
  Eigen::MatrixXd shifted = m - shift * Eigen::MatrixXd::Identity(size, size);
  Eigen::VectorXd w = shifted.partialPivLu().solve(v);
  if (!w.allFinite() || w.cwiseAbs().maxCoeff() == 0.0) return v;
  w /= w.cwiseAbs().maxCoeff();
  return residual_norm(m, lambda, w) <= residual_norm(m, lambda, v) ? w : v;
}

}  // namespace

Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.size(), m.size());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) out(r, c) = to_double(m(r, c));
  return out;
}

void normalize_coefficients(std::vector<double>& b) {
  double big = 0.0;
  for (double v : b) big = std::max(big, std::abs(v));
  if (big == 0.0) return;
  for (double& v : b) v /= big;
  for (double v : b) {
    if (std::abs(v) > 1e-10) {
      if (v < 0)
        for (double& w : b) w = -w;
      break;
    }
  }
  for (double& v : b)
    if (v == 0.0) v = 0.0;  // drop negative zeros
}

SpectralResult solve_algebraic_sector(const AlgebraCoefficients& c) {
  c.validate();
  const int dim = c.n.dimension();
  if (dim > kMaxDimension) {
    std::ostringstream os;
    os << "algebraic sector of dimension " << dim << " exceeds the dense limit " << kMaxDimension;
    throw ParameterError(os.str());
  }
  AlgebraCoefficients free = c;
  free.d.reset();
  const Eigen::MatrixXd m = to_eigen(hamiltonian_matrix(free));

  SpectralResult result;
  result.n = c.n;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, true);
  if (solver.info() != Eigen::Success) throw Error("eigenvalue decomposition did not converge");

  for (int k = 0; k < dim; ++k) {
    const std::complex<double> lambda = solver.eigenvalues()(k);
    SpectralLevel level;
    level.d = lambda.real();
    level.energy = level.d;
    level.imag_residual = std::abs(lambda.imag());
    Eigen::VectorXcd vc = solver.eigenvectors().col(k);
    // rotate the complex vector so its largest entry is real before dropping Im
    Eigen::Index big = 0;
    vc.cwiseAbs().maxCoeff(&big);
    vc *= std::conj(vc(big)) / std::abs(vc(big));
    Eigen::VectorXd v = vc.real();
    if (level.imag_residual <= 1e-9 * (1.0 + std::abs(lambda))) {
      v = refine(m, level.d, v);
    } else {
      std::ostringstream os;
      os.precision(17);
      os << "non-real eigenvalue " << lambda.real() << (lambda.imag() < 0 ? " - " : " + ") << std::abs(lambda.imag())
         << "i for algebra " << nlohmann::ordered_json(c).dump();
      result.warnings.push_back(os.str());
    }
    level.b.assign(v.data(), v.data() + v.size());
    normalize_coefficients(level.b);
    result.levels.push_back(std::move(level));
  }
  sort_levels(result.levels);
  return result;
}

SpectralResult compose_energies(SpectralResult s, double offset) {
  for (auto& level : s.levels) level.energy = offset + level.d;
  sort_levels(s.levels);
  return s;
}

void to_json(nlohmann::ordered_json& j, const SpectralLevel& level) {
  j = nlohmann::ordered_json::object();
  j["d"] = level.d;
  j["E"] = level.energy;
  j["b"] = level.b;
  j["imag_residual"] = level.imag_residual;
}

void to_json(nlohmann::ordered_json& j, const SpectralResult& s) {
  j = nlohmann::ordered_json::object();
  j["n"] = s.n.value();
  j["levels"] = s.levels;
}

}  // namespace qes
