#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qes/potential.hpp"

namespace qes {

/// Uniform grid with N >= 16 nodes on [x_min, x_max].
class Grid {
 public:
  Grid(double x_min, double x_max, int points);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  int points() const { return points_; }
  double spacing() const { return (x_max_ - x_min_) / (points_ - 1); }
  double node(int i) const { return i == points_ - 1 ? x_max_ : x_min_ + i * spacing(); }
  /// Same interval with twice the resolution (2N - 1 nodes).
  Grid refined() const { return Grid(x_min_, x_max_, 2 * points_ - 1); }

 private:
  double x_min_, x_max_;
  int points_;
};

enum class BoundaryCondition { dirichlet, periodic, antiperiodic };
const char* to_string(BoundaryCondition bc);

/// Lowest eigenpairs of the central-difference -d2/dx2 + V.
///
/// Dirichlet: unknowns are the interior nodes, psi = 0 at both ends.
/// Periodic/antiperiodic: [x_min, x_max] is one period, unknowns are nodes
/// 0..N-2 and node N-1 is identified with node 0 (up to sign).
struct FdSpectrum {
  std::vector<double> eigenvalues;                ///< ascending
  std::vector<std::vector<double>> eigenvectors;  ///< sampled on all N nodes, max-norm 1
  std::vector<double> convergence_estimate;       ///< |E_h - E_{h/2}|, empty if not requested
  BoundaryCondition bc = BoundaryCondition::dirichlet;
  Grid grid;
};

struct FdOptions {
  bool eigenvectors = true;
  bool convergence = true;
};

FdSpectrum fd_eigensolve(const PotentialModel& potential, const Grid& grid, BoundaryCondition bc, int k,
                         FdOptions options = {});

struct BandEdge {
  double energy;
  BoundaryCondition parity;  ///< periodic or antiperiodic
  double convergence_estimate;
};

/// Lowest `count` eigenvalues of the periodic and antiperiodic problems over
/// one period starting at the domain's left end (or 0), merged ascending.
std::vector<BandEdge> band_edges(const PotentialModel& potential, double period, int count, int points);

/// Strict sign changes, ignoring samples below 1e-10 max|v|.
int count_nodes(const std::vector<double>& samples);

/// max over interior nodes of |-psi'' + (V - E) psi| / max|psi|, with a
/// five-point second derivative.
double residual(const PotentialModel& potential, const std::function<double(double)>& psi, double energy,
                const Grid& grid);

/// Truncation of an unbounded side: walk outward from `start` until the WKB
/// decay exponent, integral of sqrt(V - E) past the last turning point,
/// reaches 35. `direction` is +1 (right) or -1 (left). Returns the boundary.
double truncation_point(const PotentialModel& potential, double energy, double start, int direction,
                        double limit = 1e4);

}  // namespace qes
