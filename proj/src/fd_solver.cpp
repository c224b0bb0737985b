#include "qes/fd_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "qes/errors.hpp"

namespace qes {

namespace {

// Symmetric tridiagonal matrix with a constant off-diagonal and an optional
// corner coupling A(0, m-1) = A(m-1, 0).
struct Operator {
  std::vector<double> diag;
  double off = 0.0;
  double corner = 0.0;
  bool cyclic = false;

  int size() const { return static_cast<int>(diag.size()); }
  double pivmin() const { return std::numeric_limits<double>::min() * std::max(1.0, off * off) * 1e10; }

  // Negative pivots of the LDL^T factorization of (T - lambda) over rows [0, m).
  int tridiagonal_count(double lambda, int m, double* out_schur, const std::vector<double>* border) const {
    const double floor = pivmin();
    int negatives = 0;
    double q = 0.0, z = 0.0, quad = 0.0;
    for (int i = 0; i < m; ++i) {
      double l = 0.0;
      if (i == 0) {
        q = diag[0] - lambda;
      } else {
        l = off / q;
        q = diag[static_cast<std::size_t>(i)] - lambda - off * l;
      }
      if (std::abs(q) < floor) q = -floor;
      if (q < 0) ++negatives;
      if (border) {
        z = (*border)[static_cast<std::size_t>(i)] - l * z;
        quad += z * z / q;
      }
    }
    if (out_schur) *out_schur = quad;
    return negatives;
  }

  /// Number of eigenvalues strictly below lambda.
  int count_below(double lambda) const {
    const int m = size();
    if (!cyclic) return tridiagonal_count(lambda, m, nullptr, nullptr);
    // border the last unknown: inertia(A - lambda) = inertia(T - lambda) + sign of the Schur complement
    std::vector<double> border(static_cast<std::size_t>(m - 1), 0.0);
    border.front() += corner;
    border.back() += off;
    double quad = 0.0;
    const int neg = tridiagonal_count(lambda, m - 1, &quad, &border);
    const double schur = diag.back() - lambda - quad;
    return neg + (schur < 0 ? 1 : 0);
  }

  std::pair<double, double> gershgorin() const {
    const double radius = 2.0 * std::abs(off) + (cyclic ? std::abs(corner) : 0.0);
    const auto [lo, hi] = std::minmax_element(diag.begin(), diag.end());
    return {*lo - radius, *hi + radius};
  }

  double kth_eigenvalue(int k) const {
    auto [lo, hi] = gershgorin();
    for (int iter = 0; iter < 400; ++iter) {
      const double tol = std::max(2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)),
                                  1e-300);
      if (hi - lo <= tol) break;
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (count_below(mid) > k)
        hi = mid;
      else
        lo = mid;
    }
    return 0.5 * (lo + hi);
  }

  Eigen::SparseMatrix<double> shifted(double sigma) const {
    const int m = size();
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(static_cast<std::size_t>(3 * m + 2));
    for (int i = 0; i < m; ++i) {
      t.emplace_back(i, i, diag[static_cast<std::size_t>(i)] - sigma);
      if (i + 1 < m) {
        t.emplace_back(i, i + 1, off);
        t.emplace_back(i + 1, i, off);
      }
    }
    if (cyclic) {
      t.emplace_back(0, m - 1, corner);
      t.emplace_back(m - 1, 0, corner);
    }
    Eigen::SparseMatrix<double> a(m, m);
    a.setFromTriplets(t.begin(), t.end());
    return a;
  }

  Eigen::VectorXd apply(const Eigen::VectorXd& v) const {
    const int m = size();
    Eigen::VectorXd out(m);
    for (int i = 0; i < m; ++i) {
      double acc = diag[static_cast<std::size_t>(i)] * v(i);
      if (i > 0) acc += off * v(i - 1);
      if (i + 1 < m) acc += off * v(i + 1);
      out(i) = acc;
    }
    if (cyclic) {
      out(0) += corner * v(m - 1);
      out(m - 1) += corner * v(0);
    }
    return out;
  }

  double norm() const {
    double big = 0.0;
    for (double d : diag) big = std::max(big, std::abs(d));
    return big + 2.0 * std::abs(off) + std::abs(corner);
  }
};

Operator discretize(const PotentialModel& potential, const Grid& grid, BoundaryCondition bc) {
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  Operator op;
  op.off = -inv_h2;
  int first = 0, last = grid.points() - 1;  // unknown node range [first, last)
  if (bc == BoundaryCondition::dirichlet) {
    first = 1;
  } else {
    op.cyclic = true;
    op.corner = bc == BoundaryCondition::periodic ? -inv_h2 : inv_h2;
  }
  for (int i = first; i < last; ++i) {
    const double x = grid.node(i);
    const double v = potential(x);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "potential is not finite at grid node x = " << x;
      throw GridError(os.str());
    }
    op.diag.push_back(2.0 * inv_h2 + v);
  }
  return op;
}

std::vector<double> lowest_eigenvalues(const Operator& op, int k) {
  std::vector<double> values(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) values[static_cast<std::size_t>(i)] = op.kth_eigenvalue(i);
  std::sort(values.begin(), values.end());
  return values;
}

Eigen::VectorXd inverse_iteration(const Operator& op, double lambda, const std::vector<Eigen::VectorXd>& cluster,
                                  std::mt19937_64& rng) {
  const int m = op.size();
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::VectorXd v(m);
  for (int i = 0; i < m; ++i) v(i) = dist(rng);

  double sigma = lambda;
  const double nudge = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(lambda));
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  for (int attempt = 0; attempt < 8; ++attempt) {
    lu.compute(op.shifted(sigma));
    if (lu.info() == Eigen::Success) break;
    sigma += nudge * std::ldexp(1.0, attempt);
  }
  if (lu.info() != Eigen::Success) throw Error("inverse iteration: factorization failed");

  auto orthogonalize = [&](Eigen::VectorXd& w) {
    for (const auto& u : cluster) w -= u.dot(w) * u;
  };
  orthogonalize(v);
  v.normalize();
  for (int iter = 0; iter < 4; ++iter) {
    Eigen::VectorXd w = lu.solve(v);
    if (!w.allFinite()) {
      sigma += nudge;
      lu.compute(op.shifted(sigma));
      continue;
    }
    orthogonalize(w);
    const double len = w.norm();
    if (len == 0.0) break;
    v = w / len;
  }
  return v;
}

std::vector<double> to_grid_samples(const Eigen::VectorXd& v, const Grid& grid, BoundaryCondition bc) {
  std::vector<double> out(static_cast<std::size_t>(grid.points()), 0.0);
  const int m = static_cast<int>(v.size());
  if (bc == BoundaryCondition::dirichlet) {
    for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i + 1)] = v(i);
  } else {
    for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = v(i);
    out.back() = bc == BoundaryCondition::periodic ? v(0) : -v(0);
  }
  double big = 0.0;
  for (double s : out) big = std::max(big, std::abs(s));
  if (big > 0) {
    double sign = 1.0;
    for (double s : out) {
      if (std::abs(s) > 1e-8 * big) {
        sign = s < 0 ? -1.0 : 1.0;
        break;
      }
    }
    for (double& s : out) s *= sign / big;
  }
  return out;
}

}  // namespace

Grid::Grid(double x_min, double x_max, int points) : x_min_(x_min), x_max_(x_max), points_(points) {
  if (points < 16) throw GridError("grid needs at least 16 points");
  if (!(std::isfinite(x_min) && std::isfinite(x_max) && x_max > x_min)) throw GridError("grid needs x_min < x_max");
}

const char* to_string(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::dirichlet: return "dirichlet";
    case BoundaryCondition::periodic: return "periodic";
    case BoundaryCondition::antiperiodic: return "antiperiodic";
  }
  return "unknown";
}

FdSpectrum fd_eigensolve(const PotentialModel& potential, const Grid& grid, BoundaryCondition bc, int k,
                         FdOptions options) {
  if (k < 1 || k > grid.points() - 2) {
    std::ostringstream os;
    os << "requested " << k << " eigenvalues from a grid of " << grid.points() << " points (max " << grid.points() - 2
       << ")";
    throw GridError(os.str());
  }
  const Operator op = discretize(potential, grid, bc);
  FdSpectrum out{lowest_eigenvalues(op, k), {}, {}, bc, grid};

  if (options.eigenvectors) {
    std::mt19937_64 rng(0x5eed);
    const double scale = op.norm();
    std::vector<Eigen::VectorXd> cluster;
    for (int i = 0; i < k; ++i) {
      const double lambda = out.eigenvalues[static_cast<std::size_t>(i)];
      if (i == 0 || std::abs(lambda - out.eigenvalues[static_cast<std::size_t>(i - 1)]) >
                        1e-9 * std::max(1.0, std::abs(lambda)) + 1e-13 * scale)
        cluster.clear();
      Eigen::VectorXd v = inverse_iteration(op, lambda, cluster, rng);
      cluster.push_back(v);
      out.eigenvectors.push_back(to_grid_samples(v, grid, bc));
    }
  }
  if (options.convergence) {
    const Operator fine = discretize(potential, grid.refined(), bc);
    const std::vector<double> refined = lowest_eigenvalues(fine, k);
    for (int i = 0; i < k; ++i)
      out.convergence_estimate.push_back(
          std::abs(out.eigenvalues[static_cast<std::size_t>(i)] - refined[static_cast<std::size_t>(i)]));
  }
  return out;
}

std::vector<BandEdge> band_edges(const PotentialModel& potential, double period, int count, int points) {
  if (!(period > 0)) throw GridError("band edges need a positive period");
  const double start = std::isfinite(potential.domain.lo) ? potential.domain.lo : 0.0;
  const Grid grid(start, start + period, points);
  std::vector<BandEdge> edges;
  for (BoundaryCondition bc : {BoundaryCondition::periodic, BoundaryCondition::antiperiodic}) {
    const FdSpectrum s = fd_eigensolve(potential, grid, bc, count, FdOptions{false, true});
    for (int i = 0; i < count; ++i)
      edges.push_back({s.eigenvalues[static_cast<std::size_t>(i)], bc, s.convergence_estimate[static_cast<std::size_t>(i)]});
  }
  std::stable_sort(edges.begin(), edges.end(), [](const BandEdge& a, const BandEdge& b) { return a.energy < b.energy; });
  edges.resize(static_cast<std::size_t>(count));
  return edges;
}

int count_nodes(const std::vector<double>& samples) {
  double big = 0.0;
  for (double s : samples) big = std::max(big, std::abs(s));
  const double floor = 1e-10 * big;
  int nodes = 0;
  int previous = 0;
  for (double s : samples) {
    if (std::abs(s) <= floor) continue;
    const int sign = s > 0 ? 1 : -1;
    if (previous != 0 && sign != previous) ++nodes;
    previous = sign;
  }
  return nodes;
}

double residual(const PotentialModel& potential, const std::function<double(double)>& psi, double energy,
                const Grid& grid) {
  const int n = grid.points();
  const double h = grid.spacing();
  std::vector<double> v(static_cast<std::size_t>(n));
  double big = 0.0;
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = psi(grid.node(i));
    big = std::max(big, std::abs(v[static_cast<std::size_t>(i)]));
  }
  if (big == 0.0) throw GridError("wavefunction vanishes on the whole grid");
  double worst = 0.0;
  for (int i = 2; i < n - 2; ++i) {
    const auto at = [&](int k) { return v[static_cast<std::size_t>(k)]; };
    const double second = (-at(i - 2) + 16.0 * at(i - 1) - 30.0 * at(i) + 16.0 * at(i + 1) - at(i + 2)) / (12.0 * h * h);
    const double r = -second + (potential(grid.node(i)) - energy) * at(i);
    worst = std::max(worst, std::abs(r));
  }
  return worst / big;
}

double truncation_point(const PotentialModel& potential, double energy, double start, int direction, double limit) {
  double x = start;
  double v = potential(x);
  double decay = 0.0;
  while (std::abs(x - start) < limit) {
    const double step = 0.005 + 0.002 * std::abs(x - start);
    const double next = x + direction * step;
    if (direction < 0 ? next <= potential.domain.lo : next >= potential.domain.hi) return x;
    const double w = potential(next);
    if (!std::isfinite(w)) return x;
    if (w < energy) {
      decay = 0.0;
    } else {
      decay += 0.5 * step * (std::sqrt(std::max(v - energy, 0.0)) + std::sqrt(w - energy));
    }
    x = next;
    v = w;
    if (decay >= 35.0) return x;
  }
  return x;
}

}  // namespace qes
