#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "qes/catalog.hpp"
#include "qes/errors.hpp"
#include "qes/fd_solver.hpp"
#include "qes/quadrature.hpp"

using namespace qes;
using std::numbers::pi;

namespace {

PotentialModel model(std::function<double(double)> f) {
  PotentialModel v;
  v.value = std::move(f);
  return v;
}

// Dense matrix of the discretized operator on the unknowns.
Eigen::MatrixXd dense_operator(const PotentialModel& v, const Grid& g, BoundaryCondition bc) {
  const double h = g.spacing(), off = -1.0 / (h * h);
  const bool dirichlet = bc == BoundaryCondition::dirichlet;
  const int first = dirichlet ? 1 : 0;
  const int size = dirichlet ? g.points() - 2 : g.points() - 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
  for (int i = 0; i < size; ++i) {
    m(i, i) = 2.0 / (h * h) + v(g.node(first + i));
    if (i + 1 < size) m(i, i + 1) = m(i + 1, i) = off;
  }
  if (!dirichlet) {
    const double corner = bc == BoundaryCondition::periodic ? off : -off;
    m(0, size - 1) += corner;
    m(size - 1, 0) += corner;
  }
  return m;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = lo + (hi - lo) * i / (count - 1);
  return out;
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(Grid(0, 1, 15), GridError);
  CHECK_THROWS_AS(Grid(1, 0, 100), GridError);
  const Grid g(-1, 1, 21);
  CHECK(g.spacing() == doctest::Approx(0.1));
  CHECK(g.node(20) == 1.0);
  CHECK(g.refined().points() == 41);
}

TEST_CASE("eigenvalues agree with a dense symmetric solver") {
  oracle::RationalSource src(321);
  for (int trial = 0; trial < 12; ++trial) {
    const double a1 = src.real(-3, 3), a2 = src.real(-3, 3), a3 = src.real(0, 2);
    const double period = 2 * pi;
    const PotentialModel v = model([=](double x) { return a1 * std::cos(x) + a2 * std::sin(2 * x) + a3 * std::cos(3 * x); });
    for (BoundaryCondition bc : {BoundaryCondition::dirichlet, BoundaryCondition::periodic, BoundaryCondition::antiperiodic}) {
      const Grid g(0, period, 61 + trial);
      const Eigen::MatrixXd m = dense_operator(v, g, bc);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(m);
      const int k = 8;
      const FdSpectrum fd = fd_eigensolve(v, g, bc, k, FdOptions{true, false});
      REQUIRE(static_cast<int>(fd.eigenvalues.size()) == k);
      const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
      for (int j = 0; j < k; ++j) {
        CHECK(std::abs(fd.eigenvalues[j] - dense.eigenvalues()[j]) <= 1e-10 * norm);
        // residual on the unknowns
        const int first = bc == BoundaryCondition::dirichlet ? 1 : 0;
        Eigen::VectorXd vec(m.rows());
        for (int i = 0; i < m.rows(); ++i) vec[i] = fd.eigenvectors[j][first + i];
        const double res = (m * vec - fd.eigenvalues[j] * vec).cwiseAbs().maxCoeff();
        CHECK(res <= 1e-8 * norm);
        CHECK(oracle::max_abs(fd.eigenvectors[j]) == doctest::Approx(1.0));
      }
      for (int j = 1; j < k; ++j) CHECK(fd.eigenvalues[j - 1] <= fd.eigenvalues[j]);
      if (bc == BoundaryCondition::dirichlet) {
        CHECK(fd.eigenvectors[0].front() == 0.0);
        CHECK(fd.eigenvectors[0].back() == 0.0);
      } else {
        const double sign = bc == BoundaryCondition::periodic ? 1.0 : -1.0;
        for (int j = 0; j < k; ++j) CHECK(fd.eigenvectors[j].back() == doctest::Approx(sign * fd.eigenvectors[j].front()));
      }
    }
  }
}

TEST_CASE("particle in a box") {
  const PotentialModel zero = model([](double) { return 0.0; });
  const FdSpectrum fd = fd_eigensolve(zero, Grid(0, pi, 2001), BoundaryCondition::dirichlet, 2);
  CHECK(fd.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(fd.eigenvalues[1] == doctest::Approx(4.0).epsilon(1e-5));
  for (int j = 0; j < 2; ++j) CHECK(count_nodes(fd.eigenvectors[j]) == j);
  const FdSpectrum more = fd_eigensolve(zero, Grid(0, pi, 401), BoundaryCondition::dirichlet, 6);
  for (int j = 0; j < 6; ++j) CHECK(count_nodes(more.eigenvectors[j]) == j);
}

TEST_CASE("harmonic oscillator on [-10, 10]") {
  const PotentialModel v = model([](double x) { return x * x; });
  const FdSpectrum fd = fd_eigensolve(v, Grid(-10, 10, 2001), BoundaryCondition::dirichlet, 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(std::abs(fd.eigenvalues[j] - (1 + 2 * j)) <= 1e-3);
    CHECK(count_nodes(fd.eigenvectors[j]) == j);
    REQUIRE(fd.convergence_estimate.size() == 4);
    CHECK(fd.convergence_estimate[j] < 1e-3);
  }
}

TEST_CASE("second-order convergence") {
  const PotentialModel v = model([](double x) { return x * x; });
  const FdSpectrum coarse = fd_eigensolve(v, Grid(-10, 10, 401), BoundaryCondition::dirichlet, 4, {false, false});
  const FdSpectrum fine = fd_eigensolve(v, Grid(-10, 10, 801), BoundaryCondition::dirichlet, 4, {false, false});
  for (int j = 0; j < 4; ++j) {
    const double ratio = std::abs(coarse.eigenvalues[j] - (1 + 2 * j)) / std::abs(fine.eigenvalues[j] - (1 + 2 * j));
    CHECK(ratio >= 3.6);
    CHECK(ratio <= 4.4);
  }
}

TEST_CASE("Sturm oscillation for several potentials") {
  const std::vector<std::pair<PotentialModel, Interval>> cases = {
      {model([](double x) { return std::abs(x); }), {-20, 20}},
      {model([](double x) { return x * x * x * x - 4 * x * x; }), {-5, 5}},
      {model([](double x) { return -6 / std::pow(std::cosh(x), 2); }), {-15, 15}},
  };
  for (const auto& [v, range] : cases) {
    const FdSpectrum fd = fd_eigensolve(v, Grid(range.lo, range.hi, 1201), BoundaryCondition::dirichlet, 5, {true, false});
    for (int j = 0; j < 5; ++j) CHECK(count_nodes(fd.eigenvectors[j]) == j);
  }
}

TEST_CASE("free-particle band edges") {
  const PotentialModel zero = model([](double) { return 0.0; });
  const auto edges = band_edges(zero, 2 * pi, 7, 2001);
  REQUIRE(edges.size() == 7);
  const double expected[] = {0, 0.25, 0.25, 1, 1, 2.25, 2.25};
  const BoundaryCondition parity[] = {BoundaryCondition::periodic,     BoundaryCondition::antiperiodic,
                                      BoundaryCondition::antiperiodic, BoundaryCondition::periodic,
                                      BoundaryCondition::periodic,     BoundaryCondition::antiperiodic,
                                      BoundaryCondition::antiperiodic};
  for (int i = 0; i < 7; ++i) {
    CHECK(edges[i].energy == doctest::Approx(expected[i]).epsilon(1e-5).scale(1));
    CHECK(edges[i].parity == parity[i]);
  }
}

TEST_CASE("band edges interlace for the periodic families") {
  const BoundaryCondition p = BoundaryCondition::periodic, a = BoundaryCondition::antiperiodic;
  const BoundaryCondition pattern[] = {p, a, a, p, p, a, a, p, p};
  for (Family f : {Family::periodic_v1, Family::periodic_v2, Family::periodic_v3, Family::periodic_v4})
    for (int n = 0; n <= 2; ++n) {
      const CatalogEntry e = make_entry(f, {{"alpha", 1}, {"beta", 1}, {"a", 0}}, +1, n);
      const auto edges = band_edges(potential_model(e), *e.period, 9, 1001);
      REQUIRE(edges.size() == 9);
      for (int i = 0; i < 9; ++i) {
        INFO(e.info().key, " n=", n, " edge ", i);
        CHECK(edges[i].parity == pattern[i]);
      }
    }
}

// Both algebraizations of periodic family 1 carry a cos or sin of half the
// phase, so their states flip sign over one period: they fill the lowest
// antiperiodic edges, with the periodic ground state below them.
TEST_CASE("periodic family 1 band edges carry the algebraic sector") {
  const Params p{{"alpha", 1}, {"beta", 1}, {"a", 0}};
  SUBCASE("n = 0") {
    const CatalogEntry e = make_entry(Family::periodic_v1, p, +1, 0);
    const auto edges = band_edges(potential_model(e), *e.period, 4, 2001);
    double best = 1e9;
    for (const auto& edge : edges) best = std::min(best, std::abs(edge.energy - (-5.0 / 8)));
    CHECK(best <= 1e-3);
    const FdSpectrum anti = fd_eigensolve(potential_model(e), Grid(0, 2 * pi, 2001), BoundaryCondition::antiperiodic, 2);
    CHECK(std::abs(anti.eigenvalues[0] - (-5.0 / 8)) <= 1e-3);
    CHECK(std::abs(anti.eigenvalues[1] - 3.0 / 8) <= 1e-3);
  }
  SUBCASE("n = 1, both algebraizations") {
    const double algebraic[] = {-1.3570508075688772, 0.375, 2.107050807568877, 2.375};
    const CatalogEntry e = make_entry(Family::periodic_v1, p, +1, 1);
    const auto edges = band_edges(potential_model(e), *e.period, 8, 2001);
    for (double target : algebraic) {
      double best = 1e9;
      for (const auto& edge : edges) best = std::min(best, std::abs(edge.energy - target));
      CHECK(best <= 1e-3);
    }
    const FdSpectrum anti = fd_eigensolve(potential_model(e), Grid(0, 2 * pi, 2001), BoundaryCondition::antiperiodic, 4);
    for (int j = 0; j < 4; ++j) CHECK(std::abs(anti.eigenvalues[j] - algebraic[j]) <= 1e-3);
    const FdSpectrum periodic = fd_eigensolve(potential_model(e), Grid(0, 2 * pi, 2001), BoundaryCondition::periodic, 1);
    CHECK(periodic.eigenvalues[0] < algebraic[0] - 1e-3);
  }
}

TEST_CASE("node counting") {
  std::vector<double> s;
  for (double x : linspace(0, 1.5 * pi, 301)) s.push_back(std::sin(x));
  CHECK(count_nodes(s) == 1);
  CHECK(count_nodes({1.0, 1e-14, -1e-13, 2.0}) == 0);
  CHECK(count_nodes({0.0, 1.0, 0.0, -1.0, 0.0}) == 1);
  CHECK(count_nodes({}) == 0);
}

TEST_CASE("residual of known solutions") {
  const PotentialModel v = model([](double x) { return x * x; });
  const Grid g(-10, 10, 4001);
  auto psi0 = [](double x) { return std::exp(-x * x / 2); };
  CHECK(residual(v, psi0, 1.0, g) <= 1e-6);
  CHECK(residual(v, psi0, 2.0, g) >= 0.5);

  const CatalogEntry p4 = make_entry(Family::periodic_v4, {{"alpha", 1}, {"beta", 1}, {"a", 0}}, +1, 0);
  const SpectralResult sector = compose_energies(solve_algebraic_sector(p4.algebra), energy_offset(p4));
  const WaveFunction psi = qes_wavefunction(p4, sector.levels[0].b);
  CHECK(residual(potential_model(p4), psi, sector.levels[0].energy, Grid(0, 2 * pi, 4001)) <= 1e-6);
}

TEST_CASE("solver errors") {
  const PotentialModel bad = model([](double x) { return 1.0 / x; });
  CHECK_THROWS_AS(fd_eigensolve(bad, Grid(0, 1, 101), BoundaryCondition::periodic, 2), GridError);
  const PotentialModel zero = model([](double) { return 0.0; });
  CHECK_THROWS_AS(fd_eigensolve(zero, Grid(0, 1, 20), BoundaryCondition::dirichlet, 19), GridError);
  CHECK_THROWS_AS(fd_eigensolve(zero, Grid(0, 1, 20), BoundaryCondition::dirichlet, 0), GridError);
}

TEST_CASE("truncation reaches the decay target") {
  const PotentialModel v = model([](double x) { return x * x; });
  const double right = truncation_point(v, 7.0, 0.0, +1);
  const double left = truncation_point(v, 7.0, 0.0, -1);
  CHECK(left == doctest::Approx(-right).epsilon(1e-6));
  const double turning = std::sqrt(7.0);
  const double decay = integrate([](double x) { return std::sqrt(std::max(0.0, x * x - 7.0)); }, turning, right);
  CHECK(decay >= 35.0);
  CHECK(decay <= 40.0);
}
