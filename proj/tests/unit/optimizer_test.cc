#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ectx/entropy.hpp"
#include "ectx/error.hpp"
#include "ectx/kcbs.hpp"
#include "ectx/nelder_mead.hpp"
#include "ectx/optimizer.hpp"
#include "oracles.hpp"

namespace ectx {
namespace {

// Highest value the real search may ever report; the true optimum is
// 0.0910907366 bits.
constexpr double kCeiling = 0.0911;

TEST(Axis, Nodes) {
  const Axis closed{0.0, 1.0, 5, false};
  EXPECT_DOUBLE_EQ(closed.node(0), 0.0);
  EXPECT_DOUBLE_EQ(closed.node(4), 1.0);
  const Axis open{0.0, 1.0, 4, true};
  EXPECT_DOUBLE_EQ(open.node(3), 0.75);
  EXPECT_LT(default_phi_axis(200).node(199), std::numbers::pi / 4);
  EXPECT_DOUBLE_EQ(default_theta_axis(200).node(199), std::numbers::pi / 2);
}

TEST(ScanGrid, FullGridPeaksNearOptimum) {
  const auto grid = scan_grid(default_theta_axis(200), default_phi_axis(200));
  ASSERT_EQ(grid.points.size(), 40000u);
  const auto& best = grid.best();
  EXPECT_NEAR(best.c, 0.091, 1e-3);
  EXPECT_NEAR(best.theta, 0.2366, 0.01);
  EXPECT_NEAR(best.phi, 0.1698, 0.01);
  for (const auto& p : grid.points) ASSERT_LE(p.c, kCeiling);
}

TEST(ScanGrid, DegenerateLineNeverViolates) {
  const auto grid = scan_grid(default_theta_axis(400), Axis{0.0, 0.0, 2, false});
  for (const auto& p : grid.points) {
    ASSERT_EQ(p.phi, 0.0);
    ASSERT_LE(p.c, 0.0) << "theta " << p.theta;
  }
}

TEST(ScanGrid, CornerGridIsFinite) {
  const auto grid = scan_grid(Axis{0.0, std::numbers::pi / 2, 2, false}, default_phi_axis(2));
  ASSERT_EQ(grid.points.size(), 4u);
  for (const auto& p : grid.points) EXPECT_TRUE(std::isfinite(p.c));
}

TEST(ScanGrid, BitReproducible) {
  const auto a = scan_grid(default_theta_axis(60), default_phi_axis(60));
  const auto b = scan_grid(default_theta_axis(60), default_phi_axis(60));
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    ASSERT_EQ(std::bit_cast<std::uint64_t>(a.points[i].c), std::bit_cast<std::uint64_t>(b.points[i].c));
  }
}

TEST(ScanGrid, TiesResolveToSmallestPoint) {
  Grid g;
  g.points = {{0.2, 0.1, 1.0}, {0.1, 0.3, 1.0}, {0.1, 0.2, 1.0}, {0.0, 0.0, 0.5}};
  EXPECT_EQ(g.best().theta, 0.1);
  EXPECT_EQ(g.best().phi, 0.2);
}

TEST(ScanGrid, Errors) {
  EXPECT_THROW(scan_grid(Axis{0, 1, 1, false}, default_phi_axis(10)), ParameterError);
  EXPECT_THROW(scan_grid(default_theta_axis(10), Axis{0, 1, 10, false}), ParameterError);
  EXPECT_THROW(scan_grid(default_theta_axis(10), Axis{-0.1, 0.5, 10, false}), ParameterError);
}

TEST(FamilyC, MatchesOracle) {
  const FamilyParams p{0.2366, 0.1698};
  EXPECT_NEAR(family_c(p), static_cast<double>(oracle::pentagon_c(build_pentagon_family(p))), 1e-12);
}

TEST(OptimizeTwoParam, FromGridSeed) {
  const auto r = optimize_from_grid(200);
  EXPECT_TRUE(r.converged);
  EXPECT_FALSE(r.at_boundary);
  EXPECT_NEAR(r.params.theta, 0.2366, 0.005);
  EXPECT_NEAR(r.params.phi, 0.1698, 0.005);
  EXPECT_NEAR(r.c_star, 0.091, 1e-3);
  EXPECT_LE(r.c_star, kCeiling);
  // Frozen from a high-precision independent search.
  EXPECT_NEAR(r.c_star, 0.0910907366, 1e-9);
  EXPECT_NEAR(r.params.theta, 0.23664975, 1e-5);
  EXPECT_NEAR(r.params.phi, 0.16979554, 1e-5);
}

TEST(OptimizeTwoParam, NearbyStartFindsSameOptimum) {
  const auto a = optimize_two_param({0.24, 0.17});
  const auto b = optimize_from_grid(200);
  EXPECT_TRUE(a.converged);
  EXPECT_NEAR(a.c_star, b.c_star, 1e-9);
  EXPECT_NEAR(a.params.theta, b.params.theta, 1e-4);
  EXPECT_NEAR(a.params.phi, b.params.phi, 1e-4);
}

TEST(OptimizeTwoParam, StartOnDegenerateBoundary) {
  // Recorded behaviour: from φ = 0 the ascent leaves the boundary and
  // reaches the interior optimum.
  const auto r = optimize_two_param({0.2366, 0.0});
  EXPECT_TRUE(r.converged);
  EXPECT_FALSE(r.at_boundary);
  EXPECT_GT(r.params.phi, 0.1);
  EXPECT_NEAR(r.c_star, 0.0910907366, 1e-9);
}

TEST(OptimizeTwoParam, RejectsStartOutsideDomain) {
  EXPECT_THROW(optimize_two_param({0.2, -0.1}), ParameterError);
  EXPECT_THROW(optimize_two_param({0.2, 1.0}), ParameterError);
}

TEST(NelderMead, QuadraticAndDomainWall) {
  const auto r = nelder_mead_maximize(
      [](std::span<const double> x) { return -(x[0] - 1) * (x[0] - 1) - 2 * (x[1] + 0.5) * (x[1] + 0.5); },
      {0.0, 0.0});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-6);
  EXPECT_NEAR(r.x[1], -0.5, 1e-6);

  const auto walled = nelder_mead_maximize(
      [](std::span<const double> x) {
        return x[0] < 0 ? -std::numeric_limits<double>::infinity() : -(x[0] + 1) * (x[0] + 1);
      },
      {0.5});
  EXPECT_GE(walled.x[0], 0.0);
  EXPECT_NEAR(walled.x[0], 0.0, 1e-6);
}

TEST(GeneralConfig, CyclicOrthogonalForRandomAngles) {
  Rng rng(71);
  for (int trial = 0; trial < 2000; ++trial) {
    const bool complex_search = trial % 2 == 1;
    std::vector<double> angles(complex_search ? 8 : 4);
    for (double& a : angles) a = uniform(rng, -std::numbers::pi, std::numbers::pi);
    const auto c = general_config(angles, complex_search);
    for (double r : orthogonality_residuals(c)) ASSERT_LE(r, 1e-9);
    ASSERT_LE(evaluate_c(c).c_value, kCeiling);
  }
}

TEST(GeneralConfig, ContainsTheFamily) {
  // The optimal family sits in the gauge: t = θ, a = −φ, b = φ, and c < 0
  // because the in-plane normal for a = −φ is −(0, sinφ, cosφ).
  const double phi = 0.1698;
  const double c = -std::acos(std::sqrt(std::cos(2 * phi)) / (std::sqrt(2.0) * std::cos(phi)));
  const std::vector<double> angles{0.2366, -phi, phi, c};
  const auto g = general_config(angles);
  EXPECT_NEAR(evaluate_c(g).c_value, family_c({0.2366, phi}), 1e-12);
}

TEST(OptimizeGeneral, FiftyRestarts) {
  const auto r = optimize_general(0, 50);
  EXPECT_NEAR(r.c_star, 0.091, 1e-3);
  EXPECT_LE(r.c_star, kCeiling);
  EXPECT_TRUE(check_symmetries(r.config, 1e-3).all());
  EXPECT_NEAR(kcbs_value(r.config).violation, 0.049, 2e-3);
  for (double res : orthogonality_residuals(r.config)) EXPECT_LE(res, 1e-9);
  ASSERT_EQ(r.restart_values.size(), 50u);
  EXPECT_EQ(r.restart_values[static_cast<std::size_t>(r.best_restart)], r.c_star);
}

TEST(OptimizeGeneral, SingleRestartsNeverExceedCeiling) {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 0xdeadbeefull, ~0ull, 0x8000000000000000ull}) {
    const auto r = optimize_general(seed, 1);
    EXPECT_LE(r.c_star, kCeiling) << "seed " << seed;
    for (double res : orthogonality_residuals(r.config)) EXPECT_LE(res, 1e-9);
  }
}

TEST(OptimizeGeneral, Deterministic) {
  const auto a = optimize_general(42, 5);
  const auto b = optimize_general(42, 5);
  EXPECT_EQ(a.restart_values, b.restart_values);
  EXPECT_EQ(a.angles, b.angles);
}

TEST(OptimizeGeneral, ComplexSearchStaysBelowCeiling) {
  GeneralOptions opts;
  opts.complex_search = true;
  const auto r = optimize_general(9, 8, opts);
  EXPECT_EQ(r.angles.size(), 8u);
  EXPECT_LE(r.c_star, kCeiling);
}

TEST(OptimizeGeneral, RejectsZeroRestarts) {
  EXPECT_THROW(optimize_general(0, 0), ParameterError);
}

}  // namespace
}  // namespace ectx
