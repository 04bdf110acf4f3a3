#include "ectx/optimizer.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "ectx/entropy.hpp"
#include "ectx/error.hpp"
#include "ectx/nelder_mead.hpp"
#include "ectx/random.hpp"

namespace ectx {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

bool phi_in_domain(double phi) { return phi >= 0.0 && phi < kQuarterPi; }

double general_objective(std::span<const double> angles, bool complex_search) {
  try {
    return evaluate_c(general_config(angles, complex_search)).c_value;
  } catch (const DegenerateConfigError&) {
    return kMinusInf;
  }
}

}  // namespace

double Axis::node(int k) const {
  const int intervals = half_open ? count : count - 1;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(intervals);
}

Axis default_theta_axis(int resolution) { return Axis{0.0, std::numbers::pi / 2.0, resolution, false}; }

Axis default_phi_axis(int resolution) { return Axis{0.0, kQuarterPi, resolution, true}; }

const GridPoint& Grid::best() const {
  if (points.empty()) throw ValidationError("empty grid");
  const GridPoint* best = &points.front();
  for (const auto& p : points) {
    const bool better =
        p.c > best->c ||
        (p.c == best->c && (p.theta < best->theta || (p.theta == best->theta && p.phi < best->phi)));
    if (better) best = &p;
  }
  return *best;
}

double family_c(const FamilyParams& params) {
  return evaluate_c(build_pentagon_family(params)).c_value;
}

Grid scan_grid(const Axis& theta, const Axis& phi) {
  if (theta.count < 2 || phi.count < 2) throw ParameterError("grid resolution must be >= 2 per axis");
  if (!std::isfinite(theta.lo) || !std::isfinite(theta.hi)) throw ParameterError("theta range is not finite");
  const double phi_last = phi.node(phi.count - 1);
  if (!phi_in_domain(phi.lo) || !phi_in_domain(phi_last)) {
    throw ParameterError("phi range must stay inside [0, pi/4)");
  }
  Grid grid{theta, phi, {}};
  grid.points.reserve(static_cast<std::size_t>(theta.count) * phi.count);
  for (int i = 0; i < theta.count; ++i) {
    for (int j = 0; j < phi.count; ++j) {
      const FamilyParams p{theta.node(i), phi.node(j)};
      grid.points.push_back({p.theta, p.phi, family_c(p)});
    }
  }
  return grid;
}

TwoParamResult optimize_two_param(const FamilyParams& initial, double tolerance,
                                  int max_evaluations) {
  if (!std::isfinite(initial.theta) || !phi_in_domain(initial.phi)) {
    throw ParameterError("initial point outside the family domain");
  }
  auto objective = [](std::span<const double> x) {
    if (!phi_in_domain(x[1])) return kMinusInf;
    return family_c({x[0], x[1]});
  };
  NelderMeadOptions opts;
  opts.initial_step = 0.02;
  opts.x_tolerance = tolerance;
  opts.max_evaluations = max_evaluations;
  const auto nm = nelder_mead_maximize(objective, {initial.theta, initial.phi}, opts);

  TwoParamResult r;
  r.params = {nm.x[0], nm.x[1]};
  r.c_star = nm.value;
  r.converged = nm.converged;
  r.at_boundary = r.params.phi < 1e-6 || r.params.phi > kQuarterPi - 1e-6;
  r.iterations = nm.iterations;
  r.evaluations = nm.evaluations;
  return r;
}

TwoParamResult optimize_from_grid(int resolution, double tolerance) {
  const Grid grid = scan_grid(default_theta_axis(resolution), default_phi_axis(resolution));
  const GridPoint& start = grid.best();
  return optimize_two_param({start.theta, start.phi}, tolerance);
}

PentagonConfig general_config(std::span<const double> angles, bool complex_search) {
  const std::size_t needed = complex_search ? 8 : 4;
  if (angles.size() != needed) {
    throw ParameterError("general parametrization needs " + std::to_string(needed) + " angles");
  }
  const double t = angles[0], a = angles[1], b = angles[2], c = angles[3];
  auto phase = [&](std::size_t k) {
    return complex_search ? std::polar(1.0, angles[k]) : std::complex<double>(1.0, 0.0);
  };
  const Vec3 ex = Vec3::Unit(0);
  const Vec3 psi(std::sin(t), phase(4) * std::cos(t), 0.0);
  const Vec3 a2(0.0, std::cos(a), phase(5) * std::sin(a));
  const Vec3 a4(0.0, std::cos(b), phase(6) * std::sin(b));
  const Vec3 normal = orthogonal_complement(a2, ex);
  const Vec3 a1 = std::cos(c) * ex + phase(7) * std::sin(c) * normal;
  const Vec3 a5 = orthogonal_complement(a4, a1);
  return PentagonConfig{PureState::normalized(psi),
                        {Projector::normalized(a1), Projector::normalized(a2), Projector(ex),
                         Projector::normalized(a4), Projector::normalized(a5)}};
}

GeneralResult optimize_general(std::uint64_t seed, int restarts, const GeneralOptions& options) {
  if (restarts < 1) throw ParameterError("restarts must be >= 1");
  const bool cplx = options.complex_search;
  const std::size_t dim = cplx ? 8 : 4;
  auto objective = [cplx](std::span<const double> x) { return general_objective(x, cplx); };

  std::optional<GeneralResult> best;
  std::vector<double> restart_values;
  restart_values.reserve(restarts);
  for (int r = 0; r < restarts; ++r) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
    std::vector<double> start(dim);
    double start_value = kMinusInf;
    for (int s = 0; s < std::max(1, options.samples_per_restart); ++s) {
      std::vector<double> x(dim);
      for (double& v : x) v = uniform(rng, -std::numbers::pi, std::numbers::pi);
      const double value = objective(x);
      if (value > start_value) {
        start_value = value;
        start = x;
      }
    }

    NelderMeadOptions opts;
    opts.initial_step = 0.3;
    opts.x_tolerance = options.tolerance;
    opts.max_evaluations = options.max_evaluations;
    auto nm = nelder_mead_maximize(objective, start, opts);
    // A second pass from the first result undoes premature simplex collapse.
    opts.initial_step = 0.02;
    auto polish = nelder_mead_maximize(objective, nm.x, opts);
    if (polish.value >= nm.value) nm = std::move(polish);

    restart_values.push_back(nm.value);
    if (!std::isfinite(nm.value)) continue;
    if (!best || nm.value > best->c_star) {
      best.emplace(GeneralResult{general_config(nm.x, cplx), nm.value, nm.x, {}, r});
    }
  }
  if (!best) throw DegenerateConfigError("every restart ended on a degenerate configuration");
  best->restart_values = std::move(restart_values);
  return *best;
}

}  // namespace ectx
