#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ectx/quantum.hpp"

namespace ectx {

// Evenly spaced nodes on [lo, hi] (closed) or [lo, hi) (half_open).
struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  int count = 2;
  bool half_open = false;

  double node(int k) const;
};

// θ ∈ [0, π/2] closed, φ ∈ [0, π/4) half-open; the defaults for the family scan.
Axis default_theta_axis(int resolution);
Axis default_phi_axis(int resolution);

struct GridPoint {
  double theta = 0.0;
  double phi = 0.0;
  double c = 0.0;
};

struct Grid {
  Axis theta;
  Axis phi;
  // Row-major: θ varies slowest.
  std::vector<GridPoint> points;

  // Largest c; equal values resolve to the lexicographically smallest (θ, φ).
  const GridPoint& best() const;
};

// 𝒞 of build_pentagon_family(params), in bits.
double family_c(const FamilyParams& params);

// Throws ParameterError when an axis has fewer than 2 nodes or the φ axis
// reaches outside [0, π/4).
Grid scan_grid(const Axis& theta, const Axis& phi);

struct TwoParamResult {
  FamilyParams params;
  double c_star = 0.0;
  bool converged = false;
  // φ ended within 1e-6 of the edge of [0, π/4).
  bool at_boundary = false;
  int iterations = 0;
  int evaluations = 0;
};

// Nelder-Mead ascent on 𝒞(θ, φ); points with φ outside [0, π/4) are
// rejected. Converged once the simplex is smaller than `tolerance`.
TwoParamResult optimize_two_param(const FamilyParams& initial, double tolerance = 1e-10,
                                  int max_evaluations = 20000);

// scan_grid over the default axes, then optimize_two_param from the best node.
TwoParamResult optimize_from_grid(int resolution, double tolerance = 1e-10);

struct GeneralOptions {
  // 8 angles (4 extra phases) instead of 4 real angles.
  bool complex_search = false;
  // Random angle vectors tried per restart before the local ascent.
  int samples_per_restart = 64;
  double tolerance = 1e-10;
  int max_evaluations = 20000;
};

struct GeneralResult {
  PentagonConfig config;
  double c_star = 0.0;
  std::vector<double> angles;
  std::vector<double> restart_values;
  int best_restart = 0;
};

// Gauge-fixed configuration: A_3 = e_x, ψ = (sin t, cos t, 0),
// A_2 = (0, cos a, sin a), A_4 = (0, cos b, sin b), A_1 = cos c e_x + sin c n
// with n ⊥ {A_2, e_x}, and A_5 ⊥ {A_4, A_1}. The complex variant attaches a
// phase to the second term of each of the four vectors (angles 4..7).
// Throws DegenerateConfigError when A_1 ∥ A_4.
PentagonConfig general_config(std::span<const double> angles, bool complex_search = false);

// Multi-start local ascent over general_config. Each restart has its own
// stream derived from `seed`; the best value wins, earlier restart on ties.
GeneralResult optimize_general(std::uint64_t seed, int restarts, const GeneralOptions& options = {});

}  // namespace ectx
