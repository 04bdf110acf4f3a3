#include "ectx/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ectx/error.hpp"

namespace ectx {

namespace {

constexpr double kDegenerateNorm = 1e-12;

// Orthonormal basis whose first column is v (assumed unit). The remaining
// columns come from Gram-Schmidt over the coordinate axes, taking at each
// step the axis with the largest residual.
Mat3 complete_basis(const Vec3& v) {
  Mat3 basis;
  basis.col(0) = v;
  for (int k = 1; k < 3; ++k) {
    Vec3 best = Vec3::Zero();
    double best_norm = -1.0;
    for (int axis = 0; axis < 3; ++axis) {
      Vec3 w = Vec3::Unit(axis);
      for (int j = 0; j < k; ++j) w -= basis.col(j).dot(w) * basis.col(j);
      const double n = w.norm();
      if (n > best_norm) {
        best_norm = n;
        best = w;
      }
    }
    basis.col(k) = best / best_norm;
  }
  return basis;
}

}  // namespace

double overlap(const Vec3& a, const Vec3& b) { return std::abs(a.dot(b)); }

Vec3 orthogonal_complement(const Vec3& a, const Vec3& b) {
  // Eigen's cross already conjugates complex results: c = conj(a × b).
  const Vec3 c = a.cross(b);
  const double n = c.norm();
  if (n < kDegenerateNorm) {
    throw DegenerateConfigError("cross product of parallel vectors has norm " + std::to_string(n));
  }
  return c / n;
}

UnitVector::UnitVector(const Vec3& v) : v_(v) {
  const double n2 = v.squaredNorm();
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tol::kUnitNorm) {
    throw ValidationError("vector is not normalized (squared norm " + std::to_string(n2) + ")");
  }
}

UnitVector UnitVector::normalized(const Vec3& v) {
  const double n = v.norm();
  if (!std::isfinite(n) || n < kDegenerateNorm) {
    throw DegenerateConfigError("cannot normalize a zero vector");
  }
  return UnitVector(Vec3(v / n), Unchecked{});
}

bool Projector::same_ray_as(const Projector& other, double tolerance) const {
  return std::abs(overlap(vec(), other.vec()) - 1.0) <= tolerance;
}

std::array<double, 5> orthogonality_residuals(const PentagonConfig& config) {
  std::array<double, 5> r{};
  for (int i = 0; i < 5; ++i) {
    r[i] = overlap(config.projectors[i].vec(), config.projectors[(i + 1) % 5].vec());
  }
  return r;
}

void validate(const PentagonConfig& config) {
  const auto r = orthogonality_residuals(config);
  for (int i = 0; i < 5; ++i) {
    if (r[i] > tol::kOrthogonal) {
      throw IncompatibleContextError("projectors " + std::to_string(i + 1) + " and " +
                                     std::to_string((i + 1) % 5 + 1) +
                                     " are not orthogonal (|<a|b>| = " + std::to_string(r[i]) +
                                     ")");
    }
  }
}

double outcome_probability(const PureState& state, const Projector& a) {
  const double p = std::norm(a.vec().dot(state.vec()));
  return std::clamp(p, 0.0, 1.0);
}

PairTable pair_joint_distribution(const PureState& state, const Projector& a, const Projector& b) {
  const double ab = overlap(a.vec(), b.vec());
  if (ab > tol::kOrthogonal) {
    throw IncompatibleContextError("projectors are not jointly measurable (|<a|b>| = " +
                                   std::to_string(ab) + ")");
  }
  const double pa = outcome_probability(state, a);
  const double pb = outcome_probability(state, b);
  PairTable t;
  t.p[1][1] = 0.0;
  t.p[1][0] = pa;
  t.p[0][1] = pb;
  t.p[0][0] = std::clamp(1.0 - pa - pb, 0.0, 1.0);
  return t;
}

std::vector<double> clique_joint_distribution(const PureState& state,
                                              std::span<const Projector> projectors) {
  const std::size_t k = projectors.size();
  if (k > 3) {
    throw ValidationError("a qutrit supports at most 3 mutually orthogonal rank-1 projectors");
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (overlap(projectors[i].vec(), projectors[j].vec()) > tol::kOrthogonal) {
        throw IncompatibleContextError("clique projectors are not mutually orthogonal");
      }
    }
  }
  std::vector<double> table(std::size_t{1} << k, 0.0);
  double clicked = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double p = outcome_probability(state, projectors[i]);
    table[std::size_t{1} << i] = p;
    clicked += p;
  }
  table[0] = std::clamp(1.0 - clicked, 0.0, 1.0);
  return table;
}

std::vector<PairTable> cyclic_pair_tables(const PureState& state,
                                          std::span<const Projector> projectors) {
  const std::size_t n = projectors.size();
  if (n < 3) throw ValidationError("a cycle needs at least 3 projectors");
  std::vector<PairTable> tables;
  tables.reserve(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    tables.push_back(pair_joint_distribution(state, projectors[i], projectors[i + 1]));
  }
  tables.push_back(pair_joint_distribution(state, projectors[0], projectors[n - 1]));
  return tables;
}

PentagonConfig build_pentagon_family(const FamilyParams& params) {
  const double theta = params.theta;
  const double phi = params.phi;
  if (!std::isfinite(theta) || !std::isfinite(phi) || phi < 0.0 ||
      phi >= std::numbers::pi / 4.0) {
    throw ParameterError("phi must lie in [0, pi/4), got " + std::to_string(phi));
  }
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const double c = std::cos(phi);
  const double s = std::sin(phi);

  const Vec3 psi(std::sin(theta), std::cos(theta), 0.0);
  const Vec3 a1(std::sqrt(std::cos(2.0 * phi)) * inv_sqrt2 / c, std::tan(phi) * inv_sqrt2,
                inv_sqrt2);
  const Vec3 a2(0.0, c, -s);
  const Vec3 a3(1.0, 0.0, 0.0);
  const Vec3 a4(0.0, c, s);
  // Real inputs, so conj(a1 × a4) = a1 × a4.
  const Vec3 a5 = orthogonal_complement(a1, a4);

  PentagonConfig config{PureState::normalized(psi),
                        {Projector::normalized(a1), Projector::normalized(a2),
                         Projector::normalized(a3), Projector::normalized(a4), Projector(a5)}};
  validate(config);
  return config;
}

PentagonConfig build_symmetric_pentagram() {
  const double c5 = std::cos(std::numbers::pi / 5.0);
  const double cos_alpha = std::sqrt(c5 / (1.0 + c5));
  const double sin_alpha = std::sqrt(1.0 - cos_alpha * cos_alpha);
  auto vertex = [&](int j) {
    const double angle = 4.0 * std::numbers::pi * j / 5.0;
    return Projector::normalized(
        Vec3(sin_alpha * std::cos(angle), sin_alpha * std::sin(angle), cos_alpha));
  };
  PentagonConfig config{PureState(Vec3(0.0, 0.0, 1.0)),
                        {vertex(0), vertex(1), vertex(2), vertex(3), vertex(4)}};
  validate(config);
  return config;
}

Mat3 unitary_mapping(const Vec3& from, const Vec3& to) {
  const Mat3 source = complete_basis(from);
  const Mat3 target = complete_basis(to);
  return target * source.adjoint();
}

PentagonConfig rotate_to_state(const PentagonConfig& config, const PureState& target) {
  const Mat3 u = unitary_mapping(config.state.vec(), target.vec());
  auto rotate = [&](const Projector& p) { return Projector::normalized(u * p.vec()); };
  const auto& a = config.projectors;
  return PentagonConfig{target, {rotate(a[0]), rotate(a[1]), rotate(a[2]), rotate(a[3]),
                                 rotate(a[4])}};
}

SymmetryFlags check_symmetries(const PentagonConfig& config, double tolerance) {
  const auto& a = config.projectors;
  const Vec3& psi = config.state.vec();
  auto close = [tolerance](double x, double y) { return std::abs(x - y) <= tolerance; };
  SymmetryFlags flags;
  flags.state_overlap = close(overlap(a[4].vec(), psi), overlap(a[0].vec(), psi));
  flags.cross_overlap = close(overlap(a[4].vec(), a[1].vec()), overlap(a[0].vec(), a[3].vec()));
  flags.axis_overlap = close(overlap(a[4].vec(), a[2].vec()), overlap(a[0].vec(), a[2].vec()));
  return flags;
}

Projector four_cycle_collapse(const Projector& b, const Projector& d) {
  if (overlap(b.vec(), d.vec()) >= 1.0 - tol::kOrthogonal) {
    throw DegenerateConfigError("B and D are parallel; no 4-cycle of distinct projectors exists");
  }
  return Projector(orthogonal_complement(b.vec(), d.vec()));
}

}  // namespace ectx
