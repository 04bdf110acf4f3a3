#pragma once

// Qutrit geometry: pure states, rank-1 projectors, and the five-projector
// cyclic configurations used by the entropic and pentagram tests.

#include <array>
#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ectx/tables.hpp"
#include "ectx/tolerance.hpp"

namespace ectx {

using Vec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3cd;

// |⟨a|b⟩|
double overlap(const Vec3& a, const Vec3& b);

// Unit vector orthogonal (in the Hermitian sense) to both inputs:
// conj(a × b) / ‖a × b‖. Throws DegenerateConfigError when ‖a × b‖ < 1e-12.
Vec3 orthogonal_complement(const Vec3& a, const Vec3& b);

// A unit vector in C³. Construction validates the norm.
class UnitVector {
 public:
  explicit UnitVector(const Vec3& v);
  // Rescales v; throws DegenerateConfigError for the zero vector.
  static UnitVector normalized(const Vec3& v);

  const Vec3& vec() const { return v_; }
  std::complex<double> operator[](int i) const { return v_[i]; }

 private:
  struct Unchecked {};
  UnitVector(const Vec3& v, Unchecked) : v_(v) {}
  Vec3 v_;
};

// System state |ψ⟩.
class PureState : public UnitVector {
 public:
  using UnitVector::UnitVector;
  PureState(const UnitVector& u) : UnitVector(u) {}  // NOLINT(google-explicit-constructor)
  static PureState normalized(const Vec3& v) { return PureState(UnitVector::normalized(v)); }
};

// Rank-1 projector |A⟩⟨A|, stored by its vector. Vectors are only defined up
// to a global phase, so compare with same_ray_as rather than elementwise.
class Projector : public UnitVector {
 public:
  using UnitVector::UnitVector;
  Projector(const UnitVector& u) : UnitVector(u) {}  // NOLINT(google-explicit-constructor)
  static Projector normalized(const Vec3& v) { return Projector(UnitVector::normalized(v)); }

  bool same_ray_as(const Projector& other, double tolerance = tol::kOrthogonal) const;
};

// A state and five projectors with A_i ⊥ A_{i+1} (indices mod 5).
struct PentagonConfig {
  PureState state;
  std::array<Projector, 5> projectors;
};

// |⟨A_i|A_{i+1}⟩| for i = 0..4 (0-based, cyclic).
std::array<double, 5> orthogonality_residuals(const PentagonConfig& config);

// Throws IncompatibleContextError if any neighbouring pair is not orthogonal.
void validate(const PentagonConfig& config);

// Parameters of the two-angle optimal family; phi must lie in [0, π/4).
struct FamilyParams {
  double theta = 0.0;
  double phi = 0.0;
};

// Born rule |⟨A|ψ⟩|², clipped into [0, 1].
double outcome_probability(const PureState& state, const Projector& a);

// Outcome distribution of two orthogonal projectors measured together.
// Throws IncompatibleContextError when |⟨a|b⟩| > tol::kOrthogonal.
PairTable pair_joint_distribution(const PureState& state, const Projector& a, const Projector& b);

// Joint outcome table of k mutually orthogonal projectors. Entry index bit i
// is the outcome of projectors[i]; tuples with two or more clicks get 0.
std::vector<double> clique_joint_distribution(const PureState& state,
                                              std::span<const Projector> projectors);

// Tables for the cyclic edges (1,2), (2,3), ..., (n-1,n), (1,n) in the order
// consumed by evaluate_c_from_marginals.
std::vector<PairTable> cyclic_pair_tables(const PureState& state,
                                          std::span<const Projector> projectors);

// ψ = (sinθ, cosθ, 0), A_2 = (0, cosφ, −sinφ), A_3 = e_x, A_4 = (0, cosφ, sinφ),
// A_1 = (√cos2φ / (√2 cosφ), tanφ / √2, 1/√2), A_5 ∝ A_1 × A_4.
// Throws ParameterError for phi outside [0, π/4).
PentagonConfig build_pentagon_family(const FamilyParams& params);

// Rotationally symmetric pentagram around ψ = e_z with p(A_j = 1) = 1/√5.
PentagonConfig build_symmetric_pentagram();

// A unitary U with U|from⟩ = |to⟩, obtained by completing both vectors to
// orthonormal bases and mapping one onto the other.
Mat3 unitary_mapping(const Vec3& from, const Vec3& to);

// Applies unitary_mapping(config.state, target) to every projector; the
// returned state is target itself.
PentagonConfig rotate_to_state(const PentagonConfig& config, const PureState& target);

struct SymmetryFlags {
  bool state_overlap = false;  // |⟨A_5|ψ⟩| = |⟨A_1|ψ⟩|
  bool cross_overlap = false;  // |⟨A_5|A_2⟩| = |⟨A_1|A_4⟩|
  bool axis_overlap = false;   // |⟨A_5|A_3⟩| = |⟨A_1|A_3⟩|

  bool all() const { return state_overlap && cross_overlap && axis_overlap; }
};

// Reflection symmetries of the optimal solution, compared by modulus.
SymmetryFlags check_symmetries(const PentagonConfig& config, double tolerance = tol::kSymmetry);

// In a 4-cycle A–B–C–D–A of rank-1 projectors on a qutrit, A and C are both
// orthogonal to B and D and are therefore forced onto the same ray. Returns
// that ray. Throws DegenerateConfigError when b and d are parallel.
Projector four_cycle_collapse(const Projector& b, const Projector& d);

}  // namespace ectx
