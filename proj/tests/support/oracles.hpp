#pragma once

// Test-only reference computations. Everything here is written from the
// definitions in extended precision and deliberately shares no code path
// with the library routines it is used to check.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "ectx/quantum.hpp"
#include "ectx/random.hpp"

namespace ectx::oracle {

using Real = long double;
using Amp = std::complex<long double>;
using LVec = std::array<Amp, 3>;

inline LVec widen(const Vec3& v) {
  return {Amp(v[0].real(), v[0].imag()), Amp(v[1].real(), v[1].imag()),
          Amp(v[2].real(), v[2].imag())};
}

// |⟨a|ψ⟩|² by explicit summation.
inline Real born(const LVec& a, const LVec& psi) {
  Amp s = 0;
  for (int i = 0; i < 3; ++i) s += std::conj(a[i]) * psi[i];
  return std::norm(s);
}

inline Real entropy_bits(const std::vector<Real>& p) {
  Real h = 0;
  for (Real x : p) {
    if (x > 0) h -= x * std::log(x) / std::log(Real(2));
  }
  return h;
}

// H(A|B) = Σ_b p(b) H(A | B = b) from conditional probabilities;
// table[a][b].
inline Real conditional_entropy(const std::array<std::array<Real, 2>, 2>& t) {
  Real h = 0;
  for (int b = 0; b < 2; ++b) {
    const Real pb = t[0][b] + t[1][b];
    if (pb <= 0) continue;
    h += pb * entropy_bits({t[0][b] / pb, t[1][b] / pb});
  }
  return h;
}

// Born-rule table for an orthogonal pair, table[a][b].
inline std::array<std::array<Real, 2>, 2> pair_table(const LVec& psi, const LVec& a,
                                                    const LVec& b) {
  const Real pa = born(a, psi);
  const Real pb = born(b, psi);
  return {{{1 - pa - pb, pb}, {pa, 0}}};
}

// H(A_1|A_n) − Σ H(A_i|A_{i+1}) straight from vectors.
inline Real cycle_c(const Vec3& state, const std::vector<Vec3>& projectors) {
  const LVec psi = widen(state);
  std::vector<LVec> a;
  for (const auto& p : projectors) a.push_back(widen(p));
  const std::size_t n = a.size();
  Real c = conditional_entropy(pair_table(psi, a[0], a[n - 1]));
  for (std::size_t i = 0; i + 1 < n; ++i) c -= conditional_entropy(pair_table(psi, a[i], a[i + 1]));
  return c;
}

inline Real pentagon_c(const PentagonConfig& config) {
  std::vector<Vec3> v;
  for (const auto& p : config.projectors) v.push_back(p.vec());
  return cycle_c(config.state.vec(), v);
}

// Marginal over `keep` (bit k of the result index = outcome of keep[k]) by
// looping over every tuple of an n-variable table indexed by bit position.
inline std::vector<Real> brute_marginal(const std::vector<double>& table, int n,
                                        const std::vector<int>& keep) {
  std::vector<Real> out(std::size_t{1} << keep.size(), 0);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < keep.size(); ++k) idx |= ((x >> keep[k]) & 1u) << k;
    out[idx] += table[x];
  }
  return out;
}

// The hexagon used for the n = 6 entropy check: the two-angle optimal
// pentagon family with A_3 split into e_x and (0, −sinφ, cosφ).
inline std::vector<Vec3> hexagon_family(double theta, double phi, Vec3& state) {
  const double c = std::cos(phi), s = std::sin(phi), r = 1.0 / std::sqrt(2.0);
  state = Vec3(std::sin(theta), std::cos(theta), 0.0);
  const Vec3 a1(std::sqrt(std::cos(2 * phi)) * r / c, std::tan(phi) * r, r);
  const Vec3 a4(0.0, c, s);
  Vec3 a5 = a1.cross(a4);
  a5 /= a5.norm();
  return {a1, Vec3(0.0, c, -s), Vec3(1.0, 0.0, 0.0), Vec3(0.0, -s, c), a4, a5};
}

}  // namespace ectx::oracle

namespace ectx::testing {

inline Vec3 random_complex_unit(Rng& rng) {
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = {standard_normal(rng), standard_normal(rng)};
  return v / v.norm();
}

inline Vec3 random_real_unit(Rng& rng) {
  Vec3 v(standard_normal(rng), standard_normal(rng), standard_normal(rng));
  return v / v.norm();
}

// Random unit vector orthogonal to the unit vector a.
inline Vec3 random_orthogonal(const Vec3& a, Rng& rng, bool real = false) {
  Vec3 v = real ? random_real_unit(rng) : random_complex_unit(rng);
  v -= a.dot(v) * a;
  return v / v.norm();
}

// Dirichlet(1,1,1,1) pair table.
inline PairTable random_pair_table(Rng& rng) {
  PairTable t;
  double total = 0;
  for (auto& row : t.p) {
    for (double& v : row) {
      v = standard_exponential(rng);
      total += v;
    }
  }
  for (auto& row : t.p) {
    for (double& v : row) v /= total;
  }
  return t;
}

}  // namespace ectx::testing
