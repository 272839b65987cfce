#pragma once

// Coordinates on the generic stratum of the two-qubit entanglement space:
// an ordered spectral simplex (x, y, z) times two regular octahedra (α, β).
//
//   rho(x, y, z, α, β) = 𝒜(α, β) diag(r1, r2, r3, r4) 𝒜(α, β)†,
//   𝒜 = exp(𝔞(α)) exp(𝔞′(β)),
//
// with r1 = (1+x+y+z)/4, r2 = (1+x−y−z)/4, r3 = (1−x+y−z)/4, r4 = (1−x−y+z)/4.

#include <array>
#include <numbers>

#include "entspace/fano.hpp"
#include "entspace/linalg.hpp"

namespace entspace {

/// Circumradius of the octahedra: vertices at distance 2π from the centre
/// (edge length 2π√2), i.e. the ℓ1 ball of radius 2π.
inline constexpr double kOctahedronRadius = 2.0 * std::numbers::pi;

struct SimplexPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Eigenvalues r1 ≥ r2 ≥ r3 ≥ r4 ≥ 0 summing to 1.
class Spectrum {
 public:
  /// Throws DomainError naming the first violated condition.
  explicit Spectrum(const std::array<double, 4>& r);

  [[nodiscard]] const std::array<double, 4>& values() const { return r_; }
  [[nodiscard]] double operator[](std::size_t i) const { return r_[i]; }
  /// Strictly decreasing and full rank: the generic (maximal torus) stratum.
  [[nodiscard]] bool generic() const;

 private:
  std::array<double, 4> r_;
};

struct OctahedronPoint {
  std::array<double, 3> c{};

  double operator[](std::size_t i) const { return c[i]; }
};

struct ChartPoint {
  SimplexPoint s;
  OctahedronPoint alpha;
  OctahedronPoint beta;
};

struct TorusPoint {
  std::array<double, 3> t{};
};

Spectrum eigenvalues_from_xyz(const SimplexPoint& s);
SimplexPoint xyz_from_eigenvalues(const Spectrum& r);

/// |c1| + |c2| + |c3| ≤ 2π, closed.
bool in_octahedron(const OctahedronPoint& p);

/// Generator families of the two exponents of 𝒜. Each family mutually
/// commutes:
///   𝔞  = (1/2i)(α1 I⊗σ1 + α2 σ1⊗I + α3 σ1⊗σ1)
///   𝔞′ = (1/2i)(β1 σ3⊗σ1 + β2 σ2⊗σ2 + β3 σ1⊗σ3)
std::array<PauliTerm, 3> alpha_generators(const OctahedronPoint& alpha);
std::array<PauliTerm, 3> beta_generators(const OctahedronPoint& beta);

/// 𝒜 = exp(𝔞) exp(𝔞′) through the closed-form product of half-angle factors.
UnitaryMat4 a_factor(const OctahedronPoint& alpha, const OctahedronPoint& beta);
/// Same product through the generic series exponential.
UnitaryMat4 a_factor_series(const OctahedronPoint& alpha, const OctahedronPoint& beta);

struct RepresentativeState {
  DensityMatrix state;
  Spectrum spectrum;
  /// False on degenerate spectra, where the chart is not a local coordinate system.
  bool generic;
};

/// 𝒜 diag(r) 𝒜†. Spectrum violations propagate as DomainError; points
/// outside the octahedra are accepted.
RepresentativeState representative_state(const ChartPoint& c);

/// T = exp(t1 λ3 + t2 λ6 + t3 λ15) with the Cartan elements
/// λ3 = (1/2i)σ3⊗I, λ6 = (1/2i)I⊗σ3, λ15 = (1/2i)σ3⊗σ3.
UnitaryMat4 torus_factor(const TorusPoint& t);

/// U = (u⊗v) 𝒜(α, β) T(t).
UnitaryMat4 assemble_su4(const LocalUnitary& k, const OctahedronPoint& alpha,
                         const OctahedronPoint& beta, const TorusPoint& t);

}  // namespace entspace
