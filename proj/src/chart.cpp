#include "entspace/chart.hpp"

#include <cmath>
#include <string>

#include "entspace/constants.hpp"
#include "entspace/errors.hpp"

namespace entspace {

namespace {

Mat4 pauli_string(int a, int b) { return tensor_product(pauli::sigma(a), pauli::sigma(b)); }

// Generator of (1/2i) P as an su(4) matrix.
Mat4 su4_element(std::span<const PauliTerm> terms) {
  Mat4 x;
  for (const auto& t : terms) x += t.pauli * Complex(0.0, -0.5 * t.angle);
  return x;
}

}  // namespace

Spectrum::Spectrum(const std::array<double, 4>& r) : r_(r) {
  for (double v : r_)
    if (!std::isfinite(v)) throw DomainError("Spectrum: non-finite eigenvalue");
  const double sum = r_[0] + r_[1] + r_[2] + r_[3];
  if (std::abs(sum - 1.0) > tol::kTrace)
    throw DomainError("Spectrum: eigenvalues sum to " + std::to_string(sum));
  for (std::size_t i = 0; i < 3; ++i)
    if (r_[i] < r_[i + 1] - tol::kSimplex)
      throw DomainError("Spectrum: violated r" + std::to_string(i + 1) + " >= r" +
                        std::to_string(i + 2));
  if (r_[3] < -tol::kSimplex) throw DomainError("Spectrum: violated r4 >= 0");
}

bool Spectrum::generic() const { return r_[0] > r_[1] && r_[1] > r_[2] && r_[2] > r_[3] && r_[3] > 0.0; }

Spectrum eigenvalues_from_xyz(const SimplexPoint& s) {
  const auto [x, y, z] = s;
  return Spectrum({0.25 * (1.0 + x + y + z), 0.25 * (1.0 + x - y - z), 0.25 * (1.0 - x + y - z),
                   0.25 * (1.0 - x - y + z)});
}

SimplexPoint xyz_from_eigenvalues(const Spectrum& r) {
  return {r[0] + r[1] - r[2] - r[3], r[0] - r[1] + r[2] - r[3], r[0] - r[1] - r[2] + r[3]};
}

bool in_octahedron(const OctahedronPoint& p) {
  return std::abs(p[0]) + std::abs(p[1]) + std::abs(p[2]) <= kOctahedronRadius;
}

std::array<PauliTerm, 3> alpha_generators(const OctahedronPoint& alpha) {
  return {PauliTerm{alpha[0], pauli_string(0, 1)}, PauliTerm{alpha[1], pauli_string(1, 0)},
          PauliTerm{alpha[2], pauli_string(1, 1)}};
}

std::array<PauliTerm, 3> beta_generators(const OctahedronPoint& beta) {
  return {PauliTerm{beta[0], pauli_string(3, 1)}, PauliTerm{beta[1], pauli_string(2, 2)},
          PauliTerm{beta[2], pauli_string(1, 3)}};
}

UnitaryMat4 a_factor(const OctahedronPoint& alpha, const OctahedronPoint& beta) {
  const auto ga = alpha_generators(alpha);
  const auto gb = beta_generators(beta);
  return UnitaryMat4(exp_pauli_family(ga).matrix() * exp_pauli_family(gb).matrix());
}

UnitaryMat4 a_factor_series(const OctahedronPoint& alpha, const OctahedronPoint& beta) {
  const auto ga = alpha_generators(alpha);
  const auto gb = beta_generators(beta);
  return UnitaryMat4(exp_antihermitian(su4_element(ga)).matrix() *
                     exp_antihermitian(su4_element(gb)).matrix());
}

RepresentativeState representative_state(const ChartPoint& c) {
  const Spectrum spec = eigenvalues_from_xyz(c.s);
  const Mat4 a = a_factor(c.alpha, c.beta).matrix();
  const auto& r = spec.values();
  const Mat4 d = Mat4::diagonal({r[0], r[1], r[2], r[3]});
  return {DensityMatrix(a * d * a.adjoint()), spec, spec.generic()};
}

UnitaryMat4 torus_factor(const TorusPoint& t) {
  std::array<Complex, 4> phases{};
  for (int ia = 0; ia < 2; ++ia)
    for (int ib = 0; ib < 2; ++ib) {
      const double sa = ia == 0 ? 1.0 : -1.0;
      const double sb = ib == 0 ? 1.0 : -1.0;
      const double angle = -0.5 * (t.t[0] * sa + t.t[1] * sb + t.t[2] * sa * sb);
      phases[2 * ia + ib] = std::polar(1.0, angle);
    }
  return UnitaryMat4(Mat4::diagonal(phases));
}

UnitaryMat4 assemble_su4(const LocalUnitary& k, const OctahedronPoint& alpha,
                         const OctahedronPoint& beta, const TorusPoint& t) {
  return UnitaryMat4(k.matrix() * a_factor(alpha, beta).matrix() * torus_factor(t).matrix());
}

}  // namespace entspace
