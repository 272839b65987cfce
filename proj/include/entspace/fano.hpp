#pragma once

// Fano (Bloch vector + correlation matrix) coordinates of two-qubit states:
//
//   rho = 1/4 (I + Σ a_i σ_i⊗I + Σ b_i I⊗σ_i + Σ C_ij σ_i⊗σ_j)
//
// so that a_i = Tr(rho σ_i⊗I), b_i = Tr(rho I⊗σ_i), C_ij = Tr(rho σ_i⊗σ_j).

#include <array>

#include "entspace/linalg.hpp"

namespace entspace {

/// Unit-trace positive-semidefinite Hermitian 4×4 matrix. The constructor is
/// the single positivity gate of the library; it throws DomainError for
/// Tr ≠ 1 (tol::kTrace) or an eigenvalue below −tol::kPositivity.
class DensityMatrix {
 public:
  explicit DensityMatrix(const HermMat4& m);
  explicit DensityMatrix(const Mat4& m) : DensityMatrix(HermMat4(m)) {}

  static DensityMatrix maximally_mixed();

  [[nodiscard]] const HermMat4& herm() const { return m_; }
  [[nodiscard]] const Mat4& matrix() const { return m_.matrix(); }
  /// Eigenvalues, descending.
  [[nodiscard]] const std::array<double, 4>& spectrum() const { return spectrum_; }

 private:
  HermMat4 m_;
  std::array<double, 4> spectrum_{};
};

struct FanoState {
  Vec3 a{};
  Vec3 b{};
  Mat3 c{};
};

/// Throws DomainError unless |a|, |b| and every |C_ij| are at most 1 + tol::kBloch.
void check_fano_bounds(const FanoState& f);

/// Element (u, v) of SU(2)×SU(2); both factors validated to tol::kUnitary.
class LocalUnitary {
 public:
  LocalUnitary() : u_(Mat2::identity()), v_(Mat2::identity()) {}
  LocalUnitary(const Mat2& u, const Mat2& v);

  [[nodiscard]] const Mat2& u() const { return u_; }
  [[nodiscard]] const Mat2& v() const { return v_; }
  /// u⊗v
  [[nodiscard]] Mat4 matrix() const { return tensor_product(u_, v_); }

 private:
  Mat2 u_;
  Mat2 v_;
};

FanoState to_fano(const HermMat4& h);
inline FanoState to_fano(const DensityMatrix& rho) { return to_fano(rho.herm()); }

/// Inverse of to_fano. Positivity is not checked.
HermMat4 from_fano(const FanoState& f);

/// M = C − a bᵀ
Mat3 schlienz_mahler(const FanoState& f);

/// (u⊗v) rho (u⊗v)†
DensityMatrix local_unitary_action(const DensityMatrix& rho, const LocalUnitary& g);

/// Adjoint SO(3) image of u ∈ SU(2): R_ij = ½ Tr(σ_i u σ_j u†).
Mat3 so3_rotation(const Mat2& u);

}  // namespace entspace
