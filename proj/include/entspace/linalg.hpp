#pragma once

// Fixed-size complex linear algebra for one and two qubits.
//
// Index convention: qubit A is the left (slow) tensor factor, so a two-qubit
// basis index is 2*i_A + i_B.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

namespace entspace {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// Dense N×N complex matrix, row-major, value semantics.
template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t kDim = N;

  constexpr SquareMatrix() = default;

  static constexpr SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static constexpr SquareMatrix diagonal(const std::array<Complex, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  constexpr Complex& operator()(std::size_t r, std::size_t c) { return a_[r * N + c]; }
  constexpr const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * N + c]; }

  [[nodiscard]] constexpr SquareMatrix adjoint() const {
    SquareMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  [[nodiscard]] constexpr Complex trace() const {
    Complex t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  constexpr SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) a_[i] += o.a_[i];
    return *this;
  }
  constexpr SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) a_[i] -= o.a_[i];
    return *this;
  }
  constexpr SquareMatrix& operator*=(Complex s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  friend constexpr SquareMatrix operator+(SquareMatrix l, const SquareMatrix& r) { return l += r; }
  friend constexpr SquareMatrix operator-(SquareMatrix l, const SquareMatrix& r) { return l -= r; }
  friend constexpr SquareMatrix operator*(SquareMatrix m, Complex s) { return m *= s; }
  friend constexpr SquareMatrix operator*(Complex s, SquareMatrix m) { return m *= s; }
  friend constexpr SquareMatrix operator-(SquareMatrix m) { return m *= -1.0; }

  friend constexpr SquareMatrix operator*(const SquareMatrix& l, const SquareMatrix& r) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex lik = l(i, k);
        for (std::size_t j = 0; j < N; ++j) m(i, j) += lik * r(k, j);
      }
    return m;
  }

  friend constexpr bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  [[nodiscard]] constexpr std::span<const Complex, N * N> entries() const { return a_; }

 private:
  std::array<Complex, N * N> a_{};
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

/// Largest entrywise modulus of l - r.
template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& l, const SquareMatrix<N>& r) {
  double d = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) d = std::max(d, std::abs(l(i, j) - r(i, j)));
  return d;
}

template <std::size_t N>
double frobenius_norm(const SquareMatrix<N>& m) {
  double s = 0.0;
  for (const auto& v : m.entries()) s += std::norm(v);
  return std::sqrt(s);
}

/// Maximum absolute column sum.
template <std::size_t N>
double one_norm(const SquareMatrix<N>& m) {
  double best = 0.0;
  for (std::size_t c = 0; c < N; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < N; ++r) s += std::abs(m(r, c));
    best = std::max(best, s);
  }
  return best;
}

template <std::size_t N>
SquareMatrix<N> commutator(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return a * b - b * a;
}

/// Determinant by Gaussian elimination with partial pivoting.
template <std::size_t N>
Complex determinant(SquareMatrix<N> m) {
  Complex det = 1.0;
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < N; ++r)
      if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
    if (m(piv, c) == Complex{}) return Complex{};
    if (piv != c) {
      for (std::size_t k = 0; k < N; ++k) std::swap(m(c, k), m(piv, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < N; ++r) {
      const Complex f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < N; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

namespace pauli {
/// sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
Mat2 sigma(int index);
}  // namespace pauli

/// 4×4 Hermitian matrix. Construction symmetrizes input whose asymmetry is
/// at most tol::kHermitian and rejects anything else with DomainError.
class HermMat4 {
 public:
  HermMat4() = default;
  explicit HermMat4(const Mat4& m);

  [[nodiscard]] const Mat4& matrix() const { return m_; }
  [[nodiscard]] const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  [[nodiscard]] double trace() const { return m_.trace().real(); }

  friend bool operator==(const HermMat4&, const HermMat4&) = default;

 private:
  Mat4 m_{};
};

/// 4×4 special unitary matrix, validated to tol::kUnitary at construction.
class UnitaryMat4 {
 public:
  UnitaryMat4() : m_(Mat4::identity()) {}
  explicit UnitaryMat4(const Mat4& m);

  [[nodiscard]] const Mat4& matrix() const { return m_; }

 private:
  Mat4 m_;
};

enum class Subsystem { A, B };

/// Kronecker product, row index 2*i_A + i_B.
Mat4 tensor_product(const Mat2& a, const Mat2& b);

/// Eigenvalues in descending order.
std::array<double, 4> herm_eigenvalues(const HermMat4& h);

struct HermEigen {
  std::array<double, 4> values;  // descending
  Mat4 vectors;                   // column k belongs to values[k]
};

/// Cyclic complex Jacobi. Throws NumericalError after tol::kJacobiMaxSweeps.
HermEigen herm_eigen(const HermMat4& h);

/// exp(X) for traceless anti-Hermitian X (an element of su(4)) by scaling
/// and squaring of a truncated Taylor series. Rejects X whose anti-Hermitian
/// defect or trace exceeds tol::kAntiHermitian.
UnitaryMat4 exp_antihermitian(const Mat4& x);

/// One term angle·(1/2i)·P of an exponent, with P a Hermitian involution
/// (a Pauli string such as σ1⊗σ3).
struct PauliTerm {
  double angle;
  Mat4 pauli;
};

/// Closed-form exp(Σ angle_k (1/2i) P_k) = Π (cos(angle_k/2) I − i sin(angle_k/2) P_k)
/// for a mutually commuting family. Throws DomainError if some P_k is not an
/// involution or two terms do not commute.
UnitaryMat4 exp_pauli_family(std::span<const PauliTerm> terms);

/// Transpose of the given tensor factor. Exact: entries are only permuted.
HermMat4 partial_transpose(const HermMat4& rho, Subsystem transposed);

/// Trace over the given tensor factor; returns the other factor's 2×2 block.
Mat2 partial_trace(const HermMat4& rho, Subsystem traced_out);

/// Coefficients of det(x − H) = x⁴ − e1 x³ + S2 x² − S3 x + S4.
struct CharPolyCoeffs {
  double s2;
  double s3;
  double s4;
};

/// Newton's identities over the power traces Tr H^k, k = 1..4.
CharPolyCoeffs char_poly_coeffs(const HermMat4& h);

/// Real 3×3 helpers.
double det3(const Mat3& m);
Mat3 outer(const Vec3& a, const Vec3& b);
Mat3 matmul(const Mat3& a, const Mat3& b);
Mat3 transpose(const Mat3& m);
Vec3 matvec(const Mat3& m, const Vec3& v);

}  // namespace entspace
