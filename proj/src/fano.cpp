#include "entspace/fano.hpp"

#include <cmath>
#include <string>

#include "entspace/constants.hpp"
#include "entspace/errors.hpp"

namespace entspace {

namespace {

const std::array<Mat4, 16>& pauli_products() {
  static const std::array<Mat4, 16> table = [] {
    std::array<Mat4, 16> t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t[4 * i + j] = tensor_product(pauli::sigma(i), pauli::sigma(j));
    return t;
  }();
  return table;
}

// Tr(h P) for Hermitian h and Pauli string P; real up to rounding.
double expectation(const Mat4& h, const Mat4& p) {
  Complex s{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) s += h(r, c) * p(c, r);
  return s.real();
}

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

void check_su2(const Mat2& m, const char* name) {
  const double defect = max_abs_diff(m.adjoint() * m, Mat2::identity());
  const double det_defect = std::abs(determinant(m) - 1.0);
  if (defect > tol::kUnitary || det_defect > tol::kUnitary)
    throw DomainError(std::string("LocalUnitary: factor ") + name + " is not in SU(2)");
}

}  // namespace

DensityMatrix::DensityMatrix(const HermMat4& m) : m_(m) {
  const double tr = m_.trace();
  if (std::abs(tr - 1.0) > tol::kTrace)
    throw DomainError("DensityMatrix: trace " + std::to_string(tr) + " differs from 1");
  spectrum_ = herm_eigenvalues(m_);
  if (spectrum_[3] < -tol::kPositivity)
    throw DomainError("DensityMatrix: eigenvalue " + std::to_string(spectrum_[3]) +
                      " below positivity tolerance");
}

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(Mat4::identity() * 0.25); }

void check_fano_bounds(const FanoState& f) {
  const double lim = 1.0 + tol::kBloch;
  if (norm3(f.a) > lim) throw DomainError("FanoState: |a| exceeds 1");
  if (norm3(f.b) > lim) throw DomainError("FanoState: |b| exceeds 1");
  for (const auto& row : f.c)
    for (double v : row)
      if (std::abs(v) > lim) throw DomainError("FanoState: correlation entry exceeds 1");
  for (const auto& v : {f.a, f.b})
    for (double x : v)
      if (!std::isfinite(x)) throw DomainError("FanoState: non-finite entry");
}

LocalUnitary::LocalUnitary(const Mat2& u, const Mat2& v) : u_(u), v_(v) {
  check_su2(u_, "u");
  check_su2(v_, "v");
}

FanoState to_fano(const HermMat4& h) {
  const auto& p = pauli_products();
  const Mat4& m = h.matrix();
  FanoState f;
  for (std::size_t i = 0; i < 3; ++i) {
    f.a[i] = expectation(m, p[4 * (i + 1)]);
    f.b[i] = expectation(m, p[i + 1]);
    for (std::size_t j = 0; j < 3; ++j) f.c[i][j] = expectation(m, p[4 * (i + 1) + (j + 1)]);
  }
  return f;
}

HermMat4 from_fano(const FanoState& f) {
  const auto& p = pauli_products();
  Mat4 m = p[0];
  for (std::size_t i = 0; i < 3; ++i) {
    m += p[4 * (i + 1)] * f.a[i];
    m += p[i + 1] * f.b[i];
    for (std::size_t j = 0; j < 3; ++j) m += p[4 * (i + 1) + (j + 1)] * f.c[i][j];
  }
  return HermMat4(m * 0.25);
}

Mat3 schlienz_mahler(const FanoState& f) {
  Mat3 m = f.c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] -= f.a[i] * f.b[j];
  return m;
}

DensityMatrix local_unitary_action(const DensityMatrix& rho, const LocalUnitary& g) {
  const Mat4 w = g.matrix();
  return DensityMatrix(w * rho.matrix() * w.adjoint());
}

Mat3 so3_rotation(const Mat2& u) {
  Mat3 r{};
  const Mat2 ud = u.adjoint();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r[i][j] = 0.5 * (pauli::sigma(i + 1) * u * pauli::sigma(j + 1) * ud).trace().real();
  return r;
}

}  // namespace entspace
