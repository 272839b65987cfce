#include "entspace/linalg.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "entspace/constants.hpp"
#include "entspace/errors.hpp"

namespace entspace {

namespace {

constexpr Complex kI{0.0, 1.0};

bool all_finite(const Mat4& m) {
  for (const auto& v : m.entries())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

}  // namespace

namespace pauli {

Mat2 sigma(int index) {
  Mat2 m;
  switch (index) {
    case 0:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case 1:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw DomainError("pauli::sigma: index must be 0..3, got " + std::to_string(index));
  }
  return m;
}

}  // namespace pauli

HermMat4::HermMat4(const Mat4& m) {
  if (!all_finite(m)) throw DomainError("HermMat4: non-finite entry");
  const double asym = max_abs_diff(m, m.adjoint());
  if (asym > tol::kHermitian)
    throw DomainError("HermMat4: asymmetry " + std::to_string(asym) + " exceeds tolerance");
  m_ = (m + m.adjoint()) * 0.5;
}

UnitaryMat4::UnitaryMat4(const Mat4& m) : m_(m) {
  if (!all_finite(m)) throw DomainError("UnitaryMat4: non-finite entry");
  const double defect = max_abs_diff(m.adjoint() * m, Mat4::identity());
  if (defect > tol::kUnitary)
    throw DomainError("UnitaryMat4: U†U deviates from identity by " + std::to_string(defect));
  const double det_defect = std::abs(determinant(m) - 1.0);
  if (det_defect > tol::kUnitary)
    throw DomainError("UnitaryMat4: |det U - 1| = " + std::to_string(det_defect));
}

Mat4 tensor_product(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (std::size_t ia = 0; ia < 2; ++ia)
    for (std::size_t ib = 0; ib < 2; ++ib)
      for (std::size_t ja = 0; ja < 2; ++ja)
        for (std::size_t jb = 0; jb < 2; ++jb) m(2 * ia + ib, 2 * ja + jb) = a(ia, ja) * b(ib, jb);
  return m;
}

HermEigen herm_eigen(const HermMat4& h) {
  Mat4 a = h.matrix();
  Mat4 v = Mat4::identity();

  double total = 0.0;
  for (const auto& e : a.entries()) total += std::norm(e);

  int sweep = 0;
  for (;; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = p + 1; q < 4; ++q) off += std::norm(a(p, q));
    if (off <= 1e-32 * total || off == 0.0) break;
    if (sweep >= tol::kJacobiMaxSweeps)
      throw NumericalError("herm_eigen: Jacobi did not converge in " +
                           std::to_string(tol::kJacobiMaxSweeps) + " sweeps");

    for (std::size_t p = 0; p < 4; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        const double g = std::abs(a(p, q));
        if (g == 0.0) continue;
        // Phase e makes the (p,q) entry real; then a real rotation zeroes it.
        const Complex e = a(p, q) / g;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex ce = std::conj(e);

        // A <- A Q with Q_pp = c, Q_pq = s, Q_qp = -s conj(e), Q_qq = c conj(e).
        for (std::size_t k = 0; k < 4; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * ce * akq;
          a(k, q) = s * akp + c * ce * akq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * ce * vkq;
          v(k, q) = s * vkp + c * ce * vkq;
        }
        // A <- Q† A.
        for (std::size_t k = 0; k < 4; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * e * aqk;
          a(q, k) = s * apk + c * e * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::array<std::size_t, 4> order{};
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return a(l, l).real() > a(r, r).real(); });

  HermEigen out{};
  for (std::size_t k = 0; k < 4; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < 4; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::array<double, 4> herm_eigenvalues(const HermMat4& h) { return herm_eigen(h).values; }

UnitaryMat4 exp_antihermitian(const Mat4& x) {
  if (!all_finite(x)) throw DomainError("exp_antihermitian: non-finite entry");
  const double defect = max_abs_diff(x.adjoint(), -x);
  if (defect > tol::kAntiHermitian)
    throw DomainError("exp_antihermitian: X + X† has entry of size " + std::to_string(defect));
  if (std::abs(x.trace()) > tol::kAntiHermitian)
    throw DomainError("exp_antihermitian: X is not traceless");

  const double norm = one_norm(x);
  int squarings = 0;
  if (norm > tol::kExpScaledNorm)
    squarings = static_cast<int>(std::ceil(std::log2(norm / tol::kExpScaledNorm)));
  const Mat4 y = x * Complex(std::ldexp(1.0, -squarings));

  // Horner: I + Y(I + Y/2(I + Y/3(... (I + Y/n))))
  const Mat4 id = Mat4::identity();
  Mat4 e = id;
  for (int k = tol::kExpSeriesOrder; k >= 1; --k) e = id + (y * e) * Complex(1.0 / k);
  for (int s = 0; s < squarings; ++s) e = e * e;
  return UnitaryMat4(e);
}

UnitaryMat4 exp_pauli_family(std::span<const PauliTerm> terms) {
  const Mat4 id = Mat4::identity();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Mat4& p = terms[i].pauli;
    if (max_abs_diff(p, p.adjoint()) > tol::kHermitian || max_abs_diff(p * p, id) > tol::kHermitian)
      throw DomainError("exp_pauli_family: term " + std::to_string(i) +
                        " is not a Hermitian involution");
    for (std::size_t j = 0; j < i; ++j)
      if (max_abs_diff(commutator(p, terms[j].pauli), Mat4{}) > tol::kHermitian)
        throw DomainError("exp_pauli_family: terms " + std::to_string(j) + " and " +
                          std::to_string(i) + " do not commute");
  }
  Mat4 u = id;
  for (const auto& t : terms) {
    const double half = 0.5 * t.angle;
    u = u * (id * Complex(std::cos(half)) - t.pauli * (kI * std::sin(half)));
  }
  return UnitaryMat4(u);
}

HermMat4 partial_transpose(const HermMat4& rho, Subsystem transposed) {
  const Mat4& in = rho.matrix();
  Mat4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          if (transposed == Subsystem::B)
            out(2 * i + j, 2 * k + l) = in(2 * i + l, 2 * k + j);
          else
            out(2 * i + j, 2 * k + l) = in(2 * k + j, 2 * i + l);
        }
  return HermMat4(out);
}

Mat2 partial_trace(const HermMat4& rho, Subsystem traced_out) {
  const Mat4& m = rho.matrix();
  Mat2 out;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t k = 0; k < 2; ++k) {
        if (traced_out == Subsystem::B)
          out(r, c) += m(2 * r + k, 2 * c + k);
        else
          out(r, c) += m(2 * k + r, 2 * k + c);
      }
  return out;
}

CharPolyCoeffs char_poly_coeffs(const HermMat4& h) {
  const Mat4& m = h.matrix();
  const Mat4 m2 = m * m;
  const double p1 = m.trace().real();
  const double p2 = m2.trace().real();
  const double p3 = (m2 * m).trace().real();
  const double p4 = (m2 * m2).trace().real();
  const double e1 = p1;
  const double e2 = (e1 * p1 - p2) / 2.0;
  const double e3 = (e2 * p1 - e1 * p2 + p3) / 3.0;
  const double e4 = (e3 * p1 - e2 * p2 + e1 * p3 - p4) / 4.0;
  return {e2, e3, e4};
}

double det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 outer(const Vec3& a, const Vec3& b) {
  Mat3 m{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = a[i] * b[j];
  return m;
}

Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 m{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t j = 0; j < 3; ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

Mat3 transpose(const Mat3& m) {
  Mat3 t{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[j][i] = m[i][j];
  return t;
}

Vec3 matvec(const Mat3& m, const Vec3& v) {
  Vec3 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i] += m[i][j] * v[j];
  return r;
}

}  // namespace entspace
