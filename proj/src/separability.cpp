#include "entspace/separability.hpp"

#include <cmath>
#include <string>

#include "entspace/errors.hpp"

namespace entspace {

namespace {

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

double sq(double v) { return v * v; }

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Separable:
      return "Separable";
    case Verdict::Entangled:
      return "Entangled";
    case Verdict::Boundary:
      return "Boundary";
  }
  return "Boundary";
}

CharPolyCoeffs s_coeffs_pt(const DensityMatrix& rho) {
  return char_poly_coeffs(partial_transpose(rho.herm(), Subsystem::B));
}

Verdict verdict_from_coeffs(double s3_pt, double s4_pt, double tol) {
  if (s3_pt < -tol || s4_pt < -tol) return Verdict::Entangled;
  if (s3_pt >= tol && s4_pt >= tol) return Verdict::Separable;
  return Verdict::Boundary;
}

Verdict ppt_verdict(const DensityMatrix& rho, double tol) {
  const auto s = s_coeffs_pt(rho);
  return verdict_from_coeffs(s.s3, s.s4, tol);
}

double min_pt_eigenvalue(const DensityMatrix& rho) {
  return herm_eigenvalues(partial_transpose(rho.herm(), Subsystem::B))[3];
}

double quesne_c112(const FanoState& f) {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e1 = levi_civita(i, j, k);
        if (e1 == 0) continue;
        for (int al = 0; al < 3; ++al)
          for (int be = 0; be < 3; ++be)
            for (int ga = 0; ga < 3; ++ga) {
              const int e2 = levi_civita(al, be, ga);
              if (e2 == 0) continue;
              sum += e1 * e2 * f.a[i] * f.b[al] * f.c[j][be] * f.c[k][ga];
            }
      }
  return sum;
}

double det_correlation(const FanoState& f) { return det3(f.c); }

double p201(double alpha3, const OctahedronPoint& beta) {
  return 0.25 * std::sin(2.0 * alpha3) * std::sin(2.0 * beta[1]) * std::cos(beta[0]) *
         std::cos(beta[2]);
}

double p111(double alpha3, const OctahedronPoint& beta) {
  const double sa = std::sin(alpha3), ca = std::cos(alpha3);
  const double s1 = std::sin(beta[0]), c1 = std::cos(beta[0]);
  const double s2 = std::sin(beta[1]), c2 = std::cos(beta[1]);
  const double s3 = std::sin(beta[2]), c3 = std::cos(beta[2]);
  return -(sq(sa) * sq(c2) * (sq(c1) + sq(s1) * sq(c3)) + sq(ca) * sq(s2) * sq(c1) * sq(c3) +
           sq(s1) * sq(s3) * sq(c2));
}

double p022(double alpha3, const OctahedronPoint& beta) {
  const double a = alpha3, b1 = beta[0], b2 = beta[1], b3 = beta[2];
  const double ca2 = sq(std::cos(a));
  const double sa2 = sq(std::sin(a));
  const double bracket =
      std::cos(2.0 * (a - b1)) + std::cos(2.0 * (a + b1)) +
      4.0 * std::cos(2.0 * b3) * (std::cos(2.0 * b2) * (1.0 - ca2 * std::cos(2.0 * b1)) + sa2) -
      4.0 * sa2 * std::cos(2.0 * b2) + 2.0 * std::cos(2.0 * b1) - 4.0;
  return 0.125 * ca2 * sq(std::cos(b1)) * bracket;
}

double det_c_closed_form(const SimplexPoint& s, double alpha3, const OctahedronPoint& beta) {
  return s.z * (p201(alpha3, beta) * (s.x * s.x + s.y * s.y) + p111(alpha3, beta) * s.x * s.y);
}

double InequalityValues::path_gap() const {
  return std::max(std::abs(lhs3 - lhs3_pt), std::abs(lhs4 - lhs4_pt));
}

InequalityValues separability_inequalities(const FanoState& f) {
  const HermMat4 rho = from_fano(f);
  const auto s = char_poly_coeffs(rho);
  const auto s_pt = char_poly_coeffs(partial_transpose(rho, Subsystem::B));
  InequalityValues v;
  v.lhs3 = s.s3 + 0.25 * det3(f.c);
  v.lhs4 = s.s4 + det3(schlienz_mahler(f)) / 16.0;
  v.lhs3_pt = s_pt.s3;
  v.lhs4_pt = s_pt.s4;
  const double band = tol::kInequalityBand;
  v.within_bounds = v.lhs3 >= -band && v.lhs3 <= 1.0 / 16.0 + band && v.lhs4 >= -band &&
                    v.lhs4 <= 1.0 / 256.0 + band;
  return v;
}

SeparabilityReport analyze(const DensityMatrix& rho, double tol) {
  const FanoState f = to_fano(rho);
  const auto s_pt = s_coeffs_pt(rho);
  const auto ineq = separability_inequalities(f);

  SeparabilityReport r;
  r.s2_pt = s_pt.s2;
  r.s3_pt = s_pt.s3;
  r.s4_pt = s_pt.s4;
  r.det_c = det_correlation(f);
  r.det_m = det3(schlienz_mahler(f));
  r.c112 = quesne_c112(f);
  r.lhs3 = ineq.lhs3;
  r.lhs4 = ineq.lhs4;
  r.verdict = verdict_from_coeffs(r.s3_pt, r.s4_pt, tol);

  const double identity_gap = std::abs(r.det_m - (r.det_c - 0.5 * r.c112));
  if (identity_gap > tol::kIdentity)
    throw NumericalError("analyze: det M = det C - C112/2 violated by " +
                         std::to_string(identity_gap));
  if (ineq.path_gap() > tol::kIdentity)
    throw NumericalError("analyze: inequality evaluation paths differ by " +
                         std::to_string(ineq.path_gap()));
  return r;
}

}  // namespace entspace
