#pragma once

// Peres–Horodecki separability algebra for two qubits, written through the
// characteristic-polynomial coefficients of the partial transpose:
//
//   rho is separable  <=>  S3(rho^TB) >= 0  and  S4(rho^TB) >= 0
//   S3(rho^TB) = S3(rho) + det C / 4
//   S4(rho^TB) = S4(rho) + det M / 16,    det M = det C − C112 / 2
//
// together with the trigonometric closed forms of det C and of one C112
// coefficient over the entanglement-space chart.

#include <string_view>

#include "entspace/chart.hpp"
#include "entspace/constants.hpp"
#include "entspace/fano.hpp"

namespace entspace {

enum class Verdict { Separable, Entangled, Boundary };

std::string_view to_string(Verdict v);

/// char_poly_coeffs of the partial transpose over qubit B.
CharPolyCoeffs s_coeffs_pt(const DensityMatrix& rho);

/// Separable iff S3 ≥ tol and S4 ≥ tol; Entangled iff either < −tol;
/// Boundary otherwise.
Verdict verdict_from_coeffs(double s3_pt, double s4_pt, double tol);
Verdict ppt_verdict(const DensityMatrix& rho, double tol = tol::kVerdict);

/// Smallest eigenvalue of rho^TB.
double min_pt_eigenvalue(const DensityMatrix& rho);

/// ε_ijk ε_αβγ a_i b_α C_jβ C_kγ, contracted term by term.
double quesne_c112(const FanoState& f);

double det_correlation(const FanoState& f);

double p201(double alpha3, const OctahedronPoint& beta);
double p111(double alpha3, const OctahedronPoint& beta);
double p022(double alpha3, const OctahedronPoint& beta);

/// det C of the representative state: z (p201 (x² + y²) + p111 x y).
double det_c_closed_form(const SimplexPoint& s, double alpha3, const OctahedronPoint& beta);

struct InequalityValues {
  /// S3(rho) + det C / 4 and S4(rho) + det M / 16.
  double lhs3 = 0.0;
  double lhs4 = 0.0;
  /// S3(rho^TB) and S4(rho^TB) computed on the transposed matrix.
  double lhs3_pt = 0.0;
  double lhs4_pt = 0.0;
  /// 0 ≤ lhs3 ≤ 1/16 and 0 ≤ lhs4 ≤ 1/256 within tol::kInequalityBand.
  bool within_bounds = false;

  [[nodiscard]] double path_gap() const;
};

InequalityValues separability_inequalities(const FanoState& f);

struct SeparabilityReport {
  double s2_pt = 0.0;
  double s3_pt = 0.0;
  double s4_pt = 0.0;
  double det_c = 0.0;
  double det_m = 0.0;
  double c112 = 0.0;
  double lhs3 = 0.0;
  double lhs4 = 0.0;
  Verdict verdict = Verdict::Boundary;
};

/// Full report. Throws NumericalError if det M = det C − C112/2 or the dual
/// inequality paths disagree beyond tol::kIdentity.
SeparabilityReport analyze(const DensityMatrix& rho, double tol = tol::kVerdict);

}  // namespace entspace
