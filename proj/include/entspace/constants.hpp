#pragma once

namespace entspace::tol {

// Hermiticity: asymmetry below this is symmetrized away, above it is rejected.
inline constexpr double kHermitian = 1e-12;
// U†U = I and det U = 1.
inline constexpr double kUnitary = 1e-10;
// Anti-Hermiticity of exponent arguments.
inline constexpr double kAntiHermitian = 1e-12;
// Unit trace of a density matrix.
inline constexpr double kTrace = 1e-12;
// Smallest admissible eigenvalue of a density matrix.
inline constexpr double kPositivity = 1e-10;
// Bloch vector and correlation entries may exceed 1 by this much.
inline constexpr double kBloch = 1e-10;
// Slack on the ordered-simplex inequalities r1 >= r2 >= r3 >= r4 >= 0.
inline constexpr double kSimplex = 1e-14;
// Embedded identity det M = det C - C112/2 and dual-path agreement.
inline constexpr double kIdentity = 1e-10;
// Band around 0 and the upper bounds in the separability inequalities.
inline constexpr double kInequalityBand = 1e-10;
// Default S3/S4 sign tolerance of the PPT verdict.
inline constexpr double kVerdict = 1e-9;
// Fitted coefficient tables: max residual over sample points.
inline constexpr double kFitResidual = 1e-9;
// Coefficients below this magnitude count as vanishing.
inline constexpr double kCoeffZero = 1e-9;
// Design-matrix condition number cap for the coefficient fit.
inline constexpr double kFitConditionCap = 1e8;

// Jacobi sweep cap for the Hermitian eigensolver.
inline constexpr int kJacobiMaxSweeps = 100;
// Taylor order and scaled-norm target of the series exponential.
inline constexpr int kExpSeriesOrder = 12;
inline constexpr double kExpScaledNorm = 0.5;

}  // namespace entspace::tol
