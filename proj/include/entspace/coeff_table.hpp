#pragma once

// Coefficients of the quartic C112 = Σ p_ijk(α, β) x^i y^j z^k (i+j+k = 4) on
// the entanglement-space chart.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "entspace/chart.hpp"

namespace entspace {

struct Monomial {
  int x;
  int y;
  int z;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Descending lexicographic order: 400, 310, 301, 220, ..., 004.
inline constexpr std::array<Monomial, 15> kQuarticMonomials = [] {
  std::array<Monomial, 15> m{};
  std::size_t n = 0;
  for (int i = 4; i >= 0; --i)
    for (int j = 4 - i; j >= 0; --j) m[n++] = Monomial{i, j, 4 - i - j};
  return m;
}();

/// Position of x^i y^j z^k in kQuarticMonomials. Throws DomainError if the
/// exponents are negative or do not sum to 4.
std::size_t monomial_index(int i, int j, int k);

/// "p" followed by the three exponents, e.g. "p022".
std::string monomial_label(const Monomial& m);

enum class Provenance { ClosedForm, Fitted };

struct CoeffTable {
  /// Unset entries have no known value (closed-form tables carry only the
  /// coefficients with a published formula).
  std::array<std::optional<double>, 15> values{};
  Provenance provenance = Provenance::Fitted;
  /// Max |fit − sample| over the fit points; 0 for closed-form tables.
  double residual = 0.0;

  [[nodiscard]] std::optional<double> at(int i, int j, int k) const {
    return values[monomial_index(i, j, k)];
  }
  /// Number of known entries with magnitude above the threshold.
  [[nodiscard]] std::size_t count_above(double threshold) const;
};

/// Fixed rational points inside the ordered simplex used by the fit.
std::span<const SimplexPoint> fit_sample_points();

/// Samples C112 of the representative state at every fit point and solves
/// the least-squares system for all 15 coefficients. Throws NumericalError if
/// the design matrix condition number exceeds tol::kFitConditionCap or the
/// residual exceeds tol::kFitResidual.
CoeffTable fit_c112_coeffs(const OctahedronPoint& alpha, const OctahedronPoint& beta);

/// Table holding the closed-form coefficients that are available (p022).
CoeffTable closed_form_c112_coeffs(double alpha3, const OctahedronPoint& beta);

/// Monomials with non-vanishing C112 coefficients at generic chart points.
inline constexpr std::array<Monomial, 9> kC112Support = {{
    {4, 0, 0}, {3, 1, 0}, {2, 2, 0}, {2, 0, 2}, {1, 3, 0},
    {1, 1, 2}, {0, 4, 0}, {0, 2, 2}, {0, 0, 4},
}};

}  // namespace entspace
