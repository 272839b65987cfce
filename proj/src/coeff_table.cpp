#include "entspace/coeff_table.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <string>
#include <vector>

#include "entspace/constants.hpp"
#include "entspace/errors.hpp"
#include "entspace/separability.hpp"

namespace entspace {

namespace {

constexpr std::size_t kCols = kQuarticMonomials.size();

double monomial_value(const Monomial& m, const SimplexPoint& p) {
  return std::pow(p.x, m.x) * std::pow(p.y, m.y) * std::pow(p.z, m.z);
}

// Interior points of the ordered simplex on the 1/12 grid of [-1, 1]³,
// enumerated lexicographically; every 4th point is kept.
std::vector<SimplexPoint> make_sample_points() {
  constexpr int kDen = 12;
  constexpr int kStride = 4;
  std::vector<SimplexPoint> pts;
  int seen = 0;
  for (int i = -kDen; i <= kDen; ++i)
    for (int j = -kDen; j <= kDen; ++j)
      for (int k = -kDen; k <= kDen; ++k) {
        const int r1 = kDen + i + j + k, r2 = kDen + i - j - k;
        const int r3 = kDen - i + j - k, r4 = kDen - i - j + k;
        if (!(r1 > r2 && r2 > r3 && r3 > r4 && r4 > 0)) continue;
        if (seen++ % kStride == 0)
          pts.push_back({static_cast<double>(i) / kDen, static_cast<double>(j) / kDen,
                         static_cast<double>(k) / kDen});
      }
  return pts;
}

// Eigenvalues of a small real symmetric matrix by cyclic Jacobi.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };
  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; ++sweep) {
    double off = 0.0, total = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        total += at(r, c) * at(r, c);
        if (r != c) off += at(r, c) * at(r, c);
      }
    if (off <= 1e-32 * total) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = at(p, q);
        if (g == 0.0) continue;
        const double tau = (at(q, q) - at(p, p)) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
  return ev;
}

// Householder QR of the fixed design matrix, factored once.
class QuarticFit {
 public:
  QuarticFit() : points_(make_sample_points()), rows_(points_.size()), qr_(rows_ * kCols) {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < kCols; ++c)
        qr_[r * kCols + c] = monomial_value(kQuarticMonomials[c], points_[r]);
    design_ = qr_;
    condition_ = condition_number();
    factor();
  }

  [[nodiscard]] std::span<const SimplexPoint> points() const { return points_; }
  [[nodiscard]] double condition() const { return condition_; }

  std::array<double, kCols> solve(std::vector<double> rhs) const {
    // Apply Householder reflections to rhs, then back-substitute R.
    for (std::size_t c = 0; c < kCols; ++c) {
      double dot = 0.0;
      for (std::size_t r = c; r < rows_; ++r) dot += v(r, c) * rhs[r];
      for (std::size_t r = c; r < rows_; ++r) rhs[r] -= 2.0 * dot * v(r, c);
    }
    std::array<double, kCols> x{};
    for (std::size_t ci = kCols; ci-- > 0;) {
      double s = rhs[ci];
      for (std::size_t k = ci + 1; k < kCols; ++k) s -= r_[ci * kCols + k] * x[k];
      x[ci] = s / r_[ci * kCols + ci];
    }
    return x;
  }

  double residual(const std::array<double, kCols>& coeffs, const std::vector<double>& rhs) const {
    double worst = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      double s = 0.0;
      for (std::size_t c = 0; c < kCols; ++c) s += design_[r * kCols + c] * coeffs[c];
      worst = std::max(worst, std::abs(s - rhs[r]));
    }
    return worst;
  }

 private:
  double v(std::size_t r, std::size_t c) const { return qr_[r * kCols + c]; }

  double condition_number() const {
    std::vector<double> gram(kCols * kCols, 0.0);
    for (std::size_t i = 0; i < kCols; ++i)
      for (std::size_t j = 0; j < kCols; ++j)
        for (std::size_t r = 0; r < rows_; ++r)
          gram[i * kCols + j] += design_[r * kCols + i] * design_[r * kCols + j];
    const auto ev = symmetric_eigenvalues(gram, kCols);
    const auto [lo, hi] = std::minmax_element(ev.begin(), ev.end());
    if (*lo <= 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(*hi / *lo);
  }

  // In place: below-diagonal part of column c holds the unit Householder
  // vector (including its diagonal slot); R is stored separately.
  void factor() {
    std::vector<double> a = qr_;
    r_.assign(kCols * kCols, 0.0);
    for (std::size_t c = 0; c < kCols; ++c) {
      double norm = 0.0;
      for (std::size_t r = c; r < rows_; ++r) norm += a[r * kCols + c] * a[r * kCols + c];
      norm = std::sqrt(norm);
      const double alpha = a[c * kCols + c] > 0.0 ? -norm : norm;
      std::vector<double> hv(rows_, 0.0);
      for (std::size_t r = c; r < rows_; ++r) hv[r] = a[r * kCols + c];
      hv[c] -= alpha;
      double hn = 0.0;
      for (std::size_t r = c; r < rows_; ++r) hn += hv[r] * hv[r];
      hn = std::sqrt(hn);
      for (std::size_t r = c; r < rows_; ++r) hv[r] = hn > 0.0 ? hv[r] / hn : 0.0;
      for (std::size_t k = c; k < kCols; ++k) {
        double dot = 0.0;
        for (std::size_t r = c; r < rows_; ++r) dot += hv[r] * a[r * kCols + k];
        for (std::size_t r = c; r < rows_; ++r) a[r * kCols + k] -= 2.0 * dot * hv[r];
      }
      for (std::size_t k = c; k < kCols; ++k) r_[c * kCols + k] = a[c * kCols + k];
      for (std::size_t r = 0; r < rows_; ++r) qr_[r * kCols + c] = hv[r];
    }
  }

  std::vector<SimplexPoint> points_;
  std::size_t rows_;
  std::vector<double> qr_;
  std::vector<double> design_;
  std::vector<double> r_;
  double condition_ = 0.0;
};

const QuarticFit& quartic_fit() {
  static const QuarticFit fit;
  return fit;
}

}  // namespace

std::size_t monomial_index(int i, int j, int k) {
  const Monomial m{i, j, k};
  for (std::size_t n = 0; n < kQuarticMonomials.size(); ++n)
    if (kQuarticMonomials[n] == m) return n;
  throw DomainError("monomial_index: (" + std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(k) + ") is not a quartic monomial");
}

std::string monomial_label(const Monomial& m) {
  return "p" + std::to_string(m.x) + std::to_string(m.y) + std::to_string(m.z);
}

std::size_t CoeffTable::count_above(double threshold) const {
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [&](const auto& v) {
    return v.has_value() && std::abs(*v) > threshold;
  }));
}

std::span<const SimplexPoint> fit_sample_points() { return quartic_fit().points(); }

CoeffTable fit_c112_coeffs(const OctahedronPoint& alpha, const OctahedronPoint& beta) {
  const QuarticFit& fit = quartic_fit();
  if (!(fit.condition() <= tol::kFitConditionCap))
    throw NumericalError("fit_c112_coeffs: design matrix condition number " +
                         std::to_string(fit.condition()) + " exceeds cap");

  std::vector<double> samples;
  samples.reserve(fit.points().size());
  for (const auto& p : fit.points())
    samples.push_back(quesne_c112(to_fano(representative_state({p, alpha, beta}).state)));

  const auto coeffs = fit.solve(samples);
  CoeffTable table;
  table.provenance = Provenance::Fitted;
  for (std::size_t n = 0; n < kCols; ++n) table.values[n] = coeffs[n];
  table.residual = fit.residual(coeffs, samples);
  if (!(table.residual <= tol::kFitResidual))
    throw NumericalError("fit_c112_coeffs: residual " + std::to_string(table.residual) +
                         " exceeds tolerance");
  return table;
}

CoeffTable closed_form_c112_coeffs(double alpha3, const OctahedronPoint& beta) {
  CoeffTable table;
  table.provenance = Provenance::ClosedForm;
  table.values[monomial_index(0, 2, 2)] = p022(alpha3, beta);
  return table;
}

}  // namespace entspace
