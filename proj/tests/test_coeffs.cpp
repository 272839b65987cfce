#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "entspace/coeff_table.hpp"
#include "entspace/errors.hpp"
#include "entspace/random.hpp"
#include "entspace/separability.hpp"

using namespace entspace;

namespace {

double evaluate(const CoeffTable& t, const SimplexPoint& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < kQuarticMonomials.size(); ++i) {
    const Monomial& m = kQuarticMonomials[i];
    sum += t.values[i].value() * std::pow(p.x, m.x) * std::pow(p.y, m.y) * std::pow(p.z, m.z);
  }
  return sum;
}

bool in_support(const Monomial& m) {
  return std::find(kC112Support.begin(), kC112Support.end(), m) != kC112Support.end();
}

}  // namespace

TEST_CASE("monomial bookkeeping") {
  CHECK(kQuarticMonomials.front() == Monomial{4, 0, 0});
  CHECK(kQuarticMonomials[2] == Monomial{3, 0, 1});
  CHECK(kQuarticMonomials.back() == Monomial{0, 0, 4});
  for (std::size_t i = 0; i < kQuarticMonomials.size(); ++i) {
    const Monomial& m = kQuarticMonomials[i];
    CHECK(m.x + m.y + m.z == 4);
    CHECK(monomial_index(m.x, m.y, m.z) == i);
  }
  CHECK(monomial_label({0, 2, 2}) == "p022");
  CHECK_THROWS_AS(monomial_index(2, 2, 1), DomainError);
  CHECK_THROWS_AS(monomial_index(5, -1, 0), DomainError);
}

TEST_CASE("fit points") {
  const auto pts = fit_sample_points();
  CHECK(pts.size() >= kQuarticMonomials.size());
  for (const SimplexPoint& p : pts) {
    const double r1 = (1 + p.x + p.y + p.z) / 4, r2 = (1 + p.x - p.y - p.z) / 4;
    const double r3 = (1 - p.x + p.y - p.z) / 4, r4 = (1 - p.x - p.y + p.z) / 4;
    CHECK(r1 > r2);
    CHECK(r2 > r3);
    CHECK(r3 > r4);
    CHECK(r4 > 0.0);
  }
}

TEST_CASE("fit at the origin of the chart") {
  const CoeffTable t = fit_c112_coeffs({}, {});
  CHECK(t.provenance == Provenance::Fitted);
  for (const auto& v : t.values) CHECK(std::abs(v.value()) < 1e-9);
  CHECK(t.count_above(1e-9) == 0);
}

TEST_CASE("fitted tables on random chart points") {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const ChartPoint c = sample_chart_point(rng);
    const CoeffTable fit = fit_c112_coeffs(c.alpha, c.beta);
    CHECK(fit.residual <= 1e-9);
    CHECK(fit.count_above(1e-9) <= 9);

    for (std::size_t i = 0; i < kQuarticMonomials.size(); ++i)
      if (!in_support(kQuarticMonomials[i])) CHECK(std::abs(fit.values[i].value()) < 1e-9);

    // Held-out points of the simplex.
    for (int k = 0; k < 5; ++k) {
      const SimplexPoint p = sample_chart_point(rng).s;
      const double direct = quesne_c112(to_fano(representative_state({p, c.alpha, c.beta}).state));
      CHECK(std::abs(evaluate(fit, p) - direct) < 1e-9);
    }

    const CoeffTable closed = closed_form_c112_coeffs(c.alpha[2], c.beta);
    CHECK(std::abs(closed.at(0, 2, 2).value() - fit.at(0, 2, 2).value()) < 1e-9);

    OctahedronPoint moved = c.alpha;
    moved.c[0] = 0.5 * moved.c[0] + 0.2;
    moved.c[1] = -0.3 * moved.c[1];
    const CoeffTable shifted = fit_c112_coeffs(moved, c.beta);
    for (std::size_t i = 0; i < kQuarticMonomials.size(); ++i)
      CHECK(std::abs(shifted.values[i].value() - fit.values[i].value()) < 1e-9);
  }
}

TEST_CASE("closed-form table") {
  const CoeffTable t = closed_form_c112_coeffs(0.4, {{0.1, 0.2, 0.3}});
  CHECK(t.provenance == Provenance::ClosedForm);
  CHECK(t.residual == 0.0);
  CHECK(t.at(0, 2, 2).has_value());
  CHECK(*t.at(0, 2, 2) == p022(0.4, {{0.1, 0.2, 0.3}}));
  CHECK_FALSE(t.at(4, 0, 0).has_value());
  CHECK(t.count_above(0.0) <= 1);
}
