#include <doctest.h>

#include "entspace/errors.hpp"
#include "entspace/fano.hpp"
#include "entspace/random.hpp"
#include "entspace/separability.hpp"
#include "oracles.hpp"

using namespace entspace;

namespace {

double max_fano_gap(const FanoState& l, const FanoState& r) {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    d = std::max({d, std::abs(l.a[i] - r.a[i]), std::abs(l.b[i] - r.b[i])});
    for (std::size_t j = 0; j < 3; ++j) d = std::max(d, std::abs(l.c[i][j] - r.c[i][j]));
  }
  return d;
}

double max_abs(const Mat3& m) {
  double d = 0.0;
  for (const auto& row : m)
    for (double v : row) d = std::max(d, std::abs(v));
  return d;
}

}  // namespace

TEST_CASE("DensityMatrix gate") {
  CHECK_NOTHROW(DensityMatrix::maximally_mixed());
  CHECK_THROWS_AS(DensityMatrix(Mat4::identity() * 0.3), DomainError);
  CHECK_THROWS_AS(DensityMatrix(Mat4::diagonal({0.6, 0.5, 0.1, -0.2})), DomainError);
  // Within the positivity tolerance.
  CHECK_NOTHROW(DensityMatrix(Mat4::diagonal({0.5, 0.3, 0.2 + 5e-11, -5e-11})));
  const auto& sp = DensityMatrix(Mat4::diagonal({0.1, 0.4, 0.2, 0.3})).spectrum();
  CHECK(sp == std::array<double, 4>{0.4, 0.3, 0.2, 0.1});
}

TEST_CASE("to_fano") {
  const FanoState zero = to_fano(DensityMatrix::maximally_mixed());
  CHECK(max_fano_gap(zero, FanoState{}) == 0.0);

  SUBCASE("diagonal state") {
    // r = (0.425, 0.275, 0.175, 0.125) <-> (x, y, z) = (0.4, 0.2, 0.1)
    const FanoState f = to_fano(DensityMatrix(Mat4::diagonal({0.425, 0.275, 0.175, 0.125})));
    FanoState want;
    want.a = {0, 0, 0.4};
    want.b = {0, 0, 0.2};
    want.c[2][2] = 0.1;
    CHECK(max_fano_gap(f, want) < 1e-15);
  }

  SUBCASE("product state factorizes") {
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
      const FanoState f = to_fano(sample_product_state(rng));
      CHECK(max_abs(schlienz_mahler(f)) < 1e-15);
    }
  }
}

TEST_CASE("from_fano") {
  CHECK(max_abs_diff(from_fano(FanoState{}).matrix(), Mat4::identity() * 0.25) == 0.0);

  SUBCASE("Bell state") {
    FanoState f;
    f.c = {{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
    CHECK(max_abs_diff(from_fano(f).matrix(), oracle::phi_plus().matrix()) < 1e-15);
  }

  SUBCASE("roundtrip both ways") {
    Rng rng(12);
    for (int t = 0; t < 300; ++t) {
      const DensityMatrix rho = sample_hs_state(rng);
      const FanoState f = to_fano(rho);
      CHECK(max_abs_diff(from_fano(f).matrix(), rho.matrix()) < 1e-13);
      CHECK(max_fano_gap(to_fano(from_fano(f)), f) < 1e-13);
      CHECK_NOTHROW(check_fano_bounds(f));
    }
  }

  SUBCASE("non-positive coordinates are accepted") {
    FanoState f;
    f.c = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};  // eigenvalue -1/2
    const HermMat4 h = from_fano(f);
    CHECK(h.trace() == doctest::Approx(1.0));
    CHECK_THROWS_AS(DensityMatrix{h}, DomainError);
  }
}

TEST_CASE("check_fano_bounds") {
  FanoState f;
  f.a = {0.8, 0.7, 0.0};
  CHECK_THROWS_AS(check_fano_bounds(f), DomainError);
  f.a = {};
  f.c[1][2] = 1.5;
  CHECK_THROWS_AS(check_fano_bounds(f), DomainError);
}

TEST_CASE("schlienz_mahler") {
  CHECK(max_abs(schlienz_mahler(to_fano(DensityMatrix::maximally_mixed()))) == 0.0);
  const Mat3 m = schlienz_mahler(to_fano(oracle::phi_plus()));
  const Mat3 want{{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(m[i][j] - want[i][j]) < 1e-15);
}

TEST_CASE("LocalUnitary") {
  CHECK_THROWS_AS(LocalUnitary(Mat2::identity() * 2.0, Mat2::identity()), DomainError);
  Mat2 minus_det = Mat2::identity();
  minus_det(1, 1) = -1.0;
  CHECK_THROWS_AS(LocalUnitary(Mat2::identity(), minus_det), DomainError);
}

TEST_CASE("local_unitary_action") {
  Rng rng(8);
  const DensityMatrix rho = sample_hs_state(rng);
  CHECK(max_abs_diff(local_unitary_action(rho, LocalUnitary{}).matrix(), rho.matrix()) < 1e-15);

  const LocalUnitary g = sample_local_unitary(rng);
  CHECK(max_abs_diff(local_unitary_action(DensityMatrix::maximally_mixed(), g).matrix(),
                     Mat4::identity() * 0.25) < 1e-15);

  SUBCASE("invariants and SO(3) covariance") {
    for (int t = 0; t < 300; ++t) {
      const DensityMatrix s = sample_hs_state(rng);
      const LocalUnitary lu = sample_local_unitary(rng);
      const DensityMatrix moved = local_unitary_action(s, lu);
      const FanoState f = to_fano(s);
      const FanoState fm = to_fano(moved);

      for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(s.spectrum()[k] - moved.spectrum()[k]) < 1e-12);
      CHECK(std::abs(det_correlation(f) - det_correlation(fm)) < 1e-10);
      CHECK(std::abs(det3(schlienz_mahler(f)) - det3(schlienz_mahler(fm))) < 1e-10);
      CHECK(std::abs(quesne_c112(f) - quesne_c112(fm)) < 1e-10);
      const auto s1 = char_poly_coeffs(s.herm()), s2 = char_poly_coeffs(moved.herm());
      CHECK(std::abs(s1.s3 - s2.s3) < 1e-10);
      CHECK(std::abs(s1.s4 - s2.s4) < 1e-10);

      const Mat3 ra = so3_rotation(lu.u()), rb = so3_rotation(lu.v());
      const FanoState rotated{matvec(ra, f.a), matvec(rb, f.b), matmul(matmul(ra, f.c), transpose(rb))};
      CHECK(max_fano_gap(fm, rotated) < 1e-10);
      CHECK(det3(ra) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}
