#include "entspace/random.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <numbers>

namespace entspace {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Vec3 uniform_ball(Rng& rng) {
  Vec3 v{};
  double n2 = 0.0;
  do {
    for (double& x : v) x = rng.uniform(-1.0, 1.0);
    n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  } while (n2 > 1.0);
  return v;
}

OctahedronPoint uniform_octahedron(Rng& rng) {
  OctahedronPoint p;
  do {
    for (double& x : p.c) x = rng.uniform(-kOctahedronRadius, kOctahedronRadius);
  } while (!in_octahedron(p));
  return p;
}

}  // namespace

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

Rng Rng::split(std::uint64_t stream) { return for_stream(engine_(), stream); }

DensityMatrix sample_hs_state(Rng& rng) {
  Mat4 g;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(r, c) = Complex(re, im);
    }
  const Mat4 w = g * g.adjoint();
  return DensityMatrix(w * Complex(1.0 / w.trace().real()));
}

Mat2 sample_qubit_state(Rng& rng) {
  const Vec3 a = uniform_ball(rng);
  Mat2 m = pauli::sigma(0);
  for (int i = 0; i < 3; ++i) m += pauli::sigma(i + 1) * a[static_cast<std::size_t>(i)];
  return m * 0.5;
}

DensityMatrix sample_product_state(Rng& rng) {
  const Mat2 ra = sample_qubit_state(rng);
  const Mat2 rb = sample_qubit_state(rng);
  return DensityMatrix(tensor_product(ra, rb));
}

ChartPoint sample_chart_point(Rng& rng) {
  // Uniform on the probability simplex via spacings of sorted uniforms, then
  // ordered. Ties have probability zero but are rejected anyway.
  for (;;) {
    std::array<double, 3> u{rng.uniform(), rng.uniform(), rng.uniform()};
    std::sort(u.begin(), u.end());
    std::array<double, 4> r{u[0], u[1] - u[0], u[2] - u[1], 1.0 - u[2]};
    std::sort(r.begin(), r.end(), std::greater<>());
    if (!(r[0] > r[1] && r[1] > r[2] && r[2] > r[3] && r[3] > 0.0)) continue;
    const SimplexPoint s{r[0] + r[1] - r[2] - r[3], r[0] - r[1] + r[2] - r[3],
                         r[0] - r[1] - r[2] + r[3]};
    // Rounding in the linear map can still land on a tie; keep generic points only.
    try {
      if (!eigenvalues_from_xyz(s).generic()) continue;
    } catch (const std::domain_error&) {
      continue;
    }
    ChartPoint c;
    c.s = s;
    c.alpha = uniform_octahedron(rng);
    c.beta = uniform_octahedron(rng);
    return c;
  }
}

Mat2 sample_su2(Rng& rng) {
  // Unit quaternion q0 + i(q·σ) from a normalized 4-vector of Gaussians.
  std::array<double, 4> q{};
  double n2 = 0.0;
  do {
    for (double& x : q) x = rng.normal();
    n2 = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
  } while (n2 < 1e-12);
  const double inv = 1.0 / std::sqrt(n2);
  for (double& x : q) x *= inv;
  Mat2 u;
  u(0, 0) = Complex(q[0], q[3]);
  u(0, 1) = Complex(q[2], q[1]);
  u(1, 0) = Complex(-q[2], q[1]);
  u(1, 1) = Complex(q[0], -q[3]);
  return u;
}

LocalUnitary sample_local_unitary(Rng& rng) {
  const Mat2 u = sample_su2(rng);
  const Mat2 v = sample_su2(rng);
  return LocalUnitary(u, v);
}

}  // namespace entspace
