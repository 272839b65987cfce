#pragma once

#include <cstdint>
#include <random>

#include "entspace/chart.hpp"
#include "entspace/fano.hpp"

namespace entspace {

/// Seedable 64-bit generator. Independent streams are derived from a base
/// seed and a stream index by SplitMix64 mixing, so sample i of a run never
/// depends on how samples are distributed over workers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng for_stream(std::uint64_t seed, std::uint64_t stream);
  [[nodiscard]] Rng split(std::uint64_t stream);

  double normal() { return normal_(engine_); }
  /// Uniform on [0, 1).
  double uniform() { return std::generate_canonical<double, 53>(engine_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// rho = G G† / Tr(G G†) with G a 4×4 matrix of standard complex Gaussians.
DensityMatrix sample_hs_state(Rng& rng);

/// Single-qubit state with Bloch vector uniform on the unit ball.
Mat2 sample_qubit_state(Rng& rng);

/// rho_A ⊗ rho_B with independent sample_qubit_state factors.
DensityMatrix sample_product_state(Rng& rng);

/// Uniform on the open ordered simplex × O_h × O_h.
ChartPoint sample_chart_point(Rng& rng);

/// Haar-random SU(2).
Mat2 sample_su2(Rng& rng);
LocalUnitary sample_local_unitary(Rng& rng);

}  // namespace entspace
