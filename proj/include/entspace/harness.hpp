#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "entspace/chart.hpp"
#include "entspace/constants.hpp"
#include "entspace/random.hpp"
#include "entspace/separability.hpp"

namespace entspace {

enum class Ensemble { HilbertSchmidt, Product, Chart };
enum class SuiteSelection { All, Identities, Coeffs, Ppt };

/// Deliberate defects for mutation testing of the verification suite.
enum class Fault { None, FlipP111Sign };

struct RunConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  double tol = tol::kVerdict;
  unsigned workers = 1;
  Ensemble ensemble = Ensemble::HilbertSchmidt;
  SuiteSelection suite = SuiteSelection::All;
  Fault fault = Fault::None;
};

/// Throws InputError unless samples ≥ 1, tol > 0 and workers ≥ 1.
void validate(const RunConfig& cfg);

Ensemble parse_ensemble(const std::string& name);
SuiteSelection parse_suite(const std::string& name);
std::string to_string(Ensemble e);
std::string to_string(SuiteSelection s);

/// State number `id` of the run: drawn from stream `id` of the seed.
DensityMatrix sample_state(Ensemble e, std::uint64_t seed, std::uint64_t id);

struct SampleRecord {
  std::uint64_t id = 0;
  Verdict verdict = Verdict::Boundary;
  double lhs3 = 0.0;
  double lhs4 = 0.0;
  double min_pt_eigenvalue = 0.0;
  std::array<double, 4> spectrum{};
};

SampleRecord make_sample_record(std::uint64_t id, const DensityMatrix& rho, double tol);

/// Records for ids 0..samples−1, in id order.
std::vector<SampleRecord> generate_samples(const RunConfig& cfg);

struct ScanSummary {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  Ensemble ensemble = Ensemble::HilbertSchmidt;
  double tol = 0.0;
  // S3/S4 criterion.
  std::size_t separable = 0;
  std::size_t entangled = 0;
  std::size_t boundary = 0;
  // Minimum-PT-eigenvalue oracle: ≥ 0 counts as separable.
  std::size_t oracle_separable = 0;
  // Oracle-separable states among those outside the Boundary class.
  std::size_t decided_oracle_separable = 0;
  // States outside the Boundary class whose binary verdict differs from the oracle.
  std::size_t mismatches = 0;
  // Violations of each one-sided inequality 0 ≤ lhs3 ≤ 1/16, 0 ≤ lhs4 ≤ 1/256.
  std::size_t lhs3_below = 0;
  std::size_t lhs3_above = 0;
  std::size_t lhs4_below = 0;
  std::size_t lhs4_above = 0;

  [[nodiscard]] double fraction() const;
  [[nodiscard]] double oracle_fraction() const;
  /// Wald standard error sqrt(f(1−f)/n).
  [[nodiscard]] double error_bar() const;
  /// Separable fraction among states outside the Boundary class, by each method.
  [[nodiscard]] double decided_fraction() const;
  [[nodiscard]] double decided_oracle_fraction() const;
};

/// Parallel over cfg.workers threads; the result does not depend on the
/// worker count.
ScanSummary monte_carlo_separable_fraction(const RunConfig& cfg);

struct CheckResult {
  std::string name;
  std::string group;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double tol = 0.0;
  SuiteSelection suite = SuiteSelection::All;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool all_pass() const;
};

/// Runs every check of the selected groups; failures are collected, never
/// thrown.
SuiteReport run_verification_suite(const RunConfig& cfg);

}  // namespace entspace
