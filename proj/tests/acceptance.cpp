// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#include <sys/wait.h>
#include <unistd.h>

#include "entspace/chart.hpp"
#include "entspace/coeff_table.hpp"
#include "entspace/harness.hpp"
#include "entspace/separability.hpp"

using namespace entspace;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double max_abs_fano_det_gap(const DensityMatrix& rho) {
  const FanoState f = to_fano(rho);
  const double det_m = det3(schlienz_mahler(f));
  return std::abs(det_m - (det_correlation(f) - 0.5 * quesne_c112(f)));
}

Outcome det_identity() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 10000; ++i)
    worst = std::max(worst, max_abs_fano_det_gap(sample_state(Ensemble::HilbertSchmidt, 101, i)));
  return {worst <= 1e-10, "max residual " + fmt("%.3g", worst) + " (tol 1e-10)"};
}

Outcome det_c_closed_form_check() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Rng rng = Rng::for_stream(102, i);
    const ChartPoint c = sample_chart_point(rng);
    const double direct = det_correlation(to_fano(representative_state(c).state));
    worst = std::max(worst, std::abs(det_c_closed_form(c.s, c.alpha[2], c.beta) - direct));
  }
  return {worst <= 1e-10, "max residual " + fmt("%.3g", worst) + " (tol 1e-10)"};
}

Outcome coefficient_structure() {
  std::size_t most_nonzero = 0;
  double worst_shift = 0.0, worst_p022 = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = Rng::for_stream(103, i);
    const ChartPoint c = sample_chart_point(rng);
    const CoeffTable fit = fit_c112_coeffs(c.alpha, c.beta);
    most_nonzero = std::max(most_nonzero, fit.count_above(1e-9));

    OctahedronPoint moved = c.alpha;
    moved.c[0] = rng.uniform(-1.0, 1.0);
    moved.c[1] = rng.uniform(-1.0, 1.0);
    const CoeffTable other = fit_c112_coeffs(moved, c.beta);
    for (std::size_t k = 0; k < fit.values.size(); ++k)
      worst_shift = std::max(worst_shift, std::abs(*fit.values[k] - *other.values[k]));

    worst_p022 = std::max(worst_p022, std::abs(*fit.at(0, 2, 2) - p022(c.alpha[2], c.beta)));
  }
  const bool ok = most_nonzero <= 9 && worst_shift <= 1e-9 && worst_p022 <= 1e-9;
  return {ok, "max nonzero " + std::to_string(most_nonzero) + ", alpha12 shift " + fmt("%.3g", worst_shift) +
                  ", p022 gap " + fmt("%.3g", worst_p022) + " (tol 1e-9)"};
}

Outcome ppt_equivalence() {
  std::size_t decided = 0, counterexamples = 0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const DensityMatrix rho = sample_state(Ensemble::HilbertSchmidt, 104, i);
    const double e = min_pt_eigenvalue(rho);
    if (std::abs(e) <= 1e-8) continue;
    ++decided;
    const Verdict want = e > 0 ? Verdict::Separable : Verdict::Entangled;
    if (ppt_verdict(rho) != want) ++counterexamples;
  }
  return {counterexamples == 0,
          std::to_string(counterexamples) + " counterexamples among " + std::to_string(decided) + " decided states"};
}

Outcome dual_paths() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 10000; ++i)
    worst = std::max(worst,
                     separability_inequalities(to_fano(sample_state(Ensemble::HilbertSchmidt, 105, i))).path_gap());
  const auto mixed = separability_inequalities(to_fano(DensityMatrix::maximally_mixed()));
  const double corner = std::max(std::abs(mixed.lhs3 - 1.0 / 16), std::abs(mixed.lhs4 - 1.0 / 256));
  return {worst <= 1e-10 && corner <= 1e-12,
          "path gap " + fmt("%.3g", worst) + " (tol 1e-10), I/4 gap " + fmt("%.3g", corner) + " (tol 1e-12)"};
}

DensityMatrix werner(double p) {
  Mat4 m = Mat4::identity() * (0.25 * (1.0 - p));
  m(1, 1) += 0.5 * p;
  m(2, 2) += 0.5 * p;
  m(1, 2) -= 0.5 * p;
  m(2, 1) -= 0.5 * p;
  return DensityMatrix(m);
}

Outcome werner_line() {
  const Verdict a = ppt_verdict(werner(0.2), 1e-9);
  const Verdict b = ppt_verdict(werner(1.0 / 3.0), 1e-9);
  const Verdict c = ppt_verdict(werner(0.5), 1e-9);
  const double gap = std::abs(min_pt_eigenvalue(werner(0.5)) - (1.0 - 1.5) / 4);
  const bool ok = a == Verdict::Separable && b == Verdict::Boundary && c == Verdict::Entangled && gap <= 1e-12;
  return {ok, std::string(to_string(a)) + "/" + std::string(to_string(b)) + "/" + std::string(to_string(c)) +
                  ", PT eigenvalue gap " + fmt("%.3g", gap)};
}

Outcome chart_consistency() {
  double spec = 0.0, paths = 0.0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Rng rng = Rng::for_stream(107, i);
    const ChartPoint c = sample_chart_point(rng);
    const auto rep = representative_state(c);
    const auto ev = herm_eigenvalues(rep.state.herm());
    for (std::size_t k = 0; k < 4; ++k) spec = std::max(spec, std::abs(ev[k] - rep.spectrum[k]));
    paths = std::max(paths, max_abs_diff(a_factor(c.alpha, c.beta).matrix(),
                                         a_factor_series(c.alpha, c.beta).matrix()));
  }
  return {spec <= 1e-12 && paths <= 1e-12,
          "spectrum gap " + fmt("%.3g", spec) + ", exp path gap " + fmt("%.3g", paths) + " (tol 1e-12)"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome reproducibility() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("entspace_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  int codes[2];
  for (int run = 0; run < 2; ++run) {
    const std::string cmd = std::string("\"") + ENTSPACE_CLI_PATH +
                            "\" verify --suite all -n 10000 --seed 42 --tol 1e-9 > \"" +
                            (dir / ("run" + std::to_string(run) + ".json")).string() + "\"";
    const int status = std::system(cmd.c_str());
    codes[run] = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  const std::string a = slurp(dir / "run0.json"), b = slurp(dir / "run1.json");
  fs::remove_all(dir);
  const bool same = !a.empty() && a == b;
  return {same && codes[0] == 0 && codes[1] == 0,
          std::string(same ? "identical" : "different") + " reports (" + std::to_string(a.size()) +
              " bytes), exit codes " + std::to_string(codes[0]) + "/" + std::to_string(codes[1])};
}

Outcome monte_carlo() {
  RunConfig cfg;
  cfg.samples = 1000000;
  cfg.seed = 42;
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  const ScanSummary s = monte_carlo_separable_fraction(cfg);
  const bool ok = s.fraction() >= 0.23 && s.fraction() <= 0.26 && s.separable == s.oracle_separable &&
                  s.mismatches == 0 && s.boundary == 0;
  return {ok, "fraction " + fmt("%.6f", s.fraction()) + " +- " + fmt("%.6f", s.error_bar()) + ", oracle " +
                  fmt("%.6f", s.oracle_fraction()) + ", boundary " + std::to_string(s.boundary)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double time_limit;  // seconds; 0 means unlimited
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "determinant identity", 10, det_identity},
      {2, "closed-form det C", 30, det_c_closed_form_check},
      {3, "C112 coefficient structure", 60, coefficient_structure},
      {4, "PPT equivalence", 0, ppt_equivalence},
      {5, "dual-path inequalities", 0, dual_paths},
      {6, "Werner line", 0, werner_line},
      {7, "chart self-consistency", 0, chart_consistency},
      {8, "CLI reproducibility", 300, reproducibility},
      {9, "Monte-Carlo separable fraction", 0, monte_carlo},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0 && secs > c.time_limit) {
      o.pass = false;
      o.detail += "; over time limit " + fmt("%.0f", c.time_limit) + " s";
    }
    if (!o.pass) ++failures;
    std::printf("%s %d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
