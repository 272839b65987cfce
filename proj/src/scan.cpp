#include "entspace/harness.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "entspace/errors.hpp"

namespace entspace {

void validate(const RunConfig& cfg) {
  if (cfg.samples < 1) throw InputError("samples must be at least 1");
  if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) throw InputError("tol must be positive");
  if (cfg.workers < 1) throw InputError("workers must be at least 1");
}

Ensemble parse_ensemble(const std::string& name) {
  if (name == "hs") return Ensemble::HilbertSchmidt;
  if (name == "product") return Ensemble::Product;
  if (name == "chart") return Ensemble::Chart;
  throw InputError("unknown ensemble '" + name + "' (expected hs|product|chart)");
}

SuiteSelection parse_suite(const std::string& name) {
  if (name == "all") return SuiteSelection::All;
  if (name == "identities") return SuiteSelection::Identities;
  if (name == "coeffs") return SuiteSelection::Coeffs;
  if (name == "ppt") return SuiteSelection::Ppt;
  throw InputError("unknown suite '" + name + "' (expected all|identities|coeffs|ppt)");
}

std::string to_string(Ensemble e) {
  switch (e) {
    case Ensemble::HilbertSchmidt:
      return "hs";
    case Ensemble::Product:
      return "product";
    case Ensemble::Chart:
      return "chart";
  }
  return "hs";
}

std::string to_string(SuiteSelection s) {
  switch (s) {
    case SuiteSelection::All:
      return "all";
    case SuiteSelection::Identities:
      return "identities";
    case SuiteSelection::Coeffs:
      return "coeffs";
    case SuiteSelection::Ppt:
      return "ppt";
  }
  return "all";
}

DensityMatrix sample_state(Ensemble e, std::uint64_t seed, std::uint64_t id) {
  Rng rng = Rng::for_stream(seed, id);
  switch (e) {
    case Ensemble::HilbertSchmidt:
      return sample_hs_state(rng);
    case Ensemble::Product:
      return sample_product_state(rng);
    case Ensemble::Chart:
      return representative_state(sample_chart_point(rng)).state;
  }
  throw InputError("unknown ensemble");
}

SampleRecord make_sample_record(std::uint64_t id, const DensityMatrix& rho, double tol) {
  const auto s = s_coeffs_pt(rho);
  const auto ineq = separability_inequalities(to_fano(rho));
  SampleRecord rec;
  rec.id = id;
  rec.verdict = verdict_from_coeffs(s.s3, s.s4, tol);
  rec.lhs3 = ineq.lhs3;
  rec.lhs4 = ineq.lhs4;
  rec.min_pt_eigenvalue = min_pt_eigenvalue(rho);
  rec.spectrum = rho.spectrum();
  return rec;
}

namespace {

// Splits [0, n) into `workers` contiguous chunks and runs fn(begin, end, w).
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned workers, Fn&& fn) {
  const std::size_t w = std::min<std::size_t>(workers, n);
  if (w <= 1) {
    fn(std::size_t{0}, n, 0u);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(w);
  for (std::size_t k = 0; k < w; ++k) {
    const std::size_t begin = n * k / w;
    const std::size_t end = n * (k + 1) / w;
    threads.emplace_back([&fn, begin, end, k] { fn(begin, end, static_cast<unsigned>(k)); });
  }
}

}  // namespace

std::vector<SampleRecord> generate_samples(const RunConfig& cfg) {
  validate(cfg);
  std::vector<SampleRecord> out(cfg.samples);
  parallel_chunks(cfg.samples, cfg.workers, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t i = begin; i < end; ++i)
      out[i] = make_sample_record(i, sample_state(cfg.ensemble, cfg.seed, i), cfg.tol);
  });
  return out;
}

double ScanSummary::fraction() const {
  return samples == 0 ? 0.0 : static_cast<double>(separable) / static_cast<double>(samples);
}

double ScanSummary::oracle_fraction() const {
  return samples == 0 ? 0.0 : static_cast<double>(oracle_separable) / static_cast<double>(samples);
}

double ScanSummary::error_bar() const {
  if (samples == 0) return 0.0;
  const double f = fraction();
  return std::sqrt(f * (1.0 - f) / static_cast<double>(samples));
}

double ScanSummary::decided_fraction() const {
  const std::size_t decided = separable + entangled;
  return decided == 0 ? 0.0 : static_cast<double>(separable) / static_cast<double>(decided);
}

double ScanSummary::decided_oracle_fraction() const {
  const std::size_t decided = separable + entangled;
  return decided == 0 ? 0.0
                      : static_cast<double>(decided_oracle_separable) / static_cast<double>(decided);
}

ScanSummary monte_carlo_separable_fraction(const RunConfig& cfg) {
  validate(cfg);
  const std::size_t w = std::min<std::size_t>(cfg.workers, cfg.samples);
  std::vector<ScanSummary> partial(std::max<std::size_t>(w, 1));

  parallel_chunks(cfg.samples, cfg.workers, [&](std::size_t begin, std::size_t end, unsigned k) {
    ScanSummary& acc = partial[k];
    for (std::size_t i = begin; i < end; ++i) {
      const DensityMatrix rho = sample_state(cfg.ensemble, cfg.seed, i);
      const auto s = s_coeffs_pt(rho);
      const Verdict v = verdict_from_coeffs(s.s3, s.s4, cfg.tol);
      const bool oracle_sep = min_pt_eigenvalue(rho) >= 0.0;
      const auto ineq = separability_inequalities(to_fano(rho));

      acc.oracle_separable += oracle_sep;
      switch (v) {
        case Verdict::Separable:
          ++acc.separable;
          break;
        case Verdict::Entangled:
          ++acc.entangled;
          break;
        case Verdict::Boundary:
          ++acc.boundary;
          break;
      }
      if (v != Verdict::Boundary) {
        acc.decided_oracle_separable += oracle_sep;
        if ((v == Verdict::Separable) != oracle_sep) ++acc.mismatches;
      }
      acc.lhs3_below += ineq.lhs3 < -tol::kInequalityBand;
      acc.lhs3_above += ineq.lhs3 > 1.0 / 16.0 + tol::kInequalityBand;
      acc.lhs4_below += ineq.lhs4 < -tol::kInequalityBand;
      acc.lhs4_above += ineq.lhs4 > 1.0 / 256.0 + tol::kInequalityBand;
    }
  });

  ScanSummary total;
  total.seed = cfg.seed;
  total.samples = cfg.samples;
  total.ensemble = cfg.ensemble;
  total.tol = cfg.tol;
  for (const auto& p : partial) {
    total.separable += p.separable;
    total.entangled += p.entangled;
    total.boundary += p.boundary;
    total.oracle_separable += p.oracle_separable;
    total.decided_oracle_separable += p.decided_oracle_separable;
    total.mismatches += p.mismatches;
    total.lhs3_below += p.lhs3_below;
    total.lhs3_above += p.lhs3_above;
    total.lhs4_below += p.lhs4_below;
    total.lhs4_above += p.lhs4_above;
  }
  return total;
}

}  // namespace entspace
