#include "entspace/coeff_table.hpp"
#include "entspace/harness.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>

#include "entspace/errors.hpp"

namespace entspace {

namespace {

// Stream tags keep the draws of different checks independent.
enum class Tag : std::uint64_t {
  FanoRoundtrip = 1,
  DetIdentity,
  S2Invariance,
  DualPath,
  LuInvariance,
  LuCovariance,
  DetCClosedForm,
  ChartSpectrum,
  AFactorPaths,
  Su4Assembly,
  Fit,
  PptEquivalence,
  InequalityVerdict,
  ProductStates,
};

struct Context {
  const RunConfig& cfg;

  Rng rng(Tag tag, std::size_t i) const {
    return Rng::for_stream(cfg.seed, (static_cast<std::uint64_t>(tag) << 40) | i);
  }
  DensityMatrix hs(Tag tag, std::size_t i) const {
    Rng r = rng(tag, i);
    return sample_hs_state(r);
  }
};

class Recorder {
 public:
  explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

  // Runs body, which returns the worst residual over `samples` draws.
  void check(const std::string& name, const std::string& group, std::size_t samples,
             double tolerance, const std::function<double(std::string&)>& body) {
    CheckResult r{name, group, samples, 0.0, tolerance, false, ""};
    try {
      r.max_residual = body(r.detail);
      r.pass = r.max_residual <= tolerance;
    } catch (const std::exception& e) {
      r.max_residual = std::numeric_limits<double>::infinity();
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::vector<CheckResult>& out_;
};

double fano_gap(const FanoState& l, const FanoState& r) {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    d = std::max({d, std::abs(l.a[i] - r.a[i]), std::abs(l.b[i] - r.b[i])});
    for (std::size_t j = 0; j < 3; ++j) d = std::max(d, std::abs(l.c[i][j] - r.c[i][j]));
  }
  return d;
}

struct Invariants {
  std::array<double, 4> spectrum;
  CharPolyCoeffs s;
  double det_c, det_m, c112;
};

Invariants invariants_of(const DensityMatrix& rho) {
  const FanoState f = to_fano(rho);
  return {rho.spectrum(), char_poly_coeffs(rho.herm()), det_correlation(f),
          det3(schlienz_mahler(f)), quesne_c112(f)};
}

double invariant_gap(const Invariants& l, const Invariants& r) {
  double d = 0.0;
  for (std::size_t k = 0; k < 4; ++k) d = std::max(d, std::abs(l.spectrum[k] - r.spectrum[k]));
  return std::max({d, std::abs(l.s.s2 - r.s.s2), std::abs(l.s.s3 - r.s.s3),
                   std::abs(l.s.s4 - r.s.s4), std::abs(l.det_c - r.det_c),
                   std::abs(l.det_m - r.det_m), std::abs(l.c112 - r.c112)});
}

DensityMatrix werner(double p) {
  // p |ψ−⟩⟨ψ−| + (1 − p) I/4
  Mat4 singlet;
  singlet(1, 1) = 0.5;
  singlet(2, 2) = 0.5;
  singlet(1, 2) = -0.5;
  singlet(2, 1) = -0.5;
  return DensityMatrix(singlet * p + Mat4::identity() * (0.25 * (1.0 - p)));
}

void identity_checks(const Context& ctx, Recorder& rec) {
  const std::size_t n = ctx.cfg.samples;
  const std::string g = "identities";

  rec.check("fano_roundtrip", g, n, 1e-13, [&](std::string&) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const DensityMatrix rho = ctx.hs(Tag::FanoRoundtrip, i);
      worst = std::max(worst, max_abs_diff(from_fano(to_fano(rho)).matrix(), rho.matrix()));
    }
    return worst;
  });

  rec.check("det_m_identity", g, n, 1e-10, [&](std::string&) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const FanoState f = to_fano(ctx.hs(Tag::DetIdentity, i));
      const double gap =
          det3(schlienz_mahler(f)) - (det_correlation(f) - 0.5 * quesne_c112(f));
      worst = std::max(worst, std::abs(gap));
    }
    return worst;
  });

  rec.check("s2_partial_transpose_invariance", g, n, 1e-12, [&](std::string&) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const DensityMatrix rho = ctx.hs(Tag::S2Invariance, i);
      worst = std::max(worst, std::abs(s_coeffs_pt(rho).s2 - char_poly_coeffs(rho.herm()).s2));
    }
    return worst;
  });

  rec.check("inequality_dual_paths", g, n, 1e-10, [&](std::string&) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      worst = std::max(worst,
                       separability_inequalities(to_fano(ctx.hs(Tag::DualPath, i))).path_gap());
    return worst;
  });

  rec.check("maximally_mixed_upper_bounds", g, 1, 1e-12, [&](std::string& detail) {
    const auto v = separability_inequalities(to_fano(DensityMatrix::maximally_mixed()));
    if (!v.within_bounds) detail = "within_bounds is false";
    const double gap = std::max(std::abs(v.lhs3 - 1.0 / 16.0), std::abs(v.lhs4 - 1.0 / 256.0));
    return v.within_bounds ? gap : std::numeric_limits<double>::infinity();
  });

  rec.check("local_unitary_invariance", g, n, 1e-10, [&](std::string&) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Rng r = ctx.rng(Tag::LuInvariance, i);
      const DensityMatrix rho = sample_hs_state(r);
      const LocalUnitary lu = sample_local_unitary(r);
      worst = std::max(worst, invariant_gap(invariants_of(rho),
                                            invariants_of(local_unitary_action(rho, lu))));
    }
    return worst;
  });

  rec.check("local_unitary_covariance", g, n, 1e-10, [&](std::string&) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Rng r = ctx.rng(Tag::LuCovariance, i);
      const DensityMatrix rho = sample_hs_state(r);
      const LocalUnitary lu = sample_local_unitary(r);
      const FanoState f = to_fano(rho);
      const Mat3 ra = so3_rotation(lu.u());
      const Mat3 rb = so3_rotation(lu.v());
      const FanoState expected{matvec(ra, f.a), matvec(rb, f.b),
                               matmul(matmul(ra, f.c), transpose(rb))};
      worst = std::max(worst, fano_gap(to_fano(local_unitary_action(rho, lu)), expected));
    }
    return worst;
  });

  const bool flip = ctx.cfg.fault == Fault::FlipP111Sign;
  rec.check("det_c_closed_form", g, n, 1e-10, [&](std::string&) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Rng r = ctx.rng(Tag::DetCClosedForm, i);
      const ChartPoint c = sample_chart_point(r);
      const double brute = det_correlation(to_fano(representative_state(c).state));
      const auto& s = c.s;
      const double q111 = flip ? -p111(c.alpha[2], c.beta) : p111(c.alpha[2], c.beta);
      const double closed = s.z * (p201(c.alpha[2], c.beta) * (s.x * s.x + s.y * s.y) + q111 * s.x * s.y);
      worst = std::max(worst, std::abs(brute - closed));
    }
    return worst;
  });

  rec.check("chart_spectrum", g, n, 1e-12, [&](std::string&) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Rng r = ctx.rng(Tag::ChartSpectrum, i);
      const auto rep = representative_state(sample_chart_point(r));
      const auto ev = herm_eigenvalues(rep.state.herm());
      for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(ev[k] - rep.spectrum[k]));
    }
    return worst;
  });

  rec.check("a_factor_paths", g, n, 1e-12, [&](std::string&) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Rng r = ctx.rng(Tag::AFactorPaths, i);
      const ChartPoint c = sample_chart_point(r);
      worst = std::max(worst, max_abs_diff(a_factor(c.alpha, c.beta).matrix(),
                                           a_factor_series(c.alpha, c.beta).matrix()));
    }
    return worst;
  });

  rec.check("generator_commutation", g, 1, 0.0, [&](std::string&) {
    const OctahedronPoint ones{{1.0, 1.0, 1.0}};
    double worst = 0.0;
    for (const auto& fam : {alpha_generators(ones), beta_generators(ones)})
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < i; ++j)
          worst = std::max(worst, frobenius_norm(commutator(fam[i].pauli, fam[j].pauli)));
    return worst;
  });

  rec.check("su4_assembly_invariants", g, n, 1e-10, [&](std::string&) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Rng r = ctx.rng(Tag::Su4Assembly, i);
      const ChartPoint c = sample_chart_point(r);
      const LocalUnitary k = sample_local_unitary(r);
      const TorusPoint t{{r.uniform(-std::numbers::pi, std::numbers::pi), r.uniform(-std::numbers::pi, std::numbers::pi), r.uniform(-std::numbers::pi, std::numbers::pi)}};
      const auto rep = representative_state(c);
      const Mat4 u = assemble_su4(k, c.alpha, c.beta, t).matrix();
      const auto& sp = rep.spectrum.values();
      const DensityMatrix rho(u * Mat4::diagonal({sp[0], sp[1], sp[2], sp[3]}) * u.adjoint());
      worst = std::max(worst, invariant_gap(invariants_of(rho), invariants_of(rep.state)));
    }
    return worst;
  });
}

void coeff_checks(const Context& ctx, Recorder& rec) {
  const std::size_t n = ctx.cfg.samples;
  const std::string g = "coeffs";

  struct FitPair {
    ChartPoint c;
    CoeffTable table;
    CoeffTable shifted;  // same α3 and β, fresh α1 and α2
  };
  // Fits are shared by the four checks below.
  std::vector<FitPair> fits;
  std::string fit_error;
  try {
    fits.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rng r = ctx.rng(Tag::Fit, i);
      const ChartPoint c = sample_chart_point(r);
      OctahedronPoint moved = c.alpha;
      const double room = kOctahedronRadius - std::abs(moved[2]);
      moved.c[0] = r.uniform(-0.5 * room, 0.5 * room);
      moved.c[1] = r.uniform(-0.5 * room, 0.5 * room);
      fits.push_back({c, fit_c112_coeffs(c.alpha, c.beta), fit_c112_coeffs(moved, c.beta)});
    }
  } catch (const std::exception& e) {
    fit_error = e.what();
  }
  auto guard = [&] {
    if (!fit_error.empty()) throw NumericalError(fit_error);
  };

  rec.check("c112_fit_residual", g, n, tol::kFitResidual, [&](std::string&) {
    guard();
    double worst = 0.0;
    for (const auto& f : fits) worst = std::max({worst, f.table.residual, f.shifted.residual});
    return worst;
  });

  rec.check("c112_support", g, n, tol::kCoeffZero, [&](std::string& detail) {
    guard();
    double worst_off = 0.0;
    std::size_t max_nonzero = 0;
    for (const auto& f : fits) {
      max_nonzero = std::max(max_nonzero, f.table.count_above(tol::kCoeffZero));
      for (std::size_t k = 0; k < kQuarticMonomials.size(); ++k) {
        const bool supported = std::find(kC112Support.begin(), kC112Support.end(),
                                         kQuarticMonomials[k]) != kC112Support.end();
        if (!supported) worst_off = std::max(worst_off, std::abs(*f.table.values[k]));
      }
    }
    detail = "max non-vanishing coefficients: " + std::to_string(max_nonzero);
    return max_nonzero <= kC112Support.size() ? worst_off : std::numeric_limits<double>::infinity();
  });

  rec.check("c112_alpha12_independence", g, n, 1e-9, [&](std::string&) {
    guard();
    double worst = 0.0;
    for (const auto& f : fits)
      for (std::size_t k = 0; k < kQuarticMonomials.size(); ++k)
        worst = std::max(worst, std::abs(*f.table.values[k] - *f.shifted.values[k]));
    return worst;
  });

  rec.check("p022_closed_form", g, n, 1e-9, [&](std::string&) {
    guard();
    double worst = 0.0;
    for (const auto& f : fits)
      worst = std::max(worst, std::abs(*f.table.at(0, 2, 2) - p022(f.c.alpha[2], f.c.beta)));
    return worst;
  });
}

void ppt_checks(const Context& ctx, Recorder& rec) {
  const std::size_t n = ctx.cfg.samples;
  const double tol = ctx.cfg.tol;
  const std::string g = "ppt";

  rec.check("werner_line", g, 3, 0.0, [&](std::string& detail) {
    const std::array<std::pair<double, Verdict>, 3> cases{
        {{0.2, Verdict::Separable}, {1.0 / 3.0, Verdict::Boundary}, {0.5, Verdict::Entangled}}};
    double wrong = 0.0;
    for (const auto& [p, want] : cases) {
      const Verdict got = ppt_verdict(werner(p), tol);
      detail += std::string(detail.empty() ? "" : ", ") + std::string(to_string(got));
      wrong += got != want;
    }
    return wrong;
  });

  rec.check("ppt_equivalence", g, n, 0.0, [&](std::string& detail) {
    constexpr double kBand = 1e-8;
    std::size_t counterexamples = 0;
    std::size_t banded = 0;
    std::ostringstream log;
    log.precision(17);
    for (std::size_t i = 0; i < n; ++i) {
      const DensityMatrix rho = ctx.hs(Tag::PptEquivalence, i);
      const double min_eig = min_pt_eigenvalue(rho);
      const auto s = s_coeffs_pt(rho);
      const Verdict v = verdict_from_coeffs(s.s3, s.s4, tol);
      if (std::abs(min_eig) <= kBand) {
        ++banded;
        continue;
      }
      const Verdict expected = min_eig > 0.0 ? Verdict::Separable : Verdict::Entangled;
      if (v != expected) {
        if (counterexamples < 8)
          log << " [id " << i << ": min_eig " << min_eig << ", S3 " << s.s3 << ", S4 " << s.s4
              << ", verdict " << to_string(v) << "]";
        ++counterexamples;
      }
    }
    detail = "states inside |min eig| <= 1e-8: " + std::to_string(banded) + log.str();
    return static_cast<double>(counterexamples);
  });

  rec.check("inequalities_match_verdict", g, n, 0.0, [&](std::string&) {
    std::size_t disagreements = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const DensityMatrix rho = ctx.hs(Tag::InequalityVerdict, i);
      const Verdict v = ppt_verdict(rho, tol);
      if (v == Verdict::Boundary) continue;
      const bool within = separability_inequalities(to_fano(rho)).within_bounds;
      disagreements += within != (v == Verdict::Separable);
    }
    return static_cast<double>(disagreements);
  });

  // Near-pure factors put S4 of the transpose inside the tolerance band, so
  // products may be Boundary; they must never be Entangled.
  rec.check("product_states", g, n, 1e-12, [&](std::string& detail) {
    double worst = 0.0;
    std::size_t entangled = 0;
    std::size_t boundary = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Rng r = ctx.rng(Tag::ProductStates, i);
      const DensityMatrix rho = sample_product_state(r);
      const FanoState f = to_fano(rho);
      const Mat3 m = schlienz_mahler(f);
      for (const auto& row : m)
        for (double v : row) worst = std::max(worst, std::abs(v));
      worst = std::max(worst, std::abs(quesne_c112(f)));
      const Verdict v = ppt_verdict(rho, tol);
      entangled += v == Verdict::Entangled;
      boundary += v == Verdict::Boundary;
    }
    detail = "boundary: " + std::to_string(boundary) + ", entangled: " + std::to_string(entangled);
    return entangled > 0 ? std::numeric_limits<double>::infinity() : worst;
  });
}

}  // namespace

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

SuiteReport run_verification_suite(const RunConfig& cfg) {
  validate(cfg);
  SuiteReport report;
  report.seed = cfg.seed;
  report.samples = cfg.samples;
  report.tol = cfg.tol;
  report.suite = cfg.suite;

  const Context ctx{cfg};
  Recorder rec(report.checks);
  const auto wants = [&](SuiteSelection s) {
    return cfg.suite == SuiteSelection::All || cfg.suite == s;
  };
  if (wants(SuiteSelection::Identities)) identity_checks(ctx, rec);
  if (wants(SuiteSelection::Coeffs)) coeff_checks(ctx, rec);
  if (wants(SuiteSelection::Ppt)) ppt_checks(ctx, rec);
  return report;
}

}  // namespace entspace
