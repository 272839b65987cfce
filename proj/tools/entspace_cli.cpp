// entspace: two-qubit separability analysis on the entanglement-space chart.
//
// Exit codes: 0 success, 1 verification or analysis failure, 2 malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "entspace/coeff_table.hpp"
#include "entspace/errors.hpp"
#include "entspace/harness.hpp"
#include "entspace/json_io.hpp"
#include "entspace/separability.hpp"

namespace {

using namespace entspace;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

OctahedronPoint parse_triplet(const std::string& text, const char* what) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InputError(std::string(what) + ": '" + item + "' is not a number");
    }
    if (used != item.size() || !std::isfinite(x))
      throw InputError(std::string(what) + ": '" + item + "' is not a number");
    v.push_back(x);
  }
  if (v.size() != 3) throw InputError(std::string(what) + ": expected three comma-separated numbers");
  return {{v[0], v[1], v[2]}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

int cmd_check(const std::string& path, double tol, const std::string& format) {
  const HermMat4 h = io::parse_state(read_json_file(path));
  DensityMatrix rho = [&] {
    try {
      return DensityMatrix(h);
    } catch (const DomainError& e) {
      throw InputError(e.what());
    }
  }();
  const SeparabilityReport r = analyze(rho, tol);
  if (format == "csv")
    std::cout << io::report_to_csv(r);
  else
    io::write_json(std::cout, io::report_to_json(r));
  return kExitOk;
}

int cmd_coeffs(const std::string& alpha_text, const std::string& beta_text, bool fit,
               const std::string& format) {
  const OctahedronPoint alpha = parse_triplet(alpha_text, "--alpha");
  const OctahedronPoint beta = parse_triplet(beta_text, "--beta");
  const CoeffTable closed = closed_form_c112_coeffs(alpha[2], beta);

  if (format == "csv") {
    std::cout << io::coeff_table_to_csv(fit ? fit_c112_coeffs(alpha, beta) : closed);
    return kExitOk;
  }
  json out{{"alpha", json::array({alpha[0], alpha[1], alpha[2]})},
           {"beta", json::array({beta[0], beta[1], beta[2]})},
           {"in_octahedra", in_octahedron(alpha) && in_octahedron(beta)},
           {"det_c", {{"p201", p201(alpha[2], beta)}, {"p111", p111(alpha[2], beta)}}},
           {"closed_form", io::coeff_table_to_json(closed)}};
  if (fit) out["fitted"] = io::coeff_table_to_json(fit_c112_coeffs(alpha, beta));
  io::write_json(std::cout, out);
  return kExitOk;
}

int cmd_sample(const RunConfig& cfg, const std::string& out_path) {
  const auto records = generate_samples(cfg);
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw InputError("cannot write " + out_path);
  }
  std::ostream& os = out_path.empty() ? std::cout : file;
  os << io::sample_csv_header() << "\n";
  for (const auto& r : records) os << io::sample_csv_row(r) << "\n";
  return kExitOk;
}

int cmd_scan(const RunConfig& cfg) {
  io::write_json(std::cout, io::scan_to_json(monte_carlo_separable_fraction(cfg)));
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& out_path) {
  const SuiteReport report = run_verification_suite(cfg);
  const std::string text = io::dump_json(io::suite_to_json(report));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out_path);
    if (!file) throw InputError("cannot write " + out_path);
    file << text;
  }
  return report.all_pass() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit entanglement-space coordinates and separability checks"};
  app.require_subcommand(1);

  double tol = entspace::tol::kVerdict;
  std::string format = "json";
  std::string state_path, alpha_text, beta_text, ensemble = "hs", suite = "all", out_path, fault;
  bool fit = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  unsigned workers = 1;

  auto* check = app.add_subcommand("check", "Separability report for a state record");
  check->add_option("--state", state_path, "State JSON file")->required();
  check->add_option("--tol", tol, "Verdict tolerance on S3, S4");
  check->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* coeffs = app.add_subcommand("coeffs", "C112 coefficient table at a chart point");
  coeffs->add_option("--alpha", alpha_text, "a1,a2,a3")->required();
  coeffs->add_option("--beta", beta_text, "b1,b2,b3")->required();
  coeffs->add_flag("--fit", fit, "Also fit all 15 coefficients numerically");
  coeffs->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* sample = app.add_subcommand("sample", "Per-state records as CSV");
  sample->add_option("--ensemble", ensemble)->check(CLI::IsMember({"hs", "product", "chart"}));
  sample->add_option("-n", samples)->required();
  sample->add_option("--seed", seed)->required();
  sample->add_option("--out", out_path);
  sample->add_option("--tol", tol);
  sample->add_option("--workers", workers);

  auto* scan = app.add_subcommand("scan", "Monte-Carlo separable fraction");
  scan->add_option("--ensemble", ensemble)->check(CLI::IsMember({"hs", "product", "chart"}));
  scan->add_option("-n", samples)->required();
  scan->add_option("--seed", seed)->required();
  scan->add_option("--tol", tol);
  scan->add_option("--workers", workers);

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "identities", "coeffs", "ppt"}));
  verify->add_option("-n", samples)->required();
  verify->add_option("--seed", seed)->required();
  verify->add_option("--tol", tol)->required();
  verify->add_option("--out", out_path);
  verify->add_option("--inject-fault", fault, "Mutation test: p111-sign")
      ->check(CLI::IsMember({"p111-sign"}))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    entspace::RunConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.tol = tol;
    cfg.workers = workers;
    cfg.ensemble = entspace::parse_ensemble(ensemble);
    cfg.suite = entspace::parse_suite(suite);
    cfg.fault = fault == "p111-sign" ? entspace::Fault::FlipP111Sign : entspace::Fault::None;

    if (!(tol > 0.0)) throw entspace::InputError("--tol must be positive");
    if (*check) return cmd_check(state_path, tol, format);
    if (*coeffs) return cmd_coeffs(alpha_text, beta_text, fit, format);
    entspace::validate(cfg);
    if (*sample) return cmd_sample(cfg, out_path);
    if (*scan) return cmd_scan(cfg);
    if (*verify) return cmd_verify(cfg, out_path);
  } catch (const entspace::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const entspace::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInput;
}
