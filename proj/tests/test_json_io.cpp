#include <doctest.h>

#include <sstream>

#include "entspace/errors.hpp"
#include "entspace/json_io.hpp"
#include "oracles.hpp"

using namespace entspace;
using io::json;

TEST_CASE("format_double keeps 17 significant digits") {
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(io::format_double(-1.0) == "-1");
  CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(io::dump_json(json{{"x", 0.25}, {"bad", std::nan("")}}) == "{\n  \"x\": 0.25,\n  \"bad\": null\n}\n");
}

TEST_CASE("parse_state") {
  SUBCASE("matrix form") {
    json j = json::parse(R"({"rho_re": [[0.5,0,0,0.5],[0,0,0,0],[0,0,0,0],[0.5,0,0,0.5]]})");
    CHECK(max_abs_diff(io::parse_state(j).matrix(), oracle::phi_plus().matrix()) == 0.0);
  }

  SUBCASE("fano form") {
    json j = json::parse(R"({"fano": {"a": [0,0,0], "b": [0,0,0], "C": [[1,0,0],[0,-1,0],[0,0,1]]}})");
    CHECK(max_abs_diff(io::parse_state(j).matrix(), oracle::phi_plus().matrix()) < 1e-15);
  }

  SUBCASE("roundtrip through text") {
    std::mt19937_64 g(1);
    const HermMat4 h = oracle::random_hermitian(g);
    const json back = json::parse(io::dump_json(io::state_to_json(h)));
    CHECK(io::parse_state(back).matrix() == h.matrix());
  }

  SUBCASE("malformed input") {
    for (const char* text : {
             R"([1, 2])",
             R"({"rho": 1})",
             R"({"rho_re": [[1,0,0],[0,0,0],[0,0,0]]})",
             R"({"rho_re": [[1,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,"x"]]})",
             R"({"rho_re": [[1,1,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})",
             R"({"fano": {"a": [0,0], "b": [0,0,0], "C": [[0,0,0],[0,0,0],[0,0,0]]}})",
             R"({"fano": {"a": [0,0,0], "C": [[0,0,0],[0,0,0],[0,0,0]]}})",
         }) {
      CAPTURE(text);
      CHECK_THROWS_AS(io::parse_state(json::parse(text)), InputError);
    }
  }
}

TEST_CASE("chart records") {
  const ChartPoint c{{0.4, 0.2, 0.1}, {{0.1, -0.2, 0.3}}, {{1.0, 0.5, -0.25}}};
  const ChartPoint back = io::parse_chart(json::parse(io::dump_json(io::chart_to_json(c))));
  CHECK(back.s.x == 0.4);
  CHECK(back.alpha.c == c.alpha.c);
  CHECK(back.beta.c == c.beta.c);
  CHECK_THROWS_AS(io::parse_chart(json::parse(R"({"xyz": [0,0,0], "alpha": [0,0,0]})")), InputError);
}

TEST_CASE("report formats") {
  const SeparabilityReport r = analyze(oracle::phi_plus());
  const json j = io::report_to_json(r);
  CHECK(j["verdict"] == "Entangled");
  CHECK(j.begin().key() == "s2_pt");
  const std::string csv = io::report_to_csv(r);
  CHECK(csv.rfind("field,value\n", 0) == 0);
  CHECK(csv.find("verdict,Entangled\n") != std::string::npos);
}

TEST_CASE("coefficient table formats") {
  const json closed = io::coeff_table_to_json(closed_form_c112_coeffs(0.3, {{0.1, 0.2, 0.3}}));
  CHECK(closed["provenance"] == "closed-form");
  CHECK(closed["coefficients"]["p400"].is_null());
  CHECK(closed["coefficients"]["p022"].is_number());

  const CoeffTable fit = fit_c112_coeffs({{0.1, 0.2, 0.3}}, {{0.4, 0.5, 0.6}});
  const json fj = io::coeff_table_to_json(fit);
  CHECK(fj["provenance"] == "fitted");
  CHECK(fj.contains("residual"));
  const std::string csv = io::coeff_table_to_csv(fit);
  CHECK(csv.rfind("monomial,value\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 16);
}

TEST_CASE("sample rows") {
  CHECK(io::sample_csv_header() == "id,verdict,lhs3,lhs4,min_pt_eigenvalue,r1,r2,r3,r4");
  SampleRecord r;
  r.id = 3;
  r.verdict = Verdict::Separable;
  r.spectrum = {0.4, 0.3, 0.2, 0.1};
  const std::string row = io::sample_csv_row(r);
  CHECK(row.rfind("3,Separable,", 0) == 0);
  CHECK(std::count(row.begin(), row.end(), ',') == 8);
}
