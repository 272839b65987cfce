#include "entspace/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "entspace/errors.hpp"

namespace entspace::io {

namespace {

void write_string(std::ostream& os, const std::string& s) { os << json(s).dump(); }

void write_value(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << inner;
        write_string(os, it.key());
        os << ": ";
        write_value(os, it.value(), indent + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
      if (flat) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write_value(os, j[i], indent + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << inner;
        write_value(os, j[i], indent + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case json::value_t::number_float:
      if (std::isfinite(j.get<double>()))
        os << format_double(j.get<double>());
      else
        os << "null";
      return;
    default:
      os << j.dump();
      return;
  }
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(std::string(what) + ": non-finite number");
  return v;
}

std::array<double, 3> triple(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) throw InputError(std::string(what) + ": expected 3 numbers");
  return {number(j[0], what), number(j[1], what), number(j[2], what)};
}

template <std::size_t N>
std::array<std::array<double, N>, N> square(const json& j, const char* what) {
  if (!j.is_array() || j.size() != N)
    throw InputError(std::string(what) + ": expected " + std::to_string(N) + " rows");
  std::array<std::array<double, N>, N> m{};
  for (std::size_t r = 0; r < N; ++r) {
    if (!j[r].is_array() || j[r].size() != N)
      throw InputError(std::string(what) + ": row " + std::to_string(r) + " must have " +
                       std::to_string(N) + " entries");
    for (std::size_t c = 0; c < N; ++c) m[r][c] = number(j[r][c], what);
  }
  return m;
}

json vec_json(const std::array<double, 3>& v) { return json::array({v[0], v[1], v[2]}); }

json mat3_json(const Mat3& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(vec_json(row));
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_json(std::ostream& os, const json& j) {
  write_value(os, j, 0);
  os << "\n";
}

std::string dump_json(const json& j) {
  std::ostringstream os;
  write_json(os, j);
  return os.str();
}

HermMat4 parse_state(const json& j) {
  if (!j.is_object()) throw InputError("state record must be a JSON object");
  if (j.contains("rho_re")) {
    const auto re = square<4>(j.at("rho_re"), "rho_re");
    std::array<std::array<double, 4>, 4> im{};
    if (j.contains("rho_im")) im = square<4>(j.at("rho_im"), "rho_im");
    Mat4 m;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = Complex(re[r][c], im[r][c]);
    try {
      return HermMat4(m);
    } catch (const DomainError& e) {
      throw InputError(e.what());
    }
  }
  if (j.contains("fano")) {
    const json& f = j.at("fano");
    if (!f.is_object()) throw InputError("fano: expected an object");
    for (const char* key : {"a", "b", "C"})
      if (!f.contains(key)) throw InputError(std::string("fano is missing \"") + key + "\"");
    FanoState st;
    st.a = triple(f.at("a"), "fano.a");
    st.b = triple(f.at("b"), "fano.b");
    st.c = square<3>(f.at("C"), "fano.C");
    return from_fano(st);
  }
  throw InputError("state record needs \"rho_re\"/\"rho_im\" or \"fano\"");
}

json state_to_json(const HermMat4& h) {
  json re = json::array(), im = json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    json rr = json::array(), ri = json::array();
    for (std::size_t c = 0; c < 4; ++c) {
      rr.push_back(h(r, c).real());
      ri.push_back(h(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  const FanoState f = to_fano(h);
  return json{{"rho_re", re},
              {"rho_im", im},
              {"fano", {{"a", vec_json(f.a)}, {"b", vec_json(f.b)}, {"C", mat3_json(f.c)}}}};
}

ChartPoint parse_chart(const json& j) {
  if (!j.is_object()) throw InputError("chart record must be a JSON object");
  for (const char* key : {"xyz", "alpha", "beta"})
    if (!j.contains(key)) throw InputError(std::string("chart record is missing \"") + key + "\"");
  const auto s = triple(j.at("xyz"), "xyz");
  return {{s[0], s[1], s[2]}, {triple(j.at("alpha"), "alpha")}, {triple(j.at("beta"), "beta")}};
}

json chart_to_json(const ChartPoint& c) {
  return json{{"xyz", json::array({c.s.x, c.s.y, c.s.z})},
              {"alpha", vec_json(c.alpha.c)},
              {"beta", vec_json(c.beta.c)}};
}

json report_to_json(const SeparabilityReport& r) {
  return json{{"s2_pt", r.s2_pt}, {"s3_pt", r.s3_pt}, {"s4_pt", r.s4_pt},
              {"det_c", r.det_c}, {"det_m", r.det_m}, {"c112", r.c112},
              {"lhs3", r.lhs3},   {"lhs4", r.lhs4},   {"verdict", std::string(to_string(r.verdict))}};
}

std::string report_to_csv(const SeparabilityReport& r) {
  std::ostringstream os;
  os << "field,value\n";
  const std::pair<const char*, double> rows[] = {
      {"s2_pt", r.s2_pt}, {"s3_pt", r.s3_pt}, {"s4_pt", r.s4_pt}, {"det_c", r.det_c},
      {"det_m", r.det_m}, {"c112", r.c112},   {"lhs3", r.lhs3},   {"lhs4", r.lhs4}};
  for (const auto& [k, v] : rows) os << k << "," << format_double(v) << "\n";
  os << "verdict," << to_string(r.verdict) << "\n";
  return os.str();
}

json coeff_table_to_json(const CoeffTable& t) {
  json coeffs = json::object();
  for (std::size_t k = 0; k < kQuarticMonomials.size(); ++k) {
    const auto label = monomial_label(kQuarticMonomials[k]);
    coeffs[label] = t.values[k] ? json(*t.values[k]) : json(nullptr);
  }
  json out{{"provenance", t.provenance == Provenance::Fitted ? "fitted" : "closed-form"},
           {"coefficients", coeffs}};
  if (t.provenance == Provenance::Fitted) out["residual"] = t.residual;
  return out;
}

std::string coeff_table_to_csv(const CoeffTable& t) {
  std::ostringstream os;
  os << "monomial,value\n";
  for (std::size_t k = 0; k < kQuarticMonomials.size(); ++k) {
    os << monomial_label(kQuarticMonomials[k]) << ",";
    if (t.values[k]) os << format_double(*t.values[k]);
    os << "\n";
  }
  return os.str();
}

std::string sample_csv_header() {
  return "id,verdict,lhs3,lhs4,min_pt_eigenvalue,r1,r2,r3,r4";
}

std::string sample_csv_row(const SampleRecord& r) {
  std::ostringstream os;
  os << r.id << "," << to_string(r.verdict) << "," << format_double(r.lhs3) << ","
     << format_double(r.lhs4) << "," << format_double(r.min_pt_eigenvalue);
  for (double v : r.spectrum) os << "," << format_double(v);
  return os.str();
}

json scan_to_json(const ScanSummary& s) {
  return json{{"ensemble", to_string(s.ensemble)},
              {"seed", s.seed},
              {"samples", s.samples},
              {"tol", s.tol},
              {"separable", s.separable},
              {"entangled", s.entangled},
              {"boundary", s.boundary},
              {"fraction", s.fraction()},
              {"error_bar", s.error_bar()},
              {"oracle_separable", s.oracle_separable},
              {"oracle_fraction", s.oracle_fraction()},
              {"decided_fraction", s.decided_fraction()},
              {"decided_oracle_fraction", s.decided_oracle_fraction()},
              {"mismatches", s.mismatches},
              {"inequality_violations",
               {{"lhs3_below_0", s.lhs3_below},
                {"lhs3_above_1_16", s.lhs3_above},
                {"lhs4_below_0", s.lhs4_below},
                {"lhs4_above_1_256", s.lhs4_above}}}};
}

json suite_to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(json{{"name", c.name},
                          {"group", c.group},
                          {"samples", c.samples},
                          {"max_residual", c.max_residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass},
                          {"detail", c.detail}});
  }
  return json{{"suite", to_string(r.suite)},
              {"seed", r.seed},
              {"samples", r.samples},
              {"tol", r.tol},
              {"checks", checks},
              {"pass", r.all_pass()}};
}

}  // namespace entspace::io
