#pragma once

// Flat-file formats shared with the command-line tool.
//
// State record, either form accepted, both written:
//   {"rho_re": [[4]x4], "rho_im": [[4]x4]}
//   {"fano": {"a": [3], "b": [3], "C": [[3]x3]}}
// Chart record: {"xyz": [3], "alpha": [3], "beta": [3]}

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "entspace/chart.hpp"
#include "entspace/coeff_table.hpp"
#include "entspace/harness.hpp"
#include "entspace/separability.hpp"

namespace entspace::io {

using json = nlohmann::ordered_json;

/// %.17g
std::string format_double(double v);

/// Serializes like json::dump(2), but floating-point numbers are written
/// with 17 significant digits.
void write_json(std::ostream& os, const json& j);
std::string dump_json(const json& j);

/// Throws InputError on a malformed record; Hermiticity is enforced by
/// HermMat4. If both forms are present the matrix form wins.
HermMat4 parse_state(const json& j);
json state_to_json(const HermMat4& h);

ChartPoint parse_chart(const json& j);
json chart_to_json(const ChartPoint& c);

json report_to_json(const SeparabilityReport& r);
/// field,value rows.
std::string report_to_csv(const SeparabilityReport& r);

json coeff_table_to_json(const CoeffTable& t);
/// monomial,value rows in kQuarticMonomials order; unknown values are empty.
std::string coeff_table_to_csv(const CoeffTable& t);

std::string sample_csv_header();
std::string sample_csv_row(const SampleRecord& r);

json scan_to_json(const ScanSummary& s);
json suite_to_json(const SuiteReport& r);

}  // namespace entspace::io
