#pragma once

#include <string>
#include <vector>

#include "eqtor/report.hpp"
#include "json.hpp"

namespace eqtor::cli {

using json = nlohmann::ordered_json;

json params_json(const Params& P);
// Parses the params object written by params_json; missing fields keep defaults.
Params params_from_json(const json& j);

// {relation_id, params, samples, skipped, max_residual, worst_case, status}.
// status is "pass" iff the report passed and skipped at most a fifth of its samples.
json report_json(const RelationReport& r);
// Inverse of report_json. Throws std::invalid_argument on schema violations.
RelationReport report_from_json(const json& j);

// Array form of a suite run, plus the overall status.
json suite_json(const std::string& suite, const std::vector<RelationReport>& reports);

// Parses "re,im" or a bare real number.
cplx parse_complex(const std::string& s);
json complex_json(cplx z);

}  // namespace eqtor::cli
