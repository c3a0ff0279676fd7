#include "report_json.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "eqtor/relcheck.hpp"

namespace eqtor::cli {

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

namespace {

cplx complex_from(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument(std::string(what) + " must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field ") + key);
  return j.at(key).get<T>();
}

}  // namespace

json params_json(const Params& P) {
  json j;
  j["q"] = complex_json(P.q);
  j["kappa"] = complex_json(P.kappa);
  j["p"] = complex_json(P.p);
  j["u"] = complex_json(P.u);
  j["level_k"] = P.level_k;
  j["trunc_M"] = P.trunc_M;
  j["tol"] = P.tol;
  j["pole_guard"] = P.pole_guard;
  j["seed"] = P.seed;
  return j;
}

Params params_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("params must be an object");
  Params P;
  if (j.contains("q")) P.q = complex_from(j["q"], "q");
  if (j.contains("kappa")) P.kappa = complex_from(j["kappa"], "kappa");
  if (j.contains("p")) P.p = complex_from(j["p"], "p");
  if (j.contains("u")) P.u = complex_from(j["u"], "u");
  if (j.contains("level_k")) P.level_k = j["level_k"].get<int>();
  if (j.contains("trunc_M")) P.trunc_M = j["trunc_M"].get<int>();
  if (j.contains("tol")) P.tol = j["tol"].get<double>();
  if (j.contains("pole_guard")) P.pole_guard = j["pole_guard"].get<double>();
  if (j.contains("seed")) P.seed = j["seed"].get<std::uint64_t>();
  return P;
}

json report_json(const RelationReport& r) {
  json j;
  j["relation_id"] = r.relation_id;
  j["params"] = params_json(r.params);
  j["samples"] = r.samples;
  j["skipped"] = r.skipped;
  j["max_residual"] = r.max_residual;
  j["worst_case"] = r.worst_case;
  j["status"] = suite_passes({r}) ? "pass" : "fail";
  return j;
}

RelationReport report_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("report must be an object");
  try {
    RelationReport r;
    r.relation_id = field<std::string>(j, "relation_id");
    r.params = params_from_json(j.at("params"));
    r.samples = field<long>(j, "samples");
    r.skipped = field<long>(j, "skipped");
    // Infinite residuals are written as null.
    const json& mr = j.at("max_residual");
    r.max_residual = mr.is_null() ? std::numeric_limits<double>::infinity() : mr.get<double>();
    r.worst_case = field<std::string>(j, "worst_case");
    const std::string status = field<std::string>(j, "status");
    if (status != "pass" && status != "fail") throw std::invalid_argument("status must be pass or fail");
    r.pass = status == "pass";
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

json suite_json(const std::string& suite, const std::vector<RelationReport>& reports) {
  json j;
  j["suite"] = suite;
  j["status"] = suite_passes(reports) ? "pass" : "fail";
  j["reports"] = json::array();
  for (const auto& r : reports) j["reports"].push_back(report_json(r));
  return j;
}

cplx parse_complex(const std::string& s) {
  auto number = [&](const std::string& t) {
    const char* b = t.c_str();
    char* end = nullptr;
    const double v = std::strtod(b, &end);
    if (t.empty() || end == b || *end != '\0') throw std::invalid_argument("not a number: '" + t + "'");
    return v;
  };
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {number(s), 0.0};
  return {number(s.substr(0, comma)), number(s.substr(comma + 1))};
}

}  // namespace eqtor::cli
