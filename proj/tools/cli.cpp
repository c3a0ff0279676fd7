#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "eqtor/ellcore.hpp"
#include "eqtor/relcheck.hpp"
#include "report_json.hpp"

namespace eqtor::cli {

namespace {

// Usage problems that are not about the algebra's parameters.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string cstr(cplx z) { return fmt("%.15g", z.real()) + "," + fmt("%.15g", z.imag()); }

std::string mono_str(Mono m) {
  std::string s = "u";
  if (m.qe != 0) s += " q^" + std::to_string(m.qe);
  if (m.ke != 0) s += " kappa^" + std::to_string(m.ke);
  return s;
}

std::string ivec(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--q", c.q, "q as re,im");
  sub->add_option("--kappa", c.kappa, "kappa as re,im");
  sub->add_option("--p", c.p, "elliptic nome p as re,im");
  sub->add_option("--u", c.u, "spectral parameter u as re,im");
  sub->add_option("--trunc-M", c.trunc_M, "Pochhammer cutoff");
  sub->add_option("--tol", c.tol, "residual tolerance");
  sub->add_option("--pole-guard", c.pole_guard, "theta-zero guard radius");
  sub->add_option("--seed", c.seed, "sampling seed");
  sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag_callback("--json", [&c] { c.format = "json"; }, "same as --format json");
  sub->add_option("--output", c.output, "write to this file instead of stdout");
  sub->add_option("--config", c.config, "JSON config, keys are the long flag names");
}

void add_modules(CLI::App* sub, RunConfig& c) {
  sub->add_option("--type", c.type_tag, "simply-laced type tag, e.g. A2, D4");
  sub->add_option("--N", c.N, "gl_N rank for Fock and vector modules");
  sub->add_option("--k", c.k, "root color");
}

// Fills options the command line left unset from the config file.
void merge_config(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, val] : j.items()) {
    if (key == "config") throw UsageError("config files do not nest");
    CLI::Option* opt = sub->get_option_no_throw(key == "target" ? "target" : "--" + key);
    if (!opt) throw UsageError("unknown config key '" + key + "' for " + sub->get_name());
    if (opt->count() > 0) continue;
    // --json and --format set the same field.
    if ((key == "json" && sub->get_option("--format")->count() > 0) ||
        (key == "format" && sub->get_option("--json")->count() > 0))
      continue;
    std::vector<std::string> vals;
    auto scalar = [&](const json& v) -> std::string {
      if (v.is_string()) return v.get<std::string>();
      if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
      if (v.is_number_integer()) return std::to_string(v.get<long long>());
      if (v.is_number()) return fmt("%.17g", v.get<double>());
      throw UsageError("config value for '" + key + "' has an unsupported type");
    };
    if (val.is_array() && val.size() == 2 && val[0].is_number() && val[1].is_number())
      vals.push_back(scalar(val[0]) + "," + scalar(val[1]));
    else if (val.is_array())
      for (const auto& v : val) vals.push_back(scalar(v));
    else
      vals.push_back(scalar(val));
    if (opt->get_type_size() == 0) {
      // A flag: only `true` triggers it.
      if (vals.size() == 1 && vals[0] == "true") opt->add_result("true");
      else if (!(vals.size() == 1 && vals[0] == "false")) throw UsageError("flag '" + key + "' takes true or false");
      else continue;
    } else {
      for (auto& v : vals) opt->add_result(v);
    }
    opt->run_callback();
  }
}

Params build_params(const RunConfig& c, int level) {
  Params P;
  try {
    if (!c.q.empty()) P.q = parse_complex(c.q);
    if (!c.kappa.empty()) P.kappa = parse_complex(c.kappa);
    if (!c.p.empty()) P.p = parse_complex(c.p);
    if (!c.u.empty()) P.u = parse_complex(c.u);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  P.trunc_M = c.trunc_M;
  P.tol = c.tol;
  P.pole_guard = c.pole_guard;
  P.seed = c.seed;
  P.level_k = level;
  P.validate();
  return P;
}

int level_for(const RunConfig& c, const std::string& suite) {
  const bool level0 = suite == "fock" || suite == "vector";
  if (c.level < 0) return level0 ? 0 : 1;
  if (level0 && c.level != 0) throw ParamError("Fock and vector modules have c = 0; --level must be 0");
  return c.level;
}

void check_gl(const RunConfig& c) {
  if (c.N < 3) throw ParamError("N must be at least 3");
  if (c.k < 0 || c.k >= c.N) throw ParamError("root color k must lie in [0, N)");
}

std::vector<std::string> pick(const std::vector<std::string>& all, const std::vector<std::string>& wanted) {
  if (wanted.empty()) return all;
  for (const auto& w : wanted)
    if (std::find(all.begin(), all.end(), w) == all.end()) throw UsageError("unknown relation id '" + w + "'");
  return wanted;
}

std::vector<RelationReport> run_one(const RunConfig& c, const std::string& suite) {
  const Params P = build_params(c, level_for(c, suite));
  if (suite == "fock") {
    check_gl(c);
    const FockRep F(c.N, c.k, P);
    if (c.max_size < 0) throw UsageError("--max-size must be nonnegative");
    return run_suite(F, fock_states(F, c.max_size), pick(fock_relation_ids(), c.relations));
  }
  if (suite == "vector") {
    check_gl(c);
    const VectorRep V(c.N, c.k, Mono{}, P);
    if (c.range < 0) throw UsageError("--range must be nonnegative");
    return run_suite(V, vector_states(V, c.range), pick(vector_relation_ids(), c.relations));
  }
  if (c.degree < 0 || c.window < 0) throw UsageError("--degree and --window must be nonnegative");
  if (suite == "heisenberg")
    return run_heisenberg_suite(c.type_tag, P, c.degree, c.window, pick(heisenberg_relation_ids(), c.relations));
  Level1Config lc;
  lc.type_tag = c.type_tag;
  lc.a = c.a;
  lc.degree = c.degree;
  lc.current_degree = c.current_degree;
  lc.window = c.window;
  lc.lattice_count = c.lattice_count;
  return run_level1_suite(lc, P, pick(level1_relation_ids(), c.relations));
}

void text_reports(std::ostream& o, const std::string& suite, const std::vector<RelationReport>& rs) {
  for (const auto& r : rs) {
    char line[512];
    std::snprintf(line, sizeof line, "%-22s %s  samples=%ld skipped=%ld max_residual=%.3e  worst: %s\n",
                  r.relation_id.c_str(), suite_passes({r}) ? "PASS" : "FAIL", r.samples, r.skipped, r.max_residual,
                  r.worst_case.c_str());
    o << line;
  }
  o << "suite " << suite << ": " << (suite_passes(rs) ? "PASS" : "FAIL") << " (" << rs.size() << " relations)\n";
}

int cmd_verify(const RunConfig& c, std::ostream& o) {
  const std::vector<std::string> suites =
      c.target == "all" ? std::vector<std::string>{"fock", "vector", "heisenberg", "level1"}
                        : std::vector<std::string>{c.target};
  if (c.target == "all" && !c.relations.empty()) throw UsageError("--relation needs a single suite");
  bool ok = true;
  json all = json::array();
  std::ostringstream text;
  for (const auto& s : suites) {
    const auto rs = run_one(c, s);
    ok = ok && suite_passes(rs);
    if (c.format == "json") all.push_back(suite_json(s, rs));
    else text_reports(text, s, rs);
  }
  if (c.format == "json") {
    if (suites.size() == 1) o << all[0].dump(2) << "\n";
    else {
      json j;
      j["suite"] = "all";
      j["status"] = ok ? "pass" : "fail";
      j["suites"] = all;
      o << j.dump(2) << "\n";
    }
  } else {
    o << text.str();
  }
  return ok ? kExitPass : kExitFail;
}

DynWeight shift(const DynWeight& to, const DynWeight& from) {
  DynWeight d = to;
  for (std::size_t i = 0; i < d.alpha.size(); ++i) d.alpha[i] -= from.alpha[i];
  for (std::size_t i = 0; i < d.rq.size(); ++i) d.rq[i] -= from.rq[i];
  return d;
}

json mono_json(Mono m) { return json{{"q", m.qe}, {"kappa", m.ke}}; }
json weight_json(const DynWeight& w) { return json{{"alpha", w.alpha}, {"rq", w.rq}}; }

int cmd_act(const RunConfig& c, std::ostream& o) {
  check_gl(c);
  if (c.color < 0 || c.color >= c.N) throw ParamError("color must lie in [0, N)");
  const Params P = build_params(c, level_for(c, c.rep));
  std::unique_ptr<Rep> rep;
  Basis v;
  if (c.rep == "fock") {
    auto F = std::make_unique<FockRep>(c.N, c.k, P);
    v = F->basis(parse_partition(c.partition, c.N, c.k));
    rep = std::move(F);
  } else {
    if (!c.partition.empty()) throw UsageError("--partition selects Fock vectors; use --index for the vector module");
    auto V = std::make_unique<VectorRep>(c.N, c.k, Mono{}, P);
    v = V->basis(c.index);
    rep = std::move(V);
  }
  json j;
  j["rep"] = c.rep;
  j["gen"] = c.gen;
  j["color"] = c.color;
  j["basis"] = rep->label_str(v);
  std::ostringstream t;
  t << rep->name() << " " << rep->label_str(v) << ", " << c.gen << "_" << c.color << "\n";
  if (c.gen == "phi") {
    const PhiAction a = rep->phi(c.color, v);
    j["factors"] = json::array();
    for (const PhiFactor& f : a.factors) {
      j["factors"].push_back(json{{"qpow", f.qpow}, {"numer", mono_json(f.numer)}, {"denom", mono_json(f.denom)}});
      t << "  q^" << f.qpow << " theta(" << mono_str(f.numer) << "/z) / theta(" << mono_str(f.denom) << "/z)\n";
    }
    j["kplus_exponent"] = a.kplus_exponent();
    j["weight_shift"] = weight_json(a.weight_shift);
    t << "  K+ = q^" << a.kplus_exponent() << "  weight shift alpha=" << ivec(a.weight_shift.alpha)
      << " rq=" << ivec(a.weight_shift.rq) << "\n";
  } else {
    const DeltaVector terms = rep->apply_x(c.gen == "x+" ? +1 : -1, c.color, v);
    j["terms"] = json::array();
    t << "  support | coefficient (re, im) | result | weight shift\n";
    for (const Term& term : terms) {
      const Mono m = term.supports.at(0);
      const DynWeight d = shift(term.payload.wt, v.wt);
      j["terms"].push_back(json{{"support", {{"mono", mono_json(m)}, {"value", complex_json(P.support(m))}}},
                                {"coeff", complex_json(term.coeff)},
                                {"result", rep->label_str(term.payload)},
                                {"weight_shift", weight_json(d)}});
      t << "  " << mono_str(m) << " = " << cstr(P.support(m)) << " | " << cstr(term.coeff) << " | "
        << rep->label_str(term.payload) << " | alpha=" << ivec(d.alpha) << " rq=" << ivec(d.rq) << "\n";
    }
    if (terms.empty()) t << "  (no terms)\n";
  }
  o << (c.format == "json" ? j.dump(2) + "\n" : t.str());
  return kExitPass;
}

cplx need(const std::string& s, const char* what) {
  if (s.empty()) throw UsageError(std::string("missing --") + what);
  try {
    return parse_complex(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

cplx opt_or(const std::string& s, cplx dflt) { return s.empty() ? dflt : need(s, "value"); }

int cmd_expand(const RunConfig& c, std::ostream& o) {
  const Params P = build_params(c, 0);
  const int M = P.trunc_M;
  json j;
  j["function"] = c.target;
  std::ostringstream t;
  int code = kExitPass;
  if (c.target == "theta") {
    const cplx z = need(c.z, "z");
    if (z == 0.0) throw ParamError("theta: z must be nonzero");
    const cplx v = theta(z, P.p, M);
    j["z"] = complex_json(z);
    j["p"] = complex_json(P.p);
    j["value"] = complex_json(v);
    t << "theta(" << cstr(z) << "; p) = " << cstr(v) << "\n";
    if (c.check) {
      const cplx a = theta(P.p * z, P.p, M), b = -theta(z, P.p, M) / z;
      const double d = std::abs(a - b) / (1.0 + std::abs(b));
      j["check"] = json{{"theta_pz", complex_json(a)}, {"minus_theta_z_over_z", complex_json(b)}, {"diff", d}};
      t << "theta(p z) = " << cstr(a) << "\n-theta(z)/z = " << cstr(b) << "\ndiff = " << fmt("%.3e", d) << "\n";
      if (!(d < P.tol)) code = kExitFail;
    }
  } else if (c.target == "qpoch") {
    const cplx z = need(c.z, "z"), s = opt_or(c.s, P.p);
    const cplx v = qpoch(z, s, M);
    j["z"] = complex_json(z);
    j["s"] = complex_json(s);
    j["value"] = complex_json(v);
    t << "(" << cstr(z) << "; s) = " << cstr(v) << "\n";
    if (c.check) {
      // Cutoff M against 2M.
      const cplx w = qpoch(z, s, 2 * M);
      const double d = std::abs(v - w) / (1.0 + std::abs(w));
      j["check"] = json{{"value_2M", complex_json(w)}, {"diff", d}};
      t << "cutoff 2M = " << cstr(w) << "\ndiff = " << fmt("%.3e", d) << "\n";
      if (!(d < P.tol)) code = kExitFail;
    }
  } else if (c.target == "gkernel") {
    const cplx z = need(c.z.empty() ? std::string("0.5,0.2") : c.z, "z"), s = opt_or(c.s, P.p);
    const double qb = std::pow(std::abs(P.q), std::abs(c.b));
    const double r = std::abs(s * z) * std::max(qb, 1.0 / qb);
    if (!(std::abs(s) < 1.0)) throw ParamError("gkernel: |s| must be < 1");
    if (!(r < 1.0)) throw ParamError("gkernel: the series branch diverges, need |s z| max(|q|^b, |q|^-b) < 1");
    const GKernel g = gkernel(z, s, c.b, P.q, M);
    j["z"] = complex_json(z);
    j["s"] = complex_json(s);
    j["b"] = c.b;
    j["closed"] = complex_json(g.closed);
    t << "g(z; s) closed = " << cstr(g.closed) << "\n";
    if (c.check) {
      j["series"] = complex_json(g.series);
      j["diff"] = g.diff;
      t << "g(z; s) series = " << cstr(g.series) << "\ndiff = " << fmt("%.3e", g.diff) << "\n";
      if (!(g.diff < P.tol)) code = kExitFail;
    }
  } else if (c.target == "pochratio") {
    const cplx a = need(c.num, "num"), b = need(c.den, "den"), s = opt_or(c.s, P.p);
    if (c.order < 0) throw ParamError("pochratio: negative order");
    const auto cs = pochratio_series(a, b, s, c.order);
    j["num"] = complex_json(a);
    j["den"] = complex_json(b);
    j["s"] = complex_json(s);
    j["coefficients"] = json::array();
    for (std::size_t n = 0; n < cs.size(); ++n) {
      j["coefficients"].push_back(complex_json(cs[n]));
      t << "c_" << n << " = " << cstr(cs[n]) << "\n";
    }
    if (c.check) {
      // Truncated series at xi against the closed ratio; the gap is the tail.
      const cplx xi = need(c.xi, "xi");
      cplx acc = 0.0, xn = 1.0;
      for (const cplx& cn : cs) {
        acc += cn * xn;
        xn *= xi;
      }
      const cplx closed = qpoch(a * xi, s, M) / qpoch(b * xi, s, M);
      const double d = std::abs(acc - closed) / (1.0 + std::abs(closed));
      j["check"] = json{{"xi", complex_json(xi)}, {"series", complex_json(acc)}, {"closed", complex_json(closed)},
                        {"diff", d}};
      t << "at xi = " << cstr(xi) << ": series " << cstr(acc) << ", closed " << cstr(closed)
        << ", diff = " << fmt("%.3e", d) << "\n";
    }
  } else if (c.target == "pf") {
    if (c.n < 1) throw ParamError("pf: n must be at least 1");
    if (c.samples < 1 || c.instances < 1) throw ParamError("pf: samples and instances must be positive");
    std::mt19937_64 rng(P.seed);
    std::uniform_real_distribution<double> rad(0.5, 2.0), ang(-M_PI, M_PI);
    auto pt = [&] { return std::polar(rad(rng), ang(rng)); };
    double worst = 0.0;
    long used = 0, skipped = 0;
    for (int inst = 0; inst < c.instances; ++inst) {
      std::vector<cplx> a(c.n), b(c.n + 1);
      for (auto& x : a) x = pt();
      for (int s = 0; s < c.n; ++s) b[s] = pt();
      for (int ts = 0; ts < c.samples; ++ts) {
        const cplx tv = pt();
        cplx prod = tv;
        for (auto x : a) prod *= x;
        for (int s = 0; s < c.n; ++s) prod /= b[s];
        b[c.n] = prod;
        try {
          const auto r = pf_expand(a, b, tv, P.p, M, 1e-9, P.pole_guard);
          worst = std::max(worst, std::abs(r.lhs - r.rhs) / (1.0 + std::abs(r.lhs)));
          ++used;
        } catch (const ParamError&) {
          ++skipped;
        }
      }
    }
    j["n"] = c.n;
    j["instances"] = c.instances;
    j["samples"] = used;
    j["skipped"] = skipped;
    j["max_residual"] = worst;
    t << "pf n=" << c.n << ": " << used << " samples, " << skipped << " skipped, max residual "
      << fmt("%.3e", worst) << "\n";
    if (!(worst < P.tol) || used == 0) code = kExitFail;
  }
  o << (c.format == "json" ? j.dump(2) + "\n" : t.str());
  return code;
}

void collect(const json& j, std::vector<std::pair<std::string, RelationReport>>& out, const std::string& suite) {
  if (j.is_array()) {
    for (const auto& e : j) collect(e, out, suite);
  } else if (j.is_object() && j.contains("suites")) {
    collect(j.at("suites"), out, suite);
  } else if (j.is_object() && j.contains("reports")) {
    const std::string s = j.contains("suite") && j["suite"].is_string() ? j["suite"].get<std::string>() : suite;
    collect(j.at("reports"), out, s);
  } else {
    out.emplace_back(suite, report_from_json(j));
  }
}

int cmd_report(const RunConfig& c, std::ostream& o) {
  if (c.inputs.empty()) throw UsageError("report needs at least one JSON file");
  std::vector<std::pair<std::string, RelationReport>> rs;
  for (const auto& path : c.inputs) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    try {
      collect(json::parse(in), rs, "");
    } catch (const json::exception& e) {
      throw UsageError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(path + ": " + e.what());
    }
  }
  std::vector<RelationReport> plain;
  for (auto& [s, r] : rs) plain.push_back(r);
  const bool ok = suite_passes(plain);
  if (c.format == "json") {
    o << suite_json("report", plain).dump(2) << "\n";
  } else {
    text_reports(o, "report", plain);
  }
  return ok ? kExitPass : kExitFail;
}

void check_threads_env() {
  if (const char* e = std::getenv("EQTOR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(e, &end, 10);
    if (end == e || *end != '\0' || v < 1) throw UsageError("EQTOR_THREADS must be a positive integer");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Elliptic quantum toroidal algebra: representations and relation checks", "eqtor"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "run a relation suite");
  verify->add_option("target", c.target, "fock | vector | heisenberg | level1 | all")
      ->check(CLI::IsMember({"fock", "vector", "heisenberg", "level1", "all"}));
  add_modules(verify, c);
  verify->add_option("--a", c.a, "fundamental weight index for level1");
  verify->add_option("--level", c.level, "level k (c = k)");
  verify->add_option("--degree", c.degree, "boson degree bound");
  verify->add_option("--current-degree", c.current_degree, "boson degree bound for full-current checks");
  verify->add_option("--window", c.window, "mode window |n| <= W");
  verify->add_option("--max-size", c.max_size, "largest partition size for the Fock suite");
  verify->add_option("--range", c.range, "basis range [-R, R] for the vector suite");
  verify->add_option("--lattice-count", c.lattice_count, "lattice vectors sampled per level-one check");
  verify->add_option("--relation", c.relations, "restrict to these relation ids");
  add_common(verify, c);

  CLI::App* act = app.add_subcommand("act", "print a generator action on a basis vector");
  act->add_option("--rep", c.rep, "fock or vector")->check(CLI::IsMember({"fock", "vector"}));
  act->add_option("--gen", c.gen, "x+, x- or phi")->check(CLI::IsMember({"x+", "x-", "phi"}));
  act->add_option("--color", c.color, "generator color");
  act->add_option("--partition", c.partition, "Fock basis vector as parts, e.g. 3,1,1");
  act->add_option("--index", c.index, "vector-module basis index j");
  act->add_option("--level", c.level, "level k, must be 0");
  add_modules(act, c);
  add_common(act, c);

  CLI::App* expand = app.add_subcommand("expand", "evaluate special functions");
  expand->add_option("target", c.target, "theta | qpoch | gkernel | pochratio | pf")
      ->check(CLI::IsMember({"theta", "qpoch", "gkernel", "pochratio", "pf"}));
  expand->add_option("--z", c.z, "argument as re,im");
  expand->add_option("--s", c.s, "nome of the Pochhammer symbols (default p)");
  expand->add_option("--b", c.b, "gkernel exponent b");
  expand->add_option("--num", c.num, "pochratio numerator a in (a xi; s)/(b xi; s)");
  expand->add_option("--den", c.den, "pochratio denominator b");
  expand->add_option("--order", c.order, "pochratio series order");
  expand->add_option("--xi", c.xi, "pochratio check point");
  expand->add_option("--n", c.n, "number of poles for pf");
  expand->add_option("--samples", c.samples, "t-samples per pf instance");
  expand->add_option("--instances", c.instances, "seeded pf instances");
  expand->add_flag("--check", c.check, "print both branches and their discrepancy");
  add_common(expand, c);

  CLI::App* report = app.add_subcommand("report", "summarise JSON reports written by verify --json");
  report->add_option("inputs", c.inputs, "report files");
  add_common(report, c);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  c.command = sub->get_name();
  try {
    if (!c.config.empty()) merge_config(sub, c.config);
    check_threads_env();
    if ((c.command == "verify" || c.command == "expand") && c.target.empty())
      throw UsageError(c.command + " needs a target");
    if (c.command == "verify" && !CLI::IsMember({"fock", "vector", "heisenberg", "level1", "all"})(c.target).empty())
      throw UsageError("unknown suite " + c.target);
    if (c.format != "text" && c.format != "json") throw UsageError("--format must be text or json");

    std::ostringstream buf;
    int code = kExitPass;
    if (c.command == "verify") code = cmd_verify(c, buf);
    else if (c.command == "act") code = cmd_act(c, buf);
    else if (c.command == "expand") code = cmd_expand(c, buf);
    else code = cmd_report(c, buf);

    if (c.output.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(c.output, std::ios::binary);
      if (!f) throw UsageError("cannot write " + c.output);
      f << buf.str();
    }
    return code;
  } catch (const CLI::ParseError& e) {
    err << "eqtor: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {  // ParamError and UsageError
    err << "eqtor: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "eqtor: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace eqtor::cli
