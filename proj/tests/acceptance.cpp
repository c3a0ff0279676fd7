// End-to-end acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "eqtor/ellcore.hpp"
#include "eqtor/relcheck.hpp"

using namespace eqtor;

namespace {

struct Outcome {
  bool pass = true;
  double worst = 0.0;
  std::string detail;

  void need(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
  void residual(double r, double tol, const std::string& what) {
    worst = std::max(worst, r);
    need(r < tol, what);
  }
  void reports(const std::vector<RelationReport>& rs, double tol, const std::string& where) {
    for (const auto& r : rs) {
      worst = std::max(worst, r.max_residual);
      need(r.samples > 0, where + " " + r.relation_id + ": no samples");
      need(r.max_residual < tol, where + " " + r.relation_id + ": " + r.worst_case);
      need(r.skipped_fraction() < kMaxSkippedFraction, where + " " + r.relation_id + ": too many skipped samples");
    }
  }
};

cplx random_polar(std::mt19937_64& rng, double rmin, double rmax) {
  std::uniform_real_distribution<double> r(rmin, rmax), a(-M_PI, M_PI);
  return std::polar(r(rng), a(rng));
}

double rel(cplx a, cplx b) { return std::abs(a - b) / (1.0 + std::abs(a)); }

// Worst termwise residual between two delta vectors keyed by label; infinite
// when the key sets or supports differ.
double compare(const DeltaVector& a, const DeltaVector& b) {
  std::map<std::vector<int>, const Term*> ma, mb;
  for (const Term& t : a) ma[t.payload.label] = &t;
  for (const Term& t : b) mb[t.payload.label] = &t;
  if (ma.size() != mb.size()) return INFINITY;
  double worst = 0.0;
  for (const auto& [lab, t] : ma) {
    auto it = mb.find(lab);
    if (it == mb.end() || it->second->supports != t->supports) return INFINITY;
    worst = std::max(worst, rel(t->coeff, it->second->coeff));
  }
  return worst;
}

Outcome special_functions(const Params& P) {
  Outcome o;
  std::mt19937_64 rng(P.seed);
  for (int s = 0; s < 200; ++s) {
    const cplx p = random_polar(rng, 0.01, 0.3), z = random_polar(rng, 0.3, 3.0);
    const cplx lhs = theta(p * z, p, P.trunc_M), rhs = -theta(z, p, P.trunc_M) / z;
    o.residual(std::abs(lhs - rhs) / (1.0 + std::abs(rhs)), 1e-9, "theta quasi-periodicity");
  }
  for (int b = -3; b <= 3; ++b)
    for (int s = 0; s < 30; ++s) {
      const cplx sv = random_polar(rng, 0.01, 0.3), z = random_polar(rng, 0.1, 1.5);
      o.residual(gkernel(z, sv, b, P.q, 60).diff, 1e-9, "gkernel b=" + std::to_string(b));
    }
  long used = 0;
  for (int inst = 0; inst < 50; ++inst) {
    const int n = 1 + inst % 4;
    const cplx p = random_polar(rng, 0.01, 0.3);
    std::vector<cplx> a(n), b(n + 1);
    for (auto& x : a) x = random_polar(rng, 0.5, 2.0);
    for (int s = 0; s < n; ++s) b[s] = random_polar(rng, 0.5, 2.0);
    for (int ts = 0; ts < 10; ++ts) {
      const cplx t = random_polar(rng, 0.5, 2.0);
      cplx prod = t;
      for (auto x : a) prod *= x;
      for (int s = 0; s < n; ++s) prod /= b[s];
      b[n] = prod;
      try {
        const auto r = pf_expand(a, b, t, p, P.trunc_M, 1e-9, P.pole_guard);
        o.residual(std::abs(r.lhs - r.rhs) / (1.0 + std::abs(r.lhs)), 1e-9, "pf n=" + std::to_string(n));
        ++used;
      } catch (const ParamError&) {
      }
    }
  }
  o.need(used >= 400, "pf: fewer than 400 of 500 samples usable");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(used) + " pf samples";
  return o;
}

Outcome fock_suite(const Params& P) {
  Outcome o;
  for (int N : {3, 4, 5})
    for (int k = 0; k < N; ++k) {
      const FockRep F(N, k, P);
      o.reports(run_suite(F, fock_states(F, 6), fock_relation_ids()), 1e-8,
                "N=" + std::to_string(N) + " k=" + std::to_string(k));
    }
  return o;
}

Outcome xpxm_constant(const Params& P) {
  Outcome o;
  for (int k = 0; k < 3; ++k) {
    const FockRep F(3, k, P);
    o.reports({check_xpxm(F, fock_states(F, 6))}, 1e-8, "k=" + std::to_string(k));
  }
  return o;
}

Outcome serre(const Params& P) {
  Outcome o;
  for (int N : {3, 4})
    for (int k = 0; k < N; ++k) {
      const FockRep F(N, k, P);
      o.reports({check_serre(F, +1, fock_states(F, 4))}, 1e-8, "N=" + std::to_string(N) + " k=" + std::to_string(k));
    }
  return o;
}

Outcome row_vs_box(const Params& P) {
  Outcome o;
  std::mt19937_64 rng(P.seed);
  for (int N : {3, 4, 5})
    for (int k = 0; k < N; ++k)
      for (const auto& lam : partitions_up_to(6, N, k)) {
        const std::string at = "N=" + std::to_string(N) + " (" + lam.str() + ")";
        for (Box X : all_addable(lam))
          o.residual(rel(coeff_plus(lam, X, P, Form::Row), coeff_plus(lam, X, P, Form::Box)), 1e-9, "A+ " + at);
        for (Box X : all_removable(lam)) {
          o.residual(rel(coeff_minus(lam, X, P, Form::Row), coeff_minus(lam, X, P, Form::Box)), 1e-9, "A- " + at);
          o.residual(rel(coeff_minus(lam, X, P, Form::Row, N), coeff_minus(lam, X, P, Form::Row)), 1e-12,
                     "A- tail " + at);
        }
        for (int j = 0; j < N; ++j) {
          const auto fb = phi_factors(lam, j, Form::Box), fr = phi_factors(lam, j, Form::Row),
                     fx = phi_factors(lam, j, Form::Row, N);
          for (int t = 0; t < 3; ++t) {
            const cplx z = P.u * random_polar(rng, 0.5, 2.0);
            o.residual(rel(phi_eval(fr, z, P), phi_eval(fb, z, P)), 1e-9, "phi " + at);
            o.residual(rel(phi_eval(fx, z, P), phi_eval(fr, z, P)), 1e-12, "phi tail " + at);
          }
        }
      }
  return o;
}

Outcome tensor(const Params& P) {
  Outcome o;
  std::mt19937_64 rng(P.seed);
  for (int k = 0; k < 3; ++k) {
    const FockRep F(3, k, P);
    for (const auto& lam : partitions_up_to(6, 3, k))
      for (int m : {3, 4, 5}) {
        if (lam.length() > m - 2) continue;
        const std::string at = "m=" + std::to_string(m) + " (" + lam.str() + ")";
        const Basis v = F.basis(lam);
        for (int j = 0; j < 3; ++j) {
          const auto tp = tensor_apply(m, Gen::XPlus, j, lam, P), tm = tensor_apply(m, Gen::XMinus, j, lam, P);
          o.residual(compare(tp.terms, apply_xplus(F, j, v)), 1e-8, "x+ " + at);
          o.residual(compare(tm.terms, apply_xminus(F, j, v)), 1e-8, "x- " + at);
          o.residual(std::max(tp.dropped_max, tm.dropped_max), 1e-8, "non-partition terms " + at);
          const auto tq = tensor_apply(m, Gen::Phi, j, lam, P);
          const cplx z = P.u * random_polar(rng, 0.5, 2.0);
          o.residual(rel(tq.phi.eval(z, P), phi_action(F, j, v).eval(z, P)), 1e-8, "phi " + at);
          if (m < 5) {
            // Independence of the cutoff.
            const auto tp1 = tensor_apply(m + 1, Gen::XPlus, j, lam, P),
                       tm1 = tensor_apply(m + 1, Gen::XMinus, j, lam, P),
                       tq1 = tensor_apply(m + 1, Gen::Phi, j, lam, P);
            o.residual(compare(tp1.terms, tp.terms), 1e-8, "m vs m+1 x+ " + at);
            o.residual(compare(tm1.terms, tm.terms), 1e-8, "m vs m+1 x- " + at);
            o.residual(rel(tq1.phi.eval(z, P), tq.phi.eval(z, P)), 1e-8, "m vs m+1 phi " + at);
          }
        }
      }
  }
  return o;
}

Outcome kappa0(const Params& P) {
  Outcome o;
  for (int N : {3, 4, 5})
    for (int k = 0; k < N; ++k) {
      const FockRep F(N, k, P);
      const auto r = check_kappa0(F, fock_states(F, 8));
      o.reports({r}, 1e-300, "N=" + std::to_string(N) + " k=" + std::to_string(k));
      o.need(r.max_residual == 0.0, "nonzero exponent mismatch");
    }
  return o;
}

Outcome exchange(const Params& P) {
  Outcome o;
  for (const char* tag : {"A2", "D4"})
    o.reports(run_heisenberg_suite(tag, P.with_level(1), 4, 6, heisenberg_relation_ids()), 1e-8, tag);
  return o;
}

Outcome zalgebra(const Params& P) {
  Outcome o;
  const Params P1 = P.with_level(1);
  for (const char* tag : {"A2", "A3", "D4"}) {
    const CartanData cd = cartan_data(tag);
    for (int a : allowed_fundamentals(cd)) {
      const LatticeModule L(cd, a);
      for (int rel = 1; rel <= 5; ++rel)
        o.reports({check_zalgebra(L, rel, P1, 6)}, 1e-8, std::string(tag) + " a=" + std::to_string(a));
    }
  }
  return o;
}

Outcome currents(const Params& P) {
  Outcome o;
  const Params P1 = P.with_level(1);
  const Heisenberg H(cartan_data("A2"), P1);
  for (int a : allowed_fundamentals(H.cartan())) {
    const LatticeModule L(H.cartan(), a);
    const std::string at = "A2 a=" + std::to_string(a);
    for (ModeFamily f : {ModeFamily::Alpha, ModeFamily::AlphaPrime})
      for (int sign : {+1, -1}) o.reports({check_alpha_current(H, L, f, sign, 2, 6)}, 1e-8, at);
    o.reports({check_current_xpxp(H, L, 2, 6)}, 1e-8, at);
    const auto hw = check_highest_weight(H, L, 6);
    o.reports({hw}, 1e-300, at);
    o.need(hw.max_residual == 0.0, at + " highest weight not exact");
  }
  return o;
}

}  // namespace

int main() {
  const Params P;
  const std::vector<std::pair<std::string, std::function<Outcome(const Params&)>>> criteria{
      {"special functions: theta, gkernel branches, partial fractions", special_functions},
      {"Fock relation suite, N = 3, 4, 5, |lambda| <= 6", fock_suite},
      {"[x+, x-] with the C+ C- constant, N = 3", xpxm_constant},
      {"Serre relation, N = 3, 4, |lambda| <= 4", serre},
      {"row form vs box form, tail stability", row_vs_box},
      {"tensor reconstruction, m = 3, 4, 5", tensor},
      {"prod K+ = q^-1, |lambda| <= 8", kappa0},
      {"sixteen exchange relations, A2 and D4, degree 4, window 6", exchange},
      {"Z-algebra relations, A2, A3, D4", zalgebra},
      {"level-one currents on A2 and highest weight", currents},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(P);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    std::printf("criterion %2zu %s  max_residual=%.3e  %.1fs  %s%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", o.worst,
                secs, criteria[i].first.c_str(), o.detail.empty() ? "" : "  | ", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
