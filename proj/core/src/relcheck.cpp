#include "eqtor/relcheck.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "eqtor/ellcore.hpp"
#include "eqtor/parallel.hpp"

namespace eqtor {

namespace {

struct Op {
  int sign;
  int color;
  int var;
};

struct Key {
  Basis b;
  std::vector<Mono> s;
  friend auto operator<=>(const Key&, const Key&) = default;
  friend bool operator==(const Key&, const Key&) = default;
};
using Terms = std::map<Key, cplx>;

// A word of currents written left to right; the rightmost acts first.
Terms apply_ops(const Rep& rep, const std::vector<Op>& word, const Basis& v, int nvars) {
  std::vector<std::pair<Key, cplx>> cur{{Key{v, std::vector<Mono>(nvars)}, cplx(1.0)}};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::vector<std::pair<Key, cplx>> next;
    for (const auto& [k, c] : cur)
      for (const Term& t : rep.apply_x(it->sign, it->color, k.b)) {
        Key k2{t.payload, k.s};
        k2.s[it->var] = t.supports.at(0);
        next.emplace_back(std::move(k2), c * t.coeff);
      }
    cur = std::move(next);
  }
  Terms out;
  for (auto& [k, c] : cur) out[k] += c;
  return out;
}

std::string supports_str(const std::vector<Mono>& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t t = 0; t < s.size(); ++t) os << (t ? "," : "") << "u q^" << s[t].qe << " k^" << s[t].ke;
  os << "]";
  return os.str();
}

// Key by key against the union of both maps.
void compare_terms(RelationReport& rep, const Terms& L, const Terms& R, const Rep& M, const std::string& tag) {
  std::map<Key, std::pair<cplx, cplx>> both;
  for (const auto& [k, c] : L) both[k].first += c;
  for (const auto& [k, c] : R) both[k].second += c;
  for (const auto& [k, lr] : both)
    rep.record_with(std::abs(lr.first - lr.second) / (1.0 + std::abs(lr.first)), [&] {
      return tag + " -> " + M.label_str(k.b) + " at " + supports_str(k.s);
    });
}

// theta_s at an exact monomial argument; exactly zero at 1. near is raised
// when the argument lies within the pole guard of s^Z without being 1.
cplx theta_at(Mono X, cplx s, const Params& P, bool& near) {
  if (X == Mono{}) return 0.0;
  const cplx x = P.mono(X);
  if (near_theta_zero(x, s, P.pole_guard)) near = true;
  return theta(x, s, P.trunc_M);
}

std::string state_tag(const Rep& rep, const Basis& v, int i, int j) {
  std::ostringstream os;
  os << rep.label_str(v) << " i=" << i << " j=" << j;
  return os.str();
}

// Per-state parallel loop with deterministic merge.
template <class F>
RelationReport per_state(const std::string& id, const Rep& rep, const std::vector<Basis>& states, F&& body) {
  RelationReport out;
  out.relation_id = id;
  out.params = rep.params();
  std::vector<RelationReport> parts(states.size());
  parallel_for(states.size(), [&](std::size_t idx) { body(parts[idx], states[idx], idx); });
  for (const auto& p : parts) out.merge(p);
  out.finalize(rep.params().tol);
  return out;
}

cplx gfun(Mono X, int b, const Params& P) {
  // (p q^b X; p) / (p q^-b X; p)
  const cplx x = P.mono(X);
  return qpoch(P.p * ipow(P.q, b) * x, P.p, P.trunc_M) / qpoch(P.p * ipow(P.q, -b) * x, P.p, P.trunc_M);
}

bool phi_near_pole(const PhiAction& a, cplx z, const Params& P) {
  for (const PhiFactor& f : a.factors)
    if (near_theta_zero(P.support(f.numer) / z, P.p, P.pole_guard) ||
        near_theta_zero(P.support(f.denom) / z, P.p, P.pole_guard))
      return true;
  return false;
}

}  // namespace

RelationReport check_quadratic(const Rep& rep, int sign, int i, int j, const std::vector<Basis>& states) {
  const Params& P = rep.params();
  const CartanData& cd = rep.cartan();
  const int b = cd.b(i, j), m = cd.m(i, j);
  const cplx s = sign > 0 ? P.pstar() : P.p;
  return per_state(sign > 0 ? "xpxp" : "xmxm", rep, states, [&](RelationReport& r, const Basis& v, std::size_t) {
    const Terms A = apply_ops(rep, {{sign, i, 0}, {sign, j, 1}}, v, 2);
    const Terms B = apply_ops(rep, {{sign, j, 1}, {sign, i, 0}}, v, 2);
    Terms L, R;
    for (const auto& [k, c] : A) {
      bool near = false;
      const cplx th = theta_at(Mono{sign * b, -m} * k.s[1] / k.s[0], s, P, near);
      if (near) {
        ++r.skipped;
        continue;
      }
      L[k] += P.support(k.s[0]) * th * c;
    }
    for (const auto& [k, c] : B) {
      bool near = false;
      const cplx th = theta_at(Mono{sign * b, m} * k.s[0] / k.s[1], s, P, near);
      if (near) {
        ++r.skipped;
        continue;
      }
      R[k] += -P.support(k.s[1]) * ipow(P.kappa, -m) * th * c;
    }
    compare_terms(r, L, R, rep, state_tag(rep, v, i, j));
  });
}

RelationReport check_quadratic(const Rep& rep, int sign, const std::vector<Basis>& states) {
  const int n = rep.cartan().n_nodes;
  RelationReport out;
  out.relation_id = sign > 0 ? "xpxp" : "xmxm";
  out.params = rep.params();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.merge(check_quadratic(rep, sign, i, j, states));
  out.finalize(rep.params().tol);
  return out;
}

RelationReport check_xpxm(const Rep& rep, const std::vector<Basis>& states, CcNorm norm) {
  const Params& P = rep.params();
  const int n = rep.cartan().n_nodes;
  const cplx q = P.q;
  cplx scale = 1.0;
  if (norm == CcNorm::Cubic) {
    const cplx pp = qpoch(P.p, P.p, P.trunc_M);
    scale = q / (q - 1.0 / q) * theta(1.0 / (q * q), P.p, P.trunc_M) / (pp * pp * pp) / (c_plus(P) * c_minus(P));
  }
  auto out = per_state("xpxm", rep, states, [&](RelationReport& r, const Basis& v, std::size_t) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Terms L = apply_ops(rep, {{+1, i, 0}, {-1, j, 1}}, v, 2);
        for (const auto& [k, c] : apply_ops(rep, {{-1, j, 1}, {+1, i, 0}}, v, 2)) L[k] -= c;
        for (auto& kv : L) kv.second *= scale;
        Terms R;
        if (i == j) {
          const PhiAction phi = rep.phi(i, v);
          Basis w = v;
          w.wt += phi.weight_shift;
          try {
            for (const DeltaResidue& d : phi_delta_difference(phi.spec(P), P)) {
              const Mono at = phi.factors.at(d.index).denom;
              R[Key{w, {at, at}}] += d.coeff / (q - 1.0 / q);
            }
          } catch (const ParamError&) {
            ++r.skipped;
            continue;
          }
        }
        compare_terms(r, L, R, rep, state_tag(rep, v, i, j));
      }
  });
  if (norm == CcNorm::Cubic) out.relation_id = "xpxm_cubic_cc";
  return out;
}

RelationReport check_phi_x(const Rep& rep, int sign, const std::vector<Basis>& states, int zsamples) {
  const Params& P = rep.params();
  const CartanData& cd = rep.cartan();
  const int n = cd.n_nodes;
  return per_state(sign > 0 ? "phixp" : "phixm", rep, states, [&](RelationReport& r, const Basis& v, std::size_t idx) {
    std::mt19937_64 rng(P.seed + 977 * idx + (sign > 0 ? 0 : 1));
    std::uniform_real_distribution<double> rad(0.5, 2.0), ph(-M_PI, M_PI);
    for (int j = 0; j < n; ++j) {
      const DeltaVector xs = rep.apply_x(sign, j, v);
      for (int i = 0; i < n; ++i) {
        const int b = sign * cd.b(i, j), m = cd.m(i, j);
        const PhiAction before = rep.phi(i, v);
        for (const Term& t : xs) {
          const PhiAction after = rep.phi(i, t.payload);
          const cplx w = P.support(t.supports[0]);
          for (int s = 0; s < zsamples; ++s) {
            const cplx z = P.u * std::polar(rad(rng), ph(rng));
            const cplx x = w / z;
            const cplx xn = ipow(P.q, -b) * ipow(P.kappa, -m) * x, xd = ipow(P.q, b) * ipow(P.kappa, -m) * x;
            if (phi_near_pole(before, z, P) || phi_near_pole(after, z, P) ||
                near_theta_zero(xn, P.p, P.pole_guard) || near_theta_zero(xd, P.p, P.pole_guard)) {
              ++r.skipped;
              continue;
            }
            const cplx lhs = after.eval(z, P) / before.eval(z, P);
            const cplx rhs = ipow(P.q, b) * theta(xn, P.p, P.trunc_M) / theta(xd, P.p, P.trunc_M);
            r.record_with(std::abs(lhs - rhs) / (1.0 + std::abs(lhs)), [&] {
              std::ostringstream os;
              os << state_tag(rep, v, i, j) << " -> " << rep.label_str(t.payload) << " z=" << z;
              return os.str();
            });
          }
        }
      }
    }
  });
}

namespace {

// Both phi-phi multipliers as written, at x = w/z, central charge c.
cplx phiphi_multiplier(bool pm, int b, int m, int c, cplx x, const Params& P) {
  const cplx s = P.p, ss = P.p * ipow(P.q, -2 * c);
  const cplx base = ipow(P.kappa, -m) * x;
  const cplx sh1 = pm ? ipow(P.q, c) : cplx(1.0), sh2 = pm ? ipow(P.q, -c) : cplx(1.0);
  const int M = P.trunc_M;
  return theta(ipow(P.q, b) * base * sh1, s, M) / theta(ipow(P.q, -b) * base * sh1, s, M) *
         theta(ipow(P.q, -b) * base * sh2, ss, M) / theta(ipow(P.q, b) * base * sh2, ss, M);
}

}  // namespace

RelationReport check_phi_phi(const Rep& rep, bool plus_minus, int samples) {
  const Params& P = rep.params();
  const CartanData& cd = rep.cartan();
  RelationReport out;
  out.relation_id = plus_minus ? "phiphi_pm" : "phiphi_pp";
  out.params = P;
  std::mt19937_64 rng(P.seed + (plus_minus ? 31 : 17));
  std::uniform_real_distribution<double> rad(0.5, 2.0), ph(-M_PI, M_PI);
  for (int i = 0; i < cd.n_nodes; ++i)
    for (int j = 0; j < cd.n_nodes; ++j) {
      const int b = cd.b(i, j), m = cd.m(i, j);
      // At c = 0 the theta_p factors are the inverses of the theta_{p*} ones.
      for (int s = 0; s < samples; ++s) {
        const cplx x = std::polar(rad(rng), ph(rng));
        const cplx val = phiphi_multiplier(plus_minus, b, m, 0, x, P);
        out.record_with(std::abs(val - 1.0), [&] {
          std::ostringstream os;
          os << "i=" << i << " j=" << j << " w/z=" << x;
          return os.str();
        });
      }
    }
  out.finalize(P.tol);
  return out;
}

RelationReport check_phi_phi(const Heisenberg& H, bool plus_minus, int samples) {
  const Params& P = H.params();
  const CartanData& cd = H.cartan();
  const int c = H.level();
  RelationReport out;
  out.relation_id = plus_minus ? "phiphi_pm" : "phiphi_pp";
  out.params = P;
  const cplx q = P.q, dq = q - 1.0 / q, hq = std::sqrt(q);
  const cplx hc = ipow(hq, c);  // q^{c/2}
  // phi^eps(z) = K exp(sum_n cm_n alpha_{-n}) exp(sum_n cp_n alpha_n), with
  // the coefficients of z^{+-n} below (argument z already rescaled).
  auto coeffs = [&](int eps, cplx z, int n, cplx& cm, cplx& cp) {
    const cplx pn = ipow(P.p, n);
    const cplx zz = eps > 0 ? z / hc : z * hc;
    cm = -dq * (eps > 0 ? pn : cplx(1.0)) / (1.0 - pn) * ipow(zz, n);
    cp = dq * (eps > 0 ? cplx(1.0) : pn) / (1.0 - pn) * ipow(zz, -n);
  };
  std::mt19937_64 rng(P.seed + (plus_minus ? 131 : 117));
  // Annuli where both bracket series converge.
  std::uniform_real_distribution<double> rad(plus_minus ? 0.1 : 0.4, plus_minus ? 0.35 : 2.5), ph(-M_PI, M_PI);
  const int eta = plus_minus ? -1 : +1;
  for (int i = 0; i < cd.n_nodes; ++i)
    for (int j = 0; j < cd.n_nodes; ++j) {
      const int b = cd.b(i, j), m = cd.m(i, j);
      for (int s = 0; s < samples; ++s) {
        const cplx z = std::polar(1.0, ph(rng));
        const cplx w = z * std::polar(rad(rng), ph(rng));
        cplx logm = 0.0;
        for (int n = 1; n <= 2000; ++n) {
          cplx am, ap, bm, bp;
          coeffs(+1, z, n, am, ap);
          coeffs(eta, w, n, bm, bp);
          const cplx t = ap * bm * H.mode_commutator(ModeFamily::Alpha, i, n, ModeFamily::Alpha, j, -n) -
                         bp * am * H.mode_commutator(ModeFamily::Alpha, j, n, ModeFamily::Alpha, i, -n);
          logm += t;
          if (n > 20 && std::abs(t) < 1e-18 * (1.0 + std::abs(logm))) break;
        }
        const cplx lhs = std::exp(logm);
        const cplx rhs = phiphi_multiplier(plus_minus, b, m, c, w / z, P);
        out.record_with(std::abs(lhs - rhs) / (1.0 + std::abs(lhs)), [&] {
          std::ostringstream os;
          os << "i=" << i << " j=" << j << " w/z=" << w / z;
          return os.str();
        });
      }
    }
  out.finalize(P.tol);
  return out;
}

RelationReport check_serre(const Rep& rep, int sign, const std::vector<Basis>& states) {
  const Params& P = rep.params();
  const CartanData& cd = rep.cartan();
  const int n = cd.n_nodes;
  const cplx binom[3] = {1.0, P.q + 1.0 / P.q, 1.0};
  return per_state(sign > 0 ? "serre_plus" : "serre_minus", rep, states, [&](RelationReport& r, const Basis& v,
                                                                            std::size_t) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (cd.a(i, j) != -1) continue;
        const int bii = cd.b(i, i), b = cd.b(i, j), m = cd.m(i, j);
        auto g = [&](Mono X, int bb) { return sign > 0 ? gfun(X, bb, P) : 1.0 / gfun(X, bb, P); };
        Terms L, R;
        for (int sw = 0; sw < 2; ++sw) {
          const int s1 = sw ? 1 : 0, s2 = sw ? 0 : 1;  // z_sigma(1), z_sigma(2) as variables
          const int zs[2] = {s1, s2};
          for (int rr = 0; rr <= 2; ++rr) {
            std::vector<Op> word;
            for (int t = 0; t < rr; ++t) word.push_back({sign, i, zs[t]});
            word.push_back({sign, j, 2});
            for (int t = rr; t < 2; ++t) word.push_back({sign, i, zs[t]});
            for (const auto& [k, c] : apply_ops(rep, word, v, 3)) {
              cplx pre = g(k.s[s2] / k.s[s1], bii) * double(rr % 2 ? -1 : 1) * binom[rr];
              for (int t = 0; t < 2; ++t)
                pre *= t < rr ? g(Mono{0, -m} * k.s[2] / k.s[zs[t]], b) : g(Mono{0, m} * k.s[zs[t]] / k.s[2], b);
              if (sw == 0)
                L[k] += pre * c;
              else
                R[k] -= pre * c;
            }
          }
        }
        compare_terms(r, L, R, rep, state_tag(rep, v, i, j));
      }
  });
}

namespace {

bool same_shifts(const CartanData& cd, const DynWeight& got, const DynWeight& want) {
  const int n = cd.n_nodes;
  for (int t = 0; t < n; ++t) {
    std::vector<int> e(n, 0);
    e[t] = 1;
    if (p_exponent(cd, got, e) != p_exponent(cd, want, e)) return false;
    if (ph_exponent(cd, got, e) != ph_exponent(cd, want, e)) return false;
  }
  return got == want;
}

DynWeight diff(const DynWeight& a, const DynWeight& b) {
  DynWeight d = a;
  for (std::size_t t = 0; t < d.alpha.size(); ++t) d.alpha[t] -= b.alpha[t];
  for (std::size_t t = 0; t < d.rq.size(); ++t) d.rq[t] -= b.rq[t];
  return d;
}

DynWeight expected_shift(int n, int j, int dalpha, int drq) {
  DynWeight w = DynWeight::zero(n);
  w.alpha[j] = dalpha;
  w.rq[j] = drq;
  return w;
}

}  // namespace

RelationReport check_grading(const Rep& rep, const std::vector<Basis>& states) {
  const Params& P = rep.params();
  const CartanData& cd = rep.cartan();
  const int n = cd.n_nodes;
  const auto shifted = rep.rescaled(1);
  return per_state("grading_gf", rep, states, [&](RelationReport& r, const Basis& v, std::size_t idx) {
    for (int j = 0; j < n; ++j)
      for (int sign : {+1, -1}) {
        const DeltaVector xs = rep.apply_x(sign, j, v);
        const DynWeight want = expected_shift(n, j, sign, sign > 0 ? -1 : 0);
        for (const Term& t : xs)
          r.record(same_shifts(cd, diff(t.payload.wt, v.wt), want) ? 0.0 : 1.0,
                   state_tag(rep, v, j, j) + (sign > 0 ? " x+ weight shift" : " x- weight shift"));
        // q^d x(z) q^-d = x(q^-1 z): the module at q u carries the same
        // coefficients with every support multiplied by q.
        const DeltaVector ys = shifted->apply_x(sign, j, v);
        if (ys.size() != xs.size()) {
          r.record(1.0, state_tag(rep, v, j, j) + " q^d: term count differs");
          continue;
        }
        for (std::size_t t = 0; t < xs.size(); ++t) {
          const cplx want_support = P.q * P.support(xs[t].supports[0]);
          const cplx got_support = shifted->params().support(ys[t].supports[0]);
          const bool same = ys[t].payload == xs[t].payload;
          r.record_with(same ? std::abs(ys[t].coeff - xs[t].coeff) / (1.0 + std::abs(xs[t].coeff)) +
                                   std::abs(got_support - want_support) / std::abs(want_support)
                             : 1.0,
                        [&] { return state_tag(rep, v, j, j) + " q^d support shift"; });
        }
        if (sign < 0) continue;
        std::mt19937_64 rng(P.seed + 7 * idx + j);
        std::uniform_real_distribution<double> rad(0.5, 2.0), ph(-M_PI, M_PI);
        const PhiAction a = rep.phi(j, v), bshift = shifted->phi(j, v);
        for (int s = 0; s < 3; ++s) {
          const cplx z = P.u * std::polar(rad(rng), ph(rng));
          if (phi_near_pole(a, z / P.q, P) || phi_near_pole(bshift, z, shifted->params())) {
            ++r.skipped;
            continue;
          }
          const cplx lhs = bshift.eval(z, shifted->params()), rhs = a.eval(z / P.q, P);
          r.record_with(std::abs(lhs - rhs) / (1.0 + std::abs(lhs)),
                        [&] { return state_tag(rep, v, j, j) + " q^d on phi"; });
        }
      }
  });
}

RelationReport check_grading_K(const Rep& rep, const std::vector<Basis>& states) {
  const CartanData& cd = rep.cartan();
  const int n = cd.n_nodes;
  return per_state("grading_gK", rep, states, [&](RelationReport& r, const Basis& v, std::size_t) {
    for (int j = 0; j < n; ++j) {
      const PhiAction a = rep.phi(j, v);
      r.record(same_shifts(cd, a.weight_shift, expected_shift(n, j, 0, -1)) ? 0.0 : 1.0,
               state_tag(rep, v, j, j) + " K weight shift");
    }
  });
}

RelationReport check_grading(const LatticeModule& L, bool k_generators, int lattice_count) {
  const CartanData& cd = L.cartan();
  const int n = cd.n_nodes;
  RelationReport out;
  out.relation_id = k_generators ? "grading_gK" : "grading_gf";
  for (const LatticeVector& v : lattice_samples(L, lattice_count, 0x9ad1)) {
    for (int j = 0; j < n; ++j) {
      if (k_generators) {
        for (int sign : {+1, -1}) {
          LatticeVector w = v;
          L.k_apply(sign, j, w);
          const bool ok = w.beta == v.beta &&
                          same_shifts(cd, diff(w.rq_weight, v.rq_weight), expected_shift(n, j, 0, -1));
          out.record(ok ? 0.0 : 1.0, v.str() + " K" + (sign > 0 ? "+" : "-") + std::to_string(j));
        }
        continue;
      }
      for (int sign : {+1, -1}) {
        const ZAction z = L.z_apply(sign, j, v);
        const bool ok = same_shifts(cd, diff(z.result.rq_weight, v.rq_weight),
                                    expected_shift(n, j, sign, sign > 0 ? -1 : 0));
        out.record(ok ? 0.0 : 1.0, v.str() + " Z" + (sign > 0 ? "+" : "-") + std::to_string(j));
      }
    }
  }
  out.pass = out.max_residual == 0.0;
  return out;
}

RelationReport check_kappa0(const Rep& rep, const std::vector<Basis>& states, int expected) {
  const int n = rep.cartan().n_nodes;
  auto out = per_state("kappa0", rep, states, [&](RelationReport& r, const Basis& v, std::size_t) {
    int e = 0;
    for (int j = 0; j < n; ++j) e += rep.cartan().colabels[j] * rep.phi(j, v).kplus_exponent();
    r.record(std::abs(e - expected), rep.label_str(v) + " exponent " + std::to_string(e));
  });
  out.pass = out.max_residual == 0.0;
  return out;
}

std::vector<Basis> fock_states(const FockRep& rep, int max_size) {
  std::vector<Basis> out;
  for (const ColoredPartition& lam : partitions_up_to(max_size, rep.N(), rep.k())) out.push_back(rep.basis(lam));
  return out;
}

std::vector<Basis> vector_states(const VectorRep& rep, int range) {
  std::vector<Basis> out;
  for (int j = -range; j <= range; ++j) out.push_back(rep.basis(j));
  return out;
}

std::vector<std::string> fock_relation_ids() {
  return {"xpxp",        "xmxm",       "xpxm",       "phixp",      "phixm",      "phiphi_pp",
          "phiphi_pm",   "serre_plus", "serre_minus", "grading_gf", "grading_gK", "kappa0"};
}

std::vector<std::string> vector_relation_ids() { return fock_relation_ids(); }

std::vector<std::string> level1_relation_ids() {
  return {"zalg1",        "zalg2",         "zalg3",        "zalg4",         "zalg5",
          "alpha_xplus",  "alpha_xminus",  "alphap_xplus", "alphap_xminus", "xpxp",
          "phiphi_pp",    "phiphi_pm",     "grading_gf",   "grading_gK",    "highest_weight"};
}

std::vector<std::string> heisenberg_relation_ids() {
  std::vector<std::string> out;
  for (int r = 0; r < kExchangeCount; ++r) out.push_back(exchange_id(r));
  return out;
}

std::vector<RelationReport> run_suite(const Rep& rep, const std::vector<Basis>& states,
                                      const std::vector<std::string>& relations) {
  std::vector<RelationReport> out;
  const int kexp = rep.name() == "fock" ? -1 : 0;
  for (const std::string& id : relations) {
    if (id == "xpxp") out.push_back(check_quadratic(rep, +1, states));
    else if (id == "xmxm") out.push_back(check_quadratic(rep, -1, states));
    else if (id == "xpxm") out.push_back(check_xpxm(rep, states));
    else if (id == "phixp") out.push_back(check_phi_x(rep, +1, states));
    else if (id == "phixm") out.push_back(check_phi_x(rep, -1, states));
    else if (id == "phiphi_pp") out.push_back(check_phi_phi(rep, false));
    else if (id == "phiphi_pm") out.push_back(check_phi_phi(rep, true));
    else if (id == "serre_plus") out.push_back(check_serre(rep, +1, states));
    else if (id == "serre_minus") out.push_back(check_serre(rep, -1, states));
    else if (id == "grading_gf") out.push_back(check_grading(rep, states));
    else if (id == "grading_gK") out.push_back(check_grading_K(rep, states));
    else if (id == "kappa0") out.push_back(check_kappa0(rep, states, kexp));
    else throw ParamError("unknown relation id for a level-0 module: " + id);
  }
  return out;
}

std::vector<RelationReport> run_level1_suite(const Level1Config& cfg, const Params& params,
                                             const std::vector<std::string>& relations) {
  const CartanData cd = cartan_data(cfg.type_tag);
  const LatticeModule L(cd, cfg.a);
  const Heisenberg H(cd, params);
  std::vector<RelationReport> out;
  for (const std::string& id : relations) {
    if (id.rfind("zalg", 0) == 0 && id.size() == 5 && id[4] >= '1' && id[4] <= '5')
      out.push_back(check_zalgebra(L, id[4] - '0', params, cfg.window, cfg.lattice_count, cfg.points, cfg.degree));
    else if (id == "alpha_xplus") out.push_back(check_alpha_current(H, L, ModeFamily::Alpha, +1, cfg.current_degree, cfg.window));
    else if (id == "alpha_xminus") out.push_back(check_alpha_current(H, L, ModeFamily::Alpha, -1, cfg.current_degree, cfg.window));
    else if (id == "alphap_xplus") out.push_back(check_alpha_current(H, L, ModeFamily::AlphaPrime, +1, cfg.current_degree, cfg.window));
    else if (id == "alphap_xminus") out.push_back(check_alpha_current(H, L, ModeFamily::AlphaPrime, -1, cfg.current_degree, cfg.window));
    else if (id == "xpxp") out.push_back(check_current_xpxp(H, L, cfg.current_degree, cfg.window));
    else if (id == "phiphi_pp") out.push_back(check_phi_phi(H, false));
    else if (id == "phiphi_pm") out.push_back(check_phi_phi(H, true));
    else if (id == "grading_gf") out.push_back(check_grading(L, false, cfg.lattice_count));
    else if (id == "grading_gK") out.push_back(check_grading(L, true, cfg.lattice_count));
    else if (id == "highest_weight") out.push_back(check_highest_weight(H, L, cfg.window));
    else throw ParamError("unknown relation id for the level-one module: " + id);
    out.back().params = params;
  }
  return out;
}

std::vector<RelationReport> run_heisenberg_suite(const std::string& type_tag, const Params& params, int degree,
                                                 int window, const std::vector<std::string>& relations) {
  const Heisenberg H(cartan_data(type_tag), params);
  std::vector<RelationReport> out;
  for (const std::string& id : relations) {
    int r = 0;
    while (r < kExchangeCount && exchange_id(r) != id) ++r;
    if (r == kExchangeCount) throw ParamError("unknown exchange relation: " + id);
    const ExchangeReport e = check_exchange(H, r, degree, window);
    RelationReport rep;
    rep.relation_id = e.id;
    rep.params = params;
    rep.samples = e.samples;
    rep.max_residual = e.max_residual;
    rep.worst_case = e.worst_case;
    rep.finalize(params.tol);
    out.push_back(rep);
  }
  return out;
}

bool suite_passes(const std::vector<RelationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass || r.skipped_fraction() > kMaxSkippedFraction) return false;
  return true;
}

}  // namespace eqtor
