#include "eqtor/level1.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "eqtor/ellcore.hpp"
#include "eqtor/parallel.hpp"

namespace eqtor {

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << "e^(";
  for (std::size_t i = 0; i < beta.size(); ++i) os << (i ? "," : "") << beta[i];
  os << ")";
  return os.str();
}

std::vector<int> allowed_fundamentals(const CartanData& cd) { return cd.minuscule_nodes(); }

LatticeModule::LatticeModule(CartanData cd, int a) : cd_(std::move(cd)), a_(a), eps_(cd_) {
  const auto ok = allowed_fundamentals(cd_);
  if (std::find(ok.begin(), ok.end(), a) == ok.end())
    throw ParamError("fundamental weight " + std::to_string(a) + " is not admissible for " + cd_.tag);
}

LatticeVector LatticeModule::at(std::vector<int> beta) const {
  if ((int)beta.size() != cd_.n_nodes) throw ParamError("lattice vector has the wrong rank");
  LatticeVector v;
  v.a = a_;
  v.rq_weight = DynWeight::zero(cd_.n_nodes);
  v.rq_weight.alpha = beta;
  v.beta = std::move(beta);
  return v;
}

int LatticeModule::h_eigen(const LatticeVector& v, int i) const {
  Weight w = weight_lambar(cd_, a_);
  w.alpha = v.beta;
  w.lambda0 = 1;
  return pair(cd_, w, coweight_h(cd_, i));
}

int LatticeModule::kplus_product_exponent(const LatticeVector& v) const {
  int r = 0;
  for (int j = 0; j < cd_.n_nodes; ++j) r += cd_.colabels[j] * h_eigen(v, j);
  return r;
}

ZAction LatticeModule::z_apply(int sign, int j, const LatticeVector& v) const {
  if (sign != 1 && sign != -1) throw ParamError("z_apply: sign must be +-1");
  ZAction r;
  r.z_exponent = sign * h_eigen(v, j) + 1;
  std::vector<int> g(cd_.n_nodes, 0);
  g[j] = sign;
  r.coeff = eps_.value(g, v.beta);
  r.result = v;
  r.result.beta[j] += sign;
  r.result.rq_weight.alpha = r.result.beta;
  if (sign > 0) r.result.rq_weight.rq[j] -= 1;
  r.result.coefficient = v.coefficient * r.coeff;
  return r;
}

int LatticeModule::k_apply(int sign, int j, LatticeVector& v) const {
  const int e = sign * h_eigen(v, j);
  v.rq_weight.rq[j] -= 1;
  return e;
}

std::vector<LatticeVector> lattice_samples(const LatticeModule& L, int count, std::uint64_t seed) {
  std::vector<LatticeVector> out;
  if (count <= 0) return out;
  out.push_back(L.highest());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-2, 2);
  while ((int)out.size() < count) {
    std::vector<int> b(L.cartan().n_nodes);
    for (int& x : b) x = d(rng);
    out.push_back(L.at(b));
  }
  return out;
}

namespace {

using Key2 = std::pair<int, int>;
using Series2 = std::map<Key2, cplx>;

struct ZOp {
  int sign;
  int idx;
  int var;
};

struct ZWord {
  std::vector<int> exps;
  LatticeVector v;
};

// Written left to right; the rightmost operator acts first.
ZWord z_word(const LatticeModule& L, const std::vector<ZOp>& word, const LatticeVector& v, int nvars) {
  ZWord r{std::vector<int>(nvars, 0), v};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const ZAction a = L.z_apply(it->sign, it->idx, r.v);
    r.exps[it->var] += a.z_exponent;
    r.v = a.result;
  }
  return r;
}

cplx qbinom(const Params& P, int a, int r) {
  cplx num = 1.0, den = 1.0;
  for (int t = 0; t < r; ++t) {
    num *= P.qnum(a - t);
    den *= P.qnum(t + 1);
  }
  return num / den;
}

// (A x; s)_inf / (B x; s)_inf with A, B exact monomials and s = q^{2k}. When
// B/A is a power of s the ratio is a finite product; otherwise the products
// are run to convergence. nullopt when a denominator factor is within guard.
std::optional<cplx> poch_ratio(Mono A, Mono B, cplx x, const Params& P, int k) {
  const cplx s = ipow(P.q, 2 * k);
  const cplx a = P.mono(A) * x, b = P.mono(B) * x;
  if (A.ke == B.ke && (B.qe - A.qe) % (2 * k) == 0) {
    const int n = (B.qe - A.qe) / (2 * k);
    cplx r = 1.0, st = 1.0;
    for (int t = 0; t < std::abs(n); ++t) {
      if (n > 0) {
        r *= 1.0 - a * st;
      } else {
        const cplx f = 1.0 - b * st;
        if (std::abs(f) < P.pole_guard) return std::nullopt;
        r /= f;
      }
      st *= s;
    }
    return r;
  }
  cplx r = 1.0, st = 1.0;
  for (int t = 0; t < 100000; ++t) {
    const cplx f = 1.0 - b * st;
    if (std::abs(f) < P.pole_guard) return std::nullopt;
    r *= (1.0 - a * st) / f;
    st *= s;
    if (std::abs(st) * std::max(std::abs(a), std::abs(b)) < 1e-18) break;
  }
  return r;
}

std::vector<cplx> ratio_series(Mono A, Mono B, const Params& P, int k, int T) {
  return pochratio_series(P.mono(A), P.mono(B), ipow(P.q, 2 * k), T);
}

void compare_series(RelationReport& rep, const Series2& L, const Series2& R, int wlo, int whi,
                    const std::string& tag) {
  Series2 both;
  for (const auto& [key, c] : L)
    if (key.second >= wlo && key.second <= whi) both[key] += 0.0;
  for (const auto& [key, c] : R)
    if (key.second >= wlo && key.second <= whi) both[key] += 0.0;
  for (const auto& kv : both) {
    const Key2 key = kv.first;
    auto li = L.find(key), ri = R.find(key);
    const cplx l = li == L.end() ? cplx(0.0) : li->second, r = ri == R.end() ? cplx(0.0) : ri->second;
    rep.record_with(std::abs(l - r) / (1.0 + std::abs(l)), [&] {
      std::ostringstream os;
      os << tag << " exps=(" << key.first << "," << key.second << ")";
      return os.str();
    });
  }
}

std::string pair_tag(int i, int j, const LatticeVector& v) {
  std::ostringstream os;
  os << "i=" << i << " j=" << j << " v=" << v.str();
  return os.str();
}

void check_zalg2(RelationReport& rep, const LatticeModule& L, const Params& P, int W,
                 const std::vector<LatticeVector>& vs) {
  const CartanData& cd = L.cartan();
  const int k = P.level_k;
  for (int sign : {+1, -1})
    for (const LatticeVector& v : vs)
      for (int i = 0; i < cd.n_nodes; ++i)
        for (int j = 0; j < cd.n_nodes; ++j) {
          const int b = cd.b(i, j), m = cd.m(i, j);
          const ZWord l = z_word(L, {{sign, i, 0}, {sign, j, 1}}, v, 2);
          const ZWord r = z_word(L, {{sign, j, 1}, {sign, i, 0}}, v, 2);
          const std::string tag = std::string(sign > 0 ? "++ " : "-- ") + pair_tag(i, j, v);
          if (!l.v.same_basis(r.v)) {
            rep.record(std::numeric_limits<double>::infinity(), tag + " lattice images differ");
            continue;
          }
          const int T = W + 8 + std::abs(r.exps[1] - l.exps[1]);
          const auto f = ratio_series({-b, -m}, {2 * k + b, -m}, P, k, T);
          const auto g = ratio_series({-b, m}, {2 * k + b, m}, P, k, T);
          const cplx cl = l.v.coefficient.value(P.kappa), cr = r.v.coefficient.value(P.kappa);
          Series2 LS, RS;
          for (int t = 0; t <= T; ++t) {
            LS[{1 + l.exps[0] - t, l.exps[1] + t}] += cl * f[t];
            RS[{r.exps[0] + t, 1 + r.exps[1] - t}] += -ipow(P.kappa, -m) * cr * g[t];
          }
          compare_series(rep, LS, RS, l.exps[1] - W, l.exps[1] + W, tag);
        }
}

void check_zalg3(RelationReport& rep, const LatticeModule& L, const Params& P, int W,
                 const std::vector<LatticeVector>& vs, ZVariant variant) {
  const CartanData& cd = L.cartan();
  const int k = P.level_k;
  const cplx q = P.q;
  for (const LatticeVector& v : vs)
    for (int i = 0; i < cd.n_nodes; ++i)
      for (int j = 0; j < cd.n_nodes; ++j) {
        const int b = cd.b(i, j), m = cd.m(i, j);
        const ZWord l1 = z_word(L, {{+1, i, 0}, {-1, j, 1}}, v, 2);
        const ZWord l2 = z_word(L, {{-1, j, 1}, {+1, i, 0}}, v, 2);
        const std::string tag = pair_tag(i, j, v);
        if (!l1.v.same_basis(l2.v)) {
          rep.record(std::numeric_limits<double>::infinity(), tag + " lattice images differ");
          continue;
        }
        const int T = W + std::abs(l1.exps[1]) + std::abs(l2.exps[1]) + 4;
        const Mono Fb = variant == ZVariant::Corrected ? Mono{-b + k, -m} : Mono{-b + k, m};
        const auto F = ratio_series({b + k, -m}, Fb, P, k, T);
        const auto G = ratio_series({b + k, m}, {-b + k, m}, P, k, T);
        const cplx c1 = l1.v.coefficient.value(P.kappa), c2 = l2.v.coefficient.value(P.kappa);
        Series2 LS, RS;
        for (int t = 0; t <= T; ++t) {
          LS[{l1.exps[0] - t, l1.exps[1] + t}] += c1 * F[t];
          LS[{l2.exps[0] + t, l2.exps[1] - t}] -= c2 * G[t];
        }
        if (i == j) {
          LatticeVector kp = v, km = v;
          const int hp = L.k_apply(+1, i, kp), hm = L.k_apply(-1, i, km);
          if (!kp.same_basis(l1.v) || !km.same_basis(l1.v)) {
            rep.record(std::numeric_limits<double>::infinity(), tag + " K image differs");
            continue;
          }
          const cplx norm = 1.0 / (q - 1.0 / q);
          const cplx cv = v.coefficient.value(P.kappa);
          for (int n = -W - 1; n <= W + 1; ++n) {
            RS[{-n, n}] += norm * cv * ipow(q, k * n) * ipow(q, hp);
            RS[{-n, n}] -= norm * cv * ipow(q, -k * n) * ipow(q, hm);
          }
        }
        compare_series(rep, LS, RS, -W, W, tag);
      }
}

// zalg4 (sign +) and zalg5 (sign -) at seeded points.
void check_zalg_serre(RelationReport& rep, const LatticeModule& L, const Params& P, int sign,
                      const std::vector<LatticeVector>& vs, int points) {
  const CartanData& cd = L.cartan();
  const int k = P.level_k;
  const int sh = sign > 0 ? 0 : 2 * k;  // extra q^{2k} in the minus family
  std::mt19937_64 rng(P.seed ^ (sign > 0 ? 0x5e77eULL : 0x5e77fULL));
  std::uniform_real_distribution<double> rad(0.7, 1.4), ph(-M_PI, M_PI);
  for (int i = 0; i < cd.n_nodes; ++i)
    for (int j = 0; j < cd.n_nodes; ++j) {
      if (i == j) continue;
      const int b = cd.b(i, j), m = cd.m(i, j);
      const int a = 1 - cd.a(i, j);
      for (const LatticeVector& v : vs)
        for (int pt = 0; pt < points; ++pt) {
          std::vector<cplx> z(a);
          for (auto& x : z) x = std::polar(rad(rng), ph(rng));
          const cplx w = std::polar(rad(rng), ph(rng));
          std::vector<int> perm(a);
          std::iota(perm.begin(), perm.end(), 0);
          cplx sum = 0.0;
          double scale = 0.0;
          bool skip = false;
          do {
            cplx pre = 1.0;
            for (int s1 = 0; s1 < a && !skip; ++s1)
              for (int s2 = s1 + 1; s2 < a && !skip; ++s2) {
                const auto f = poch_ratio({-2 + sh, 0}, {2 + sh, 0}, z[perm[s2]] / z[perm[s1]], P, k);
                if (!f) skip = true; else pre *= *f;
              }
            for (int r = 0; r <= a && !skip; ++r) {
              cplx t = pre * double(r % 2 ? -1 : 1) * qbinom(P, a, r);
              for (int s = 0; s < a && !skip; ++s) {
                const auto f = s < r ? poch_ratio({-b + sh, -m}, {b + sh, -m}, w / z[perm[s]], P, k)
                                     : poch_ratio({-b + sh, m}, {b + sh, m}, z[perm[s]] / w, P, k);
                if (!f) skip = true; else t *= *f;
              }
              if (skip) break;
              std::vector<ZOp> word;
              for (int s = 0; s < r; ++s) word.push_back({sign, i, perm[s]});
              word.push_back({sign, j, a});
              for (int s = r; s < a; ++s) word.push_back({sign, i, perm[s]});
              const ZWord zw = z_word(L, word, v, a + 1);
              t *= zw.v.coefficient.value(P.kappa);
              for (int s = 0; s < a; ++s) t *= std::pow(z[s], zw.exps[s]);
              t *= std::pow(w, zw.exps[a]);
              sum += t;
              scale += std::abs(t);
            }
          } while (!skip && std::next_permutation(perm.begin(), perm.end()));
          if (skip) {
            ++rep.skipped;
            continue;
          }
          rep.record_with(std::abs(sum) / (1.0 + scale), [&] {
            std::ostringstream os;
            os << pair_tag(i, j, v) << " point=" << pt;
            return os.str();
          });
        }
    }
}

void check_zalg1(RelationReport& rep, const LatticeModule& L, const Params& P, int W, int D) {
  const Heisenberg H(L.cartan(), P);
  const int n = L.cartan().n_nodes;
  const auto basis = boson_basis(n, D);
  for (int sign : {+1, -1}) {
    const ModeFamily fam = sign > 0 ? ModeFamily::Alpha : ModeFamily::AlphaPrime;
    for (int j = 0; j < n; ++j) {
      std::vector<VertexFactor> word{E_factor(-1, fam, j, 0)};
      const auto xb = x_boson(sign, j, 0);
      word.insert(word.end(), xb.begin(), xb.end());
      word.push_back(E_factor(+1, fam, j, 0));
      for (const BosonMonomial& mono : basis) {
        const BosonSeries out = H.apply_word(word, seed_series(make_state(mono), 1), W, D, nullptr, -W);
        const std::string tag =
            std::string(sign > 0 ? "Z+ " : "Z- ") + "j=" + std::to_string(j) + " in=" + monomial_str(mono);
        for (const auto& [key, st] : out) {
          if (key[0] < -W || key[0] > W) continue;
          for (const auto& [m2, c] : st) {
            if (degree(m2) > D) continue;
            const cplx want = (key[0] == 0 && m2 == mono) ? cplx(1.0) : cplx(0.0);
            rep.record_with(std::abs(c - want), [&] { return tag + " out=" + monomial_str(m2) + " e=" +
                                                             std::to_string(key[0]); });
          }
        }
        auto it = out.find(ExpKey{0});
        if (it == out.end() || !it->second.count(mono)) rep.record(1.0, tag + " identity term missing");
      }
    }
  }
}

}  // namespace

RelationReport check_zalgebra(const LatticeModule& L, int rel, const Params& params, int window, int lattice_count,
                              int points, int D, ZVariant variant) {
  if (params.level_k != 1) throw ParamError("Z-algebra checks are for level k = 1");
  if (!(std::abs(params.q * params.q) < 1)) throw ParamError("Z-algebra checks need |q^2| < 1");
  if (window < 1) throw ParamError("window must be positive");
  RelationReport rep;
  rep.relation_id = "zalg" + std::to_string(rel);
  if (variant == ZVariant::Literal) rep.relation_id += "_literal";
  rep.params = params;
  const auto vs = lattice_samples(L, lattice_count, params.seed);
  switch (rel) {
    case 1:
      check_zalg1(rep, L, params, window, D);
      break;
    case 2:
      check_zalg2(rep, L, params, window, vs);
      break;
    case 3:
      check_zalg3(rep, L, params, window, vs, variant);
      break;
    case 4:
      check_zalg_serre(rep, L, params, +1, vs, points);
      break;
    case 5:
      check_zalg_serre(rep, L, params, -1, vs, points);
      break;
    default:
      throw ParamError("Z-algebra relation index must be 1..5");
  }
  rep.finalize(params.tol);
  return rep;
}

cplx serre_polynomial(cplx z1, cplx z2, cplx w, cplx q, cplx kappa, int m_ij, ZVariant variant) {
  const cplx km = ipow(kappa, m_ij), qi = 1.0 / q;
  const cplx shift = variant == ZVariant::Corrected ? qi * qi : qi;
  const cplx binom[3] = {1.0, q + qi, 1.0};
  auto inner = [&](cplx a, cplx b) {
    const cplx zs[2] = {a, b};
    cplx tot = 0.0;
    for (int r = 0; r <= 2; ++r) {
      cplx t = (r % 2 ? -1.0 : 1.0) * binom[r];
      for (int s = 0; s < 2; ++s) t *= s < r ? (w - qi * km * zs[s]) : (qi * w - km * zs[s]);
      tot += t;
    }
    return tot;
  };
  return (z1 - shift * z2) * inner(z1, z2) - (z2 - shift * z1) * inner(z2, z1);
}

RelationReport check_serre_polynomial(const Params& params, int points, ZVariant variant) {
  RelationReport rep;
  rep.relation_id = variant == ZVariant::Corrected ? "serre_polynomial" : "serre_polynomial_literal";
  rep.params = params;
  std::mt19937_64 rng(params.seed ^ 0x9017ULL);
  std::uniform_real_distribution<double> rad(0.5, 2.0), ph(-M_PI, M_PI);
  for (int pt = 0; pt < points; ++pt) {
    const cplx z1 = std::polar(rad(rng), ph(rng)), z2 = std::polar(rad(rng), ph(rng)), w = std::polar(rad(rng), ph(rng));
    for (int m : {-1, 0, 1}) {
      const cplx v = serre_polynomial(z1, z2, w, params.q, params.kappa, m, variant);
      rep.record_with(std::abs(v), [&] {
        std::ostringstream os;
        os << "point=" << pt << " m=" << m;
        return os.str();
      });
    }
  }
  rep.finalize(std::min(params.tol, 1e-10));
  return rep;
}

namespace {

void shift_into(BosonSeries& acc, const BosonSeries& s, const std::vector<int>& shift, cplx c) {
  for (const auto& [key, st] : s) {
    ExpKey k2 = key;
    for (std::size_t t = 0; t < k2.size(); ++t) k2[t] += shift[t];
    auto& dst = acc[k2];
    for (const auto& [m, v] : st) dst[m] += c * v;
  }
}

void compare_boson(RelationReport& rep, const BosonSeries& Ls, const BosonSeries& Rs,
                   const std::vector<int>& lo, const std::vector<int>& hi, int D, const std::string& tag) {
  auto inside = [&](const ExpKey& k) {
    for (std::size_t t = 0; t < k.size(); ++t)
      if (k[t] < lo[t] || k[t] > hi[t]) return false;
    return true;
  };
  std::map<ExpKey, std::map<BosonMonomial, std::pair<cplx, cplx>>> both;
  for (const auto& [key, st] : Ls)
    if (inside(key))
      for (const auto& [m, c] : st)
        if (degree(m) <= D) both[key][m].first += c;
  for (const auto& [key, st] : Rs)
    if (inside(key))
      for (const auto& [m, c] : st)
        if (degree(m) <= D) both[key][m].second += c;
  for (const auto& [key, row] : both)
    for (const auto& [m, lr] : row)
      rep.record_with(std::abs(lr.first - lr.second) / (1.0 + std::abs(lr.first)), [&] {
        std::ostringstream os;
        os << tag << " out=" << monomial_str(m) << " exps=(";
        for (std::size_t t = 0; t < key.size(); ++t) os << (t ? "," : "") << key[t];
        os << ")";
        return os.str();
      });
}

}  // namespace

CurrentAction current_apply(const Heisenberg& H, const LatticeModule& L, int sign, int i, const BosonState& f,
                            const LatticeVector& v, int D, int window) {
  if (H.level() != 1) throw ParamError("level-one currents need k = 1");
  for (const auto& kv : f)
    if (degree(kv.first) > D) throw ParamError("current_apply: input degree exceeds the cap");
  const ZAction z = L.z_apply(sign, i, v);
  bool tr = false;
  const BosonSeries b = H.apply_word(x_boson(sign, i, 0), seed_series(f, 1), window - z.z_exponent, D, &tr,
                                     -window - z.z_exponent);
  CurrentAction out;
  out.lattice = z.result;
  out.truncated = tr;
  const cplx c = z.coeff.value(H.params().kappa);
  for (const auto& [key, st] : b) {
    const int e = key[0] + z.z_exponent;
    if (e < -window || e > window) continue;
    BosonState s;
    for (const auto& [m, x] : st)
      if (degree(m) <= D) s.emplace(m, c * x);
    if (!s.empty()) out.terms.emplace(e, std::move(s));
  }
  return out;
}

RelationReport check_alpha_current(const Heisenberg& H, const LatticeModule& L, ModeFamily fam, int sign, int D,
                                   int window, int lattice_count) {
  const Params& P = H.params();
  if (H.level() != 1) throw ParamError("level-one currents need k = 1");
  RelationReport rep;
  rep.relation_id = std::string(fam == ModeFamily::Alpha ? "alpha" : "alphap") + (sign > 0 ? "_xplus" : "_xminus");
  rep.params = P;
  const CartanData& cd = L.cartan();
  const int n = cd.n_nodes, k = H.level();
  const auto basis = boson_basis(n, D);
  const auto vs = lattice_samples(L, lattice_count, P.seed);
  const int W = window;
  std::vector<RelationReport> parts(basis.size());
  parallel_for(basis.size(), [&](std::size_t idx) {
    RelationReport& loc = parts[idx];
    const BosonState f = make_state(basis[idx]);
    for (const LatticeVector& v : vs)
      for (int j = 0; j < n; ++j) {
        const ZAction z = L.z_apply(sign, j, v);
        const cplx cz = z.coeff.value(P.kappa);
        const int e0 = z.z_exponent;
        const auto xw = x_boson(sign, j, 0);
        const int cap = W + 4 - e0, floor = -W - 4 - e0;
        const BosonSeries X = H.apply_word(xw, seed_series(f, 1), cap, D + 4, nullptr, floor);
        for (int i = 0; i < n; ++i)
          for (int m = -4; m <= 4; ++m) {
            if (m == 0) continue;
            const int b = cd.b(i, j), mij = cd.m(i, j);
            cplx coef = P.qnum(b * m) / double(m) * ipow(P.kappa, -m * mij);
            const cplx pm = ipow(P.p, m), psm = ipow(P.pstar(), m);
            if (fam == ModeFamily::Alpha && sign > 0) coef *= (1.0 - pm) / (1.0 - psm) * ipow(P.q, -k * m);
            if (fam == ModeFamily::Alpha && sign < 0) coef *= -1.0;
            if (fam == ModeFamily::AlphaPrime && sign < 0) coef *= -(1.0 - psm) / (1.0 - pm) * ipow(P.q, k * m);
            BosonSeries Ls, Rs;
            for (const auto& [key, st] : X) {
              shift_into(Ls, {{key, H.apply_mode(fam, i, m, st)}}, {e0}, cz);
              shift_into(Rs, {{key, st}}, {e0 + m}, cz * coef);
            }
            const BosonState af = H.apply_mode(fam, i, m, f);
            if (!af.empty()) {
              const BosonSeries Xa = H.apply_word(xw, seed_series(af, 1), cap, D + 4, nullptr, floor);
              shift_into(Ls, Xa, {e0}, -cz);
            }
            std::ostringstream tag;
            tag << "i=" << i << " j=" << j << " m=" << m << " in=" << monomial_str(basis[idx]) << " v=" << v.str();
            compare_boson(loc, Ls, Rs, {-W}, {W}, D, tag.str());
          }
      }
  });
  for (const auto& p : parts) rep.merge(p);
  rep.finalize(P.tol);
  return rep;
}

RelationReport check_current_xpxp(const Heisenberg& H, const LatticeModule& L, int D, int window, int n_theta,
                                  int lattice_count) {
  const Params& P = H.params();
  if (H.level() != 1) throw ParamError("level-one currents need k = 1");
  RelationReport rep;
  rep.relation_id = "xpxp";
  rep.params = P;
  const CartanData& cd = L.cartan();
  const int n = cd.n_nodes;
  const auto basis = boson_basis(n, D);
  const auto vs = lattice_samples(L, lattice_count, P.seed);
  const cplx ps = P.pstar();
  // theta_s(X) = sum_n (-1)^n s^{n(n-1)/2} X^n / (s; s)_inf.
  const cplx norm = 1.0 / qpoch(ps, ps, P.trunc_M);
  std::vector<cplx> th(2 * n_theta + 1);
  for (int t = -n_theta; t <= n_theta; ++t)
    th[t + n_theta] = double(t % 2 ? -1 : 1) * ipow(ps, t * (t - 1) / 2) * norm;
  const int W = window;
  std::vector<RelationReport> parts(basis.size());
  parallel_for(basis.size(), [&](std::size_t idx) {
    RelationReport& loc = parts[idx];
    const BosonState f = make_state(basis[idx]);
    for (const LatticeVector& v : vs)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const int b = cd.b(i, j), m = cd.m(i, j);
          const ZWord zl = z_word(L, {{+1, i, 0}, {+1, j, 1}}, v, 2);
          const ZWord zr = z_word(L, {{+1, j, 1}, {+1, i, 0}}, v, 2);
          std::ostringstream tag;
          tag << "i=" << i << " j=" << j << " in=" << monomial_str(basis[idx]) << " v=" << v.str();
          if (!zl.v.same_basis(zr.v)) {
            loc.record(std::numeric_limits<double>::infinity(), tag.str() + " lattice images differ");
            continue;
          }
          // Boson coefficients are needed up to W + n_theta + lattice offsets.
          const int lo_z = zl.exps[0] - W, hi_z = zl.exps[0] + W, lo_w = zl.exps[1] - W, hi_w = zl.exps[1] + W;
          auto cap_for = [&](const ZWord& zw) {
            int c = 0;
            for (int t = 0; t < 2; ++t) c = std::max(c, std::abs(zw.exps[t] - zl.exps[t]));
            return W + n_theta + 2 + c;
          };
          auto lhs_b = x_boson(+1, i, 0), w_b = x_boson(+1, j, 1);
          std::vector<VertexFactor> wl = lhs_b, wr = w_b;
          wl.insert(wl.end(), w_b.begin(), w_b.end());
          wr.insert(wr.end(), lhs_b.begin(), lhs_b.end());
          const int cl = cap_for(zl), cr = cap_for(zr);
          const BosonSeries BL = H.apply_word(wl, seed_series(f, 2), cl, D, nullptr, -cl);
          const BosonSeries BR = H.apply_word(wr, seed_series(f, 2), cr, D, nullptr, -cr);
          const cplx ccl = zl.v.coefficient.value(P.kappa), ccr = zr.v.coefficient.value(P.kappa);
          const cplx XL = ipow(P.q, b) * ipow(P.kappa, -m), XR = ipow(P.q, b) * ipow(P.kappa, m);
          BosonSeries Ls, Rs;
          for (int t = -n_theta; t <= n_theta; ++t) {
            // z theta(XL w/z) x+_i(z) x+_j(w)
            shift_into(Ls, BL, {zl.exps[0] + 1 - t, zl.exps[1] + t}, ccl * th[t + n_theta] * ipow(XL, t));
            // -w kappa^{-m} theta(XR z/w) x+_j(w) x+_i(z)
            shift_into(Rs, BR, {zr.exps[0] + t, zr.exps[1] + 1 - t},
                       -ipow(P.kappa, -m) * ccr * th[t + n_theta] * ipow(XR, t));
          }
          compare_boson(loc, Ls, Rs, {lo_z + 1, lo_w}, {hi_z + 1, hi_w}, D, tag.str());
        }
  });
  for (const auto& p : parts) rep.merge(p);
  rep.finalize(P.tol);
  return rep;
}

RelationReport check_highest_weight(const Heisenberg& H, const LatticeModule& L, int window) {
  const Params& P = H.params();
  RelationReport rep;
  rep.relation_id = "highest_weight";
  rep.params = P;
  const int n = L.cartan().n_nodes;
  const LatticeVector v0 = L.highest();
  for (int sign : {+1, -1})
    for (int i = 0; i < n; ++i) {
      const CurrentAction x = current_apply(H, L, sign, i, vacuum_state(), v0, window, window);
      // x(z) = sum_n x_n z^{-n}: x+_n for n >= 0 is exponent <= 0, x-_n for n > 0 exponent < 0.
      const int top = sign > 0 ? 0 : -1;
      for (int e = -window; e <= top; ++e) {
        double worst = 0.0;
        auto it = x.terms.find(e);
        if (it != x.terms.end())
          for (const auto& kv : it->second) worst = std::max(worst, std::abs(kv.second));
        rep.record_with(worst, [&] {
          std::ostringstream os;
          os << (sign > 0 ? "x+" : "x-") << "_{" << i << "," << -e << "}";
          return os.str();
        });
      }
    }
  for (int i = 0; i < n; ++i)
    for (int m = 1; m <= window; ++m) {
      double worst = 0.0;
      for (const auto& kv : H.apply_annihilation(i, m, vacuum_state())) worst = std::max(worst, std::abs(kv.second));
      rep.record_with(worst, [&] { return "alpha_{" + std::to_string(i) + "," + std::to_string(m) + "}"; });
    }
  // Exact: any surviving coefficient fails.
  rep.pass = rep.max_residual == 0.0;
  return rep;
}

}  // namespace eqtor
