#include "eqtor/boson.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "eqtor/ellcore.hpp"
#include "eqtor/parallel.hpp"

namespace eqtor {

int degree(const BosonMonomial& m) {
  int d = 0;
  for (const auto& x : m) d += x.second;
  return d;
}

BosonState vacuum_state() { return make_state({}); }

BosonState make_state(BosonMonomial m, cplx c) {
  std::sort(m.begin(), m.end());
  return {{std::move(m), c}};
}

std::vector<BosonMonomial> boson_basis(int n_colors, int max_degree) {
  // Generate multisets of (color, mode) in sorted order; bucket by degree.
  std::vector<std::vector<BosonMonomial>> by_deg(max_degree + 1);
  std::vector<std::pair<int, int>> modes;
  for (int i = 0; i < n_colors; ++i)
    for (int m = 1; m <= max_degree; ++m) modes.emplace_back(i, m);
  BosonMonomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int deg) {
    by_deg[deg].push_back(cur);
    for (std::size_t t = start; t < modes.size(); ++t) {
      if (deg + modes[t].second > max_degree) continue;
      cur.push_back(modes[t]);
      rec(t, deg + modes[t].second);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::vector<BosonMonomial> out;
  for (auto& v : by_deg) {
    std::sort(v.begin(), v.end());
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

void axpy(BosonState& acc, cplx a, const BosonState& x) {
  for (const auto& [m, c] : x) {
    auto it = acc.try_emplace(m, 0.0).first;
    it->second += a * c;
  }
}

std::string monomial_str(const BosonMonomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  for (std::size_t t = 0; t < m.size(); ++t) os << (t ? "*" : "") << "a" << m[t].first << "(-" << m[t].second << ")";
  return os.str();
}

VertexFactor E_factor(int sign, ModeFamily fam, int i, int var) {
  // E^{+-}(alpha) carries sign +-, E^{+-}(alpha') carries -+.
  const int eps = fam == ModeFamily::Alpha ? sign : -sign;
  return {fam, i, sign > 0, eps, var};
}

VertexFactor inverse(VertexFactor f) {
  f.eps = -f.eps;
  return f;
}

std::vector<VertexFactor> x_boson(int sign, int j, int var) {
  const ModeFamily fam = sign > 0 ? ModeFamily::Alpha : ModeFamily::AlphaPrime;
  return {inverse(E_factor(-1, fam, j, var)), inverse(E_factor(+1, fam, j, var))};
}

Heisenberg::Heisenberg(CartanData cd, Params params, AnnihilationRule rule)
    : cd_(std::move(cd)), P_(params), rule_(rule) {
  if (P_.level_k == 0) throw ParamError("Heisenberg Fock module needs a nonzero level");
  if (!(std::abs(ipow(P_.q, 2 * P_.level_k)) < 1)) throw ParamError("need |q^{2k}| < 1");
  if (!(std::abs(P_.pstar()) < 1)) throw ParamError("need |p*| < 1");
}

cplx Heisenberg::ecoef(int m) const {
  const cplx q = P_.q;
  const int k = P_.level_k;
  return (q - 1.0 / q) / (ipow(q, k * m) - ipow(q, -k * m));
}

cplx Heisenberg::scale(ModeFamily f, int l) const {
  if (f == ModeFamily::Alpha) return 1.0;
  return (1.0 - ipow(P_.pstar(), l)) / (1.0 - ipow(P_.p, l)) * ipow(P_.q, l * P_.level_k);
}

cplx Heisenberg::mode_commutator(ModeFamily f1, int i, int m, ModeFamily f2, int j, int n) const {
  if (m == 0 || n == 0) throw ParamError("mode_commutator: modes must be nonzero");
  if (m + n != 0) return 0.0;
  const int k = P_.level_k;
  const cplx q = P_.q;
  const cplx base = P_.qnum(cd_.b(i, j) * m) / double(m) * P_.qnum(k * m) * (1.0 - ipow(P_.p, m)) /
                    (1.0 - ipow(P_.pstar(), m)) * ipow(P_.kappa, -m * cd_.m(i, j)) * ipow(q, -k * m);
  return scale(f1, m) * scale(f2, n) * base;
}

cplx Heisenberg::module_coefficient(int i, int j, int n) const {
  const int k = P_.level_k;
  cplx c = P_.qnum(cd_.b(i, j) * n) * P_.qnum(k * n) / double(n) * (1.0 - ipow(P_.p, n)) /
           (1.0 - ipow(P_.pstar(), n)) * ipow(P_.q, -k * n);
  if (rule_ == AnnihilationRule::Bracket) c *= ipow(P_.kappa, -n * cd_.m(i, j));
  return c;
}

BosonState Heisenberg::apply_annihilation(int i, int n, const BosonState& s) const {
  if (n <= 0) throw ParamError("apply_annihilation: mode must be positive");
  BosonState out;
  std::vector<cplx> coef(cd_.n_nodes);
  for (int j = 0; j < cd_.n_nodes; ++j) coef[j] = module_coefficient(i, j, n);
  for (const auto& [mono, c] : s) {
    for (std::size_t t = 0; t < mono.size(); ++t) {
      if (mono[t].second != n) continue;
      if (t > 0 && mono[t - 1] == mono[t]) continue;  // handle each distinct generator once
      std::size_t mult = 1;
      while (t + mult < mono.size() && mono[t + mult] == mono[t]) ++mult;
      const cplx a = coef[mono[t].first];
      if (a == cplx(0.0)) continue;
      BosonMonomial r = mono;
      r.erase(r.begin() + t);
      out.try_emplace(std::move(r), 0.0).first->second += double(mult) * a * c;
    }
  }
  return out;
}

BosonState Heisenberg::apply_mode(ModeFamily f, int i, int l, const BosonState& s) const {
  if (l == 0) throw ParamError("apply_mode: zero mode");
  const cplx sc = scale(f, l);
  if (l > 0) {
    BosonState r = apply_annihilation(i, l, s);
    for (auto& kv : r) kv.second *= sc;
    return r;
  }
  BosonState out;
  for (const auto& [mono, c] : s) {
    BosonMonomial r = mono;
    r.insert(std::upper_bound(r.begin(), r.end(), std::make_pair(i, -l)), {i, -l});
    out.try_emplace(std::move(r), 0.0).first->second += sc * c;
  }
  return out;
}

namespace {

void add_to(BosonSeries& acc, const ExpKey& key, cplx a, const BosonState& s) {
  auto& dst = acc[key];
  axpy(dst, a, s);
}

// Terms of exp(sum_m a_m t^m alpha_{i,-m}) with total weight <= B.
struct CreationTerm {
  std::vector<int> modes;  // sorted ascending
  int weight;
  cplx coeff;
};

std::vector<CreationTerm> creation_terms(const std::vector<cplx>& a, int B) {
  std::vector<CreationTerm> out;
  std::vector<int> cur;
  std::function<void(int, int, cplx)> rec = [&](int m, int w, cplx c) {
    if (m > B) {
      out.push_back({cur, w, c});
      return;
    }
    cplx pw = 1.0;
    double fact = 1.0;
    const std::size_t base = cur.size();
    for (int n = 0; w + n * m <= B; ++n) {
      if (n > 0) {
        pw *= a[m];
        fact *= n;
        cur.push_back(m);
      }
      rec(m + 1, w + n * m, c * pw / fact);
    }
    cur.resize(base);
  };
  rec(1, 0, 1.0);
  return out;
}

}  // namespace

BosonSeries Heisenberg::apply_factor(const VertexFactor& f, const BosonSeries& in, int cap, int deg_cap,
                                     bool* truncated) const {
  BosonSeries out;
  if (f.annihilating) {
    // exp(sum_m a_m var^{-m} X_{i,m}) is the translation
    // alpha_{j,-m} -> alpha_{j,-m} + a_m c_ij(m) var^{-m}, since the modes act
    // as commuting constant-coefficient derivations.
    std::map<std::pair<int, int>, cplx> shift;
    auto shift_of = [&](std::pair<int, int> g) {
      auto it = shift.find(g);
      if (it != shift.end()) return it->second;
      const int m = g.second;
      const cplx s = double(f.eps) * ecoef(m) * scale(f.fam, m) * module_coefficient(f.color, g.first, m);
      shift.emplace(g, s);
      return s;
    };
    for (const auto& [key, st] : in)
      for (const auto& [mono, c] : st) {
        // Group equal generators: (generator, multiplicity).
        std::vector<std::pair<std::pair<int, int>, int>> groups;
        for (const auto& g : mono) {
          if (!groups.empty() && groups.back().first == g)
            ++groups.back().second;
          else
            groups.push_back({g, 1});
        }
        // Expand prod_g (x_g + s_g t^{-m_g})^{n_g}.
        struct Partial {
          BosonMonomial kept;
          int texp;
          cplx coeff;
        };
        std::vector<Partial> acc{{{}, 0, c}};
        for (const auto& [g, n] : groups) {
          const cplx sg = shift_of(g);
          std::vector<Partial> next;
          next.reserve(acc.size() * (n + 1));
          for (const Partial& pt : acc) {
            double binom = 1.0;
            cplx spow = 1.0;
            for (int r = 0; r <= n; ++r) {
              if (r > 0) {
                binom = binom * (n - r + 1) / r;
                spow *= sg;
              }
              if (r > 0 && sg == cplx(0.0)) break;
              Partial q2{pt.kept, pt.texp - r * g.second, pt.coeff * binom * spow};
              for (int t = 0; t < n - r; ++t) q2.kept.push_back(g);
              next.push_back(std::move(q2));
            }
          }
          acc = std::move(next);
        }
        for (Partial& pt : acc) {
          if (deg_cap >= 0 && degree(pt.kept) > deg_cap) {
            if (truncated) *truncated = true;
            continue;
          }
          ExpKey k2 = key;
          k2[f.var] += pt.texp;
          out[k2].try_emplace(std::move(pt.kept), 0.0).first->second += pt.coeff;
        }
      }
  } else {
    int Bmax = -1;
    for (const auto& kv : in) Bmax = std::max(Bmax, cap - kv.first[f.var]);
    if (deg_cap >= 0) Bmax = std::min(Bmax, deg_cap);
    if (Bmax < 0) {
      if (truncated && !in.empty()) *truncated = true;
      return out;
    }
    std::vector<cplx> a(Bmax + 1, 0.0);
    for (int m = 1; m <= Bmax; ++m) a[m] = double(f.eps) * ecoef(m) * scale(f.fam, -m);
    const auto terms = creation_terms(a, Bmax);
    for (const auto& [key, st] : in) {
      const int B = cap - key[f.var];
      if (B < 0) {
        if (truncated) *truncated = true;
        continue;
      }
      if (truncated) *truncated = true;  // the exponential never terminates
      for (const CreationTerm& t : terms) {
        if (t.weight > B) continue;
        ExpKey k2 = key;
        k2[f.var] += t.weight;
        auto& dst = out[k2];
        for (const auto& [mono, c] : st) {
          if (deg_cap >= 0 && degree(mono) + t.weight > deg_cap) continue;
          BosonMonomial r = mono;
          for (int m : t.modes) r.emplace_back(f.color, m);
          std::sort(r.begin(), r.end());
          dst.try_emplace(std::move(r), 0.0).first->second += t.coeff * c;
        }
      }
    }
  }
  return out;
}

BosonSeries Heisenberg::apply_word(const std::vector<VertexFactor>& word, const BosonSeries& in, int cap,
                                   int deg_cap, bool* truncated, int floor) const {
  if (in.empty()) return {};
  const std::size_t nv = in.begin()->first.size();
  const std::size_t n = word.size();
  for (const VertexFactor& f : word)
    if (f.var < 0 || static_cast<std::size_t>(f.var) >= nv) throw ParamError("apply_word: variable out of range");
  // creates_left[t][v]: some factor at index < t creates in v.
  std::vector<std::vector<bool>> creates_left(n + 1, std::vector<bool>(nv, false));
  for (std::size_t t = 0; t < n; ++t) {
    creates_left[t + 1] = creates_left[t];
    if (!word[t].annihilating) creates_left[t + 1][word[t].var] = true;
  }
  // Degree budget after the factor at index t: an annihilator still to come
  // can lower the degree by at most -floor unless its variable is created
  // again later, in which case there is no bound.
  constexpr int kInf = -1;
  std::vector<int> budget(n, kInf);
  if (deg_cap >= 0)
    for (std::size_t t = 0; t < n; ++t) {
      long b = deg_cap;
      for (std::size_t u = 0; u < t && b >= 0; ++u) {
        if (!word[u].annihilating) continue;
        if (floor == kNoFloor || creates_left[u][word[u].var])
          b = kInf;
        else
          b += -floor;
      }
      budget[t] = static_cast<int>(b);
    }
  std::vector<bool> created(nv, false);
  BosonSeries cur = in;
  for (std::size_t t = n; t-- > 0;) {
    const VertexFactor& f = word[t];
    if (f.annihilating && created[f.var])
      throw std::logic_error("apply_word: annihilation after creation in the same variable");
    if (!f.annihilating) created[f.var] = true;
    cur = apply_factor(f, cur, cap, budget[t], truncated);
    if (floor != kNoFloor)
      for (auto it = cur.begin(); it != cur.end();) {
        bool drop = false;
        for (std::size_t v = 0; v < nv && !drop; ++v) drop = it->first[v] < floor && !creates_left[t][v];
        it = drop ? cur.erase(it) : std::next(it);
      }
  }
  return cur;
}

BosonSeries seed_series(const BosonState& s, int nvars) { return {{ExpKey(nvars, 0), s}}; }

EExpansion apply_E(const Heisenberg& H, int sign, ModeFamily fam, int i, const BosonState& s, int D, int W) {
  for (const auto& kv : s)
    if (degree(kv.first) > D) throw ParamError("apply_E: input degree exceeds the cap");
  bool tr = false;
  const BosonSeries r = H.apply_word({E_factor(sign, fam, i, 0)}, seed_series(s, 1), W, D, &tr);
  EExpansion out;
  out.truncated = tr;
  for (const auto& [key, st] : r) {
    if (key[0] < -W || key[0] > W) {
      out.truncated = true;
      continue;
    }
    BosonState kept;
    for (const auto& [mono, c] : st) {
      if (degree(mono) > D) {
        out.truncated = true;
        continue;
      }
      kept.emplace(mono, c);
    }
    if (!kept.empty()) out.terms.emplace(key[0], std::move(kept));
  }
  return out;
}

std::vector<cplx> kernel_series(const std::vector<PochFactor>& k, int order) {
  std::vector<cplx> r(order + 1, 0.0);
  r[0] = 1.0;
  for (const PochFactor& f : k) r = series_mul(r, pochratio_series(f.a, f.b, f.s, order));
  return r;
}

namespace {

const char* kIds[kExchangeCount] = {
    "comm_alpha_Eplus",       "comm_alpha_Eminus",       "comm_alpha_Eplus_prime", "comm_alpha_Eminus_prime",
    "Eplus_Eminus",           "Eplus_Eminus_prime2",     "Eplus_Eminus_mixed",     "Eplus_prime_Eminus_mixed",
    "Eplus_xplus",            "Eminus_xplus",            "Eplus_xminus",           "Eminus_xminus",
    "Eplus_prime_xplus",      "Eminus_prime_xplus",      "Eplus_prime_xminus",     "Eminus_prime_xminus"};

struct Exchange {
  std::vector<VertexFactor> A;  // acts at z = var 0
  std::vector<VertexFactor> O;  // acts at w = var 1
  std::vector<PochFactor> kernel;
  int dir_z, dir_w;  // exponent shift per power of the kernel variable
};

Exchange make_exchange(const Heisenberg& H, int r, int i, int j) {
  const Params& P = H.params();
  const int b = H.cartan().b(i, j), m = H.cartan().m(i, j), k = H.level();
  const cplx q = P.q, qb = ipow(q, b), qmb = ipow(q, -b), qk = ipow(q, k), q2k = ipow(q, 2 * k);
  const cplx p = P.p, ps = P.pstar();
  const cplx km = ipow(P.kappa, -m), kp = ipow(P.kappa, m);
  using MF = ModeFamily;
  Exchange e;
  auto plus = [&](MF f) { return std::vector<VertexFactor>{E_factor(+1, f, i, 0)}; };
  auto minus = [&](MF f) { return std::vector<VertexFactor>{E_factor(-1, f, i, 0)}; };
  const int zw[2] = {-1, +1}, wz[2] = {+1, -1};
  auto set_dir = [&](const int* d) {
    e.dir_z = d[0];
    e.dir_w = d[1];
  };
  switch (r) {
    case 4:
      e.A = plus(MF::Alpha);
      e.O = {E_factor(-1, MF::Alpha, j, 1)};
      e.kernel = {{qmb * km, qb * km, q2k}, {ps * qmb * km, ps * qb * km, ps}};
      set_dir(zw);
      break;
    case 5:
      e.A = plus(MF::AlphaPrime);
      e.O = {E_factor(-1, MF::AlphaPrime, j, 1)};
      e.kernel = {{qmb * q2k * km, qb * q2k * km, q2k}, {p * qb * km, p * qmb * km, p}};
      set_dir(zw);
      break;
    case 6:
      e.A = plus(MF::Alpha);
      e.O = {E_factor(-1, MF::AlphaPrime, j, 1)};
      e.kernel = {{qb * qk * km, qmb * qk * km, q2k}};
      set_dir(zw);
      break;
    case 7:
      e.A = plus(MF::AlphaPrime);
      e.O = {E_factor(-1, MF::Alpha, j, 1)};
      e.kernel = {{qb * qk * km, qmb * qk * km, q2k}};
      set_dir(zw);
      break;
    case 8:
      e.A = plus(MF::Alpha);
      e.O = x_boson(+1, j, 1);
      e.kernel = {{qb * km, qmb * km, q2k}, {ps * qb * km, ps * qmb * km, ps}};
      set_dir(zw);
      break;
    case 9:
      e.A = minus(MF::Alpha);
      e.O = x_boson(+1, j, 1);
      e.kernel = {{qmb * kp, qb * kp, q2k}, {ps * qmb * kp, ps * qb * kp, ps}};
      set_dir(wz);
      break;
    case 10:
      e.A = plus(MF::Alpha);
      e.O = x_boson(-1, j, 1);
      e.kernel = {{qmb * qk * km, qb * qk * km, q2k}};
      set_dir(zw);
      break;
    case 11:
      e.A = minus(MF::Alpha);
      e.O = x_boson(-1, j, 1);
      e.kernel = {{qb * qk * kp, qmb * qk * kp, q2k}};
      set_dir(wz);
      break;
    case 12:
      e.A = plus(MF::AlphaPrime);
      e.O = x_boson(+1, j, 1);
      e.kernel = {{qmb * qk * km, qb * qk * km, q2k}};
      set_dir(zw);
      break;
    case 13:
      e.A = minus(MF::AlphaPrime);
      e.O = x_boson(+1, j, 1);
      e.kernel = {{qb * qk * kp, qmb * qk * kp, q2k}};
      set_dir(wz);
      break;
    case 14:
      e.A = plus(MF::AlphaPrime);
      e.O = x_boson(-1, j, 1);
      e.kernel = {{qb * q2k * km, qmb * q2k * km, q2k}, {p * qmb * km, p * qb * km, p}};
      set_dir(zw);
      break;
    case 15:
      e.A = minus(MF::AlphaPrime);
      e.O = x_boson(-1, j, 1);
      e.kernel = {{qmb * q2k * kp, qb * q2k * kp, q2k}, {p * qb * kp, p * qmb * kp, p}};
      set_dir(wz);
      break;
    default:
      throw ParamError("exchange relation index out of range");
  }
  return e;
}

struct Local {
  long samples = 0;
  double worst = 0.0;
  std::string where;
};

void compare_into(Local& loc, const BosonSeries& L, const BosonSeries& R, int W, int D, const std::string& tag) {
  auto in_window = [&](const ExpKey& k) {
    for (int e : k)
      if (e < -W || e > W) return false;
    return true;
  };
  auto visit = [&](const ExpKey& key, const BosonState* a, const BosonState* b) {
    std::map<BosonMonomial, std::pair<cplx, cplx>> both;
    if (a)
      for (const auto& [m, c] : *a)
        if (degree(m) <= D) both[m].first = c;
    if (b)
      for (const auto& [m, c] : *b)
        if (degree(m) <= D) both[m].second = c;
    for (const auto& [m, lr] : both) {
      ++loc.samples;
      const double res = std::abs(lr.first - lr.second) / (1.0 + std::abs(lr.first));
      if (res > loc.worst) {
        loc.worst = res;
        std::ostringstream os;
        os << tag << " out=" << monomial_str(m) << " exps=(";
        for (std::size_t t = 0; t < key.size(); ++t) os << (t ? "," : "") << key[t];
        os << ")";
        loc.where = os.str();
      }
    }
  };
  for (const auto& [key, st] : L)
    if (in_window(key)) {
      auto it = R.find(key);
      visit(key, &st, it == R.end() ? nullptr : &it->second);
    }
  for (const auto& [key, st] : R)
    if (in_window(key) && !L.count(key)) visit(key, nullptr, &st);
}

}  // namespace

std::string exchange_id(int r) {
  if (r < 0 || r >= kExchangeCount) throw ParamError("exchange relation index out of range");
  return kIds[r];
}

ExchangeReport check_exchange(const Heisenberg& H, int r, int D, int W) {
  ExchangeReport rep;
  rep.id = exchange_id(r);
  if (D < 0 || W < 1) throw ParamError("check_exchange: need D >= 0 and W >= 1");
  const int n = H.cartan().n_nodes;
  const auto basis = boson_basis(n, D);
  const int cap = 2 * W + 2;
  std::vector<Local> locals(basis.size());
  parallel_for(basis.size(), [&](std::size_t idx) {
    Local& loc = locals[idx];
    const BosonState v = make_state(basis[idx]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::ostringstream tag;
        tag << "i=" << i << " j=" << j << " in=" << monomial_str(basis[idx]);
        if (r < 4) {
          // [alpha_{i,-+l}, E^{+-}(X_j, z)] = coef z^{-+l} E^{+-}(X_j, z).
          const bool plus = r == 0 || r == 2;
          const ModeFamily fam = r < 2 ? ModeFamily::Alpha : ModeFamily::AlphaPrime;
          const std::vector<VertexFactor> E{E_factor(plus ? +1 : -1, fam, j, 0)};
          const Params& P = H.params();
          const int b = H.cartan().b(i, j), m = H.cartan().m(i, j), k = H.level();
          // alpha_{i,l} lowers the degree by at most l <= 4.
          const BosonSeries Ev = H.apply_word(E, seed_series(v, 1), cap, D + 4);
          for (int l = 1; l <= 4; ++l) {
            const int mode = plus ? -l : l;
            cplx coef = P.qnum(b * l) / double(l) * ipow(P.kappa, plus ? l * m : -l * m);
            if (fam == ModeFamily::Alpha)
              coef *= -(1.0 - ipow(P.p, l)) / (1.0 - ipow(P.pstar(), l)) * ipow(P.q, -k * l);
            BosonSeries L;
            for (const auto& [key, st] : Ev) add_to(L, key, 1.0, H.apply_mode(ModeFamily::Alpha, i, mode, st));
            BosonSeries vm = seed_series(H.apply_mode(ModeFamily::Alpha, i, mode, v), 1);
            for (const auto& [key, st] : H.apply_word(E, vm, cap, D)) add_to(L, key, -1.0, st);
            BosonSeries R;
            for (const auto& [key, st] : Ev) add_to(R, ExpKey{key[0] + (plus ? -l : l)}, coef, st);
            compare_into(loc, L, R, W, D, tag.str() + " l=" + std::to_string(l));
          }
          continue;
        }
        const Exchange e = make_exchange(H, r, i, j);
        std::vector<VertexFactor> lhs = e.A, pre = e.O;
        lhs.insert(lhs.end(), e.O.begin(), e.O.end());
        pre.insert(pre.end(), e.A.begin(), e.A.end());
        const BosonSeries seed = seed_series(v, 2);
        // Each variable is created at most once and never annihilated after
        // that, so an exponent cap of W is exact on the window. On the
        // reordered side the kernel power t never exceeds W (the annihilated
        // variable starts at <= 0 and ends in the window), hence 2W there.
        const BosonSeries L = H.apply_word(lhs, seed, W, D, nullptr, -W);
        const BosonSeries Rp = H.apply_word(pre, seed, 2 * W, D, nullptr, -2 * W);
        const std::vector<cplx> K = kernel_series(e.kernel, 2 * W + 2);
        BosonSeries R;
        for (const auto& [key, st] : Rp)
          for (std::size_t t = 0; t < K.size(); ++t) {
            ExpKey k2{key[0] + e.dir_z * int(t), key[1] + e.dir_w * int(t)};
            if (std::abs(k2[0]) > W || std::abs(k2[1]) > W) continue;
            add_to(R, k2, K[t], st);
          }
        compare_into(loc, L, R, W, D, tag.str());
      }
  });
  for (const Local& loc : locals) {
    rep.samples += loc.samples;
    if (loc.worst > rep.max_residual) {
      rep.max_residual = loc.worst;
      rep.worst_case = loc.where;
    }
  }
  return rep;
}

}  // namespace eqtor
