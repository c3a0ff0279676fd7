#include "eqtor/fock01.hpp"

#include <cmath>
#include <sstream>

namespace eqtor {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

DynWeight shift(int n, int j, int alpha, int rq) {
  DynWeight w = DynWeight::zero(n);
  w.alpha[j] = alpha;
  w.rq[j] = rq;
  return w;
}

// Product of phi factors at z = u * at, with exact bookkeeping of theta zeros
// and poles that sit exactly on the support.
struct Evaluated {
  cplx value{1.0, 0.0};
  int order = 0;  // zeros minus poles
};

Evaluated eval_at_mono(const std::vector<PhiFactor>& f, Mono at, const Params& P) {
  Evaluated e;
  for (const PhiFactor& x : f) {
    e.value *= ipow(P.q, x.qpow);
    const Mono n = x.numer / at, d = x.denom / at;
    if (n == Mono{}) {
      ++e.order;
    } else {
      e.value *= theta(P.mono(n), P.p, P.trunc_M);
    }
    if (d == Mono{}) {
      --e.order;
    } else {
      e.value /= theta(P.mono(d), P.p, P.trunc_M);
    }
  }
  return e;
}

}  // namespace

ThetaRatioSpec PhiAction::spec(const Params& P) const {
  ThetaRatioSpec s;
  for (const PhiFactor& f : factors) {
    s.numer.push_back(P.support(f.numer));
    s.denom.push_back(P.support(f.denom));
    s.scalar *= ipow(P.q, f.qpow);
  }
  return s;
}

int PhiAction::kplus_exponent() const {
  int e = 0;
  for (const PhiFactor& f : factors) e += f.qpow;
  return e;
}

cplx PhiAction::kplus(const Params& P) const { return ipow(P.q, kplus_exponent()); }

cplx c_plus(const Params& P) {
  return qpoch(P.p * P.q * P.q, P.p, P.trunc_M) / qpoch(P.p, P.p, P.trunc_M);
}

cplx c_minus(const Params& P) {
  return qpoch(P.p / (P.q * P.q), P.p, P.trunc_M) / qpoch(P.p, P.p, P.trunc_M);
}

FockRep::FockRep(int N, int k, Params params) : N_(N), k_(k), P_(params), cd_(cartan_data_gl(N)) {
  if (k < 0 || k >= N) throw ParamError("root color out of range");
}

Basis FockRep::basis(const ColoredPartition& lam) const { return {lam.parts, DynWeight::zero(N_)}; }

DeltaVector FockRep::apply_x(int sign, int j, const Basis& v) const {
  const ColoredPartition lam = partition(v);
  const auto bl = boxes_by_color(lam, j);
  DeltaVector out;
  if (sign > 0) {
    const cplx C = c_plus(P_);
    for (Box X : bl.addable)
      out.push_back({{kQ2 * box_mono(X)},
                     C * coeff_plus(lam, X, P_),
                     {lam.added(X).parts, v.wt + shift(N_, j, 1, -1)}});
  } else {
    const cplx C = c_minus(P_);
    for (Box X : bl.removable)
      out.push_back({{kQ2 * box_mono(X)},
                     C * coeff_minus(lam, X, P_),
                     {lam.removed(X).parts, v.wt + shift(N_, j, -1, 0)}});
  }
  return out;
}

PhiAction FockRep::phi(int j, const Basis& v) const {
  return {phi_factors(partition(v), j, Form::Box), shift(N_, j, 0, -1)};
}

std::string FockRep::label_str(const Basis& v) const {
  return "(" + partition(v).str() + ")";
}

std::unique_ptr<Rep> FockRep::rescaled(int qshift) const {
  Params P = P_;
  P.u *= ipow(P.q, qshift);
  return std::make_unique<FockRep>(N_, k_, P);
}

DeltaVector apply_xplus(const FockRep& rep, int j, const Basis& v) { return rep.apply_x(+1, j, v); }
DeltaVector apply_xminus(const FockRep& rep, int j, const Basis& v) { return rep.apply_x(-1, j, v); }
PhiAction phi_action(const FockRep& rep, int j, const Basis& v) { return rep.phi(j, v); }

VectorRep::VectorRep(int N, int k, Mono base, Params params)
    : N_(N), k_(k), base_(base), P_(params), cd_(cartan_data_gl(N)) {}

Basis VectorRep::basis(int j) const { return {{j}, DynWeight::zero(N_)}; }

std::vector<int> VectorRep::degree(int j) const {
  const int r = mod(j, N_);
  const int m = (j - r) / N_;
  std::vector<int> d(N_, m);
  for (int s = 0; s <= r; ++s) d[mod(k_ - s, N_)] += 1;
  return d;
}

DeltaVector VectorRep::apply_x(int sign, int i, const Basis& v) const {
  const int j = v.label.at(0);
  DeltaVector out;
  if (sign > 0) {
    if (mod(i + j + 1 - k_, N_) == 0)
      out.push_back({{mono_pow(kQ1, j + 1) * base_}, c_plus(P_), {{j + 1}, v.wt + shift(N_, i, 1, -1)}});
  } else {
    if (mod(i + j - k_, N_) == 0)
      out.push_back({{mono_pow(kQ1, j) * base_}, c_minus(P_), {{j - 1}, v.wt + shift(N_, i, -1, 0)}});
  }
  return out;
}

PhiAction VectorRep::phi(int i, const Basis& v) const {
  const int j = v.label.at(0);
  PhiAction a{{}, shift(N_, i, 0, -1)};
  if (mod(i + j - k_, N_) == 0)
    a.factors.push_back({mono_pow(kQ1, j + 1) * kQ3 * base_, mono_pow(kQ1, j) * base_, 1});
  else if (mod(i + j + 1 - k_, N_) == 0)
    a.factors.push_back({mono_pow(kQ1, j) * kQ3.inv() * base_, mono_pow(kQ1, j + 1) * base_, -1});
  return a;
}

std::string VectorRep::label_str(const Basis& v) const { return "[" + std::to_string(v.label.at(0)) + "]"; }

std::unique_ptr<Rep> VectorRep::rescaled(int qshift) const {
  Params P = P_;
  P.u *= ipow(P.q, qshift);
  return std::make_unique<VectorRep>(N_, k_, base_, P);
}

TensorAction tensor_apply(int m, Gen gen, int color, const ColoredPartition& lam, const Params& P) {
  if (m < 1) throw ParamError("tensor_apply: cutoff must be positive");
  if (lam.length() > m - 1) throw ParamError("tensor_apply: partition too long for the cutoff");
  const int N = lam.N, k = lam.k;
  std::vector<VectorRep> fac;
  for (int a = 1; a <= m + 1; ++a) fac.emplace_back(N, k, mono_pow(kQ2, -(a - 1)), P);
  auto idx = [&](int a) { return lam.row(a) - a; };
  auto phi_of = [&](int a) { return fac[a - 1].phi(color, fac[a - 1].basis(idx(a))).factors; };
  // Beyond the m-th factor the empty rows telescope to the (m+1)-th factor's
  // phi when it is of the second kind; first-kind factors cancel against the next factor.
  auto tail = [&]() {
    std::vector<PhiFactor> f;
    const int j = idx(m + 1);
    if (mod(color + j + 1 - k, N) == 0) f = phi_of(m + 1);
    return f;
  };

  TensorAction out;
  const DynWeight zero = DynWeight::zero(N);
  if (gen == Gen::Phi) {
    for (int a = 1; a <= m; ++a)
      for (const PhiFactor& f : phi_of(a)) out.phi.factors.push_back(f);
    for (const PhiFactor& f : tail()) out.phi.factors.push_back(f);
    out.phi.weight_shift = shift(N, color, 0, -1);
    return out;
  }
  const int sign = gen == Gen::XPlus ? 1 : -1;
  for (int a = 1; a <= m; ++a) {
    const DeltaVector t = fac[a - 1].apply_x(sign, color, fac[a - 1].basis(idx(a)));
    if (t.empty()) continue;
    const Mono at = t[0].supports[0];
    std::vector<PhiFactor> dress;
    if (sign > 0) {
      for (int b = 1; b < a; ++b)
        for (const PhiFactor& f : phi_of(b)) dress.push_back(f);
    } else {
      for (int b = a + 1; b <= m; ++b)
        for (const PhiFactor& f : phi_of(b)) dress.push_back(f);
      for (const PhiFactor& f : tail()) dress.push_back(f);
    }
    const Evaluated e = eval_at_mono(dress, at, P);
    if (e.order < 0) throw ParamError("tensor_apply: pole of the dressing at the support");
    const cplx coeff = e.order > 0 ? cplx(0.0) : t[0].coeff * e.value;
    std::vector<int> parts(std::max(m, lam.length()), 0);
    for (int s = 1; s <= (int)parts.size(); ++s) parts[s - 1] = lam.row(s);
    parts[a - 1] += sign;
    if (!is_partition(parts)) {
      out.dropped_max = std::max(out.dropped_max, std::abs(coeff));
      continue;
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    out.terms.push_back({{at}, coeff, {parts, zero + (t[0].payload.wt)}});
  }
  return out;
}

}  // namespace eqtor
