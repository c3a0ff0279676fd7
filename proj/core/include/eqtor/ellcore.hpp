#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eqtor/params.hpp"

namespace eqtor {

namespace detail {
template <class T>
bool is_finite_value(const T& z) {
  using std::imag;
  using std::isfinite;
  using std::real;
  return isfinite(real(z)) && isfinite(imag(z));
}
}  // namespace detail

// (z; s)_infinity truncated to M factors.
template <class T>
T qpoch(const T& z, const T& s, int M) {
  if (M < 1) throw ParamError("qpoch: cutoff must be positive");
  if (!detail::is_finite_value(z) || !detail::is_finite_value(s))
    throw ParamError("qpoch: non-finite input");
  using std::abs;
  if (!(abs(s) < 1)) throw ParamError("qpoch: |s| must be < 1");
  T r(1), sn(1);
  for (int n = 0; n < M; ++n) {
    r *= T(1) - z * sn;
    sn *= s;
  }
  return r;
}

// Odd Jacobi theta function (z; p)(p/z; p).
template <class T>
T theta(const T& z, const T& p, int M) {
  if (z == T(0)) throw ParamError("theta: z must be nonzero");
  return qpoch(z, p, M) * qpoch(p / z, p, M);
}

template <class T>
T gkernel_series(const T& z, const T& s, int b, const T& q, int M) {
  if (M < 1) throw ParamError("gkernel: cutoff must be positive");
  T acc(0), sz(1), qb(1), sm(1);
  const T qq = ipow(q, b);
  for (int m = 1; m <= M; ++m) {
    sz *= s * z;
    qb *= qq;
    sm *= s;
    acc += (qb - T(1) / qb) / (T(1) - sm) * sz / T(m);
  }
  using std::exp;
  return exp(-acc);
}

template <class T>
T gkernel_closed(const T& z, const T& s, int b, const T& q, int M) {
  return qpoch(s * ipow(q, b) * z, s, M) / qpoch(s * ipow(q, -b) * z, s, M);
}

struct GKernel {
  cplx series;
  cplx closed;
  double diff;
};

// g_ij(z; s) by both branches. diff is relative to 1 + |closed|.
GKernel gkernel(cplx z, cplx s, int b, cplx q, int M);

// Coefficients c_0..c_W of (a xi; s)/(b xi; s) in xi, via the exact
// logarithmic series and the exponential recurrence.
template <class T>
std::vector<T> pochratio_series(const T& a, const T& b, const T& s, int W) {
  if (W < 0) throw ParamError("pochratio_series: negative order");
  using std::abs;
  if (!(abs(s) < 1)) throw ParamError("pochratio_series: |s| must be < 1");
  std::vector<T> L(W + 1, T(0)), c(W + 1, T(0));
  T am(1), bm(1), sm(1);
  for (int m = 1; m <= W; ++m) {
    am *= a;
    bm *= b;
    sm *= s;
    L[m] = -(am - bm) / (T(m) * (T(1) - sm));
  }
  c[0] = T(1);
  for (int n = 1; n <= W; ++n) {
    T acc(0);
    for (int k = 1; k <= n; ++k) acc += T(k) * L[k] * c[n - k];
    c[n] = acc / T(n);
  }
  return c;
}

// Product of power series truncated at the shorter length.
template <class T>
std::vector<T> series_mul(const std::vector<T>& x, const std::vector<T>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  std::vector<T> r(n, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] += x[i] * y[j];
  return r;
}

// Whether x lies within relative distance guard of the zero set p^Z of theta_p.
bool near_theta_zero(cplx x, cplx p, double guard);

template <class T>
struct PfResult {
  T lhs;
  T rhs;
};

// Elliptic partial fractions: prod theta(b_s/t)/theta(a_s/t) against the
// sum over simple poles, for balanced a_1..a_n t = b_1..b_{n+1}.
template <class T>
PfResult<T> pf_expand(const std::vector<T>& a, const std::vector<T>& b, const T& t, const T& p, int M,
                      double tol = 1e-9, double guard = 1e-4) {
  using std::abs;
  const std::size_t n = a.size();
  if (n == 0 || b.size() != n + 1) throw ParamError("pf_expand: need n poles and n+1 zeros");
  T pa = t, pb(1);
  for (const T& x : a) pa *= x;
  for (const T& x : b) pb *= x;
  const double scale = std::max(1.0, std::max(double(abs(pa)), double(abs(pb))));
  if (double(abs(pa - pb)) > tol * scale) throw ParamError("pf_expand: balance condition violated");
  auto guard_ok = [&](const T& x) {
    cplx v(double(x.real()), double(x.imag()));
    return !near_theta_zero(v, cplx(double(p.real()), double(p.imag())), guard);
  };
  for (const T& x : a)
    if (!guard_ok(x / t)) throw ParamError("pf_expand: t too close to a pole");
  if (!guard_ok(b[n] / t)) throw ParamError("pf_expand: b_{n+1}/t is a theta zero");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s)
      if (s != i && !guard_ok(a[i] / a[s])) throw ParamError("pf_expand: repeated poles");

  T lhs(1);
  for (std::size_t s = 0; s < n; ++s) lhs *= theta(b[s] / t, p, M) / theta(a[s] / t, p, M);
  T rhs(0);
  for (std::size_t i = 0; i < n; ++i) {
    T term = theta(a[i] / b[n], p, M) / theta(a[i] / t, p, M);
    for (std::size_t s = 0; s < n; ++s) term *= theta(a[i] / b[s], p, M);
    for (std::size_t s = 0; s < n; ++s)
      if (s != i) term /= theta(a[i] / a[s], p, M);
    rhs += term;
  }
  rhs /= theta(b[n] / t, p, M);
  return {lhs, rhs};
}

// scalar * prod theta(n_s/z) / prod theta(d_s/z).
struct ThetaRatioSpec {
  std::vector<cplx> numer;
  std::vector<cplx> denom;
  cplx scalar{1.0, 0.0};

  cplx eval(cplx z, cplx p, int M) const;
  // Product of numerator shifts over product of denominator shifts.
  cplx balance_ratio() const;
  bool empty() const { return numer.empty() && denom.empty(); }
};

struct DeltaResidue {
  std::size_t index;  // position in denom
  cplx support;
  cplx coeff;
};

// The distribution f|_+ - f|_- as a finite sum of delta(d_s/z). The |_+ side
// expands every factor 1/theta(d/z) in nonnegative powers of d/z near the pole,
// which gives theta(wx)/(theta(w)theta(x))|_+ - |_- = delta(x)/(p;p)^2.
std::vector<DeltaResidue> phi_delta_difference(const ThetaRatioSpec& spec, const Params& params);
// Residue route, valid for any spec with simple poles.
std::vector<DeltaResidue> phi_delta_difference_residue(const ThetaRatioSpec& spec, const Params& params);
// Partial-fraction route with b_{n+1} = Q^{-1} z. Throws ParamError when the
// spec is unbalanced in length or Q sits on p^Z (the identity degenerates).
std::vector<DeltaResidue> phi_delta_difference_pf(const ThetaRatioSpec& spec, const Params& params);

// c * prod delta(support_i / var_i) tensored with a payload vector.
template <class Payload>
struct DeltaTerm {
  std::vector<Mono> supports;
  cplx coeff;
  Payload payload;
};

// Multiplying a delta term by f(var_1, ...) is evaluating f at the supports.
template <class Payload, class F>
DeltaTerm<Payload> multiply_at_supports(const DeltaTerm<Payload>& t, const F& f, const Params& params) {
  std::vector<cplx> at;
  at.reserve(t.supports.size());
  for (const Mono& m : t.supports) at.push_back(params.support(m));
  DeltaTerm<Payload> r = t;
  r.coeff *= f(at);
  return r;
}

}  // namespace eqtor
