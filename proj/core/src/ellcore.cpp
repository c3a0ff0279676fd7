#include "eqtor/ellcore.hpp"

#include <algorithm>
#include <cmath>

namespace eqtor {

GKernel gkernel(cplx z, cplx s, int b, cplx q, int M) {
  GKernel g;
  g.series = gkernel_series(z, s, b, q, M);
  g.closed = gkernel_closed(z, s, b, q, M);
  g.diff = std::abs(g.series - g.closed) / (1.0 + std::abs(g.closed));
  return g;
}

bool near_theta_zero(cplx x, cplx p, double guard) {
  if (x == 0.0) return true;
  const double lp = std::log(std::abs(p));
  const double n0 = std::round(std::log(std::abs(x)) / lp);
  for (double dn = -1; dn <= 1; ++dn) {
    const int n = static_cast<int>(n0 + dn);
    if (std::abs(x / ipow(p, n) - 1.0) < guard) return true;
  }
  return false;
}

cplx ThetaRatioSpec::eval(cplx z, cplx p, int M) const {
  cplx r = scalar;
  for (cplx n : numer) r *= theta(n / z, p, M);
  for (cplx d : denom) r /= theta(d / z, p, M);
  return r;
}

cplx ThetaRatioSpec::balance_ratio() const {
  cplx r = 1.0;
  for (cplx n : numer) r *= n;
  for (cplx d : denom) r /= d;
  return r;
}

namespace {

void check_simple_poles(const ThetaRatioSpec& spec, const Params& params) {
  for (std::size_t s = 0; s < spec.denom.size(); ++s)
    for (std::size_t t = 0; t < spec.denom.size(); ++t)
      if (s != t && near_theta_zero(spec.denom[t] / spec.denom[s], params.p, params.pole_guard))
        throw ParamError("phi_delta_difference: repeated poles modulo p^Z");
}

cplx pp2(const Params& params) {
  const cplx pp = qpoch(params.p, params.p, params.trunc_M);
  return pp * pp;
}

}  // namespace

std::vector<DeltaResidue> phi_delta_difference_residue(const ThetaRatioSpec& spec, const Params& params) {
  check_simple_poles(spec, params);
  const int M = params.trunc_M;
  const cplx norm = pp2(params);
  std::vector<DeltaResidue> out;
  for (std::size_t s = 0; s < spec.denom.size(); ++s) {
    const cplx d = spec.denom[s];
    cplx c = spec.scalar / norm;
    for (cplx n : spec.numer) c *= theta(n / d, params.p, M);
    for (std::size_t t = 0; t < spec.denom.size(); ++t)
      if (t != s) c /= theta(spec.denom[t] / d, params.p, M);
    out.push_back({s, d, c});
  }
  return out;
}

std::vector<DeltaResidue> phi_delta_difference_pf(const ThetaRatioSpec& spec, const Params& params) {
  if (spec.numer.size() != spec.denom.size())
    throw ParamError("phi_delta_difference_pf: numerator and denominator counts differ");
  check_simple_poles(spec, params);
  const cplx Q = spec.balance_ratio();
  if (near_theta_zero(Q, params.p, params.pole_guard))
    throw ParamError("phi_delta_difference_pf: Q lies on p^Z");
  const int M = params.trunc_M;
  const cplx pref = spec.scalar * theta(Q, params.p, M) / (theta(1.0 / Q, params.p, M) * pp2(params));
  std::vector<DeltaResidue> out;
  for (std::size_t i = 0; i < spec.denom.size(); ++i) {
    const cplx d = spec.denom[i];
    cplx c = pref;
    for (cplx n : spec.numer) c *= theta(d / n, params.p, M);
    for (std::size_t s = 0; s < spec.denom.size(); ++s)
      if (s != i) c /= theta(d / spec.denom[s], params.p, M);
    out.push_back({i, d, c});
  }
  return out;
}

std::vector<DeltaResidue> phi_delta_difference(const ThetaRatioSpec& spec, const Params& params) {
  if (spec.denom.empty()) return {};
  if (spec.numer.size() == spec.denom.size() &&
      !near_theta_zero(spec.balance_ratio(), params.p, params.pole_guard))
    return phi_delta_difference_pf(spec, params);
  return phi_delta_difference_residue(spec, params);
}

}  // namespace eqtor
