#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eqtor {

using cplx = std::complex<double>;

// Raised for inputs outside the admissible parameter regime.
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
T ipow(const T& z, int n) {
  T base = n < 0 ? T(1) / z : z;
  unsigned e = n < 0 ? static_cast<unsigned>(-(long long)n) : static_cast<unsigned>(n);
  T r(1);
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

// Exact monomial q^qe * kappa^ke. Every spectral support in the level-0
// modules is u times one of these, so they double as exact keys.
struct Mono {
  int qe = 0;
  int ke = 0;
  friend auto operator<=>(const Mono&, const Mono&) = default;
  Mono operator*(const Mono& o) const { return {qe + o.qe, ke + o.ke}; }
  Mono inv() const { return {-qe, -ke}; }
  Mono operator/(const Mono& o) const { return *this * o.inv(); }
};

inline constexpr Mono kQ1{-1, 1};   // kappa q^-1
inline constexpr Mono kQ2{2, 0};    // q^2
inline constexpr Mono kQ3{-1, -1};  // kappa^-1 q^-1

inline Mono mono_pow(Mono m, int n) { return {m.qe * n, m.ke * n}; }

struct Params {
  cplx q = std::polar(0.9, 0.3);
  cplx kappa = std::polar(1.1, 0.4);
  cplx p = std::polar(0.05, 0.2);
  cplx u = std::polar(1.3, 0.1);
  int level_k = 0;
  int trunc_M = 40;
  double tol = 1e-8;
  double pole_guard = 1e-4;
  std::uint64_t seed = 20240611;

  cplx pstar() const { return p * ipow(q, -2 * level_k); }
  cplx mono(Mono m) const { return ipow(q, m.qe) * ipow(kappa, m.ke); }
  cplx support(Mono m) const { return u * mono(m); }
  // Quantum number [n] = (q^n - q^-n)/(q - q^-1).
  cplx qnum(int n) const;

  Params with_level(int k) const {
    Params r = *this;
    r.level_k = k;
    return r;
  }

  // Throws ParamError unless |p| < min(1, |q|^2, |q|^-2), |p*| < 1 and q, kappa
  // are generic up to exponent 8.
  void validate() const;
};

std::string to_string(cplx z);

}  // namespace eqtor
