#include "eqtor/params.hpp"

#include <cmath>
#include <sstream>

namespace eqtor {

namespace {
bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
}  // namespace

cplx Params::qnum(int n) const { return (ipow(q, n) - ipow(q, -n)) / (q - 1.0 / q); }

void Params::validate() const {
  for (cplx z : {q, kappa, p, u})
    if (!finite(z)) throw ParamError("non-finite parameter");
  if (q == 0.0 || kappa == 0.0 || u == 0.0) throw ParamError("q, kappa and u must be nonzero");
  if (p == 0.0) throw ParamError("p must be nonzero");
  if (trunc_M < 1) throw ParamError("trunc_M must be positive");
  if (!(tol > 0)) throw ParamError("tol must be positive");
  const double ap = std::abs(p);
  const double aq2 = std::norm(q);
  if (ap >= 1.0) throw ParamError("|p| must be < 1");
  if (ap >= aq2 || ap * aq2 >= 1.0) throw ParamError("|p| must be < |q|^2 and < |q|^-2");
  if (std::abs(pstar()) >= 1.0) throw ParamError("|p q^{-2k}| must be < 1");
  for (int n = 1; n <= 8; ++n)
    if (std::abs(ipow(q, n) - 1.0) <= tol) throw ParamError("q is a root of unity of low order");
  for (int n = -8; n <= 8; ++n)
    for (int m = -8; m <= 8; ++m)
      if (n != 0 && std::abs(ipow(kappa, n) * ipow(q, m) - 1.0) <= tol)
        throw ParamError("kappa^n q^m = 1 for small n, m");
}

std::string to_string(cplx z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

}  // namespace eqtor
