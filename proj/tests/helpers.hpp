#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "eqtor/params.hpp"

namespace testing_support {

using eqtor::cplx;

inline cplx random_polar(std::mt19937_64& rng, double rmin, double rmax) {
  std::uniform_real_distribution<double> r(rmin, rmax), a(-M_PI, M_PI);
  return std::polar(r(rng), a(rng));
}

inline double rel(cplx a, cplx b) { return std::abs(a - b) / (1.0 + std::abs(a)); }

// Laurent coefficient of z^n of f on the circle |z| = radius, by the trapezoid rule.
template <class F>
cplx laurent_coeff(const F& f, double radius, int n, int points = 1024) {
  cplx acc = 0.0;
  for (int s = 0; s < points; ++s) {
    const cplx z = std::polar(radius, 2.0 * M_PI * s / points);
    acc += f(z) * std::pow(z, -n);
  }
  return acc / double(points);
}

}  // namespace testing_support
