#pragma once

// Extended-precision scalars for the ellcore templates. Digits is the number of
// decimal digits carried in the mantissa.

#include <boost/multiprecision/cpp_complex.hpp>

#include "eqtor/ellcore.hpp"

namespace eqtor {

template <unsigned Digits>
using hp_complex = boost::multiprecision::cpp_complex<Digits>;

template <unsigned Digits>
hp_complex<Digits> to_hp(cplx z) {
  return hp_complex<Digits>(z.real(), z.imag());
}

template <class T>
cplx to_double(const T& z) {
  return cplx(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

}  // namespace eqtor
