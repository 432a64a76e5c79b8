#pragma once

#include <complex>

namespace expbasis {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// sin(πx) with exact zeros at integers and exact ±1 at half-integers.
double sinPi(double x);
/// cos(πx) with exact zeros at half-integers.
double cosPi(double x);
/// e^{2πi x}; quarter turns are exact.
Complex unitPhase(double turns);
/// sin(z)/z, by series near zero.
double sinc(double z);
/// sinc(πu) = sin(πu)/(πu), exactly zero at nonzero integers u.
double sincPi(double u);

}  // namespace expbasis
