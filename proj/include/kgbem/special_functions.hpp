#pragma once

namespace kgbem {

/// Euler–Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286060651209008;

/// Modified Bessel function I0(z) for z >= 0.
double i0(double z);

/// Modified Bessel function I1(z) for z >= 0.
double i1(double z);

/// Modified Bessel function K0(z) for z > 0.
double k0(double z);

/// Modified Bessel function K1(z) for z > 0.
double k1(double z);

/// Smooth remainder of K0: sigma0(z) = K0(z) + ln(z/2) I0(z), for z >= 0.
///
/// Evaluated by its own even power series so that no accuracy is lost near
/// the logarithmic singularity of K0 at z = 0.  sigma0(0) = -euler_gamma.
double sigma0(double z);

/// Smooth remainder of K1: sigma1(z) = K1(z) - 1/z - ln(z/2) I1(z), for z >= 0.
///
/// Evaluated by its own odd power series; the limit at z = 0 is 0.
double sigma1(double z);

}  // namespace kgbem
