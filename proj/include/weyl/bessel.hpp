#pragma once

#include "weyl/numeric.hpp"

namespace weyl::bessel {

using num::cplx;

// Modified Bessel K_nu(x) for complex order and real x > 0, via the integral
// representation Integral_0^inf e^{-x cosh u} cosh(nu u) du for moderate x and
// the large-x asymptotic series beyond.  Supported domain: x >= 0.05,
// |Re nu| <= 3, |Im nu| <= 120.
cplx bessel_k(cplx nu, double x);

// Upper bound |K_nu(x)| <= sqrt(2 pi / x) e^{-x + Re(nu)^2/(2x)} for x >= 1
// (used for Fourier-tail estimates).
double bessel_k_bound(cplx nu, double x);

} // namespace weyl::bessel
