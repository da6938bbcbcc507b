#pragma once

#include "common.hpp"

namespace becrad::specfun {

// Principal-branch log Gamma for complex argument. Rejects poles at
// non-positive integers.
Complex log_gamma(Complex z);

// Lower incomplete gamma gamma(s, z) for complex s, z. Power series for
// |z| < |s| + 4, continued fraction for the upper function otherwise.
Complex lower_incomplete_gamma(Complex s, Complex z);

// Modified Bessel K1(x), x > 0. Underflows to 0 for large x.
double bessel_k1(double x);

namespace detail {

// Continued-fraction factor F with Gamma(s, z) = exp(-z + s log z) * F.
// Exposed separately so oscillatory-integral code can fold the exponential
// prefactor into its own phase bookkeeping without overflow.
Complex upper_gamma_cf(Complex s, Complex z);

// Series factor S with gamma(s, z) = exp(-z + s log z) * S,
// S = sum_n z^n / (s (s+1) ... (s+n)).
Complex lower_gamma_series(Complex s, Complex z);

}  // namespace detail

}  // namespace becrad::specfun
