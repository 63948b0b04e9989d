#pragma once

#include <complex>

// Gamma-family special functions shared by the L-function evaluators.
// Everything here is classical numerics: Lanczos for log Gamma, an
// asymptotic series (with downward recurrence) for digamma, and the
// series / continued-fraction pair for the upper incomplete gamma.

namespace resonance::gammafn {

using cplx = std::complex<double>;

// Principal-branch log Gamma via the Lanczos approximation (g = 7, 9 terms),
// reflected for Re z < 1/2.  Relative accuracy ~1e-13 away from the poles
// z = 0, -1, -2, ...
cplx log_gamma(cplx z);

// Gamma(z) = exp(log_gamma(z)); overflows for large real z as usual.
cplx gamma(cplx z);

// Real digamma psi(x) for x > 0: recurrence up the axis, then the
// Bernoulli asymptotic series.  Absolute accuracy ~1e-14.
double digamma(double x);

// Upper incomplete gamma Gamma(a, x) for complex a and real x > 0.
// Uses the Lentz continued fraction when x dominates |a| and the lower
// series against Gamma(a) otherwise.
cplx upper_incomplete_gamma(cplx a, double x);

} // namespace resonance::gammafn
