#pragma once

namespace vsn {

// Gauss error function. Thin wrapper over std::erf (sub-ulp accurate in
// glibc), kept as a named entry point so erf_inv and the half-Gaussian
// code share one definition.
double erf(double x);

// Inverse of erf on (-1, 1). |erf(erf_inv(y)) - y| <= 1e-10 absolute over
// the domain (in practice near machine precision). Throws std::domain_error
// for |y| >= 1.
double erf_inv(double y);

// Lower real branch W_{-1} of the Lambert W function on [-1/e, 0).
// Returns w <= -1 with |w e^w - x| <= 1e-10 relative; the branch point
// maps to exactly -1. Throws std::domain_error outside [-1/e, 0).
double lambert_w_lower(double x);

}  // namespace vsn
