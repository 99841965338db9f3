#pragma once

#include <complex>
#include <span>

#include "mhpoly/series.hpp"

namespace mhpoly {

/// True when z is exactly 0, -1, -2, ... (a pole of Gamma).
bool is_nonpositive_integer(cplx z);

/// Rising factorial (u)_k = u (u+1) ... (u+k-1); (u)_0 = 1.
/// Exact zero when u is a nonpositive integer with -u < k.
cplx pochhammer(cplx u, int k);

/// log Gamma(x) for real x > 0.
double log_gamma(double x);

/// Principal branch of log Gamma(z), continuous on the plane cut along the
/// negative real axis. Throws std::domain_error at the poles 0, -1, -2, ...
cplx log_gamma(cplx z);

/// 1/Gamma, entire; exactly 0 at z = 0, -1, -2, ...
double recip_gamma(double x);
cplx recip_gamma(cplx z);

/// Generalized hypergeometric series pFq(upper; lower; z).
///
/// A nonpositive-integer upper parameter terminates the series, which is then
/// summed exactly over its nonzero terms. Otherwise the series must converge
/// (p <= q, or p == q+1 with |z| < 1) and is summed under ctrl's stopping
/// rule. A nonpositive-integer lower parameter whose pole would be reached
/// before termination is a parameter error.
cplx pfq(std::span<const cplx> upper, std::span<const cplx> lower, cplx z,
         const SeriesControl& ctrl = {});

/// Entire incomplete gamma function, gammastar(b, z) = e^{-z} sum_j z^j / Gamma(b+1+j),
/// entire in both arguments: the reciprocal gamma makes pole terms exact zeros.
cplx gamma_star(cplx b, cplx z, const SeriesControl& ctrl = {});

/// Incomplete beta function B_z(a, b) through its 2F1 representation
/// B_z(a,b) = (z^a / a) 2F1(a, 1-b; a+1; z), which continues the defining
/// integral to b <= 0. Requires a not a nonpositive integer.
cplx inc_beta(double z, cplx a, cplx b, const SeriesControl& ctrl = {});

}  // namespace mhpoly
