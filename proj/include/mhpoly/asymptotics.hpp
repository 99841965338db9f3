#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mhpoly/family.hpp"
#include "mhpoly/series.hpp"

namespace mhpoly {

/// A polynomial value under the degree-n normalizer sigma_n / Gamma(n - x):
/// the quantity whose n -> infinity limit is the family's limiting entire
/// function. sigma_n is a^n (standard Charlier), (-1)^n (monic/associated
/// Charlier), c^n (beta)_n (standard Meixner), (c-1)^n (monic/associated
/// Meixner).
struct ScaledPolyValue {
    cplx value;
    Family family;
    PolyKind kind;
    long n;

    std::string normalizer() const;
};

/// Limiting entire function of the scaled polynomials:
///   Charlier standard/monic:  e^a / Gamma(-x)
///   Charlier associated:      -gammastar(-x, -a)
///   Meixner standard/monic:   (1-c)^{-beta-x} / Gamma(-x)
///   Meixner associated:       (1-c)^{-x} / (x Gamma(-x)) * 2F1(-x, beta; 1-x; c)
cplx mh_limit(const Family& fam, PolyKind kind, cplx x, const SeriesControl& ctrl = {});

/// Equivalent incomplete-beta route to the associated Meixner limit:
/// -(c/(1-c))^x B_c(-x, 1-beta) / Gamma(-x). Requires x not a nonnegative
/// integer; used to cross-check the 2F1 form.
cplx mh_limit_via_inc_beta(const Family& fam, cplx x, const SeriesControl& ctrl = {});

/// sigma_n P_n(x) / Gamma(n - x) by a renormalized forward recurrence that
/// never overflows. Near the poles of the renormalized coefficients (x within
/// 1e-8 of an integer in [0, n]) it falls back to the direct polynomial value
/// divided by Gamma(n - x) on the log scale.
ScaledPolyValue scaled_poly(const Family& fam, PolyKind kind, long n, cplx x);

/// Stieltjes transform S(z) = sum_k w_k / (z - k) by its hypergeometric form:
/// (1/z) 1F1(-z; 1-z; a) for Charlier, (1/z) 2F1(-z, beta; 1-z; c) for
/// Meixner. Requires z off [0, infinity).
cplx stieltjes(const Family& fam, cplx z, const SeriesControl& ctrl = {});

/// S(z) by direct summation of the pole expansion (reference route).
cplx stieltjes_direct(const Family& fam, cplx z, const SeriesControl& ctrl = {});

/// The entire function S(x) / Gamma(-x), evaluated through the termwise
/// partial-fraction series; valid for every complex x including the lattice
/// points where S has poles.
cplx stieltjes_entire(const Family& fam, cplx x, const SeriesControl& ctrl = {});

/// mu_0 P*_n(z) / P_n(z) (monic denominator), the Markov approximant to the
/// Stieltjes transform. Computed from scaled values so it stays finite at
/// large n. Requires z off [0, infinity).
cplx markov_ratio(const Family& fam, cplx z, long n);

struct ConvergenceReport {
    struct Sample {
        long n;
        double error;
    };
    std::vector<Sample> samples;
    std::optional<double> fitted_order;  // -slope of log error vs log n
};

/// Errors |value - reference| with an empirically fitted convergence order.
/// The order is left undefined unless at least 3 samples have error >= 1e-15.
ConvergenceReport convergence_report(std::span<const std::pair<long, cplx>> sequence,
                                     cplx reference);

struct TanneryRatio {
    long k;
    double ratio;
};

/// Summand ratios bounding the scaled-polynomial sums for x <= -1: all lie in
/// (0, 1] and tend to 1 for fixed k, which is what justifies the term-by-term
/// limit interchange.
std::vector<TanneryRatio> tannery_bounds(const Family& fam, double x, long n);

/// Partial sum sum_{n=1}^{N} 1 / sqrt(c_n); divergence as N grows is the
/// determinacy criterion for the moment problem.
double carleman_diag(const Family& fam, long N);

}  // namespace mhpoly
