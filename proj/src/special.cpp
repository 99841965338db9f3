#include "mhpoly/special.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mhpoly {

namespace {

// Lanczos coefficients for g = 607/128 (Godfrey's 15-term set).
// The sum below is accurate to ~1e-15 relative for Re(z) >= 0.5.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
const double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2 pi))

// Core Lanczos evaluation, valid for Re(z) >= 0.5.
template <typename T>
T log_gamma_lanczos(T z) {
    T sum = T(kLanczos[0]);
    for (int i = 1; i < 15; ++i) sum += kLanczos[i] / (z - 1.0 + double(i));
    const T t = z - 0.5 + kLanczosG;
    return (z - 0.5) * std::log(t) - t + kLogSqrt2Pi + std::log(sum);
}

}  // namespace

bool is_nonpositive_integer(cplx z) {
    if (z.imag() != 0.0) return false;
    const double re = z.real();
    return re <= 0.0 && re == std::floor(re);
}

cplx pochhammer(cplx u, int k) {
    cplx prod = 1.0;
    for (int j = 0; j < k; ++j) prod *= u + double(j);
    return prod;
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma(real): requires x > 0");
    if (x >= 0.5) return log_gamma_lanczos(x);
    // shift into the Lanczos range: log Gamma(x) = log Gamma(x+1) - log x
    return log_gamma_lanczos(x + 1.0) - std::log(x);
}

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("log_gamma: pole at nonpositive integer");
    if (z.imag() == 0.0 && z.real() > 0.0) return cplx(log_gamma(z.real()), 0.0);
    if (z.real() >= 0.5) return log_gamma_lanczos(z);
    // Upward recursion keeps the principal branch: log Gamma(z) and
    // log Gamma(z+1) - Log z are both analytic on the cut plane and agree on
    // the positive real axis. On the cut itself this yields the limit from
    // above (principal Log of a negative real has +i pi).
    const int shift = int(std::ceil(0.5 - z.real()));
    cplx log_prod = 0.0;
    for (int j = 0; j < shift; ++j) log_prod += std::log(z + double(j));
    return log_gamma_lanczos(z + double(shift)) - log_prod;
}

double recip_gamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    // 1/Gamma(x) = x (x+1) ... (x+m-1) / Gamma(x+m) with x+m in Lanczos range
    double prefactor = 1.0;
    while (x < 0.5) {
        prefactor *= x;
        x += 1.0;
    }
    return prefactor * std::exp(-log_gamma_lanczos(x));
}

cplx recip_gamma(cplx z) {
    if (z.imag() == 0.0) return cplx(recip_gamma(z.real()), 0.0);
    // exp of -log Gamma is branch-insensitive
    return std::exp(-log_gamma(z));
}

cplx pfq(std::span<const cplx> upper, std::span<const cplx> lower, cplx z,
         const SeriesControl& ctrl) {
    ctrl.validate();
    if (z == cplx(0.0)) return 1.0;

    // Termination index: the smallest -a over nonpositive-integer upper
    // parameters. All terms past it are exactly zero.
    std::optional<long> n_term;
    for (const cplx& a : upper) {
        if (is_nonpositive_integer(a)) {
            const long m = std::lround(-a.real());
            if (!n_term || m < *n_term) n_term = m;
        }
    }
    for (const cplx& b : lower) {
        if (is_nonpositive_integer(b)) {
            // the factor (b)_j vanishes from term index -b + 1 onward
            const long pole_index = std::lround(-b.real()) + 1;
            if (!n_term || *n_term >= pole_index)
                throw std::invalid_argument(
                    "pfq: nonpositive-integer lower parameter reached before termination");
        }
    }

    const auto p = upper.size();
    const auto q = lower.size();
    auto ratio_at = [&](long j) {
        cplx r = z / double(j + 1);
        for (const cplx& a : upper) r *= a + double(j);
        for (const cplx& b : lower) r /= b + double(j);
        return r;
    };

    if (n_term) {
        // exact finite sum: n+1 terms, no truncation error beyond rounding
        cplx sum = 0.0, term = 1.0;
        for (long j = 0; j <= *n_term; ++j) {
            sum += term;
            if (j < *n_term) term *= ratio_at(j);
        }
        return sum;
    }

    if (p > q + 1 || (p == q + 1 && std::abs(z) >= 1.0))
        throw std::domain_error("pfq: series does not converge for these parameters");

    cplx term = 1.0;
    return sum_series(
        [&](int j) {
            if (j == 0) return cplx(1.0);
            term *= ratio_at(j - 1);
            return term;
        },
        ctrl, "pfq");
}

cplx gamma_star(cplx b, cplx z, const SeriesControl& ctrl) {
    ctrl.validate();
    if (z == cplx(0.0)) return recip_gamma(b + 1.0);
    cplx zpow = 1.0;
    const cplx sum = sum_series(
        [&](int j) {
            if (j > 0) zpow *= z;
            return zpow * recip_gamma(b + 1.0 + double(j));
        },
        ctrl, "gamma_star");
    return std::exp(-z) * sum;
}

cplx inc_beta(double z, cplx a, cplx b, const SeriesControl& ctrl) {
    if (is_nonpositive_integer(a))
        throw std::invalid_argument("inc_beta: a must not be a nonpositive integer");
    const cplx upper[] = {a, 1.0 - b};
    const cplx lower[] = {a + 1.0};
    const cplx f = pfq(upper, lower, cplx(z), ctrl);
    return std::pow(cplx(z), a) / a * f;
}

}  // namespace mhpoly
