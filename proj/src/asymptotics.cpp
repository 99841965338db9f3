#include "mhpoly/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mhpoly/special.hpp"

namespace mhpoly {

namespace {

bool on_nonnegative_real_axis(cplx z) { return z.imag() == 0.0 && z.real() >= 0.0; }

// Weight ratio w_{k+1} / w_k.
double weight_ratio(const Family& fam, long k) {
    if (fam.is_charlier()) return fam.a() / double(k + 1);
    return fam.c() * (fam.beta() + double(k)) / double(k + 1);
}

// Distance from x to the nearest integer in [lo, hi]; also reports it.
std::pair<double, long> nearest_lattice_point(cplx x, long lo, long hi) {
    const long m = std::clamp(std::lround(x.real()), lo, hi);
    return {std::abs(x - cplx(double(m))), m};
}

// Forward monic/associated recurrence with periodic rescaling, so the
// polynomial value P = mantissa * exp(log_rescale) never overflows.
struct RescaledPoly {
    cplx mantissa;
    double log_rescale;
};

RescaledPoly rescaled_recurrence(const Family& fam, bool associated, long n, cplx x) {
    cplx prev = 0.0, cur = 1.0;
    long k0 = 0;
    if (associated) {
        if (n == 0) return {cplx(0.0), 0.0};
        k0 = 1;
    }
    double log_rescale = 0.0;
    constexpr double kCap = 1e250;
    const double log_cap = std::log(kCap);
    for (long k = k0; k < n; ++k) {
        const auto [b, c] = recurrence_coeffs(fam, k);
        const cplx next = (x - b) * cur - c * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur.real()) > kCap || std::abs(cur.imag()) > kCap) {
            cur /= kCap;
            prev /= kCap;
            log_rescale += log_cap;
        }
    }
    return {cur, log_rescale};
}

}  // namespace

std::string ScaledPolyValue::normalizer() const {
    std::string sigma;
    if (family.is_charlier())
        sigma = (kind == PolyKind::standard) ? "a^n" : "(-1)^n";
    else
        sigma = (kind == PolyKind::standard) ? "c^n (beta)_n" : "(c-1)^n";
    return sigma + " / Gamma(n - x)";
}

ScaledPolyValue scaled_poly(const Family& fam, PolyKind kind, long n, cplx x) {
    if (n < 0) throw std::invalid_argument("scaled_poly: n must be >= 0");

    // Poles of the renormalized coefficients: fall back to the direct
    // polynomial value divided by Gamma(n - x), all on the log scale. The
    // rescaled recurrence keeps the polynomial representable at any n, and
    // the standard kind reuses the monic value (the sigma ratio cancels the
    // monic factor).
    if (n > 0) {
        const auto [dist, m] = nearest_lattice_point(x, 0, n);
        if (dist < 1e-8) {
            if (m == n && dist == 0.0) return {cplx(0.0), fam, kind, n};  // Gamma pole
            const RescaledPoly p =
                rescaled_recurrence(fam, kind == PolyKind::associated, n, x);
            if (p.mantissa == cplx(0.0)) return {cplx(0.0), fam, kind, n};
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            const double log_sigma =
                fam.is_charlier() ? 0.0 : double(n) * std::log(1.0 - fam.c());
            const cplx w = std::log(p.mantissa) + p.log_rescale + log_sigma -
                           log_gamma(cplx(double(n)) - x);
            return {sign * std::exp(w), fam, kind, n};
        }
    }

    // Renormalized recurrence for t_k = sigma_k P_k(x) / Gamma(k - x):
    //   t_{k+1} = rho (b_k - x) / (k - x) t_k
    //             - rho^2 c_k / ((k - x)(k - 1 - x)) t_{k-1},
    // rho = 1 (Charlier), 1 - c (Meixner). The standard and monic scaled
    // values coincide because sigma_std / sigma_monic cancels the monic
    // factor, so both kinds run the same iteration.
    const double rho = fam.is_charlier() ? 1.0 : 1.0 - fam.c();
    cplx prev, cur;
    long k0;
    if (kind == PolyKind::associated) {
        if (n == 0) return {cplx(0.0), fam, kind, n};
        prev = 0.0;
        cur = -rho * recip_gamma(1.0 - x);  // sigma_1 P*_1 / Gamma(1 - x)
        k0 = 1;
    } else {
        cur = recip_gamma(-x);
        if (n == 0) return {cur, fam, kind, n};
        const auto [b0, c0] = recurrence_coeffs(fam, 0);
        (void)c0;
        prev = cur;
        cur = rho * (b0 - x) / (-x) * cur;  // c_0 = 0
        k0 = 1;
    }
    for (long k = k0; k < n; ++k) {
        const auto [b, c] = recurrence_coeffs(fam, k);
        const double kk = double(k);
        const cplx next = rho * (b - x) / (kk - x) * cur -
                          rho * rho * c / ((kk - x) * (kk - 1.0 - x)) * prev;
        prev = cur;
        cur = next;
    }
    return {cur, fam, kind, n};
}

cplx stieltjes(const Family& fam, cplx z, const SeriesControl& ctrl) {
    if (on_nonnegative_real_axis(z))
        throw std::domain_error("stieltjes: z must lie off [0, infinity)");
    if (fam.is_charlier()) {
        const cplx upper[] = {-z};
        const cplx lower[] = {1.0 - z};
        return pfq(upper, lower, cplx(fam.a()), ctrl) / z;
    }
    const cplx upper[] = {-z, cplx(fam.beta())};
    const cplx lower[] = {1.0 - z};
    return pfq(upper, lower, cplx(fam.c()), ctrl) / z;
}

cplx stieltjes_direct(const Family& fam, cplx z, const SeriesControl& ctrl) {
    if (on_nonnegative_real_axis(z))
        throw std::domain_error("stieltjes_direct: z must lie off [0, infinity)");
    double w = 1.0;
    return sum_series(
        [&](int k) {
            if (k > 0) w *= weight_ratio(fam, k - 1);
            return w / (z - double(k));
        },
        ctrl, "stieltjes_direct");
}

cplx stieltjes_entire(const Family& fam, cplx x, const SeriesControl& ctrl) {
    // S(x) / Gamma(-x) = -sum_k w_k (-x)_k / Gamma(k + 1 - x); every term is
    // entire in x. At an exact lattice point only the k = x term survives.
    if (x.imag() == 0.0 && x.real() >= 0.0 && x.real() == std::floor(x.real())) {
        const long m = std::lround(x.real());
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        // -(-1)^m m! w_m
        return -sign * std::exp(log_gamma(double(m) + 1.0) + weight_term(fam, m).log_mag);
    }
    cplx term;
    const cplx sum = sum_series(
        [&](int k) {
            if (k == 0)
                term = recip_gamma(1.0 - x);
            else
                term *= weight_ratio(fam, k - 1) * (double(k - 1) - x) / (double(k) - x);
            return term;
        },
        ctrl, "stieltjes_entire");
    return -sum;
}

cplx mh_limit(const Family& fam, PolyKind kind, cplx x, const SeriesControl& ctrl) {
    if (kind != PolyKind::associated) {
        if (fam.is_charlier()) return std::exp(fam.a()) * recip_gamma(-x);
        const double log1mc = std::log(1.0 - fam.c());
        return std::exp(-(fam.beta() + x) * log1mc) * recip_gamma(-x);
    }
    if (fam.is_charlier()) return -gamma_star(-x, cplx(-fam.a()), ctrl);
    const double c = fam.c();
    const cplx prefactor = std::exp(-x * std::log(1.0 - c));
    // The 2F1 form breaks down at positive-integer x (a lower-parameter pole
    // lands inside the terminating sum); the partial-fraction series is the
    // removable-limit route there.
    const long m = std::lround(x.real());
    if (m >= 1 && std::abs(x - cplx(double(m))) < 1e-6)
        return prefactor * stieltjes_entire(fam, x, ctrl);
    // (1-c)^{-x} / (x Gamma(-x)) 2F1(-x, beta; 1-x; c), with
    // 1 / (x Gamma(-x)) = -1 / Gamma(1-x)
    const cplx upper[] = {-x, cplx(fam.beta())};
    const cplx lower[] = {1.0 - x};
    return -prefactor * recip_gamma(1.0 - x) * pfq(upper, lower, cplx(c), ctrl);
}

cplx mh_limit_via_inc_beta(const Family& fam, cplx x, const SeriesControl& ctrl) {
    if (fam.is_charlier())
        throw std::invalid_argument("mh_limit_via_inc_beta: Meixner families only");
    const double c = fam.c();
    const cplx prefactor = std::exp(x * std::log(c / (1.0 - c)));
    return -prefactor * recip_gamma(-x) * inc_beta(c, -x, 1.0 - fam.beta(), ctrl);
}

cplx markov_ratio(const Family& fam, cplx z, long n) {
    if (n < 1) throw std::invalid_argument("markov_ratio: n must be >= 1");
    if (on_nonnegative_real_axis(z))
        throw std::domain_error("markov_ratio: z must lie off [0, infinity)");
    // The common normalizer sigma_n / Gamma(n - z) cancels in the ratio.
    const cplx num = scaled_poly(fam, PolyKind::associated, n, z).value;
    const cplx den = scaled_poly(fam, PolyKind::monic, n, z).value;
    if (den == cplx(0.0)) throw std::domain_error("markov_ratio: monic polynomial vanishes at z");
    return moment0(fam) * num / den;
}

ConvergenceReport convergence_report(std::span<const std::pair<long, cplx>> sequence,
                                     cplx reference) {
    if (sequence.size() < 2)
        throw std::invalid_argument("convergence_report: need at least 2 samples");
    ConvergenceReport report;
    long last_n = -1;
    for (const auto& [n, value] : sequence) {
        if (n <= last_n)
            throw std::invalid_argument("convergence_report: n must be strictly increasing");
        last_n = n;
        report.samples.push_back({n, std::abs(value - reference)});
    }
    bool fittable = report.samples.size() >= 3;
    for (const auto& s : report.samples) fittable = fittable && s.error >= 1e-15;
    if (fittable) {
        // least squares on log error vs log n
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double cnt = double(report.samples.size());
        for (const auto& s : report.samples) {
            const double lx = std::log(double(s.n)), ly = std::log(s.error);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        report.fitted_order = -(cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    }
    return report;
}

std::vector<TanneryRatio> tannery_bounds(const Family& fam, double x, long n) {
    if (x > -1.0) throw std::domain_error("tannery_bounds: requires x <= -1");
    if (n < 1) throw std::invalid_argument("tannery_bounds: n must be >= 1");
    std::vector<TanneryRatio> out;
    out.reserve(size_t(n) + 1);
    if (fam.is_charlier()) {
        // (n-k+1)_k / (n-k-x)_k
        for (long k = 0; k <= n; ++k) {
            double r = 1.0;
            for (long j = 0; j < k; ++j)
                r *= double(n - k + 1 + j) / (double(n - k + j) - x);
            out.push_back({k, r});
        }
    } else {
        // Meixner: prod_{j=0}^{k-1} (n-j) / (n-j-(x+1)), incremental in k
        double r = 1.0;
        out.push_back({0, r});
        for (long k = 1; k <= n; ++k) {
            r *= double(n - k + 1) / (double(n - k + 1) - (x + 1.0));
            out.push_back({k, r});
        }
    }
    return out;
}

double carleman_diag(const Family& fam, long N) {
    if (N < 1) throw std::invalid_argument("carleman_diag: N must be >= 1");
    double sum = 0.0;
    for (long n = 1; n <= N; ++n) sum += 1.0 / std::sqrt(recurrence_coeffs(fam, n).c);
    return sum;
}

}  // namespace mhpoly
