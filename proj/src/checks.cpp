#include "mhpoly/checks.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "mhpoly/asymptotics.hpp"
#include "mhpoly/family.hpp"
#include "mhpoly/special.hpp"

namespace mhpoly {

namespace {

double rel_err(cplx got, cplx want) {
    const double scale = std::abs(want);
    return std::abs(got - want) / (scale > 0.0 ? scale : 1.0);
}

double scale_aware_err(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

std::vector<Family> desk_families() {
    return {Family::charlier(1.23), Family::meixner(1.23, 0.36)};
}

// Non-integer samples are kept 0.1 away from the lattice: every Pochhammer
// factor is s plus an integer, and a near-zero factor amplifies the rounding
// of the shifted arguments past the identity budget.
double lattice_safe(double s) { return std::floor(s) + 0.1 + 0.8 * (s - std::floor(s)); }

CheckResult pochhammer_splitting(std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-8.0, 8.0);
    std::uniform_int_distribution<int> li(0, 30);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double s =
            (trial % 4 == 0) ? std::floor(dist(rng)) : lattice_safe(dist(rng));
        const int l = li(rng);
        const int m = std::uniform_int_distribution<int>(0, l)(rng);
        const cplx lhs = pochhammer(cplx(s), l);
        const cplx rhs = pochhammer(cplx(s), m) * pochhammer(cplx(s + m), l - m);
        if (s == std::floor(s) && std::abs(rhs) < 9.0e15) {
            if (lhs != rhs) worst = std::max(worst, 1.0);  // exact below 2^53
        } else {
            worst = std::max(worst, rel_err(lhs, rhs));
        }
    }
    return {"pochhammer_splitting", worst <= 1e-12, worst, 1e-12};
}

CheckResult pochhammer_reflection(std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-8.0, 8.0);
    std::uniform_int_distribution<int> li(0, 30);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double s =
            (trial % 4 == 0) ? std::floor(dist(rng)) : lattice_safe(dist(rng));
        const int l = li(rng);
        const double sign = (l % 2 == 0) ? 1.0 : -1.0;
        const cplx lhs = pochhammer(cplx(-s), l);
        const cplx rhs = sign * pochhammer(cplx(s - l + 1), l);
        if (s == std::floor(s) && std::abs(rhs) < 9.0e15) {
            if (lhs.real() != rhs.real()) worst = std::max(worst, 1.0);
        } else {
            worst = std::max(worst, rel_err(lhs, rhs));
        }
    }
    return {"pochhammer_reflection", worst <= 1e-12, worst, 1e-12};
}

CheckResult pochhammer_ratio(std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(0.1, 8.0);  // keep denominators nonzero
    std::uniform_int_distribution<int> li(0, 30);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double s = dist(rng);
        const int l = li(rng);
        const int m = std::uniform_int_distribution<int>(0, l)(rng);
        const cplx lhs = pochhammer(cplx(s + m), l) / pochhammer(cplx(s), l);
        const cplx rhs = pochhammer(cplx(s + l), m) / pochhammer(cplx(s), m);
        worst = std::max(worst, rel_err(lhs, rhs));
    }
    return {"pochhammer_ratio", worst <= 1e-12, worst, 1e-12};
}

CheckResult recip_gamma_roundtrip() {
    double worst = 0.0;
    for (double re = -6.3; re <= 6.3; re += 0.7) {
        for (double im = -5.0; im <= 5.0; im += 1.25) {
            const cplx z(re, im);
            if (is_nonpositive_integer(z)) continue;
            worst = std::max(worst, rel_err(recip_gamma(z) * std::exp(log_gamma(z)), 1.0));
        }
    }
    return {"recip_gamma_roundtrip", worst <= 1e-12, worst, 1e-12};
}

CheckResult pfq_terminating_consistency() {
    // 1F1(-n; b; z): the generic stopping rule must match the exact
    // (n+1)-term sum. Run the generic loop by hand.
    double worst = 0.0;
    for (int n : {1, 3, 7, 15}) {
        for (double z : {0.3, 1.0, -2.4}) {
            const double b = 1.37;
            const cplx upper[] = {cplx(double(-n))};
            const cplx lower[] = {cplx(b)};
            const cplx exact = pfq(upper, lower, cplx(z));
            cplx sum = 0.0, term = 1.0;
            int small_run = 0;
            for (int j = 0; j < 200 && small_run < 3; ++j) {
                if (j > 0) term *= (double(-n) + (j - 1)) / ((b + (j - 1)) * j) * z;
                sum += term;
                small_run =
                    (std::abs(sum) > 0 && std::abs(term) <= 1e-15 * std::abs(sum))
                        ? small_run + 1
                        : 0;
            }
            worst = std::max(worst, rel_err(sum, exact));
        }
    }
    return {"pfq_terminating_consistency", worst <= 1e-13, worst, 1e-13};
}

CheckResult gamma_star_entirety() {
    // finite values across nonpositive-integer b, where the leading series
    // terms vanish through the reciprocal gamma
    double violations = 0.0;
    for (double b = -6.0; b <= 2.0; b += 0.5) {
        for (double z : {-1.23, 0.36, 2.0}) {
            const cplx v = gamma_star(cplx(b), cplx(z));
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) violations += 1.0;
        }
    }
    return {"gamma_star_entirety", violations == 0.0, violations, 0.0};
}

CheckResult cross_representation(std::mt19937& rng, double b_perturbation) {
    std::uniform_real_distribution<double> box(-10.0, 10.0);
    double worst = 0.0;
    for (const Family& fam : desk_families()) {
        for (int trial = 0; trial < 100; ++trial) {
            const cplx x(box(rng), box(rng));
            for (long n = 0; n <= 20; ++n) {
                // monic recurrence with the (possibly perturbed) coefficients
                cplx prev = 0.0, cur = 1.0;
                for (long k = 0; k < n; ++k) {
                    const auto [b, c] = recurrence_coeffs(fam, k);
                    const cplx next = (x - (b + b_perturbation)) * cur - c * prev;
                    prev = cur;
                    cur = next;
                }
                const LogScaled factor = monic_factor(fam, n);
                const cplx standard =
                    (cur == cplx(0.0))
                        ? cplx(0.0)
                        : double(factor.sign) * std::exp(std::log(cur) - factor.log_mag);
                worst = std::max(worst, scale_aware_err(standard, eval_hypergeom(fam, n, x)));
            }
        }
    }
    return {"cross_representation", worst <= 1e-9, worst, 1e-9};
}

CheckResult monic_consistency(std::mt19937& rng) {
    std::uniform_real_distribution<double> box(-6.0, 6.0);
    double worst = 0.0;
    for (const Family& fam : desk_families()) {
        for (int trial = 0; trial < 25; ++trial) {
            const cplx x(box(rng), box(rng));
            for (long n = 0; n <= 30; ++n) {
                const cplx monic = eval_poly(fam, PolyKind::monic, n, x);
                const LogScaled factor = monic_factor(fam, n);
                const cplx standard = eval_poly(fam, PolyKind::standard, n, x);
                const cplx recombined =
                    (standard == cplx(0.0))
                        ? cplx(0.0)
                        : double(factor.sign) * std::exp(std::log(standard) + factor.log_mag);
                worst = std::max(worst, rel_err(recombined, monic));
            }
        }
    }
    return {"monic_consistency", worst <= 1e-10, worst, 1e-10};
}

CheckResult orthogonality() {
    double worst = 0.0;
    for (const Family& fam : desk_families()) {
        for (long n = 0; n <= 8; ++n) {
            const double norm = orthogonality_norm(fam, n);
            for (long m = 0; m <= 8; ++m) {
                const double want = (n == m) ? norm : 0.0;
                const double got = orthogonality_sum(fam, n, m).value;
                worst = std::max(worst, std::abs(got - want) / norm);
            }
        }
    }
    return {"orthogonality", worst <= 1e-8, worst, 1e-8};
}

CheckResult moments_closed_form() {
    double worst = 0.0;
    for (const Family& fam : desk_families()) {
        worst = std::max(worst, rel_err(moment(fam, 0), moment0(fam)));
    }
    // first moments: a e^a and beta c (1-c)^{-beta-1}
    const Family ch = Family::charlier(1.23);
    worst = std::max(worst, rel_err(moment(ch, 1), 1.23 * std::exp(1.23)));
    const Family mx = Family::meixner(1.23, 0.36);
    const double mean = 1.23 * 0.36 * std::pow(1.0 - 0.36, -1.23 - 1.0);
    worst = std::max(worst, rel_err(moment(mx, 1), mean));
    return {"moments_closed_form", worst <= 1e-12, worst, 1e-12};
}

CheckResult stieltjes_consistency(std::mt19937& rng) {
    std::uniform_real_distribution<double> re(-8.0, -0.2), im(-4.0, 4.0);
    double worst = 0.0;
    for (const Family& fam : desk_families()) {
        for (int trial = 0; trial < 20; ++trial) {
            const cplx z(re(rng), im(rng));
            worst = std::max(worst, rel_err(stieltjes(fam, z), stieltjes_direct(fam, z)));
        }
    }
    return {"stieltjes_consistency", worst <= 1e-10, worst, 1e-10};
}

CheckResult mh_markov_consistency() {
    double worst = 0.0;
    for (const Family& fam : desk_families()) {
        for (double x : {-0.5, -1.5, -3.7}) {
            const cplx lhs = moment0(fam) * mh_limit(fam, PolyKind::associated, cplx(x)) /
                             mh_limit(fam, PolyKind::monic, cplx(x));
            worst = std::max(worst, rel_err(lhs, stieltjes(fam, cplx(x))));
        }
    }
    return {"mh_markov_consistency", worst <= 1e-10, worst, 1e-10};
}

CheckResult mh_two_form_agreement() {
    const Family mx = Family::meixner(1.23, 0.36);
    double worst = 0.0;
    for (double x = -5.0; x <= -0.1 + 1e-12; x += 0.1) {
        worst = std::max(worst, rel_err(mh_limit_via_inc_beta(mx, cplx(x)),
                                        mh_limit(mx, PolyKind::associated, cplx(x))));
    }
    return {"mh_two_form_agreement", worst <= 1e-10, worst, 1e-10};
}

CheckResult tannery_bound_check() {
    double violations = 0.0;
    for (const Family& fam : desk_families()) {
        for (double x : {-1.0, -1.5, -4.0}) {
            for (long n : {5L, 20L, 100L}) {
                for (const auto& [k, ratio] : tannery_bounds(fam, x, n))
                    if (!(ratio > 0.0 && ratio <= 1.0 + 1e-14)) violations += 1.0;
            }
        }
    }
    return {"tannery_bounds", violations == 0.0, violations, 0.0};
}

CheckResult carleman_growth() {
    // Charlier: partial sums grow like 2 sqrt(N/a); Meixner: like
    // (1-c)/sqrt(c) log N. Compare increments between N = 10^2 and 10^4.
    const Family ch = Family::charlier(1.23);
    const double s2 = carleman_diag(ch, 100), s4 = carleman_diag(ch, 10000);
    double worst = std::abs(s4 / (2.0 * std::sqrt(10000.0 / 1.23)) - 1.0);
    const Family mx = Family::meixner(1.23, 0.36);
    const double increment = carleman_diag(mx, 10000) - carleman_diag(mx, 100);
    const double predicted = (1.0 - 0.36) / std::sqrt(0.36) * std::log(10000.0 / 100.0);
    worst = std::max(worst, std::abs(increment / predicted - 1.0));
    worst = std::max(worst, s4 > s2 ? 0.0 : 1.0);  // divergence direction
    return {"carleman_growth", worst <= 0.05, worst, 0.05};
}

LogScaled scale_prefactor(const Family& fam, PolyKind kind, long n) {
    const int alt = (n % 2 == 0) ? 1 : -1;
    if (fam.is_charlier()) {
        if (kind == PolyKind::standard)
            return LogScaled::from_log(1, double(n) * std::log(fam.a()));
        return LogScaled::from_log(alt, 0.0);
    }
    if (kind == PolyKind::standard) {
        const double lpoch = log_gamma(fam.beta() + double(n)) - log_gamma(fam.beta());
        return LogScaled::from_log(1, double(n) * std::log(fam.c()) + lpoch);
    }
    return LogScaled::from_log(alt, double(n) * std::log(1.0 - fam.c()));
}

CheckResult scaled_recurrence_consistency(std::mt19937& rng) {
    std::uniform_real_distribution<double> re(-9.5, -0.3), im(-3.0, 3.0);
    double worst = 0.0;
    for (const Family& fam : desk_families()) {
        for (PolyKind kind : {PolyKind::standard, PolyKind::monic, PolyKind::associated}) {
            for (int trial = 0; trial < 8; ++trial) {
                const cplx x(re(rng), im(rng));
                for (long n : {5L, 30L, 90L, 150L}) {
                    const cplx direct = eval_poly(fam, kind, n, x);
                    if (direct == cplx(0.0)) continue;
                    const LogScaled sigma = scale_prefactor(fam, kind, n);
                    const cplx expected =
                        double(sigma.sign) *
                        std::exp(std::log(direct) + sigma.log_mag -
                                 log_gamma(cplx(double(n)) - x));
                    worst = std::max(worst, rel_err(scaled_poly(fam, kind, n, x).value, expected));
                }
            }
        }
    }
    return {"scaled_recurrence_consistency", worst <= 1e-9, worst, 1e-9};
}

}  // namespace

CheckReport run_checks(const CheckOptions& options) {
    std::mt19937 rng(0x5eed1234u);
    CheckReport report;
    report.checks.push_back(pochhammer_splitting(rng));
    report.checks.push_back(pochhammer_reflection(rng));
    report.checks.push_back(pochhammer_ratio(rng));
    report.checks.push_back(recip_gamma_roundtrip());
    report.checks.push_back(pfq_terminating_consistency());
    report.checks.push_back(gamma_star_entirety());
    report.checks.push_back(cross_representation(rng, options.b_coeff_perturbation));
    report.checks.push_back(monic_consistency(rng));
    report.checks.push_back(orthogonality());
    report.checks.push_back(moments_closed_form());
    report.checks.push_back(stieltjes_consistency(rng));
    report.checks.push_back(mh_markov_consistency());
    report.checks.push_back(mh_two_form_agreement());
    report.checks.push_back(tannery_bound_check());
    report.checks.push_back(carleman_growth());
    report.checks.push_back(scaled_recurrence_consistency(rng));
    return report;
}

}  // namespace mhpoly
