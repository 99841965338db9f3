#include "mhpoly/family.hpp"

#include <cmath>
#include <stdexcept>

#include "mhpoly/special.hpp"

namespace mhpoly {

Family Family::charlier(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("charlier: requires a > 0");
    return Family(FamilyKind::charlier, a, 0.0, 0.0);
}

Family Family::meixner(double beta, double c) {
    if (!(beta > 0.0)) throw std::invalid_argument("meixner: requires beta > 0");
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("meixner: requires 0 < c < 1");
    return Family(FamilyKind::meixner, 0.0, beta, c);
}

RecurrenceCoeffs recurrence_coeffs(const Family& fam, long n) {
    if (n < 0) throw std::invalid_argument("recurrence_coeffs: n must be >= 0");
    const double k = double(n);
    if (fam.is_charlier()) return {k + fam.a(), fam.a() * k};
    const double c = fam.c(), beta = fam.beta();
    return {(k + (k + beta) * c) / (1.0 - c), k * (k + beta - 1.0) * c / ((1.0 - c) * (1.0 - c))};
}

namespace {

cplx monic_recurrence(const Family& fam, long n, cplx x, bool associated) {
    // monic: P_{-1} = 0, P_0 = 1; associated: P*_0 = 0, P*_1 = 1, same recurrence
    cplx prev = 0.0;
    cplx cur = 1.0;
    long k0 = 0;
    if (associated) {
        if (n == 0) return 0.0;
        k0 = 1;  // cur = P*_1
    }
    for (long k = k0; k < n; ++k) {
        const auto [b, c] = recurrence_coeffs(fam, k);
        const cplx next = (x - b) * cur - c * prev;
        if (!std::isfinite(next.real()) || !std::isfinite(next.imag()))
            throw std::overflow_error(
                "eval_poly: intermediate overflow; use scaled_poly for large n");
        prev = cur;
        cur = next;
    }
    return cur;
}

// value / factor with the division done on the log scale
cplx div_log_scaled(cplx value, const LogScaled& factor) {
    if (factor.sign == 0) throw std::domain_error("division by log-scaled zero");
    if (value == cplx(0.0)) return 0.0;
    const cplx w = std::log(value) - factor.log_mag;
    return double(factor.sign) * std::exp(w);
}

}  // namespace

cplx eval_poly(const Family& fam, PolyKind kind, long n, cplx x) {
    if (n < 0) throw std::invalid_argument("eval_poly: n must be >= 0");
    switch (kind) {
        case PolyKind::monic:
            return monic_recurrence(fam, n, x, false);
        case PolyKind::associated:
            return monic_recurrence(fam, n, x, true);
        case PolyKind::standard:
            return div_log_scaled(monic_recurrence(fam, n, x, false), monic_factor(fam, n));
    }
    throw std::logic_error("eval_poly: bad kind");
}

cplx eval_hypergeom(const Family& fam, long n, cplx x) {
    if (n < 0) throw std::invalid_argument("eval_hypergeom: n must be >= 0");
    if (n == 0) return 1.0;
    const cplx upper[] = {cplx(double(-n)), -x};
    if (fam.is_charlier()) return pfq(upper, {}, cplx(-1.0 / fam.a()));
    const cplx lower[] = {cplx(fam.beta())};
    return pfq(upper, lower, cplx(1.0 - 1.0 / fam.c()));
}

LogScaled monic_factor(const Family& fam, long n) {
    if (n < 0) throw std::invalid_argument("monic_factor: n must be >= 0");
    const int sign = (n % 2 == 0) ? 1 : -1;  // (-a)^n and (c/(c-1))^n alternate
    if (fam.is_charlier()) return LogScaled::from_log(sign, double(n) * std::log(fam.a()));
    const double beta = fam.beta(), c = fam.c();
    const double log_poch = log_gamma(beta + double(n)) - log_gamma(beta);
    return LogScaled::from_log(sign, log_poch + double(n) * std::log(c / (1.0 - c)));
}

LogScaled weight_term(const Family& fam, long k) {
    if (k < 0) throw std::invalid_argument("weight_term: k must be >= 0");
    const double lfact = log_gamma(double(k) + 1.0);
    if (fam.is_charlier())
        return LogScaled::from_log(1, double(k) * std::log(fam.a()) - lfact);
    const double beta = fam.beta(), c = fam.c();
    const double log_poch = log_gamma(beta + double(k)) - log_gamma(beta);
    return LogScaled::from_log(1, log_poch + double(k) * std::log(c) - lfact);
}

double moment0(const Family& fam) {
    if (fam.is_charlier()) return std::exp(fam.a());
    return std::pow(1.0 - fam.c(), -fam.beta());
}

namespace {

// Tail rule for weighted lattice sums: the weights decay superexponentially,
// so stop once k >= 20 and the term magnitude stays below 1e-18 times the
// largest term seen, for 3 consecutive k.
template <typename TermFn>
std::pair<double, long> weighted_lattice_sum(TermFn&& term_at, const SeriesControl& ctrl,
                                             const char* label) {
    ctrl.validate();
    double sum = 0.0, max_term = 0.0;
    int small_run = 0;
    for (long k = 0; k < ctrl.max_terms; ++k) {
        const double t = term_at(k);
        sum += t;
        max_term = std::max(max_term, std::abs(t));
        if (k >= 20 && std::abs(t) < 1e-18 * max_term) {
            if (++small_run >= 3) return {sum, k + 1};
        } else {
            small_run = 0;
        }
    }
    throw non_convergence(std::string(label) + ": tail rule not met within " +
                          std::to_string(ctrl.max_terms) + " terms");
}

}  // namespace

double moment(const Family& fam, long r, const SeriesControl& ctrl) {
    if (r < 0) throw std::invalid_argument("moment: r must be >= 0");
    auto [sum, k_stop] = weighted_lattice_sum(
        [&](long k) {
            const LogScaled w = weight_term(fam, k);
            if (r == 0) return w.value();
            if (k == 0) return 0.0;  // 0^r
            return LogScaled::from_log(1, double(r) * std::log(double(k)) + w.log_mag).value();
        },
        ctrl, "moment");
    (void)k_stop;
    return sum;
}

double orthogonality_norm(const Family& fam, long n) {
    if (n < 0) throw std::invalid_argument("orthogonality_norm: n must be >= 0");
    const double lfact = log_gamma(double(n) + 1.0);
    if (fam.is_charlier())
        return std::exp(fam.a() + lfact - double(n) * std::log(fam.a()));
    const double beta = fam.beta(), c = fam.c();
    const double log_poch = log_gamma(beta + double(n)) - log_gamma(beta);
    return std::exp(lfact - double(n) * std::log(c) - log_poch - beta * std::log(1.0 - c));
}

OrthoSum orthogonality_sum(const Family& fam, long n, long m, const SeriesControl& ctrl) {
    if (n < 0 || m < 0) throw std::invalid_argument("orthogonality_sum: n, m must be >= 0");
    auto [sum, k_stop] = weighted_lattice_sum(
        [&](long k) {
            const cplx x = cplx(double(k));
            const double pn = eval_hypergeom(fam, n, x).real();
            const double pm = (m == n) ? pn : eval_hypergeom(fam, m, x).real();
            return pn * pm * weight_term(fam, k).value();
        },
        ctrl, "orthogonality_sum");
    return {sum, k_stop};
}

}  // namespace mhpoly
