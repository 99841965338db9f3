#include "mhpoly/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mhpoly {

void BracketConfig::validate() const {
    if (!(x_lo < x_hi)) throw std::invalid_argument("BracketConfig: requires x_lo < x_hi");
    if (!(scan_step > 0.0)) throw std::invalid_argument("BracketConfig: scan_step must be > 0");
    if (!(scan_step < x_hi - x_lo))
        throw std::invalid_argument("BracketConfig: scan_step must be smaller than the window");
    if (!(refine_tol > 0.0)) throw std::invalid_argument("BracketConfig: refine_tol must be > 0");
}

JacobiMatrix jacobi_matrix(const Family& fam, PolyKind kind, long N) {
    if (N < 1) throw std::invalid_argument("jacobi_matrix: N must be >= 1");
    const long first = (kind == PolyKind::associated) ? 1 : 0;
    if (kind == PolyKind::associated && N < 2)
        throw std::invalid_argument("jacobi_matrix: associated kind needs N >= 2");
    JacobiMatrix J;
    for (long k = first; k < N; ++k) {
        const auto [b, c] = recurrence_coeffs(fam, k);
        J.diag.push_back(b);
        if (k > first) J.offdiag.push_back(std::sqrt(c));
    }
    return J;
}

namespace {

// Sturm count: number of eigenvalues strictly below t.
int count_below(const std::vector<double>& diag, const std::vector<double>& off2, double t,
                double pivmin) {
    int count = 0;
    double d = 1.0;
    for (size_t i = 0; i < diag.size(); ++i) {
        d = diag[i] - t - (i > 0 ? off2[i - 1] / d : 0.0);
        if (std::abs(d) < pivmin) d = -pivmin;
        if (d < 0.0) ++count;
    }
    return count;
}

}  // namespace

std::vector<double> tridiag_eigenvalues(const JacobiMatrix& J) {
    const size_t n = J.diag.size();
    if (n == 0) return {};
    if (J.offdiag.size() + 1 != n)
        throw std::invalid_argument("tridiag_eigenvalues: offdiag size must be diag size - 1");

    std::vector<double> off2(J.offdiag.size());
    double max_off2 = 0.0;
    for (size_t i = 0; i < off2.size(); ++i) {
        off2[i] = J.offdiag[i] * J.offdiag[i];
        max_off2 = std::max(max_off2, off2[i]);
    }
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, max_off2);

    // Gershgorin bounds
    double lo = J.diag[0], hi = J.diag[0];
    for (size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(J.offdiag[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(J.offdiag[i]) : 0.0);
        lo = std::min(lo, J.diag[i] - r);
        hi = std::max(hi, J.diag[i] + r);
    }
    const double pad = 1e-10 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    lo -= pad;
    hi += pad;

    std::vector<double> eig(n);
    for (size_t k = 1; k <= n; ++k) {
        double a = lo, b = hi;
        for (int it = 0;
             it < 200 && b - a > 1e-14 * std::max({1.0, std::abs(a), std::abs(b)}); ++it) {
            const double mid = 0.5 * (a + b);
            if (count_below(J.diag, off2, mid, pivmin) >= int(k))
                b = mid;
            else
                a = mid;
        }
        eig[k - 1] = 0.5 * (a + b);
    }
    return eig;
}

ZeroSet poly_zeros(const Family& fam, PolyKind kind, long N) {
    const JacobiMatrix J = jacobi_matrix(fam, kind, N);
    ZeroSet out;
    out.zeros = tridiag_eigenvalues(J);
    out.index = N;
    out.method = ZeroMethod::eigen;
    for (const double z : out.zeros)
        out.residuals.push_back(std::abs(scaled_poly(fam, kind, N, cplx(z)).value));
    return out;
}

std::vector<double> bracket_zeros(const std::function<double(double)>& f,
                                  const BracketConfig& config) {
    config.validate();
    std::vector<double> roots;
    const long steps = long(std::ceil((config.x_hi - config.x_lo) / config.scan_step));
    double x_prev = config.x_lo;
    double f_prev = f(x_prev);
    if (f_prev == 0.0) roots.push_back(x_prev);
    for (long i = 1; i <= steps; ++i) {
        const double x = std::min(config.x_lo + double(i) * config.scan_step, config.x_hi);
        const double fx = f(x);
        if (fx == 0.0) {
            roots.push_back(x);
        } else if (f_prev != 0.0 && std::signbit(fx) != std::signbit(f_prev)) {
            double a = x_prev, b = x, fa = f_prev;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (a + b);
                if (b - a <= config.refine_tol * std::max(1.0, std::abs(mid))) break;
                const double fm = f(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if (std::signbit(fm) == std::signbit(fa)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        x_prev = x;
        f_prev = fx;
    }
    return roots;
}

double LimitTarget::operator()(double x) const {
    if (entire_stieltjes_) return mhpoly::stieltjes_entire(family_, cplx(x)).real();
    return mh_limit(family_, kind_, cplx(x)).real();
}

ZeroSet limit_zeros(const LimitTarget& target, const BracketConfig& config) {
    ZeroSet out;
    out.zeros = bracket_zeros([&](double x) { return target(x); }, config);
    out.index = -1;
    out.method = ZeroMethod::bracket;
    for (const double z : out.zeros) out.residuals.push_back(std::abs(target(z)));
    return out;
}

ConvergenceReport zero_convergence(const Family& fam, PolyKind kind, long k,
                                   std::span<const long> n_list) {
    if (k < 1) throw std::invalid_argument("zero_convergence: k must be >= 1");
    if (n_list.empty()) throw std::invalid_argument("zero_convergence: empty n list");
    for (const long n : n_list) {
        const long degree = (kind == PolyKind::associated) ? n - 1 : n;
        if (degree < k)
            throw std::invalid_argument("zero_convergence: k exceeds a polynomial degree");
    }

    // Bracket the k-th limit zero, growing the window as needed. The limit
    // functions' zeros sit roughly one per unit interval, so a modest window
    // already suffices; the fine step keeps close pairs separated.
    const LimitTarget target = LimitTarget::mh(fam, kind);
    std::vector<double> zeta;
    BracketConfig config{-0.5, 2.0 * double(k) + 4.0, 0.01, 1e-12};
    for (int attempt = 0; attempt < 4; ++attempt) {
        zeta = bracket_zeros([&](double x) { return target(x); }, config);
        if (long(zeta.size()) >= k) break;
        config.x_hi *= 2.0;
    }
    if (long(zeta.size()) < k)
        throw std::domain_error("zero_convergence: limit zero not bracketed in window");
    const double zeta_k = zeta[size_t(k) - 1];

    std::vector<std::pair<long, cplx>> samples;
    for (const long n : n_list)
        samples.push_back({n, cplx(poly_zeros(fam, kind, n).zeros[size_t(k) - 1])});
    return convergence_report(samples, cplx(zeta_k));
}

}  // namespace mhpoly
