#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace mhpoly {

using cplx = std::complex<double>;

/// Thrown when a series (or weighted sum) fails to meet its stopping rule
/// within the configured number of terms.
class non_convergence : public std::runtime_error {
  public:
    explicit non_convergence(const std::string& what) : std::runtime_error(what) {}
};

struct SeriesControl {
    double rel_tol = 1e-15;
    int max_terms = 10000;
    int consecutive_small = 3;

    void validate() const {
        if (!(rel_tol > 0.0)) throw std::invalid_argument("SeriesControl: rel_tol must be > 0");
        if (max_terms <= 0) throw std::invalid_argument("SeriesControl: max_terms must be > 0");
        if (consecutive_small < 1)
            throw std::invalid_argument("SeriesControl: consecutive_small must be >= 1");
    }
};

/// Sums term(0) + term(1) + ... until |term| <= rel_tol * |partial sum| held
/// for `consecutive_small` consecutive terms. A single small term is not
/// trusted: Pochhammer factors can make isolated terms vanish. The counter
/// only runs once the partial sum is nonzero, so exact-zero leading terms
/// (reciprocal-gamma poles) cannot trigger a bogus early stop.
template <typename TermFn>
cplx sum_series(TermFn&& term, const SeriesControl& ctrl, const char* label) {
    ctrl.validate();
    cplx sum = 0.0;
    int small_run = 0;
    for (int j = 0; j < ctrl.max_terms; ++j) {
        const cplx t = term(j);
        sum += t;
        if (std::abs(sum) > 0.0 && std::abs(t) <= ctrl.rel_tol * std::abs(sum)) {
            if (++small_run >= ctrl.consecutive_small) return sum;
        } else {
            small_run = 0;
        }
    }
    throw non_convergence(std::string(label) + ": no convergence within " +
                          std::to_string(ctrl.max_terms) + " terms");
}

}  // namespace mhpoly
