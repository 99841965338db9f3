#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mhpoly/asymptotics.hpp"
#include "mhpoly/family.hpp"

namespace mhpoly {

/// Symmetric tridiagonal matrix whose eigenvalues are polynomial zeros:
/// diagonal b_k, off-diagonal sqrt(c_k). Standard/monic at size N uses
/// (b_0..b_{N-1}) and (sqrt(c_1)..sqrt(c_{N-1})); the associated polynomial at
/// index N (degree N-1) uses the shifted coefficients (b_1..b_{N-1}) and
/// (sqrt(c_2)..sqrt(c_{N-1})).
struct JacobiMatrix {
    std::vector<double> diag;
    std::vector<double> offdiag;  // size diag.size() - 1
};

JacobiMatrix jacobi_matrix(const Family& fam, PolyKind kind, long N);

/// All eigenvalues, ascending, by Sturm-sequence bisection.
std::vector<double> tridiag_eigenvalues(const JacobiMatrix& J);

enum class ZeroMethod { eigen, bracket };

struct ZeroSet {
    std::vector<double> zeros;  // strictly increasing
    long index;                 // polynomial index n; -1 for a limit function
    ZeroMethod method;
    std::vector<double> residuals;  // |f(zero)| per zero
};

struct BracketConfig {
    double x_lo;
    double x_hi;
    double scan_step = 0.05;
    double refine_tol = 1e-12;

    void validate() const;
};

/// Zeros of the degree-N polynomial (degree N-1 for associated) as Jacobi
/// eigenvalues; residuals are scaled-polynomial magnitudes at the zeros.
ZeroSet poly_zeros(const Family& fam, PolyKind kind, long N);

/// Sign-change scan plus bisection refinement on [x_lo, x_hi]. Zeros at
/// even-order touch points are missed; close pairs need a scan_step smaller
/// than their separation.
std::vector<double> bracket_zeros(const std::function<double(double)>& f,
                                  const BracketConfig& config);

/// Real-axis restriction of a limiting entire function, for zero bracketing.
class LimitTarget {
  public:
    static LimitTarget mh(const Family& fam, PolyKind kind) { return {fam, kind, false}; }
    static LimitTarget stieltjes_entire(const Family& fam) {
        return {fam, PolyKind::associated, true};
    }

    double operator()(double x) const;
    const Family& family() const { return family_; }
    PolyKind kind() const { return kind_; }

  private:
    LimitTarget(const Family& fam, PolyKind kind, bool entire_stieltjes)
        : family_(fam), kind_(kind), entire_stieltjes_(entire_stieltjes) {}
    Family family_;
    PolyKind kind_;
    bool entire_stieltjes_;
};

/// All sign-change zeros of the target in the window, refined by bisection.
ZeroSet limit_zeros(const LimitTarget& target, const BracketConfig& config);

/// |x_{n,k} - zeta_k| over n_list, where zeta_k is the k-th zero of the
/// matching limit function (bracketed internally with an expanding window).
ConvergenceReport zero_convergence(const Family& fam, PolyKind kind, long k,
                                   std::span<const long> n_list);

}  // namespace mhpoly
