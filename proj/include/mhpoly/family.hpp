#pragma once

#include <string>

#include "mhpoly/log_scaled.hpp"
#include "mhpoly/series.hpp"

namespace mhpoly {

enum class FamilyKind { charlier, meixner };
enum class PolyKind { standard, monic, associated };

/// Parameter set of a discrete orthogonal polynomial family on {0,1,2,...}:
/// Charlier with Poisson weight a^k/k! (a > 0), or Meixner with
/// negative-binomial weight (beta)_k c^k/k! (beta > 0, 0 < c < 1).
class Family {
  public:
    static Family charlier(double a);
    static Family meixner(double beta, double c);

    FamilyKind kind() const { return kind_; }
    bool is_charlier() const { return kind_ == FamilyKind::charlier; }
    double a() const { return a_; }
    double beta() const { return beta_; }
    double c() const { return c_; }
    std::string name() const { return is_charlier() ? "charlier" : "meixner"; }

  private:
    Family(FamilyKind kind, double a, double beta, double c)
        : kind_(kind), a_(a), beta_(beta), c_(c) {}
    FamilyKind kind_;
    double a_ = 0.0;     // charlier
    double beta_ = 0.0;  // meixner
    double c_ = 0.0;     // meixner
};

struct RecurrenceCoeffs {
    double b;
    double c;
};

/// Coefficients of x P_n = P_{n+1} + b_n P_n + c_n P_{n-1}.
/// Charlier: b_n = n + a, c_n = a n.
/// Meixner:  b_n = (n + (n+beta) c) / (1-c), c_n = n (n+beta-1) c / (1-c)^2.
RecurrenceCoeffs recurrence_coeffs(const Family& fam, long n);

/// Polynomial value by forward recurrence. Monic from P_{-1}=0, P_0=1;
/// Associated from P*_0=0, P*_1=1 (degree n-1 at index n); Standard is the
/// monic value divided by the monic factor in log-scaled space.
/// Throws std::overflow_error when an intermediate leaves the binary64 range
/// (use asymptotics::scaled_poly instead for large n).
cplx eval_poly(const Family& fam, PolyKind kind, long n, cplx x);

/// Standard-kind value by exact terminating hypergeometric summation:
/// Charlier C_n(x) = 2F0(-n, -x; ; -1/a), Meixner M_n(x) = 2F1(-n, -x; beta; 1 - 1/c).
cplx eval_hypergeom(const Family& fam, long n, cplx x);

/// Prefactor turning the standard polynomial into the monic one:
/// (-a)^n for Charlier, (beta)_n (c/(c-1))^n for Meixner.
LogScaled monic_factor(const Family& fam, long n);

/// Weight w_k at the lattice point k, as a log-scaled positive real.
LogScaled weight_term(const Family& fam, long k);

/// mu_0 = sum_k w_k: e^a for Charlier, (1-c)^{-beta} for Meixner.
double moment0(const Family& fam);

/// Truncated moment sum_k k^r w_k.
double moment(const Family& fam, long r, const SeriesControl& ctrl = {});

/// Closed-form orthogonality norm K_n: a^{-n} e^a n! for Charlier,
/// c^{-n} n! / ((beta)_n (1-c)^beta) for Meixner.
double orthogonality_norm(const Family& fam, long n);

struct OrthoSum {
    double value;
    long k_stop;  // first lattice index not included in the sum
};

/// Truncated sum_k P_n(k) P_m(k) w_k over the standard-kind polynomials;
/// approaches K_n delta_{n,m}.
OrthoSum orthogonality_sum(const Family& fam, long n, long m, const SeriesControl& ctrl = {});

}  // namespace mhpoly
