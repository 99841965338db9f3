#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "mhpoly/asymptotics.hpp"
#include "mhpoly/special.hpp"

using namespace mhpoly;

namespace {

double rel_err(cplx got, cplx want) {
    const double scale = std::abs(want);
    return std::abs(got - want) / (scale > 0.0 ? scale : 1.0);
}

const Family kCharlier = Family::charlier(1.23);
const Family kMeixner = Family::meixner(1.23, 0.36);

}  // namespace

TEST_CASE("mh_limit closed values") {
    const double ea = std::exp(1.23);
    CHECK(rel_err(mh_limit(kCharlier, PolyKind::standard, cplx(-1.0)), ea) < 1e-14);
    CHECK(mh_limit(kCharlier, PolyKind::standard, cplx(0.0)) == cplx(0.0));
    CHECK(mh_limit(kCharlier, PolyKind::monic, cplx(-1.0)) ==
          mh_limit(kCharlier, PolyKind::standard, cplx(-1.0)));
    CHECK(rel_err(mh_limit(kCharlier, PolyKind::associated, cplx(-1.0)), -(ea - 1.0) / 1.23) <
          1e-13);
    // Meixner standard at x = -1: (1-c)^{1-beta}
    CHECK(rel_err(mh_limit(kMeixner, PolyKind::standard, cplx(-1.0)),
                  std::pow(0.64, 1.0 - 1.23)) < 1e-14);
}

TEST_CASE("charlier associated limit equals the entire Stieltjes form") {
    for (double x : {-4.2, -1.5, -0.3, 0.7, 2.5, 6.9}) {
        CHECK(rel_err(mh_limit(kCharlier, PolyKind::associated, cplx(x)),
                      stieltjes_entire(kCharlier, cplx(x))) <= 1e-12);
    }
    const cplx xc(-0.5, 0.5);
    CHECK(rel_err(mh_limit(kCharlier, PolyKind::associated, xc),
                  stieltjes_entire(kCharlier, xc)) <= 1e-12);
}

TEST_CASE("meixner associated limit: 2F1 form vs entire series vs beta form") {
    // off the lattice all three routes agree
    for (double x = -5.0; x <= -0.1 + 1e-12; x += 0.1) {
        const cplx via_2f1 = mh_limit(kMeixner, PolyKind::associated, cplx(x));
        CHECK(rel_err(mh_limit_via_inc_beta(kMeixner, cplx(x)), via_2f1) <= 1e-10);
        const cplx via_series = std::exp(-x * std::log(0.64)) * stieltjes_entire(kMeixner, cplx(x));
        CHECK(rel_err(via_series, via_2f1) <= 1e-12);
    }
    CHECK_THROWS_AS(mh_limit_via_inc_beta(kCharlier, cplx(-1.0)), std::invalid_argument);
}

TEST_CASE("meixner associated limit at and near lattice points") {
    // exact integers go through the removable-limit route
    for (long m : {0L, 1L, 2L, 3L, 7L}) {
        const double closed = -((m % 2 == 0) ? 1.0 : -1.0) *
                              std::exp(log_gamma(double(m) + 1.0) +
                                       weight_term(kMeixner, m).log_mag -
                                       double(m) * std::log(0.64));
        CHECK(rel_err(mh_limit(kMeixner, PolyKind::associated, cplx(double(m))), closed) <= 1e-12);
    }
    // continuity across the switch between the series and 2F1 routes
    for (long m : {1L, 2L, 5L}) {
        const cplx at = mh_limit(kMeixner, PolyKind::associated, cplx(double(m)));
        const cplx near = mh_limit(kMeixner, PolyKind::associated, cplx(double(m) + 1e-5));
        CHECK(std::abs(at - near) < 1e-3 * std::max(1.0, std::abs(at)));
        const cplx inside = mh_limit(kMeixner, PolyKind::associated, cplx(double(m) + 1e-7));
        CHECK(std::abs(at - inside) < 1e-5 * std::max(1.0, std::abs(at)));
    }
}

TEST_CASE("stieltjes_entire at exact lattice points matches the nearby series") {
    for (const Family& fam : {kCharlier, kMeixner}) {
        for (long m : {1L, 2L, 6L}) {
            const cplx at = stieltjes_entire(fam, cplx(double(m)));
            const cplx near = stieltjes_entire(fam, cplx(double(m) + 1e-9));
            // the relative slope at the lattice carries factorial-size terms
            // from the reciprocal-gamma derivatives, so allow ~1e3 * 1e-9
            CHECK(rel_err(near, at) <= 1e-6);
        }
    }
}

TEST_CASE("scaled_poly seeds and small indices") {
    // n = 0 standard Charlier at x = -1.5: 1/Gamma(1.5) = 2/sqrt(pi)
    CHECK(rel_err(scaled_poly(kCharlier, PolyKind::standard, 0, cplx(-1.5)).value,
                  2.0 / std::sqrt(std::numbers::pi)) < 1e-14);
    // n = 1 monic Charlier at x = -1: -(x-a)/Gamma(2) = 2.23
    CHECK(rel_err(scaled_poly(kCharlier, PolyKind::monic, 1, cplx(-1.0)).value, 2.23) < 1e-14);
    // associated n = 2 at x = -1: (x - (1+a))/Gamma(3) = -1.615
    CHECK(rel_err(scaled_poly(kCharlier, PolyKind::associated, 2, cplx(-1.0)).value, -1.615) <
          1e-14);
    // standard and monic scaled values coincide identically
    const cplx x(-2.7, 1.1);
    CHECK(scaled_poly(kMeixner, PolyKind::standard, 17, x).value ==
          scaled_poly(kMeixner, PolyKind::monic, 17, x).value);
}

TEST_CASE("scaled_poly normalizer descriptions") {
    CHECK(scaled_poly(kCharlier, PolyKind::standard, 3, cplx(-1.0)).normalizer() ==
          "a^n / Gamma(n - x)");
    CHECK(scaled_poly(kCharlier, PolyKind::monic, 3, cplx(-1.0)).normalizer() ==
          "(-1)^n / Gamma(n - x)");
    CHECK(scaled_poly(kMeixner, PolyKind::standard, 3, cplx(-1.0)).normalizer() ==
          "c^n (beta)_n / Gamma(n - x)");
    CHECK(scaled_poly(kMeixner, PolyKind::associated, 3, cplx(-1.0)).normalizer() ==
          "(c-1)^n / Gamma(n - x)");
}

TEST_CASE("scaled recurrence agrees with direct evaluation over log-gamma") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> re(-9.5, -0.3), im(-3.0, 3.0);
    for (const Family& fam : {kCharlier, kMeixner}) {
        for (PolyKind kind : {PolyKind::standard, PolyKind::monic, PolyKind::associated}) {
            for (int trial = 0; trial < 10; ++trial) {
                const cplx x(re(rng), im(rng));
                for (long n : {1L, 2L, 7L, 40L, 150L}) {
                    const cplx direct = eval_poly(fam, kind, n, x);
                    if (direct == cplx(0.0)) continue;
                    double log_sigma;
                    int sign;
                    if (kind == PolyKind::standard) {
                        sign = 1;
                        log_sigma = fam.is_charlier()
                                        ? double(n) * std::log(fam.a())
                                        : double(n) * std::log(fam.c()) +
                                              log_gamma(fam.beta() + double(n)) -
                                              log_gamma(fam.beta());
                    } else {
                        sign = (n % 2 == 0) ? 1 : -1;
                        log_sigma =
                            fam.is_charlier() ? 0.0 : double(n) * std::log(1.0 - fam.c());
                    }
                    const cplx expected =
                        double(sign) *
                        std::exp(std::log(direct) + log_sigma - log_gamma(cplx(double(n)) - x));
                    CHECK(rel_err(scaled_poly(fam, kind, n, x).value, expected) <= 1e-9);
                }
            }
        }
    }
}

TEST_CASE("scaled_poly near lattice points matches the direct route on both sides") {
    // The monic scaled value is tiny near the lattice (the limit function
    // vanishes there and the polynomial zeros sit very close to the
    // integers), so each path is compared against the direct
    // polynomial-over-log-gamma formula at the same point, scale-aware.
    const long n = 28;
    for (const Family& fam : {kCharlier, kMeixner}) {
        for (PolyKind kind : {PolyKind::monic, PolyKind::associated}) {
            const double log_sigma =
                fam.is_charlier() ? 0.0 : double(n) * std::log(1.0 - fam.c());
            for (double m : {1.0, 3.0, 10.0}) {
                // fallback side of the 1e-8 window, then the recurrence side
                for (double d : {0.0, 1e-9, 5e-8, 1e-4}) {
                    const cplx x(m + d);
                    const cplx direct = eval_poly(fam, kind, n, x);
                    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
                    const cplx expected =
                        sign * std::exp(std::log(direct) + log_sigma -
                                        log_gamma(cplx(double(n)) - x));
                    const cplx got = scaled_poly(fam, kind, n, x).value;
                    CHECK(std::abs(got - expected) <= 1e-6 * std::max(1.0, std::abs(expected)));
                }
            }
        }
    }
}

TEST_CASE("scaled associated Charlier approaches its limit") {
    const cplx limit = mh_limit(kCharlier, PolyKind::associated, cplx(-1.0));
    const cplx t28 = scaled_poly(kCharlier, PolyKind::associated, 28, cplx(-1.0)).value;
    CHECK(std::abs(t28 - limit) < 0.05);
    // cross-check the n = 28 value against the log-gamma fallback route
    const cplx direct = eval_poly(kCharlier, PolyKind::associated, 28, cplx(-1.0));
    const cplx expected = std::exp(std::log(direct) - log_gamma(cplx(29.0)));
    CHECK(rel_err(t28, expected) <= 1e-12);
}

TEST_CASE("stieltjes closed forms") {
    CHECK(rel_err(stieltjes(kCharlier, cplx(-1.0)), -(std::exp(1.23) - 1.0) / 1.23) <= 1e-13);
    CHECK(rel_err(stieltjes(Family::meixner(1.0, 0.5), cplx(-1.0)), -2.0 * std::log(2.0)) <=
          1e-13);
    // mpmath, 40 digits
    CHECK(rel_err(stieltjes(kMeixner, cplx(-1.0)), -1.305544804372105190017) <= 1e-13);
}

TEST_CASE("stieltjes far-field behaviour") {
    for (const Family& fam : {kCharlier, kMeixner}) {
        const cplx z(-1e6);
        CHECK(rel_err(stieltjes(fam, z), moment0(fam) / z) <= 1e-4);
    }
}

TEST_CASE("stieltjes domain validation") {
    CHECK_THROWS_AS(stieltjes(kCharlier, cplx(1.0)), std::domain_error);
    CHECK_THROWS_AS(stieltjes(kCharlier, cplx(0.0)), std::domain_error);
    CHECK_THROWS_AS(stieltjes_direct(kCharlier, cplx(2.5)), std::domain_error);
    // off the axis is fine even with positive real part
    CHECK(std::abs(stieltjes(kCharlier, cplx(2.5, 0.5))) > 0.0);
}

TEST_CASE("stieltjes hypergeometric form equals the direct sum") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> re(-8.0, -0.2), im(-4.0, 4.0);
    for (const Family& fam : {kCharlier, kMeixner}) {
        for (int trial = 0; trial < 20; ++trial) {
            const cplx z(re(rng), im(rng));
            CHECK(rel_err(stieltjes(fam, z), stieltjes_direct(fam, z)) <= 1e-10);
        }
    }
}

TEST_CASE("markov ratio closed forms at n = 1") {
    const cplx z(-1.0);
    CHECK(rel_err(markov_ratio(kCharlier, z, 1), std::exp(1.23) / (-1.0 - 1.23)) <= 1e-13);
    const double b0 = 1.23 * 0.36 / (1.0 - 0.36);
    CHECK(rel_err(markov_ratio(kMeixner, z, 1),
                  std::pow(1.0 - 0.36, -1.23) / (-1.0 - b0)) <= 1e-13);
    CHECK_THROWS_AS(markov_ratio(kCharlier, cplx(1.0), 10), std::domain_error);
}

TEST_CASE("markov ratio converges to the Stieltjes transform") {
    // convergence is superexponential: the error drops below machine
    // epsilon around n = 30 and then sits on a ~1e-15 noise floor
    for (const Family& fam : {kCharlier, kMeixner}) {
        const cplx z(-1.0);
        const cplx reference = stieltjes(fam, z);
        double prev_err = 1e300;
        for (long n : {2L, 4L, 6L, 8L, 12L}) {
            const double err = std::abs(markov_ratio(fam, z, n) - reference);
            CHECK(err < prev_err);
            prev_err = err;
        }
        for (long n : {50L, 100L, 200L, 500L}) {
            CHECK(std::abs(markov_ratio(fam, z, n) - reference) < 1e-12);
        }
    }
}

TEST_CASE("convergence_report fitting") {
    {
        std::vector<std::pair<long, cplx>> seq{{10, cplx(2.0)}, {20, cplx(2.0)}, {40, cplx(2.0)}};
        const auto report = convergence_report(seq, cplx(2.0));
        for (const auto& s : report.samples) CHECK(s.error == 0.0);
        CHECK(!report.fitted_order.has_value());
    }
    {
        std::vector<std::pair<long, cplx>> seq;
        for (long n : {10L, 20L, 40L, 80L}) seq.push_back({n, cplx(5.0 + 1.0 / double(n))});
        const auto report = convergence_report(seq, cplx(5.0));
        REQUIRE(report.fitted_order.has_value());
        CHECK(std::abs(*report.fitted_order - 1.0) <= 0.05);
    }
    {
        std::vector<std::pair<long, cplx>> one{{10, cplx(1.0)}};
        CHECK_THROWS_AS(convergence_report(one, cplx(0.0)), std::invalid_argument);
        std::vector<std::pair<long, cplx>> bad{{10, cplx(1.0)}, {10, cplx(1.0)}};
        CHECK_THROWS_AS(convergence_report(bad, cplx(0.0)), std::invalid_argument);
    }
}

TEST_CASE("scaled polynomials converge to the limit functions") {
    const std::vector<long> ns{50, 100, 200, 400};
    for (const Family& fam : {kCharlier, kMeixner}) {
        for (PolyKind kind : {PolyKind::standard, PolyKind::monic, PolyKind::associated}) {
            for (const cplx x : {cplx(-1.5), cplx(-0.5, 0.5)}) {
                const cplx limit = mh_limit(fam, kind, x);
                double prev = 1e300;
                for (const long n : ns) {
                    const double err = std::abs(scaled_poly(fam, kind, n, x).value - limit);
                    CHECK(err < prev);
                    prev = err;
                }
            }
        }
    }
}

TEST_CASE("scaled associated Charlier error sequence has a fitted order") {
    const cplx x(-1.5);
    const cplx limit = mh_limit(kCharlier, PolyKind::associated, x);
    std::vector<std::pair<long, cplx>> seq;
    for (long n : {50L, 100L, 200L, 400L})
        seq.push_back({n, scaled_poly(kCharlier, PolyKind::associated, n, x).value});
    const auto report = convergence_report(seq, limit);
    for (std::size_t i = 1; i < report.samples.size(); ++i)
        CHECK(report.samples[i].error < report.samples[i - 1].error);
    REQUIRE(report.fitted_order.has_value());
    CHECK(*report.fitted_order > 0.5);  // roughly first order in 1/n
}

TEST_CASE("markov limit identity ties the associated and monic limits") {
    for (const Family& fam : {kCharlier, kMeixner}) {
        for (double x : {-0.5, -1.5, -3.7}) {
            const cplx lhs = moment0(fam) * mh_limit(fam, PolyKind::associated, cplx(x)) /
                             mh_limit(fam, PolyKind::monic, cplx(x));
            CHECK(rel_err(lhs, stieltjes(fam, cplx(x))) <= 1e-10);
        }
    }
}

TEST_CASE("tannery ratios") {
    // x = -1 makes every ratio exactly 1
    for (const Family& fam : {kCharlier, kMeixner}) {
        for (const auto& [k, ratio] : tannery_bounds(fam, -1.0, 12)) {
            CHECK(ratio == doctest::Approx(1.0).epsilon(1e-14));
        }
        CHECK(tannery_bounds(fam, -2.5, 9)[0].ratio == 1.0);  // empty product
        CHECK_THROWS_AS(tannery_bounds(fam, -0.5, 5), std::domain_error);
    }
    // direct product spot check: x = -1.5, n = 10, k = 3 (Charlier)
    double want = 1.0;
    for (int j = 0; j < 3; ++j) want *= double(10 - 3 + 1 + j) / (double(10 - 3 + j) + 1.5);
    CHECK(tannery_bounds(kCharlier, -1.5, 10)[3].ratio == doctest::Approx(want).epsilon(1e-15));

    for (const Family& fam : {kCharlier, kMeixner}) {
        for (double x : {-1.0, -1.5, -4.0}) {
            for (long n : {5L, 20L, 100L}) {
                for (const auto& [k, ratio] : tannery_bounds(fam, x, n)) {
                    CHECK(ratio > 0.0);
                    CHECK(ratio <= 1.0 + 1e-14);
                }
            }
        }
    }
    // fixed k: ratios approach 1 from below as n grows
    double prev = 0.0;
    for (long n : {10L, 100L, 1000L}) {
        const double r = tannery_bounds(kCharlier, -1.5, n)[3].ratio;
        CHECK(r > prev);
        prev = r;
    }
    CHECK(prev > 0.99);
}

TEST_CASE("carleman partial sums") {
    const Family ch1 = Family::charlier(1.0);
    CHECK(carleman_diag(ch1, 1) == 1.0);
    const double want4 = 1.0 + 1.0 / std::sqrt(2.0) + 1.0 / std::sqrt(3.0) + 0.5;
    CHECK(carleman_diag(ch1, 4) == doctest::Approx(want4).epsilon(1e-15));

    // growth like 2 sqrt(N/a); the Euler-Maclaurin tail of sum n^{-1/2} is
    // 2 sqrt(N) + zeta(1/2) + 1/(2 sqrt(N)) + O(N^{-3/2})
    const double zeta_half = -1.4603545088095868;
    for (long N : {100L, 10000L}) {
        const double sum = carleman_diag(kCharlier, N);
        const double estimate =
            (2.0 * std::sqrt(double(N)) + zeta_half + 0.5 / std::sqrt(double(N))) /
            std::sqrt(1.23);
        CHECK(std::abs(sum / estimate - 1.0) < 1e-3);
        CHECK(std::abs(sum / (2.0 * std::sqrt(double(N) / 1.23)) - 1.0) < 0.1);
    }
    CHECK(carleman_diag(kMeixner, 10000) > carleman_diag(kMeixner, 100));
}
