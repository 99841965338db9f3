#pragma once

#include <cmath>
#include <limits>

namespace mhpoly {

/// Sign plus natural-log magnitude; represents reals whose magnitude can
/// exceed the binary64 range (factorial-scale weights, monic prefactors).
struct LogScaled {
    int sign = 0;  // -1, 0, +1; sign == 0 iff log_mag == -inf
    double log_mag = -std::numeric_limits<double>::infinity();

    static LogScaled zero() { return {}; }
    static LogScaled one() { return {1, 0.0}; }

    static LogScaled from_value(double v) {
        if (v == 0.0) return zero();
        return {v > 0.0 ? 1 : -1, std::log(std::abs(v))};
    }

    static LogScaled from_log(int sign, double log_mag) {
        if (sign == 0) return zero();
        return {sign, log_mag};
    }

    bool is_zero() const { return sign == 0; }

    /// Round-trip to binary64. Overflows to +-inf when log_mag is too large.
    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_mag);
    }
};

inline LogScaled operator*(const LogScaled& a, const LogScaled& b) {
    if (a.sign == 0 || b.sign == 0) return LogScaled::zero();
    return {a.sign * b.sign, a.log_mag + b.log_mag};
}

inline LogScaled operator/(const LogScaled& a, const LogScaled& b) {
    // division by zero is the caller's bug; propagate +inf magnitude
    if (a.sign == 0) return LogScaled::zero();
    return {a.sign * b.sign, a.log_mag - b.log_mag};
}

}  // namespace mhpoly
