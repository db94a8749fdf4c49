#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace xxz {

inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)), safe for widely separated magnitudes
inline double log_add(double a, double b) {
    if (a == kLogZero) return b;
    if (b == kLogZero) return a;
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

// log(1 + exp(t)) without overflow
inline double softplus(double t) {
    if (t > 0) return t + std::log1p(std::exp(-t));
    return std::log1p(std::exp(t));
}

// A complex number stored as exp(log_mag) * exp(i*phase).
// Zero is log_mag == -inf. Positive reals have phase == 0.
struct LogComplex {
    double log_mag = kLogZero;
    double phase = 0.0;

    static LogComplex zero() { return {}; }
    static LogComplex one() { return {0.0, 0.0}; }
    static LogComplex from_log_real(double lm) { return {lm, 0.0}; }

    bool is_zero() const { return log_mag == kLogZero; }

    std::complex<double> to_complex() const {
        if (is_zero()) return {0.0, 0.0};
        double m = std::exp(log_mag);
        return {m * std::cos(phase), m * std::sin(phase)};
    }
};

// max-shifted accumulation: exp-shift both operands by the larger magnitude,
// add as complex doubles, convert back
inline LogComplex log_add(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    double m = std::max(a.log_mag, b.log_mag);
    double ra = std::exp(a.log_mag - m);
    double rb = std::exp(b.log_mag - m);
    std::complex<double> z =
        std::complex<double>(ra * std::cos(a.phase), ra * std::sin(a.phase)) +
        std::complex<double>(rb * std::cos(b.phase), rb * std::sin(b.phase));
    double az = std::abs(z);
    if (az == 0.0) return LogComplex::zero();
    return {m + std::log(az), std::arg(z)};
}

inline LogComplex log_mul(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero() || b.is_zero()) return LogComplex::zero();
    return {a.log_mag + b.log_mag, a.phase + b.phase};
}

// compensated (Kahan) accumulator; commutative up to rounding, used where
// deterministic parallel reductions are required
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};

}  // namespace xxz
