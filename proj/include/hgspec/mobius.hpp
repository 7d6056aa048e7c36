#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hgspec {

/// theta with cosh(theta) = 1/(2*sqrt(alpha)), computed through log to stay
/// accurate as alpha -> 1/4 (theta -> 0).
inline double theta_of_alpha(double alpha) {
    if (!(alpha > 0.0) || alpha > 0.25)
        throw std::invalid_argument("theta_of_alpha: alpha must lie in (0, 1/4]");
    double u = 0.5 / std::sqrt(alpha);
    return std::log(u + std::sqrt(u * u - 1.0));
}

/// The iteration x -> 1 - alpha/x and the quadratic x^2 - x + alpha it
/// orbits around: roots r2 <= r1 with r1 + r2 = 1, r1*r2 = alpha.
struct MobiusParams {
    double alpha;
    double theta;
    double r1;
    double r2;

    explicit MobiusParams(double a)
        : alpha(a),
          theta(theta_of_alpha(a)),
          r1(0.5 * (1.0 + std::tanh(theta))),
          r2(0.5 * (1.0 - std::tanh(theta))) {}
};

inline double phi(double alpha, double x) { return x * x - x + alpha; }

/// Orbit value that may sit at the pole of the map (the step after an
/// iterate hits 0 exactly); poles are values here, not exceptions, so
/// orbits stay total.
struct MobiusValue {
    double value = 0.0;
    bool pole = false;

    static MobiusValue at_pole() {
        return {-std::numeric_limits<double>::infinity(), true};
    }
    static MobiusValue of(double v) { return {v, false}; }
};

/// One forward step: alpha -> 0 -> pole -> 1 -> 1-alpha -> ...
inline MobiusValue mobius_step(double alpha, MobiusValue x) {
    if (x.pole) return MobiusValue::of(1.0);
    if (x.value == 0.0) return MobiusValue::at_pole();
    return MobiusValue::of(1.0 - alpha / x.value);
}

/// One inverse step, mirroring the forward pole chain.
inline MobiusValue mobius_step_back(double alpha, MobiusValue x) {
    if (x.pole) return MobiusValue::of(0.0);
    if (x.value == 1.0) return MobiusValue::at_pole();
    return MobiusValue::of(alpha / (1.0 - x.value));
}

/// The orbit x_0, x_1, ..., x_n (or x_0, x_{-1}, ..., x_n for n < 0);
/// size |n|+1.
inline std::vector<MobiusValue> iterate_direct(double alpha, double x0, long n) {
    std::vector<MobiusValue> orbit{MobiusValue::of(x0)};
    for (long i = 0; i < std::labs(n); ++i)
        orbit.push_back(n >= 0 ? mobius_step(alpha, orbit.back())
                               : mobius_step_back(alpha, orbit.back()));
    return orbit;
}

inline MobiusValue orbit_endpoint(double alpha, double x0, long n) {
    return iterate_direct(alpha, x0, n).back();
}

/// x_n as a hyperbolic ratio in theta; exact at negative n as well. The
/// alpha = 1/4 case (theta = 0) degenerates to a ratio linear in n.
/// Evaluated in the diagonalized form x_n = (A r1^{n+1} + B r2^{n+1}) /
/// (A r1^n + B r2^n) with the dominant power factored out, which avoids
/// the cancellation the raw sinh ratio suffers near the fixed points; the
/// pole test is on the sinh form's denominator, recovered by rescaling.
inline MobiusValue closed_form(double alpha, double x0, long n) {
    double theta = theta_of_alpha(alpha);
    if (theta == 0.0) {
        double nn = static_cast<double>(n);
        double num = 2.0 * (nn + 1.0) * x0 - nn;
        double den = 2.0 * (2.0 * nn * x0 - (nn - 1.0));
        if (std::fabs(den) <= 1e-14) return MobiusValue::at_pole();
        return MobiusValue::of(num / den);
    }
    double tanh_theta = std::tanh(theta);
    double r1 = 0.5 * (1.0 + tanh_theta);
    double r2 = 0.5 * (1.0 - tanh_theta);
    double A = (x0 - r2) / (r1 - r2);
    double B = (r1 - x0) / (r1 - r2);
    double shrink = std::exp(-2.0 * std::fabs(static_cast<double>(n)) * theta);
    double num, den;
    if (n >= 0) {
        num = A * r1 + B * r2 * shrink;
        den = A + B * shrink;
    } else {
        num = A * r1 * shrink + B * r2;
        den = A * shrink + B;
    }
    double grow = std::exp(std::fabs(static_cast<double>(n)) * theta);
    double sinh_form_den = den * grow * std::sinh(theta) / std::sqrt(alpha);
    if (std::fabs(sinh_form_den) <= 1e-14) return MobiusValue::at_pole();
    return MobiusValue::of(num / den);
}

/// F0 at a given theta: (1/2)(1 - tanh(theta) tanh(x theta / 2)).
inline double f0_at_theta(double theta, double x) {
    return 0.5 * (1.0 - std::tanh(theta) * std::tanh(0.5 * x * theta));
}

inline double f0_star_at_theta(double theta, double x) {
    return 0.5 * (1.0 + std::tanh(theta) * std::tanh(0.5 * x * theta));
}

inline double f0(double alpha, double x) { return f0_at_theta(theta_of_alpha(alpha), x); }

inline double f0_star(double alpha, double x) {
    return f0_star_at_theta(theta_of_alpha(alpha), x);
}

/// Seed of the length-l symmetric orbit: the largest root of
/// x + closed_form(alpha, x, l) = 1, which collapses to F0(l).
inline double symmetric_y0(double alpha, long l) {
    if (l < 0) throw std::invalid_argument("symmetric_y0: l must be >= 0");
    return f0(alpha, static_cast<double>(l));
}

/// n-th value of the symmetric orbit indexed by offsets p, q: F0*(2n-p-q).
inline double symmetric_term(double alpha, long p, long q, long n) {
    return f0_star(alpha, static_cast<double>(2 * n - p - q));
}

enum class OrbitClass {
    increasing_to_r1,  // r2 < x0 < r1, i.e. phi(x0) < 0
    decreasing_to_r1,  // x0 > r1
    exits_positive,    // 0 < x0 < r2: some iterate drops to <= 0
    constant,          // x0 is a fixed point
};

inline OrbitClass classify_orbit(double alpha, double x0) {
    if (!(x0 > 0.0)) throw std::invalid_argument("classify_orbit: x0 must be positive");
    MobiusParams p(alpha);
    if (x0 == p.r1 || x0 == p.r2) return OrbitClass::constant;
    if (x0 > p.r1) return OrbitClass::decreasing_to_r1;
    if (x0 > p.r2) return OrbitClass::increasing_to_r1;
    return OrbitClass::exits_positive;
}

/// The threshold (4 - c^{1/3} - c^{-1/3})/3 with c = (3 sqrt(69) + 25)/2,
/// equivalently the unique root of (1-x)^5 = x in (0,1).
inline double alpha_star() {
    double c = 0.5 * (3.0 * std::sqrt(69.0) + 25.0);
    double cr = std::cbrt(c);
    return (4.0 - cr - 1.0 / cr) / 3.0;
}

}  // namespace hgspec
