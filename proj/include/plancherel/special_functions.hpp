#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>

#include <boost/math/special_functions/gamma.hpp>

#include "plancherel/errors.hpp"

namespace plancherel {

// log|x| with sign; sign == 0 means the value is exactly zero.
struct SignedLogValue {
    double log_magnitude = 0.0;
    int sign = 1;

    static SignedLogValue zero() { return {0.0, 0}; }
    static SignedLogValue one() { return {0.0, 1}; }
    static SignedLogValue from_value(double x) {
        if (x == 0.0) return zero();
        return {std::log(std::fabs(x)), x > 0 ? 1 : -1};
    }

    bool is_zero() const { return sign == 0; }
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_magnitude); }

    SignedLogValue& operator*=(const SignedLogValue& o) {
        sign *= o.sign;
        log_magnitude = sign == 0 ? 0.0 : log_magnitude + o.log_magnitude;
        return *this;
    }
    SignedLogValue& operator/=(const SignedLogValue& o) {
        if (o.sign == 0) throw InternalError("SignedLogValue division by zero");
        sign *= o.sign;
        log_magnitude = sign == 0 ? 0.0 : log_magnitude - o.log_magnitude;
        return *this;
    }
    SignedLogValue& operator*=(double x) { return *this *= from_value(x); }
    SignedLogValue& operator/=(double x) { return *this /= from_value(x); }
    SignedLogValue inverse() const {
        SignedLogValue r = one();
        r /= *this;
        return r;
    }
    SignedLogValue flipped(int s) const { return {log_magnitude, sign * s}; }
};

inline SignedLogValue operator*(SignedLogValue a, const SignedLogValue& b) { return a *= b; }
inline SignedLogValue operator/(SignedLogValue a, const SignedLogValue& b) { return a /= b; }

constexpr double kPoleTolerance = 1e-9;

// True iff x sits on a pole of Gamma; p receives -round(x) >= 0.
inline bool is_gamma_pole(double x, long long* p = nullptr) {
    const double r = std::round(x);
    if (r > 0.0 || std::fabs(x - r) > kPoleTolerance) return false;
    if (p) *p = static_cast<long long>(-r);
    return true;
}

inline SignedLogValue log_gamma_signed(double x) {
    if (!std::isfinite(x)) throw std::domain_error("log_gamma_signed: non-finite argument");
    long long p = 0;
    if (is_gamma_pole(x, &p)) throw PoleError(-p);
    int s = 1;
    const double lg = boost::math::lgamma(x, &s);
    return {lg, s};
}

inline double reciprocal_gamma(double x) {
    if (is_gamma_pole(x)) return 0.0;
    return log_gamma_signed(x).inverse().value();
}

inline SignedLogValue log_reciprocal_gamma(double x) {
    if (is_gamma_pole(x)) return SignedLogValue::zero();
    return log_gamma_signed(x).inverse();
}

inline double log_factorial(long long p) { return boost::math::lgamma(static_cast<double>(p) + 1.0); }

namespace detail {

inline double pochhammer_product(double a, long long k) {
    if (k >= 0) {
        double r = 1.0;
        for (long long i = 0; i < k; ++i) r *= a + static_cast<double>(i);
        return r;
    }
    double d = 1.0;
    for (long long i = 1; i <= -k; ++i) {
        const double f = a - static_cast<double>(i);
        if (f == 0.0) throw PoleError(std::llround(a + static_cast<double>(k)));
        d *= f;
    }
    return 1.0 / d;
}

inline double pochhammer_log(double a, long long k) {
    long long pa = 0, pak = 0;
    const bool a_pole = is_gamma_pole(a, &pa);
    const bool ak_pole = is_gamma_pole(a + static_cast<double>(k), &pak);
    if (a_pole) {
        if (!ak_pole) return 0.0;  // a+i passes through zero
        // (a)_k = (-1)^k (1-a-k)_k for a, a+k both non-positive integers
        const double r = (log_gamma_signed(1.0 - a) / log_gamma_signed(1.0 - a - static_cast<double>(k))).value();
        return (k % 2 == 0) ? r : -r;
    }
    if (ak_pole) throw PoleError(-pak);
    return (log_gamma_signed(a + static_cast<double>(k)) / log_gamma_signed(a)).value();
}

}  // namespace detail

constexpr long long kPochhammerDirectLimit = 64;

inline double pochhammer(double a, long long k) {
    if (std::llabs(k) <= kPochhammerDirectLimit) return detail::pochhammer_product(a, k);
    return detail::pochhammer_log(a, k);
}

// Leading term c * delta^order of a product of Gamma(a0 + c delta) and
// 1/Gamma(a0 + c delta) factors as delta -> 0.
struct Leading {
    int order = 0;
    SignedLogValue coeff = SignedLogValue::one();
    bool identically_zero = false;

    Leading& operator*=(const Leading& o) {
        order += o.order;
        coeff *= o.coeff;
        identically_zero = identically_zero || o.identically_zero;
        return *this;
    }
    Leading& operator*=(const SignedLogValue& v) {
        if (v.is_zero()) identically_zero = true;
        else coeff *= v;
        return *this;
    }
    Leading& operator*=(double x) { return *this *= SignedLogValue::from_value(x); }

    bool vanishes() const { return identically_zero || order > 0; }

    double limit() const {
        if (vanishes()) return 0.0;
        if (order == 0) return coeff.value();
        return coeff.sign * std::numeric_limits<double>::infinity();
    }
};

// Gamma(a0 + c delta)
inline Leading gamma_leading(double a0, double c) {
    Leading r;
    long long p = 0;
    if (!is_gamma_pole(a0, &p)) {
        r.coeff = log_gamma_signed(a0);
        return r;
    }
    if (c == 0.0) throw PoleError(-p);
    // Gamma(-p + x) ~ (-1)^p / (p! x)
    r.order = -1;
    r.coeff = SignedLogValue{-log_factorial(p), (p % 2 == 0) ? 1 : -1} / SignedLogValue::from_value(c);
    return r;
}

// 1/Gamma(a0 + c delta)
inline Leading rgamma_leading(double a0, double c) {
    Leading r;
    long long p = 0;
    if (!is_gamma_pole(a0, &p)) {
        r.coeff = log_gamma_signed(a0).inverse();
        return r;
    }
    if (c == 0.0) {
        r.identically_zero = true;
        return r;
    }
    r.order = 1;
    r.coeff = SignedLogValue{log_factorial(p), (p % 2 == 0) ? 1 : -1} * SignedLogValue::from_value(c);
    return r;
}

}  // namespace plancherel
