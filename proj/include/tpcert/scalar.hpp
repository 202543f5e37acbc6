#pragma once

#include <cmath>
#include <concepts>
#include <cstdio>
#include <string>

#include "tpcert/rational.hpp"

namespace tpcert {

// Double-precision scalar for the numerical (benchmarking) mode. Sign
// queries go through a single session-wide tolerance: |v| <= epsilon
// reads as zero. Arithmetic is plain IEEE double.
struct FloatScalar {
    double value = 0.0;

    static inline double epsilon = 1e-9;

    constexpr FloatScalar() = default;
    constexpr FloatScalar(long v) : value(static_cast<double>(v)) {}
    constexpr FloatScalar(int v) : value(static_cast<double>(v)) {}
    constexpr explicit FloatScalar(double v) : value(v) {}

    int sign() const {
        if (std::fabs(value) <= epsilon) return 0;
        return value > 0 ? 1 : -1;
    }
    FloatScalar abs() const { return FloatScalar(std::fabs(value)); }
    bool is_zero() const { return sign() == 0; }

    double to_double() const { return value; }
    std::string to_string() const {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", value);
        return buf;
    }

    friend FloatScalar operator+(FloatScalar a, FloatScalar b) { return FloatScalar(a.value + b.value); }
    friend FloatScalar operator-(FloatScalar a, FloatScalar b) { return FloatScalar(a.value - b.value); }
    friend FloatScalar operator*(FloatScalar a, FloatScalar b) { return FloatScalar(a.value * b.value); }
    friend FloatScalar operator/(FloatScalar a, FloatScalar b) { return FloatScalar(a.value / b.value); }
    FloatScalar operator-() const { return FloatScalar(-value); }
    FloatScalar& operator+=(FloatScalar o) { value += o.value; return *this; }
    FloatScalar& operator-=(FloatScalar o) { value -= o.value; return *this; }
    FloatScalar& operator*=(FloatScalar o) { value *= o.value; return *this; }
    FloatScalar& operator/=(FloatScalar o) { value /= o.value; return *this; }

    friend bool operator==(FloatScalar a, FloatScalar b) { return a.value == b.value; }
    friend auto operator<=>(FloatScalar a, FloatScalar b) { return a.value <=> b.value; }
};

inline int sign(const FloatScalar& s) { return s.sign(); }
inline FloatScalar abs(const FloatScalar& s) { return s.abs(); }
inline std::string to_string(const FloatScalar& s) { return s.to_string(); }

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* mode_name = "exact";
    static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct scalar_traits<FloatScalar> {
    static constexpr bool exact = false;
    static constexpr const char* mode_name = "numerical";
    static FloatScalar from_rational(const Rational& r) { return FloatScalar(r.to_double()); }
};

template <class S>
concept ScalarType = requires(const S a, const S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { sign(a) } -> std::convertible_to<int>;
    { a == b } -> std::convertible_to<bool>;
    { a < b } -> std::convertible_to<bool>;
    requires std::constructible_from<S, long>;
    { scalar_traits<S>::exact } -> std::convertible_to<bool>;
};

}  // namespace tpcert
