#pragma once

#include <cmath>

namespace glkinks {

/// Truncated Taylor jet (value, first and second derivative) for forward-mode
/// differentiation of the closed-form profiles.
template <class T>
struct Jet {
    T v{};
    T d1{};
    T d2{};

    constexpr Jet() = default;
    constexpr Jet(T value) : v(value) {}  // NOLINT: constants promote implicitly
    constexpr Jet(T value, T first, T second) : v(value), d1(first), d2(second) {}

    static constexpr Jet variable(T x) { return {x, T(1), T(0)}; }
};

template <class T>
constexpr Jet<T> operator+(const Jet<T>& a, const Jet<T>& b) {
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}

template <class T>
constexpr Jet<T> operator-(const Jet<T>& a, const Jet<T>& b) {
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}

template <class T>
constexpr Jet<T> operator-(const Jet<T>& a) {
    return {-a.v, -a.d1, -a.d2};
}

template <class T>
constexpr Jet<T> operator*(const Jet<T>& a, const Jet<T>& b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + T(2) * a.d1 * b.d1 + a.v * b.d2};
}

template <class T>
constexpr Jet<T> operator/(const Jet<T>& a, const Jet<T>& b) {
    const T q = a.v / b.v;
    const T q1 = (a.d1 - q * b.d1) / b.v;
    const T q2 = (a.d2 - T(2) * q1 * b.d1 - q * b.d2) / b.v;
    return {q, q1, q2};
}

template <class T> constexpr Jet<T> operator+(const Jet<T>& a, T b) { return a + Jet<T>(b); }
template <class T> constexpr Jet<T> operator+(T a, const Jet<T>& b) { return Jet<T>(a) + b; }
template <class T> constexpr Jet<T> operator-(const Jet<T>& a, T b) { return a - Jet<T>(b); }
template <class T> constexpr Jet<T> operator-(T a, const Jet<T>& b) { return Jet<T>(a) - b; }
template <class T> constexpr Jet<T> operator*(const Jet<T>& a, T b) { return {a.v * b, a.d1 * b, a.d2 * b}; }
template <class T> constexpr Jet<T> operator*(T a, const Jet<T>& b) { return b * a; }
template <class T> constexpr Jet<T> operator/(const Jet<T>& a, T b) { return {a.v / b, a.d1 / b, a.d2 / b}; }
template <class T> constexpr Jet<T> operator/(T a, const Jet<T>& b) { return Jet<T>(a) / b; }

template <class T>
Jet<T> exp(const Jet<T>& a) {
    using std::exp;
    const T e = exp(a.v);
    return {e, e * a.d1, e * (a.d2 + a.d1 * a.d1)};
}

template <class T>
Jet<T> expm1(const Jet<T>& a) {
    using std::exp;
    using std::expm1;
    const T e = exp(a.v);
    return {expm1(a.v), e * a.d1, e * (a.d2 + a.d1 * a.d1)};
}

template <class T> T value_of(const Jet<T>& a) { return a.v; }
inline double value_of(double a) { return a; }
inline long double value_of(long double a) { return a; }

}  // namespace glkinks
