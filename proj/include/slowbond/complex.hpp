#pragma once

#include <cmath>
#include <ostream>

#include "slowbond/mpfloat.hpp"

namespace slowbond {

/// Minimal complex type over an arbitrary real field (std::complex is only
/// specified for built-in floating point).  Supplies exactly the operations
/// the root finder and contour code need.
template <class T>
struct Complex {
    T re{}, im{};

    Complex() = default;
    Complex(T r) : re(std::move(r)), im(T(0)) {}
    Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        T d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    Complex& operator/=(const Complex& o) { return *this = *this / o; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

    friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
        return os << "(" << z.re << ", " << z.im << ")";
    }
};

template <class T> T norm(const Complex<T>& z) { return z.re * z.re + z.im * z.im; }
template <class T> Complex<T> conj(const Complex<T>& z) { return {z.re, -z.im}; }

template <class T> T abs(const Complex<T>& z) {
    using std::sqrt;
    using boost::multiprecision::sqrt;
    return sqrt(norm(z));
}

/// Principal branch: Re(sqrt) >= 0.
template <class T> Complex<T> sqrt(const Complex<T>& z) {
    using std::sqrt;
    using boost::multiprecision::sqrt;
    T m = abs(z);
    if (m == 0) return {T(0), T(0)};
    T u = sqrt((m + z.re) / 2);
    T v = sqrt((m - z.re) / 2);
    if (z.im < 0) v = -v;
    return {u, v};
}

template <class T> Complex<T> exp(const Complex<T>& z) {
    using std::exp; using std::sin; using std::cos;
    using boost::multiprecision::exp;
    using boost::multiprecision::sin;
    using boost::multiprecision::cos;
    T e = exp(z.re);
    return {e * cos(z.im), e * sin(z.im)};
}

using MpComplex = Complex<MpFloat>;

inline Complex<double> to_double(const MpComplex& z) {
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

}  // namespace slowbond
