#pragma once

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "slowbond/mpfloat.hpp"
#include "slowbond/rational.hpp"

namespace slowbond {

/// Truncated power series with explicit order (highest retained power).
/// Coefficient field F is exact (Rational) or multiprecision float (MpFloat);
/// all operations are pure and truncate to the order they are asked for.
template <class F>
class Series {
  public:
    Series() : coeffs_(1, F(0)) {}
    explicit Series(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(F(0));
    }
    static Series zero(int order) { return Series(std::vector<F>(order + 1, F(0))); }
    static Series constant(F c, int order) {
        std::vector<F> v(order + 1, F(0));
        v[0] = std::move(c);
        return Series(std::move(v));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const F& operator[](int k) const {
        static const F kZero{0};
        return k <= order() ? coeffs_[k] : kZero;
    }
    F& at(int k) { return coeffs_.at(k); }
    const std::vector<F>& coeffs() const { return coeffs_; }

    Series truncated(int order) const {
        std::vector<F> v(order + 1, F(0));
        for (int k = 0; k <= order && k <= this->order(); ++k) v[k] = coeffs_[k];
        return Series(std::move(v));
    }

    friend Series operator+(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        std::vector<F> v(n + 1);
        for (int k = 0; k <= n; ++k) v[k] = a[k] + b[k];
        return Series(std::move(v));
    }
    friend Series operator-(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        std::vector<F> v(n + 1);
        for (int k = 0; k <= n; ++k) v[k] = a[k] - b[k];
        return Series(std::move(v));
    }
    friend Series operator-(const Series& a) {
        std::vector<F> v(a.coeffs_);
        for (auto& x : v) x = -x;
        return Series(std::move(v));
    }
    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        std::vector<F> v(n + 1, F(0));
        for (int i = 0; i <= n; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; i + j <= n; ++j) v[i + j] += a[i] * b[j];
        }
        return Series(std::move(v));
    }
    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

    /// Evaluation of the truncation at a point (Horner); P may be a wider
    /// field than F (e.g. MpFloat or MpComplex series evaluated from Rational).
    template <class P>
    P evaluate(const P& x) const {
        P acc(convert_to<P>(coeffs_.back()));
        for (int k = order() - 1; k >= 0; --k) acc = acc * x + P(convert_to<P>(coeffs_[k]));
        return acc;
    }

  private:
    template <class P>
    static P convert_to(const F& c) {
        if constexpr (std::is_same_v<F, Rational> && !std::is_same_v<P, Rational>)
            return P(to_mpfloat(c));
        else
            return P(c);
    }
    std::vector<F> coeffs_;
};

using RationalSeries = Series<Rational>;
using FloatSeries = Series<MpFloat>;

/// 1/a up to `order`; requires a(0) != 0.
template <class F>
Series<F> series_reciprocal(const Series<F>& a, int order) {
    if (a[0] == 0) throw std::domain_error("series_reciprocal: zero constant term");
    std::vector<F> b(order + 1, F(0));
    b[0] = F(1) / a[0];
    for (int n = 1; n <= order; ++n) {
        F s(0);
        for (int k = 1; k <= n; ++k) s += a[k] * b[n - k];
        b[n] = -s / a[0];
    }
    return Series<F>(std::move(b));
}

/// log(a) up to `order`; the constant term must be positive (float) or
/// exactly 1 (rational path, where log is still rational).
template <class F>
Series<F> series_log(const Series<F>& a, int order) {
    std::vector<F> l(order + 1, F(0));
    if constexpr (std::is_same_v<F, Rational>) {
        if (a[0] != 1) throw std::domain_error("series_log: rational path needs constant term 1");
    } else {
        if (a[0] <= 0) throw std::domain_error("series_log: non-positive constant term");
        l[0] = log(a[0]);
    }
    for (int n = 1; n <= order; ++n) {
        F s = F(n) * a[n];
        for (int k = 1; k < n; ++k) s -= F(k) * l[k] * a[n - k];
        l[n] = s / (F(n) * a[0]);
    }
    return Series<F>(std::move(l));
}

/// exp(a) up to `order`; rational path requires a(0) = 0.
template <class F>
Series<F> series_exp(const Series<F>& a, int order) {
    std::vector<F> e(order + 1, F(0));
    if constexpr (std::is_same_v<F, Rational>) {
        if (a[0] != 0) throw std::domain_error("series_exp: rational path needs zero constant term");
        e[0] = 1;
    } else {
        e[0] = exp(a[0]);
    }
    for (int n = 1; n <= order; ++n) {
        F s(0);
        for (int k = 1; k <= n; ++k) s += F(k) * a[k] * e[n - k];
        e[n] = s / F(n);
    }
    return Series<F>(std::move(e));
}

/// a(inner(u)) up to `order`; inner must have zero constant term.
template <class F>
Series<F> series_compose(const Series<F>& a, const Series<F>& inner, int order) {
    if (inner[0] != 0) throw std::domain_error("series_compose: inner constant term must vanish");
    Series<F> in = inner.truncated(order);
    Series<F> acc = Series<F>::constant(a[a.order() <= order ? a.order() : order], order);
    for (int k = std::min(a.order(), order) - 1; k >= 0; --k) {
        acc = acc * in;
        acc.at(0) += a[k];
    }
    return acc;
}

/// The fractional linear change of variable r(u) = r1*u / (1 - r1*(1-u)),
/// which fixes 0, sends u=1 to r=r1, and pushes r=1 off to u=infinity.
/// Returns its series in u up to `order`.
template <class F>
Series<F> mobius_series(const F& r1, int order) {
    if (r1 == 0 || r1 == 1) throw std::domain_error("mobius_series: degenerate map");
    F q = r1 / (F(1) - r1);
    std::vector<F> v(order + 1, F(0));
    F p(1);
    for (int m = 1; m <= order; ++m) {
        p *= -q;
        v[m] = -p;  // coefficient of u^m is -(-q)^m
    }
    return Series<F>(std::move(v));
}

/// a(r(u)) with the map above.
template <class F>
Series<F> mobius_compose(const Series<F>& a, const F& r1, int order) {
    return series_compose(a, mobius_series(r1, order), order);
}

/// The inverse change of variable u(r) = ((1-r1)/r1) * r/(1-r).
template <class F>
Series<F> mobius_inverse_series(const F& r1, int order) {
    if (r1 == 0 || r1 == 1) throw std::domain_error("mobius_inverse_series: degenerate map");
    F c = (F(1) - r1) / r1;
    std::vector<F> v(order + 1, F(0));
    for (int m = 1; m <= order; ++m) v[m] = c;  // c * r/(1-r) = c(r + r^2 + ...)
    return Series<F>(std::move(v));
}

}  // namespace slowbond
