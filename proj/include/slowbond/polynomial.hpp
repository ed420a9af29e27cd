#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "slowbond/complex.hpp"
#include "slowbond/rational.hpp"
#include "slowbond/series.hpp"

namespace slowbond {

/// Dense polynomial, coefficients ascending by degree, trimmed so the leading
/// coefficient is nonzero (zero polynomial = single zero coefficient).
template <class F>
class Polynomial {
  public:
    Polynomial() : c_(1, F(0)) {}
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
    const F& operator[](int k) const {
        static const F kZero{0};
        return k <= degree() ? c_[k] : kZero;
    }
    const std::vector<F>& coeffs() const { return c_; }
    const F& leading() const { return c_.back(); }

    template <class P>
    P evaluate(const P& x) const {
        P acc = P(convert_to<P>(c_.back()));
        for (int k = degree() - 1; k >= 0; --k) acc = acc * x + P(convert_to<P>(c_[k]));
        return acc;
    }

    Polynomial derivative() const {
        if (degree() == 0) return Polynomial();
        std::vector<F> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = F(static_cast<long>(k)) * c_[k];
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
        for (size_t k = 0; k < v.size(); ++k) v[k] = a[static_cast<int>(k)] + b[static_cast<int>(k)];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
        for (size_t k = 0; k < v.size(); ++k) v[k] = a[static_cast<int>(k)] - b[static_cast<int>(k)];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const F& s, const Polynomial& a) {
        std::vector<F> v(a.c_);
        for (auto& x : v) x *= s;
        return Polynomial(std::move(v));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Exact euclidean division over the coefficient field.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("Polynomial::divmod: division by zero");
        std::vector<F> rem(a.c_);
        int db = b.degree();
        if (a.degree() < db) return {Polynomial(), a};
        std::vector<F> quo(a.degree() - db + 1, F(0));
        for (int k = a.degree(); k >= db; --k) {
            F q = rem[k] / b.leading();
            if (q == 0) continue;
            quo[k - db] = q;
            for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.c_[j];
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    Series<F> to_series(int order) const {
        std::vector<F> v(order + 1, F(0));
        for (int k = 0; k <= order && k <= degree(); ++k) v[k] = c_[k];
        return Series<F>(std::move(v));
    }

  private:
    template <class P>
    static P convert_to(const F& c) {
        if constexpr (std::is_same_v<F, Rational> && !std::is_same_v<P, Rational>)
            return P(to_mpfloat(c));
        else
            return P(c);
    }
    void trim() {
        while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
        if (c_.empty()) c_.push_back(F(0));
    }
    std::vector<F> c_;
};

using RationalPolynomial = Polynomial<Rational>;

/// Monic-normalized euclidean gcd over Q; returns the monic gcd (or zero).
inline RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = RationalPolynomial::divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rational(1) / a.leading()) * a;
}

/// Clears denominators and divides out integer content; fixes the sign so the
/// lowest nonzero reference coefficient (by default the constant term of the
/// companion polynomial) stays positive via the supplied sign witness.
inline RationalPolynomial integer_normalize(const RationalPolynomial& p, const Rational& scale) {
    return scale * p;
}

/// Common scale turning {p, q} into coprime integer-coefficient polynomials
/// with joint content 1 and q(0) > 0.
inline Rational joint_integer_scale(const RationalPolynomial& p, const RationalPolynomial& q) {
    BigInt l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, denominator(c));
    for (const auto& c : q.coeffs()) l = lcm(l, denominator(c));
    BigInt g = 0;
    for (const auto& c : p.coeffs()) g = gcd(g, BigInt(numerator(c) * (l / denominator(c))));
    for (const auto& c : q.coeffs()) g = gcd(g, BigInt(numerator(c) * (l / denominator(c))));
    if (g == 0) g = 1;
    Rational s = Rational(l) / Rational(g);
    if (q.evaluate(Rational(0)) * s < 0) s = -s;
    return s;
}

}  // namespace slowbond
