#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace slowbond {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;  // always canonical, den > 0

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline BigInt pow10(unsigned n) {
    BigInt p = 1;
    for (unsigned i = 0; i < n; ++i) p *= 10;
    return p;
}

/// Base-10 parse; avoids GMP's octal auto-detection on leading zeros.
inline BigInt bigint_from_decimal(std::string_view s) {
    bool neg = !s.empty() && s.front() == '-';
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    if (s.empty()) throw std::invalid_argument("bigint_from_decimal: no digits");
    BigInt v(std::string(s));
    return neg ? BigInt(-v) : v;
}

/// Parses "num/den", plain integers, and decimal strings ("-0.77889901620370370370")
/// into an exact rational.
inline Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        BigInt num = bigint_from_decimal(s.substr(0, slash));
        BigInt den = bigint_from_decimal(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
        return Rational(num) / Rational(den);
    }
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return Rational(bigint_from_decimal(s));
    bool neg = s.front() == '-';
    std::string_view body = (s.front() == '-' || s.front() == '+') ? s.substr(1) : s;
    dot = body.find('.');
    std::string digits(body.substr(0, dot));
    digits += body.substr(dot + 1);
    unsigned frac_len = static_cast<unsigned>(body.size() - dot - 1);
    if (digits.empty()) throw std::invalid_argument("rational_from_string: no digits");
    Rational v = Rational(bigint_from_decimal(digits)) / Rational(pow10(frac_len));
    return neg ? -v : v;
}

inline std::string to_fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Decimal rendering truncated toward zero to `digits` fractional digits,
/// e.g. -985/768 -> "-1.28255208333333333333" at 20 digits.
inline std::string to_decimal_string(const Rational& q, unsigned digits) {
    bool neg = q < 0;
    BigInt num = abs(numerator(q));
    BigInt den = denominator(q);
    BigInt ip = num / den;
    BigInt fp = ((num - ip * den) * pow10(digits)) / den;
    std::string f = fp.str();
    if (f.size() < digits) f.insert(f.begin(), digits - f.size(), '0');
    return (neg ? "-" : "") + ip.str() + "." + f;
}

/// Compares an exact rational with a printed decimal value, allowing
/// `ulp` units in the last printed digit (absorbs truncate-vs-round).
inline bool matches_printed_decimal(const Rational& q, std::string_view printed, unsigned ulp = 1) {
    auto dot = printed.find('.');
    unsigned digits = dot == std::string_view::npos
                          ? 0
                          : static_cast<unsigned>(printed.size() - dot - 1);
    Rational p = rational_from_string(printed);
    Rational tol = Rational(ulp) / Rational(pow10(digits));
    Rational diff = q - p;
    if (diff < 0) diff = -diff;
    return diff <= tol;
}

}  // namespace slowbond
