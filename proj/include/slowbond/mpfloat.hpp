#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "slowbond/rational.hpp"

namespace slowbond {

// Variable-precision real. Precision of the *default-constructed* value is
// controlled at runtime; analysis routines default to 256 bits.
using MpFloat = boost::multiprecision::mpfr_float;

inline unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30102999566398119) + 3;
}

inline void set_working_precision_bits(unsigned bits) {
    MpFloat::default_precision(bits_to_digits10(bits));
}

inline unsigned working_precision_bits() {
    // digits10 -> bits, inverse of the above (reported value >= actual request)
    return static_cast<unsigned>(MpFloat::default_precision() / 0.30102999566398119);
}

struct PrecisionGuard {
    unsigned saved;
    explicit PrecisionGuard(unsigned bits) : saved(MpFloat::default_precision()) {
        set_working_precision_bits(bits);
    }
    ~PrecisionGuard() { MpFloat::default_precision(saved); }
};

inline MpFloat to_mpfloat(const Rational& q) {
    return MpFloat(numerator(q)) / MpFloat(denominator(q));
}

}  // namespace slowbond
