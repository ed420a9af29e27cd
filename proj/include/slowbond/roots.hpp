#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "slowbond/complex.hpp"
#include "slowbond/polynomial.hpp"

namespace slowbond {

struct RootResult {
    std::vector<MpComplex> roots;      // sorted by (re, im), zero roots included
    std::vector<bool> converged;       // parallel to roots
    std::vector<MpFloat> residuals;    // backward errors |p(z)| / sum_k |a_k||z|^k
    std::vector<std::vector<int>> clusters;  // indices of near-multiple groups
    bool all_converged() const {
        return std::all_of(converged.begin(), converged.end(), [](bool b) { return b; });
    }
};

namespace detail {

inline void eval_poly_and_derivative(const std::vector<MpComplex>& a, const MpComplex& z,
                                     MpComplex& p, MpComplex& dp) {
    p = a.back();
    dp = MpComplex(MpFloat(0));
    for (int k = static_cast<int>(a.size()) - 2; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + a[k];
    }
}

inline MpFloat eval_magnitude(const std::vector<MpComplex>& a, const MpComplex& z) {
    MpFloat az = abs(z), s(0), pw(1);
    for (const auto& c : a) {
        s += abs(c) * pw;
        pw *= az;
    }
    return s;
}

}  // namespace detail

/// Simultaneous-iteration (Aberth-Ehrlich) root finder with multiprecision
/// evaluation and a Newton polishing pass.  Zero roots are deflated exactly.
/// Residual target: backward error below 2^(-precision_bits/2).
inline RootResult find_roots(const std::vector<MpComplex>& coeffs_in, unsigned precision_bits,
                             int max_sweeps = 400) {
    PrecisionGuard guard(precision_bits + 64);
    std::vector<MpComplex> a;
    for (const auto& c : coeffs_in) a.push_back({MpFloat(c.re), MpFloat(c.im)});

    while (a.size() > 1 && abs(a.back()) == 0) a.pop_back();
    int n = static_cast<int>(a.size()) - 1;
    if (n < 1) throw std::invalid_argument("find_roots: degree must be >= 1");

    int zero_mult = 0;
    while (zero_mult < n && abs(a[zero_mult]) == 0) ++zero_mult;
    std::vector<MpComplex> b(a.begin() + zero_mult, a.end());
    int m = n - zero_mult;

    MpFloat eps = pow(MpFloat(2), -static_cast<int>(precision_bits) / 2);
    std::vector<MpComplex> z(m);
    std::vector<bool> conv(m, false);

    if (m == 1) {
        z[0] = -(b[0] / b[1]);
        conv[0] = true;
    } else if (m > 1) {
        // initial guesses on a circle scaled by the geometric-mean root size
        MpFloat ratio = abs(b[0]) / abs(b.back());
        MpFloat radius = pow(ratio, MpFloat(1) / m);
        if (radius < MpFloat("1e-3")) radius = MpFloat("1e-3");
        MpFloat two_pi = 8 * atan(MpFloat(1));
        for (int j = 0; j < m; ++j) {
            MpFloat th = two_pi * j / m + MpFloat("0.3573");
            z[j] = MpComplex(radius * cos(th), radius * sin(th));
        }
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            bool all_small = true;
            for (int j = 0; j < m; ++j) {
                MpComplex p, dp;
                detail::eval_poly_and_derivative(b, z[j], p, dp);
                if (abs(p) <= eps * detail::eval_magnitude(b, z[j])) continue;
                all_small = false;
                MpComplex newton = (norm(dp) == 0) ? MpComplex(MpFloat("1e-4"), MpFloat("1e-4"))
                                                   : p / dp;
                MpComplex s(MpFloat(0));
                for (int k = 0; k < m; ++k)
                    if (k != j) s += MpComplex(MpFloat(1)) / (z[j] - z[k]);
                MpComplex denom = MpComplex(MpFloat(1)) - newton * s;
                z[j] -= (norm(denom) == 0) ? newton : newton / denom;
            }
            if (all_small) break;
        }
        // Newton polish and convergence classification
        for (int j = 0; j < m; ++j) {
            for (int it = 0; it < 8; ++it) {
                MpComplex p, dp;
                detail::eval_poly_and_derivative(b, z[j], p, dp);
                if (norm(dp) == 0) break;
                MpComplex step = p / dp;
                if (abs(step) <= eps * (1 + abs(z[j]))) break;
                z[j] -= step;
            }
            MpComplex p, dp;
            detail::eval_poly_and_derivative(b, z[j], p, dp);
            conv[j] = abs(p) <= eps * detail::eval_magnitude(b, z[j]);
        }
    }

    RootResult out;
    for (int k = 0; k < zero_mult; ++k) {
        out.roots.push_back(MpComplex(MpFloat(0)));
        out.converged.push_back(true);
    }
    for (int j = 0; j < m; ++j) {
        out.roots.push_back(z[j]);
        out.converged.push_back(conv[j]);
    }

    std::vector<int> idx(out.roots.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        if (out.roots[i].re != out.roots[j].re) return out.roots[i].re < out.roots[j].re;
        return out.roots[i].im < out.roots[j].im;
    });
    RootResult sorted;
    for (int i : idx) {
        sorted.roots.push_back(out.roots[i]);
        sorted.converged.push_back(out.converged[i]);
    }
    for (const auto& zr : sorted.roots)
        sorted.residuals.push_back(abs(a.back()) == 0 ? MpFloat(0)
                                                      : [&] {
                                                            MpComplex p, dp;
                                                            detail::eval_poly_and_derivative(a, zr, p, dp);
                                                            return abs(p) / detail::eval_magnitude(a, zr);
                                                        }());

    // near-multiple clusters, reported rather than separated
    MpFloat cluster_tol = 10 * eps;
    std::vector<bool> used(sorted.roots.size(), false);
    for (size_t i = 0; i < sorted.roots.size(); ++i) {
        if (used[i]) continue;
        std::vector<int> group{static_cast<int>(i)};
        for (size_t j = i + 1; j < sorted.roots.size(); ++j)
            if (!used[j] && abs(sorted.roots[i] - sorted.roots[j]) <= cluster_tol * (1 + abs(sorted.roots[i]))) {
                group.push_back(static_cast<int>(j));
                used[j] = true;
            }
        if (group.size() > 1) sorted.clusters.push_back(group);
    }
    return sorted;
}

inline RootResult find_roots(const RationalPolynomial& p, unsigned precision_bits) {
    PrecisionGuard guard(precision_bits + 64);
    std::vector<MpComplex> a;
    for (const auto& c : p.coeffs()) a.push_back(MpComplex(to_mpfloat(c)));
    return find_roots(a, precision_bits);
}

/// Convenience wrapper: throws on non-convergence, message carries the
/// unconverged set.
inline std::vector<MpComplex> poly_roots(const RationalPolynomial& p, unsigned precision_bits) {
    RootResult r = find_roots(p, precision_bits);
    if (!r.all_converged()) {
        std::ostringstream os;
        os << "poly_roots: unconverged roots:";
        for (size_t i = 0; i < r.roots.size(); ++i)
            if (!r.converged[i]) os << " (" << r.roots[i].re << "," << r.roots[i].im << ")";
        throw std::runtime_error(os.str());
    }
    return r.roots;
}

}  // namespace slowbond
