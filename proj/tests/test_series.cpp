#include <catch2/catch_amalgamated.hpp>

#include "slowbond/series.hpp"
#include "slowbond/roots.hpp"

#include <random>

using namespace slowbond;

namespace {

Rational Q(long n, long d = 1) { return Rational(n) / Rational(d); }

RationalSeries random_series(std::mt19937_64& rng, int order, bool unit_constant = false) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    std::vector<Rational> v(order + 1);
    for (auto& x : v) x = Q(num(rng), den(rng));
    if (unit_constant) v[0] = 1;
    return RationalSeries(std::move(v));
}

}  // namespace

TEST_CASE("rational string round trips", "[algebra]") {
    CHECK(rational_from_string("19/16") == Q(19, 16));
    CHECK(rational_from_string("-0.75") == Q(-3, 4));
    CHECK(rational_from_string("1.18750000000000000000") == Q(19, 16));
    CHECK(to_fraction_string(Q(-3, 4)) == "-3/4");
    CHECK(to_decimal_string(Q(19, 16), 20) == "1.18750000000000000000");
    CHECK(to_decimal_string(Q(-985, 768), 20) == "-1.28255208333333333333");
    CHECK(matches_printed_decimal(Q(-985, 768), "-1.28255208333333333333"));
    CHECK(matches_printed_decimal(Q(-985, 768), "-1.28255208333333333334"));
    CHECK_FALSE(matches_printed_decimal(Q(-985, 768), "-1.28255208333333333336"));
}

TEST_CASE("series arithmetic basics", "[algebra]") {
    RationalSeries one_plus({Q(1), Q(1), Q(0)});
    RationalSeries one_minus({Q(1), Q(-1), Q(0)});
    auto prod = one_plus * one_minus;
    CHECK(prod == RationalSeries({Q(1), Q(0), Q(-1)}));

    auto zero = one_plus - one_plus;
    for (int k = 0; k <= zero.order(); ++k) CHECK(zero[k] == 0);

    // common order = min of the two
    RationalSeries longer({Q(1), Q(2), Q(3), Q(4), Q(5)});
    RationalSeries shorter({Q(1), Q(1)});
    CHECK((longer + shorter).order() == 1);
}

TEST_CASE("series reciprocal", "[algebra]") {
    RationalSeries geom({Q(1), Q(-1), Q(0), Q(0), Q(0)});
    auto rec = series_reciprocal(geom, 4);
    CHECK(rec == RationalSeries({Q(1), Q(1), Q(1), Q(1), Q(1)}));
    CHECK_THROWS_AS(series_reciprocal(RationalSeries({Q(0), Q(1)}), 1), std::domain_error);
}

TEST_CASE("series log/exp closed forms", "[algebra]") {
    // log(1/(1-r)) = r + r^2/2 + r^3/3
    RationalSeries geom({Q(1), Q(-1), Q(0), Q(0)});
    auto l = series_log(series_reciprocal(geom, 3), 3);
    CHECK(l == RationalSeries({Q(0), Q(1), Q(1, 2), Q(1, 3)}));

    // exp of a/(1-r) - a for a = 1: coefficients 1, 1, 3/2 (rational path)
    RationalSeries shifted({Q(0), Q(1), Q(1), Q(1)});  // 1/(1-r) - 1 to order 3
    auto e = series_exp(shifted, 2);
    CHECK(e[0] == 1);
    CHECK(e[1] == 1);
    CHECK(e[2] == Q(3, 2));
}

TEST_CASE("ring and inverse-pair identities on random series", "[algebra]") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_series(rng, 12);
        auto b = random_series(rng, 12);
        auto c = random_series(rng, 12);
        CHECK((a * b) == (b * a));
        CHECK(((a + b) * c) == (a * c + b * c));

        if (a[0] != 0) {
            auto inv = series_reciprocal(a, 12);
            auto prod = a * inv;
            CHECK(prod[0] == 1);
            for (int k = 1; k <= 12; ++k) CHECK(prod[k] == 0);
            CHECK(series_reciprocal(inv, 12) == a);
        }

        auto u = random_series(rng, 12, /*unit_constant=*/true);
        CHECK(series_exp(series_log(u, 12), 12) == u);
    }
}

TEST_CASE("float log/exp round trip at 128 bits", "[algebra]") {
    PrecisionGuard guard(128);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> d(-0.5, 0.5);
    std::vector<MpFloat> v(13);
    v[0] = MpFloat("2.5");
    for (size_t k = 1; k < v.size(); ++k) v[k] = MpFloat(d(rng));
    FloatSeries a(v);
    auto back = series_exp(series_log(a, 12), 12);
    for (int k = 0; k <= 12; ++k)
        CHECK(abs(back[k] - a[k]) < MpFloat("1e-30"));
}

TEST_CASE("mobius composition", "[algebra]") {
    // identity input a(r) = r composed with the map itself
    RationalSeries ident({Q(0), Q(1), Q(0), Q(0), Q(0)});
    auto m = mobius_compose(ident, Q(-3, 2), 4);
    // r(u) = -0.6u/(1 - 0.6u): coefficients -(3/5)^m
    CHECK(m[0] == 0);
    CHECK(m[1] == Q(-3, 5));
    CHECK(m[2] == Q(-9, 25));
    CHECK(m[3] == Q(-27, 125));

    // constants are fixed points of composition
    auto cst = mobius_compose(RationalSeries({Q(7), Q(0), Q(0)}), Q(-3, 2), 2);
    CHECK(cst == RationalSeries({Q(7), Q(0), Q(0)}));

    // u(r(u)) = u up to order: the two maps are inverse
    auto u_of_r = mobius_inverse_series(Q(-3, 2), 8);
    auto round_trip = series_compose(u_of_r, mobius_series(Q(-3, 2), 8), 8);
    CHECK(round_trip[0] == 0);
    CHECK(round_trip[1] == 1);
    for (int k = 2; k <= 8; ++k) CHECK(round_trip[k] == 0);

    CHECK_THROWS_AS(mobius_series(Q(0), 3), std::domain_error);
    CHECK_THROWS_AS(mobius_series(Q(1), 3), std::domain_error);
}

TEST_CASE("polynomial roots: factored forms", "[algebra][roots]") {
    // r(1+r): roots {-1, 0}
    auto r = poly_roots(RationalPolynomial({Q(0), Q(1), Q(1)}), 128);
    REQUIRE(r.size() == 2);
    CHECK(abs(r[0] - MpComplex(MpFloat(-1))) < MpFloat("1e-18"));
    CHECK(abs(r[1]) == 0);

    // 1 + r: single root -1
    auto s = poly_roots(RationalPolynomial({Q(1), Q(1)}), 128);
    REQUIRE(s.size() == 1);
    CHECK(abs(s[0] - MpComplex(MpFloat(-1))) == 0);
}

TEST_CASE("roots of product = union of roots", "[algebra][roots]") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> coef(-6, 6);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Rational> pa(5), pb(4);
        for (auto& x : pa) x = Q(coef(rng));
        for (auto& x : pb) x = Q(coef(rng));
        pa.back() = Q(1 + std::abs(coef(rng)));
        pb.back() = Q(1 + std::abs(coef(rng)));
        RationalPolynomial A(pa), B(pb);
        auto ra = poly_roots(A, 192);
        auto rb = poly_roots(B, 192);
        auto rab = poly_roots(A * B, 192);
        std::vector<MpComplex> expect = ra;
        expect.insert(expect.end(), rb.begin(), rb.end());
        REQUIRE(rab.size() == expect.size());
        MpFloat tol = 10 * pow(MpFloat(2), -192 / 2);
        // greedy match within tolerance
        std::vector<bool> used(expect.size(), false);
        for (const auto& z : rab) {
            bool found = false;
            for (size_t i = 0; i < expect.size(); ++i) {
                if (!used[i] && abs(z - expect[i]) < tol * (1 + abs(z))) {
                    used[i] = true;
                    found = true;
                    break;
                }
            }
            CHECK(found);
        }
    }
}

TEST_CASE("residual contract", "[algebra][roots]") {
    // wilkinson-ish small case with well separated roots
    RationalPolynomial p({Q(-6), Q(11), Q(-6), Q(1)});  // (r-1)(r-2)(r-3)
    auto res = find_roots(p, 256);
    REQUIRE(res.all_converged());
    for (const auto& e : res.residuals) CHECK(e < pow(MpFloat(2), -128));
    CHECK(abs(res.roots[0] - MpComplex(MpFloat(1))) < MpFloat("1e-30"));
    CHECK(abs(res.roots[2] - MpComplex(MpFloat(3))) < MpFloat("1e-30"));
}
