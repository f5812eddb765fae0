#include <catch2/catch.hpp>

#include "test_helpers.hpp"
#include "unip/artinhasse.hpp"
#include "unip/matlie.hpp"
#include "unip/witt.hpp"

using namespace unip;
using unip::testing::jordan_block;

TEST_CASE("Artin-Hasse series first terms") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        AHSeries f = ah_series(p, 10);
        CHECK(f.series[0] == 1);
        CHECK(f.series[1] == -1);
    }
    // frozen prefix for p = 2: 1 - t + 0 t^2 + t^3/3 - t^4/3
    AHSeries f2 = ah_series(2, 4);
    CHECK(f2.series[2] == 0);
    CHECK(f2.series[3] == make_rational(1, 3));
    CHECK(f2.series[4] == make_rational(-1, 3));
}

TEST_CASE("Artin-Hasse coefficients are p-integral") {
    // construction certifies; assert directly as well
    AHSeries f = ah_series(2, 50);
    for (unsigned i = 0; i <= 50; ++i)
        if (f.series[i] != 0) CHECK(vp(f.series[i], 2) >= 0);
    CHECK_NOTHROW(ah_series(3, 50));
    CHECK_NOTHROW(ah_series(7, 50));
}

TEST_CASE("Moebius product form") {
    AHSeries prod = ah_product_form(2, 1);
    CHECK(prod.series[0] == 1);
    CHECK(prod.series[1] == -1);  // only the m = 1 factor matters mod t^2

    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        AHSeries a = ah_series(p, 40);
        AHSeries b = ah_product_form(p, 40);
        CHECK(a.series == b.series);
    }
}

TEST_CASE("log of the product form recovers the defining exponent") {
    // log of prod (1 - t^m)^{mu(m)/m} over m coprime to p collapses to
    // -(t + t^p/p + t^{p^2}/p^2 + ...)
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        const unsigned n = 40;
        Series logf = series_log(ah_product_form(p, n).series);
        Series expect(n);
        Integer pk(1);
        while (pk <= n) {
            expect.set(static_cast<unsigned>(pk.get_ui()), make_rational(Integer(-1), pk));
            pk *= static_cast<unsigned long>(p);
        }
        CHECK(logf == expect);
    }
}

TEST_CASE("E_X basics") {
    const Fp z5(0, 5);
    Matrix<Fp> zero3 = Matrix<Fp>::zeros(3, 3, z5);
    CHECK(ex_eval(zero3, {Fp(2, 5)}, 5).is_identity());

    // X^2 = 0, n = 1: E_X(t0) = I - t0 X
    Matrix<Fp> x = Matrix<Fp>::zeros(4, 4, z5);
    x(0, 2) = Fp(1, 5);
    x(1, 3) = Fp(3, 5);
    for (std::uint64_t t = 0; t < 5; ++t) {
        Matrix<Fp> expect = Matrix<Fp>::identity(4, z5) - x.scaled(Fp(t, 5));
        CHECK(ex_eval(x, {Fp(t, 5)}, 5) == expect);
    }

    // non-nilpotent rejected
    Matrix<Fp> eye = Matrix<Fp>::identity(2, z5);
    CHECK_THROWS_AS(ex_eval(eye, {Fp(1, 5)}, 5), std::invalid_argument);
}

TEST_CASE("E_X is a homomorphism on Witt vectors, exhaustively") {
    for (std::uint64_t p : {2ull, 3ull}) {
        const int n = 2;
        Matrix<Fp> x = jordan_block(static_cast<int>(p) + 1, Fp(0, p));
        const int count = static_cast<int>(p * p);
        std::vector<WittVector<Fp>> all;
        for (int code = 0; code < count; ++code) {
            WittVector<Fp> w = witt_zero(p, n, Fp(0, p));
            w.coords[0] = Fp(static_cast<std::uint64_t>(code) % p, p);
            w.coords[1] = Fp(static_cast<std::uint64_t>(code) / p, p);
            all.push_back(w);
        }
        for (const auto& a : all)
            for (const auto& b : all)
                CHECK(ex_eval(x, witt_add(a, b)) == ex_eval(x, a) * ex_eval(x, b));

        // order of E_X(t) is p^n exactly when t_0 != 0
        for (const auto& a : all) {
            Matrix<Fp> u = ex_eval(x, a);
            Matrix<Fp> power = u;
            int k = 0;
            while (!power.is_identity()) {
                power = power.pow(p);
                ++k;
                REQUIRE(k < 5);
            }
            Integer order = ipow(p, k);
            CHECK((order == ipow(p, n)) == !a.coords[0].is_zero());
            CHECK(order == witt_order(a));  // E_X is injective here
        }
    }
}

TEST_CASE("span of p-power iterates of a Jordan block is restricted with p-exponent n") {
    for (std::uint64_t p : {2ull, 3ull}) {
        const int n = 2;
        const int size = static_cast<int>(p) + 1;  // p^{n-1} + 1
        Matrix<Fp> x = jordan_block(size, Fp(0, p));
        std::vector<Matrix<Fp>> basis = {x, x.pow(p)};
        CHECK(!basis[1].is_zero());     // x^{p^{n-1}} != 0
        CHECK(x.pow(p * p).is_zero());  // x^{p^n} = 0

        int max_pexp = 0;
        for (std::uint64_t c0 = 0; c0 < p; ++c0)
            for (std::uint64_t c1 = 0; c1 < p; ++c1) {
                Matrix<Fp> y = basis[0].scaled(Fp(c0, p)) + basis[1].scaled(Fp(c1, p));
                // closure under the p-power map: y^p lands back in the span
                Matrix<Fp> yp = y.pow(p);
                Matrix<Fp> expect = basis[1].scaled(Fp(c0, p).pow(p));
                CHECK(yp == expect);
                max_pexp = std::max(max_pexp, p_nilpotence_degree(y, p));
            }
        CHECK(max_pexp == n);
    }
}

TEST_CASE("ghost factorization over the rationals") {
    CHECK(ghost_factorization_check(Matrix<Rational>::zeros(3, 3, Rational(0)),
                                    {Rational(1), Rational(2)}, 2));

    // Jordan block of size 3, p = 2, n = 2, random rational coordinates
    Rng rng(99);
    Matrix<Rational> x3 = jordan_block(3, Rational(0));
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Rational> t = {make_rational(static_cast<long>(rng.below(19)) - 9,
                                                 static_cast<long>(rng.below(5)) + 1),
                                   make_rational(static_cast<long>(rng.below(19)) - 9,
                                                 static_cast<long>(rng.below(5)) + 1)};
        CHECK(ghost_factorization_check(x3, t, 2));
    }

    // symbolic coordinates: polynomial-entry matrices, Jordan block p + 1
    for (std::uint64_t p : {2ull, 3ull}) {
        const std::vector<std::string> names = {"t0", "t1"};
        Polynomial<Rational> ex(2, Rational(0), names);
        Matrix<Polynomial<Rational>> x = jordan_block(static_cast<int>(p) + 1, ex);
        std::vector<Polynomial<Rational>> t = {
            Polynomial<Rational>::variable(0, 2, Rational(0), names),
            Polynomial<Rational>::variable(1, 2, Rational(0), names)};
        CHECK(ghost_factorization_check(x, t, p));
    }

    // prime-field input rejected
    Matrix<Fp> xf = jordan_block(3, Fp(0, 3));
    CHECK_THROWS_AS(ghost_factorization_check(xf, {Fp(1, 3)}, 3), std::invalid_argument);
}

TEST_CASE("truncated exponential and logarithm") {
    // elementary nilpotent over F_5
    Matrix<Fp> e = Matrix<Fp>::zeros(2, 2, Fp(0, 5));
    e(0, 1) = Fp(1, 5);
    CHECK(trunc_exp(e) == Matrix<Fp>::identity(2, Fp(0, 5)) + e);

    // round trip on random strictly upper 4x4 over F_7
    Rng rng(3);
    for (int rep = 0; rep < 100; ++rep) {
        Matrix<Fp> x = testing::random_strict_upper(4, 7, rng);
        CHECK(trunc_log(trunc_exp(x)) == x);
    }

    // degree boundary: block of size 6 over F_5 rejected with the distinct error
    Matrix<Fp> big = jordan_block(6, Fp(0, 5));
    CHECK_THROWS_AS(trunc_exp(big), trunc_exp_degree_error);
    // but fine over the rationals
    CHECK_NOTHROW(trunc_exp(jordan_block(6, Rational(0))));

    // over Q: log(exp) round trip including denominators
    Matrix<Rational> xq = jordan_block(5, Rational(0)).scaled(make_rational(3, 2));
    CHECK(trunc_log(trunc_exp(xq)) == xq);
}

TEST_CASE("lattice preservation certificates") {
    // X^p = 0 with integer entries: denominators divide (p-1)!
    Matrix<Rational> x = jordan_block(3, Rational(0)).scaled(Rational(2));
    auto r3 = lattice_preservation(x, 3);
    CHECK(r3.preserves);

    // Jordan block of size p+1 with unit entries: the 1/p! term obstructs
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        auto r = lattice_preservation(jordan_block(static_cast<int>(p) + 1, Rational(0)), p);
        CHECK(!r.preserves);
        CHECK(r.min_entry_vp == -1);
        CHECK(!r.remark_condition);
    }

    // p * (Jordan block of size p+1): preserved, and the sufficient
    // condition (vp of X^p entries >= 1, X^{p^2} = 0) holds
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        Matrix<Rational> scaled = jordan_block(static_cast<int>(p) + 1, Rational(0))
                                      .scaled(Rational(static_cast<unsigned long>(p)));
        auto r = lattice_preservation(scaled, p);
        CHECK(r.preserves);
        CHECK(r.remark_condition);
    }

    CHECK_THROWS_AS(
        lattice_preservation(jordan_block(2, Rational(0)).scaled(make_rational(1, 2)), 2),
        std::invalid_argument);
}
