#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckezeta/gauss_arith.hpp"
#include "heckezeta/hecke_series.hpp"
#include "heckezeta/rng.hpp"

#include <cmath>
#include <numeric>

using namespace hz;
using doctest::Approx;

TEST_CASE("char_value") {
    CHECK(char_value(7, kOne) == Complex(1.0, 0.0));
    CHECK(std::abs(char_value(1, GaussInt{1, 1}) - Complex(-1.0, 0.0)) < 1e-14);
    CHECK(std::abs(char_value(2, GaussInt{1, 1}) - Complex(1.0, 0.0)) < 1e-14);
    // unit-orbit invariance
    for (int d : {-3, 1, 4}) {
        GaussInt a{3, 2};
        Complex base = char_value(d, a);
        for (int k = 1; k < 4; ++k)
            CHECK(std::abs(char_value(d, unit_pow_times(a, k)) - base) < 1e-14);
    }
    CHECK_THROWS_AS(char_value(1, GaussInt{0, 0}), std::domain_error);
}

TEST_CASE("delta_coeff examples") {
    CHECK(delta_coeff(0, 5) == Approx(2.0).epsilon(1e-14));
    CHECK(delta_coeff(3, 3) == Approx(0.0).epsilon(1e-14));
    CHECK(delta_coeff(1, 5) == Approx(-0.56).epsilon(1e-12));
    CHECK(delta_coeff(1, 2) == Approx(-1.0).epsilon(1e-14));
    CHECK(delta_coeff(3, 2) == Approx(-1.0).epsilon(1e-14));
    CHECK(delta_coeff(2, 2) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("delta_coeff equals quarter lattice character sum (brute oracle)") {
    for (int d : {0, 1, 2, 5}) {
        for (std::int64_t n = 1; n <= 200; ++n) {
            Complex brute(0.0, 0.0);
            std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))) + 1;
            for (std::int64_t a = -r; a <= r; ++a)
                for (std::int64_t b = -r; b <= r; ++b)
                    if (a * a + b * b == n) brute += char_value(d, GaussInt{a, b});
            CHECK(delta_coeff(d, n) == Approx(brute.real() / 4.0).epsilon(1e-10));
            CHECK(std::abs(brute.imag()) < 1e-10);
        }
    }
}

TEST_CASE("coeff_table sieve route") {
    CoeffTable t0 = coeff_table(0, 10);
    const double expect[10] = {1, 1, 0, 1, 2, 0, 0, 1, 1, 2};
    for (int n = 1; n <= 10; ++n) CHECK(t0.at(n) == Approx(expect[n - 1]).epsilon(1e-14));
    CoeffTable t1 = coeff_table(1, 2);
    CHECK(t1.at(1) == Approx(1.0));
    CHECK(t1.at(2) == Approx(-1.0));
    // sieve vs per-n route
    for (int d : {-4, 0, 3, 7}) {
        CoeffTable tab = coeff_table(d, 2000);
        for (std::int64_t n = 1; n <= 2000; ++n)
            CHECK(tab.at(n) == Approx(delta_coeff(d, n)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(coeff_table(0, kCoeffTableCap + 1), std::length_error);
}

TEST_CASE("coefficient symmetry, majorant, multiplicativity") {
    CoeffTable base = coeff_table(0, 1000);
    for (int d = 1; d <= 6; ++d) {
        CoeffTable plus = coeff_table(d, 1000);
        CoeffTable minus = coeff_table(-d, 1000);
        for (std::int64_t n = 1; n <= 1000; ++n) {
            CHECK(plus.at(n) == Approx(minus.at(n)).epsilon(1e-14));
            CHECK(std::abs(plus.at(n)) <= base.at(n) + 1e-12);
        }
    }
    for (int d = -4; d <= 4; ++d) {
        CoeffTable tab = coeff_table(d, 250000);
        for (std::int64_t m = 2; m <= 500; ++m)
            for (std::int64_t n = m + 1; n <= 500; ++n) {
                if (std::gcd(m, n) != 1) continue;
                CHECK(tab.at(m * n) == Approx(tab.at(m) * tab.at(n)).epsilon(1e-12));
            }
    }
}

TEST_CASE("dirichlet_poly") {
    CoeffMap U = CoeffMap::unit_indicator();
    CHECK(dirichlet_poly(U, Complex(0.3, -2.0), 5) == Complex(1.0, 0.0));
    CoeffMap zero;
    CHECK(dirichlet_poly(zero, Complex(0.0, 0.0), 0) == Complex(0.0, 0.0));
    CoeffMap onePlusI;
    onePlusI.set(GaussInt{1, 1}, Complex(1.0, 0.0));
    onePlusI.normBound = 2;
    CHECK(std::abs(dirichlet_poly(onePlusI, Complex(0.0, 0.0), 1) - Complex(-1.0, 0.0)) < 1e-14);
}

TEST_CASE("dirichlet_poly Cauchy-Schwarz envelope") {
    Xoshiro256StarStar rng(99);
    const std::int64_t M = 10;
    std::vector<GaussInt> pts = enumerate_by_norm(M);
    for (int trial = 0; trial < 100; ++trial) {
        CoeffMap A;
        A.normBound = M;
        double sumA2 = 0.0;
        for (const GaussInt& mu : pts) {
            Complex v(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
            A.set(mu, v);
            sumA2 += std::norm(v);
        }
        double t = 40.0 * rng.uniform() - 20.0;
        Complex p = dirichlet_poly(A, Complex(0.0, t), static_cast<int>(rng.below(7)) - 3);
        CHECK(std::norm(p) <= 8.0 * static_cast<double>(M) * sumA2 + 1e-9);
    }
}

TEST_CASE("partial_zeta") {
    PartialZeta one = partial_zeta(Complex(0.7, 3.0), 4, 1);
    CHECK(one.value == Complex(1.0, 0.0));
    PartialZeta p = partial_zeta(Complex(2.0, 0.0), 0, 200000);
    // limit is zeta(2) L(2,chi4) = (pi^2/6) * Catalan = 1.50670300...
    CHECK(std::abs(p.value.real() - 1.5067030) <= p.tailEstimate);
    CHECK(p.value.real() == Approx(1.5067030).epsilon(1e-5));
    CHECK(std::abs(p.value.imag()) < 1e-12);
    CHECK(p.tailEstimate < 1e-2);
    PartialZeta q = partial_zeta(Complex(2.0, 0.0), 1, 2);
    CHECK(q.value.real() == Approx(0.75).epsilon(1e-14));
}

TEST_CASE("euler_product_partial vs partial sums") {
    Complex ep = euler_product_partial(Complex(2.0, 0.0), 0, 10000);
    Complex ps = partial_zeta(Complex(2.0, 0.0), 0, 1000000).value;
    CHECK(std::abs(ep - ps) < 1e-4);
    Complex ep1 = euler_product_partial(Complex(3.0, 0.0), 1, 1000);
    Complex ps1 = partial_zeta(Complex(3.0, 0.0), 1, 100000).value;
    CHECK(std::abs(ep1 - ps1) < 1e-6);
    CHECK(euler_product_partial(Complex(2.0, 0.0), 3, 1) == Complex(1.0, 0.0));
    CHECK_THROWS_AS(euler_product_partial(Complex(1.0, 0.0), 0, 100), std::domain_error);
}

TEST_CASE("CoeffMap JSON round-trip") {
    CoeffMap a;
    a.normBound = 9;
    a.set(GaussInt{1, 2}, Complex(0.5, -1.25));
    a.set(GaussInt{-3, 0}, Complex(2.0, 0.0));
    CoeffMap b = CoeffMap::from_json(a.to_json());
    CHECK(b.normBound == a.normBound);
    REQUIRE(b.support.size() == a.support.size());
    for (const auto& [k, v] : a.support) {
        auto it = b.support.find(k);
        REQUIRE(it != b.support.end());
        CHECK(std::abs(it->second - v) < 1e-15);
    }
}
