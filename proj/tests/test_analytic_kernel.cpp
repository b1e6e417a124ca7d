#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckezeta/analytic.hpp"
#include "heckezeta/gamma.hpp"
#include "heckezeta/smoothing.hpp"

#include <cmath>
#include <numbers>

using namespace hz;
using doctest::Approx;

namespace {
constexpr double kEulerGamma = 0.5772156649015329;
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("digamma and log_gamma reference values") {
    CHECK(digamma(Complex(1.0, 0.0)).real() == Approx(-kEulerGamma).epsilon(1e-12));
    CHECK(digamma(Complex(0.5, 0.0)).real() ==
          Approx(-kEulerGamma - 2.0 * std::log(2.0)).epsilon(1e-12));
    // psi(10) = -gamma + sum_{k=1}^{9} 1/k, and psi(10) ~ ln 10 - 1/20.
    double h9 = 0.0;
    for (int k = 1; k <= 9; ++k) h9 += 1.0 / k;
    CHECK(digamma(Complex(10.0, 0.0)).real() == Approx(-kEulerGamma + h9).epsilon(1e-12));
    CHECK(std::abs(digamma(Complex(10.0, 0.0)).real() - (std::log(10.0) - 0.05)) < 1e-3);
    CHECK(log_gamma(Complex(5.0, 0.0)).real() == Approx(std::log(24.0)).epsilon(1e-12));
    CHECK(std::abs(log_gamma(Complex(0.5, 0.0)) - Complex(0.5 * std::log(kPi), 0.0)) < 1e-12);
    // Recurrence log Gamma(z+1) = log Gamma(z) + log z off the real axis.
    Complex z(0.3, 7.0);
    CHECK(std::abs(log_gamma(z + Complex(1.0, 0.0)) - log_gamma(z) - std::log(z)) < 1e-11);
}

TEST_CASE("X_d special values and reflection") {
    CHECK(std::abs(X_d(0, Complex(0.5, 0.0)) - Complex(1.0, 0.0)) < 1e-12);
    CHECK(X_d(0, Complex(-0.5, 0.0)).real() ==
          Approx(-1.0 / (4.0 * kPi * kPi)).epsilon(1e-12));
    // zeros: 2|d| + s a non-positive integer
    CHECK(X_d(0, Complex(-3.0, 0.0)) == Complex(0.0, 0.0));
    CHECK(X_d(1, Complex(-2.0, 0.0)) == Complex(0.0, 0.0));
    // poles: 2|d| + 1 - s a non-positive integer
    CHECK_THROWS_AS(X_d(0, Complex(1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(X_d(1, Complex(4.0, 0.0)), std::domain_error);
    // X_d(s) X_d(1-s) = 1
    for (int d : {0, 1, 5}) {
        for (double t : {0.0, 3.0, 17.5}) {
            Complex s(0.4, t);
            CHECK(std::abs(X_d(d, s) * X_d(d, Complex(1.0, 0.0) - s) - Complex(1.0, 0.0)) <
                  1e-10);
        }
    }
    // conjugation symmetry and independence of sign(d)
    Complex s(0.7, 9.0);
    CHECK(std::abs(X_d(3, std::conj(s)) - std::conj(X_d(3, s))) < 1e-12);
    CHECK(std::abs(X_d(3, s) - X_d(-3, s)) < 1e-15);
}

TEST_CASE("X_d unimodular on the critical line") {
    for (int d = -50; d <= 50; d += 5) {
        for (double t = 0.0; t <= 100.0; t += 5.0) {
            CHECK(std::abs(std::abs(X_d(d, Complex(0.5, t))) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("conductor T(d,t)") {
    const double c0 = 4.0 * kPi * std::exp(kEulerGamma);
    CHECK(T_of(0, 0.0) == Approx(1.0 / (c0 * c0)).epsilon(1e-12));
    // psi(5/2) = -gamma - 2 ln 2 + 2(1 + 1/3), so
    // T(1,0) = exp(2 psi(5/2) - 2 ln pi) = e^{16/3} / c0^2.
    CHECK(T_of(1, 0.0) == Approx(std::exp(16.0 / 3.0) / (c0 * c0)).epsilon(1e-12));
    CHECK(T_threshold() == Approx(T_of(0, 0.5)).epsilon(1e-15));
    // even in d and t, increasing in |t|
    CHECK(T_of(-4, 7.0) == Approx(T_of(4, 7.0)).epsilon(1e-15));
    CHECK(T_of(2, -7.0) == Approx(T_of(2, 7.0)).epsilon(1e-15));
    for (int d : {0, 1, 6}) {
        double prev = T_of(d, 0.0);
        for (double t = 1.0; t <= 40.0; t += 1.0) {
            double cur = T_of(d, t);
            CHECK(cur > prev);
            prev = cur;
        }
        CHECK(T_of(d, 0.0) >= 1.0 / (c0 * c0) - 1e-15);
    }
    // T ~ |2d + it|^2 / pi^2 for large conductor
    for (int d : {0, 10, 60}) {
        for (double t : {0.0, 50.0, 200.0}) {
            double z2 = 4.0 * d * d + t * t;
            if (z2 < 10000.0) continue;
            double ratio = T_of(d, t) * kPi * kPi / z2;
            CHECK(ratio > 0.98);
            CHECK(ratio < 1.02);
        }
    }
}

TEST_CASE("afe_coefficients leading terms at high conductor") {
    int d = 5;
    Complex s(0.5, 40.0);
    AfeCoefficients c = afe_coefficients(d, s, 4);
    double T = T_of(d, s.imag());
    CHECK(c.T == Approx(T).epsilon(1e-14));
    CHECK(c.radius == Approx(std::abs(Complex(2.0 * 5 + 1.0, 0.0) - s)).epsilon(1e-12));
    REQUIRE(c.a.size() == 4);
    // a_1 = O(1/T); a_2 ~ it/|z|^2 with z = 2|d| + 1/2 + it.
    CHECK(std::abs(c.a[0]) < 10.0 / T);
    Complex z(2.0 * 5 + 0.5, 40.0);
    CHECK(std::abs(c.a[1] - Complex(0.0, 40.0) / std::norm(z)) < 10.0 / T);
}

TEST_CASE("afe_coefficients reproduce G_d on the contour") {
    for (int d : {0, 3}) {
        Complex s(0.6, 25.0);
        AfeCoefficients c = afe_coefficients(d, s, 6);
        double r = std::min(1.0, c.radius / 4.0) / 8.0;
        for (int j = 0; j < 8; ++j) {
            double th = 2.0 * kPi * j / 8.0;
            Complex tau = std::polar(r, th);
            Complex taylor(0.0, 0.0);
            Complex p(1.0, 0.0);
            for (std::size_t k = 0; k < c.a.size(); ++k) {
                p *= tau;
                taylor += c.a[k] * p;
            }
            Complex exact = afe_G(d, s, c.T, tau);
            CHECK(std::abs(exact - taylor) < 1e-4 * (1.0 + std::abs(exact)));
        }
    }
}

TEST_CASE("afe_coefficients hypothesis guards") {
    CHECK_THROWS_AS(afe_coefficients(0, Complex(-0.75, 20.0), 2), std::domain_error);
    CHECK_THROWS_AS(afe_coefficients(0, Complex(1.75, 20.0), 2), std::domain_error);
    CHECK_THROWS_AS(afe_coefficients(0, Complex(0.5, 0.1), 2), std::domain_error);
    CHECK_NOTHROW(afe_coefficients(0, Complex(0.5, 0.6), 2));
    CHECK_NOTHROW(afe_coefficients(1, Complex(0.5, 0.0), 2));
}

TEST_CASE("smoothing cutoff rho") {
    SmoothingEngine eng;
    const double b = eng.config().b;
    CHECK(eng.rho(b) == Approx(0.0));
    CHECK(eng.rho(2.0 * b) == 0.0);
    CHECK(eng.rho(1.0 / b) == Approx(1.0).epsilon(1e-12));
    CHECK(eng.rho(0.1) == 1.0);
    CHECK(eng.rho(1.0) == Approx(0.5).epsilon(1e-12));
    for (double u : {0.75, 0.9, 1.0, 1.1, 1.3}) {
        CHECK(eng.rho(u) + eng.rho(1.0 / u) == Approx(1.0).epsilon(1e-12));
    }
    // monotone decreasing across the transition
    double prev = 1.0;
    for (double u = 1.0 / b; u <= b; u += 0.01) {
        double cur = eng.rho(u);
        CHECK(cur <= prev + 1e-15);
        prev = cur;
    }
}

TEST_CASE("rho_k closed form vs finite differences") {
    SmoothingEngine eng;
    const double b = eng.config().b;
    // rho_1(1) = -c e^{-1} / log b
    CHECK(eng.rho_k(1, 1.0) ==
          Approx(-eng.norm_const() * std::exp(-1.0) / std::log(b)).epsilon(1e-12));
    CHECK(eng.rho_k(1, 2.0 * b) == 0.0);
    CHECK(eng.rho_k(3, 0.1) == 0.0);
    for (int k = 1; k <= 4; ++k) {
        for (double u : {0.8, 0.95, 1.05, 1.2}) {
            // central difference of rho_{k-1} in log u
            double h = 1e-5;
            auto lower = [&](double v) {
                return (k == 1) ? eng.rho(v) : eng.rho_k(k - 1, v);
            };
            double fd =
                (lower(u * std::exp(h)) - lower(u * std::exp(-h))) / (2.0 * h);
            CHECK(eng.rho_k(k, u) == Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("rho_tilde") {
    SmoothingEngine eng;
    std::vector<Complex> empty;
    CHECK(eng.rho_tilde(empty, 0.9) == Complex(eng.rho(0.9), 0.0));
    std::vector<Complex> a = {Complex(0.2, 0.1), Complex(-0.05, 0.0)};
    CHECK(std::abs(eng.rho_tilde(a, 3.0)) == 0.0);  // beyond the cutoff
    Complex expect = Complex(eng.rho(1.1), 0.0) - a[0] * eng.rho_k(1, 1.1) +
                     a[1] * eng.rho_k(2, 1.1);
    CHECK(std::abs(eng.rho_tilde(a, 1.1) - expect) < 1e-14);
}

TEST_CASE("mellin_R properties") {
    SmoothingEngine eng;
    CHECK_THROWS_AS(eng.mellin_R(Complex(0.0, 0.0)), std::domain_error);
    // R(z) - 1/z is odd: R(z) + R(-z) = 0 off the pole contributions.
    for (Complex z : {Complex(0.5, 1.0), Complex(2.0, -3.0), Complex(0.0, 4.0)}) {
        Complex sum = (eng.mellin_R(z) - 1.0 / z) + (eng.mellin_R(-z) + 1.0 / z);
        CHECK(std::abs(sum) < 1e-9);
    }
    // R(1) = int_0^inf rho(u) du, cross-checked by direct quadrature.
    double direct = 0.0;
    int n = 20000;
    double hi = eng.config().b;
    for (int i = 0; i < n; ++i) {
        double u = (i + 0.5) * hi / n;
        direct += eng.rho(u) * hi / n;
    }
    CHECK(eng.mellin_R(Complex(1.0, 0.0)).real() == Approx(direct).epsilon(1e-6));
    CHECK(std::abs(eng.mellin_R(Complex(1.0, 0.0)).imag()) < 1e-12);
}

TEST_CASE("Mellin inversion recovers rho(1) = 1/2") {
    SmoothingEngine eng;
    // rho(u) = (1/2πi) int_(2) R(z) u^{-z} dz; at u = 1, push the integral
    // along Re z = 2 by direct quadrature in t.
    double sigma = 2.0;
    double lim = 400.0, h = 0.01;
    Complex acc(0.0, 0.0);
    for (double t = -lim; t <= lim; t += h) {
        Complex z(sigma, t);
        acc += eng.mellin_R(z) * h;
    }
    double val = (acc / Complex(0.0, 2.0 * kPi) * Complex(0.0, 1.0)).real();
    CHECK(val == Approx(eng.rho(1.0)).epsilon(1e-4));
}

TEST_CASE("W/Omega/Upsilon window family") {
    SmoothingEngine eng;
    WEtaFamily fam = eng.w_eta_family();
    const double eta = fam.eta;
    CHECK(eta == Approx(eng.config().eta).epsilon(1e-15));
    CHECK(fam.W(0.5) == Approx(1.0).epsilon(1e-12));
    CHECK(fam.W(std::exp(eta)) == Approx(0.0));
    CHECK(fam.W(10.0) == 0.0);
    // Omega supported in [1, e^eta], nonnegative, integral eta
    CHECK(fam.Omega(0.99) == 0.0);
    CHECK(fam.Omega(std::exp(eta) * 1.01) == 0.0);
    double mass = 0.0;
    int n = 40000;
    double lo = 1.0, hi = std::exp(eta);
    for (int i = 0; i < n; ++i) {
        double x = lo + (i + 0.5) * (hi - lo) / n;
        double om = fam.Omega(x);
        CHECK(om >= 0.0);
        mass += om * (hi - lo) / n;
    }
    CHECK(mass == Approx(eta).epsilon(1e-6));
    // Upsilon(u) = W(u) - W(e^eta u)
    for (double u : {0.5, 0.9, 1.0, 1.1, 1.5}) {
        CHECK(fam.Upsilon(u) ==
              Approx(fam.W(u) - fam.W(std::exp(eta) * u)).epsilon(1e-12));
    }
    // explicit-width family with eta0 = 1 matches the member evaluators
    WEtaFamily wide = eng.w_eta_family(1.0);
    for (double u : {0.3, 1.0, 2.0, 2.7}) {
        CHECK(wide.W(u) == Approx(eng.W_eta(1.0, u)).epsilon(1e-13));
        CHECK(wide.Upsilon(u) == Approx(eng.upsilon_eta(1.0, u)).epsilon(1e-13));
    }
}

TEST_CASE("dyadic partition of unity") {
    SmoothingEngine eng;
    const double eta = eng.config().eta;
    for (double B : {3.0, 10.0, 100.0}) {
        for (double nb : {1.0, 2.0, 5.0, 17.0, 64.0}) {
            if (nb > B) continue;
            double sum = 0.0;
            for (int h = 0; h < 200; ++h) {
                double u = nb / (B * std::exp(-h * eta));
                sum += eng.upsilon_eta(eta, u);
                if (u > std::exp(eta)) break;
            }
            CHECK(sum == Approx(eng.W_eta(eta, nb / B)).epsilon(1e-12));
        }
    }
}

TEST_CASE("phi derivatives and integral") {
    SmoothingEngine eng;
    CHECK(eng.phi(0.0) == Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(eng.phi(1.0) == 0.0);
    CHECK(eng.phi(-2.0) == 0.0);
    for (int k = 1; k <= 5; ++k) {
        for (double t : {-0.6, 0.0, 0.31, 0.8}) {
            double h = 1e-6;
            double fd = (eng.phi_deriv(k - 1, t + h) - eng.phi_deriv(k - 1, t - h)) /
                        (2.0 * h);
            CHECK(eng.phi_deriv(k, t) == Approx(fd).epsilon(1e-5));
        }
    }
    CHECK(eng.phi_integral(-1.0, 1.0) == Approx(1.0 / eng.norm_const()).epsilon(1e-10));
    CHECK(eng.phi_integral(-1.0, 0.0) ==
          Approx(eng.phi_integral(0.0, 1.0)).epsilon(1e-10));
}
