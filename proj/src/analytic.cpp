#include "heckezeta/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.1447298858494001741;

bool is_nonpositive_integer(Complex z) {
    return std::abs(z.imag()) < 1e-12 && z.real() < 0.5 &&
           std::abs(z.real() - std::round(z.real())) < 1e-12;
}

}  // namespace

Complex X_d(int d, Complex s) {
    double a = 2.0 * std::abs(d);
    Complex top = a + 1.0 - s;  // Gamma(top)
    Complex bot = a + s;        // Gamma(bot)
    if (is_nonpositive_integer(top))
        throw std::domain_error("X_d: pole at s = " + std::to_string(a + 1.0 + std::round(-top.real())));
    if (is_nonpositive_integer(bot)) return {0.0, 0.0};
    Complex lg = log_gamma(top) - log_gamma(bot);
    return std::exp(lg + (2.0 * s - 1.0) * kLogPi);
}

double T_of(int d, double t) {
    Complex z(2.0 * std::abs(d) + 0.5, t);
    return std::exp(2.0 * (digamma(z).real() - kLogPi));
}

double T_threshold() {
    static const double v = T_of(0, 0.5);
    return v;
}

Complex afe_G(int d, Complex s, double T, Complex tau) {
    double a = 2.0 * std::abs(d);
    // X_d(s-tau)/X_d(s) * T^{-tau} written as a single exponential of
    // log-Gamma differences; pi^{-2tau} folds into the T power.
    Complex lg = log_gamma(a + 1.0 - s + tau) - log_gamma(a + 1.0 - s) +
                 log_gamma(a + s) - log_gamma(a + s - tau);
    return std::exp(lg - tau * (std::log(T) + 2.0 * kLogPi)) - 1.0;
}

AfeCoefficients afe_coefficients(int d, Complex s, int K, int contour_nodes) {
    if (s.real() < -0.5 || s.real() > 1.5)
        throw std::domain_error("afe_coefficients: Re(s) outside [-1/2, 3/2]");
    double T = T_of(d, s.imag());
    if (T < T_threshold())
        throw std::domain_error("afe_coefficients: T(d, Im s) below T(0, 1/2)");
    AfeCoefficients out;
    out.d = d;
    out.s = s;
    out.T = T;
    out.radius = std::abs(2.0 * std::abs(d) + 1.0 - s);
    if (K <= 0) return out;

    double r = std::min(1.0, out.radius / 4.0);
    int m = contour_nodes;
    // Trapezoid rule on the circle |tau| = r: spectrally accurate since
    // G is analytic on |tau| < R_{d,s}.
    std::vector<Complex> g(m);
    for (int j = 0; j < m; ++j) {
        double th = 2.0 * kPi * j / m;
        g[j] = afe_G(d, s, T, Complex(r * std::cos(th), r * std::sin(th)));
    }
    out.a.resize(K);
    for (int k = 1; k <= K; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < m; ++j) {
            double th = 2.0 * kPi * j * k / m;
            acc += g[j] * Complex(std::cos(th), -std::sin(th));
        }
        out.a[k - 1] = acc / (double(m) * std::pow(r, k));
    }
    return out;
}

}  // namespace hz
