#include "heckezeta/gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hz {

namespace {

// B_{2k} / (2k (2k-1)) for the Stirling series, k = 1..12.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    77683.0 / 5796.0,
    -236364091.0 / 1506960.0,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2

bool near_nonpositive_integer(Complex z) {
    return z.real() <= 0.5 && std::abs(z.imag()) < 1e-12 &&
           std::abs(z.real() - std::round(z.real())) < 1e-12;
}

}  // namespace

Complex GammaEngine::log_gamma(Complex z) const {
    if (near_nonpositive_integer(z))
        throw std::domain_error("log_gamma: pole at non-positive integer");
    // Upward recurrence until the Stirling region; the result is a valid
    // logarithm of Gamma(z) (branch shifts are absorbed by exp at use sites).
    Complex shift(0.0, 0.0);
    while (std::abs(z) < threshold_ || z.real() < 0.5) {
        shift -= std::log(z);
        z += 1.0;
    }
    Complex inv = 1.0 / z, inv2 = inv * inv;
    Complex series(0.0, 0.0);
    Complex p = inv;
    int n = std::min<int>(terms_, static_cast<int>(std::size(kStirling)));
    for (int k = 0; k < n; ++k) {
        series += kStirling[k] * p;
        p *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series + shift;
}

Complex GammaEngine::digamma(Complex z) const {
    if (near_nonpositive_integer(z))
        throw std::domain_error("digamma: pole at non-positive integer");
    Complex shift(0.0, 0.0);
    while (std::abs(z) < threshold_ || z.real() < 0.5) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    // psi(z) ~ log z - 1/(2z) - sum B_2k / (2k z^{2k})
    static constexpr double kB2k[] = {
        1.0 / 6.0,  -1.0 / 30.0,  1.0 / 42.0,   -1.0 / 30.0,
        5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0,
        43867.0 / 798.0, -174611.0 / 330.0,
    };
    Complex inv = 1.0 / z, inv2 = inv * inv;
    Complex series(0.0, 0.0);
    Complex p = inv2;
    int n = std::min<int>(terms_, static_cast<int>(std::size(kB2k)));
    for (int k = 0; k < n; ++k) {
        series += kB2k[k] / (2.0 * (k + 1)) * p;
        p *= inv2;
    }
    return std::log(z) - 0.5 * inv - series + shift;
}

const GammaEngine& gamma_engine() {
    static const GammaEngine engine;
    return engine;
}

Complex log_gamma(Complex z) { return gamma_engine().log_gamma(z); }
Complex digamma(Complex z) { return gamma_engine().digamma(z); }

}  // namespace hz
