#pragma once

#include "heckezeta/gamma.hpp"

#include <complex>
#include <vector>

namespace hz {

/// Gamma factor X_d(s) = pi^(2s-1) Gamma(2|d|+1-s) / Gamma(2|d|+s),
/// computed as exp of log-Gamma differences. Returns exact 0 at the zeros
/// (2|d|+s a non-positive integer); throws std::domain_error at the poles
/// (2|d|+1-s a non-positive integer).
Complex X_d(int d, Complex s);

/// Analytic conductor T(d,t) = exp(2 Re psi(z_{d,t}) - 2 log pi),
/// z_{d,t} = 2|d| + 1/2 + it. Positive, even in d and t.
double T_of(int d, double t);

/// T(0, 1/2), the small-conductor threshold of the AFE hypotheses.
double T_threshold();

/// Taylor data of G_d(s,tau) = X_d(s-tau)/X_d(s) * T^{-tau} - 1 about
/// tau = 0 (coefficients a_k, k = 1..K), extracted by trapezoid contour
/// integration on |tau| = min(1, R_{d,s}/4).
struct AfeCoefficients {
    int d = 0;
    Complex s;
    double T = 0.0;
    std::vector<Complex> a;  // a[k-1] = a_k
    double radius = 0.0;     // R_{d,s} = |2|d| + 1 - s|
};

/// G_d(s, tau) itself (used by the coefficient tests).
Complex afe_G(int d, Complex s, double T, Complex tau);

/// Throws std::domain_error when the expansion hypotheses
/// (-1/2 <= Re s <= 3/2, T(d, Im s) >= T(0, 1/2)) fail.
AfeCoefficients afe_coefficients(int d, Complex s, int K, int contour_nodes = 128);

}  // namespace hz
