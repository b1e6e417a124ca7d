#pragma once

#include "heckezeta/gauss_arith.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <string>

namespace hz {

using Complex = std::complex<double>;

struct KloostermanQuery {
    GaussInt alpha;
    GaussInt beta;
    GaussInt gamma;  // nonzero modulus
};

struct KloostermanResult {
    double value = 0.0;
    double imagLeak = 0.0;  // |imaginary part| of the float accumulation
    std::string method;
    std::int64_t terms = 0;
};

/// Default cap on the number of residues visited by the direct sum.
inline constexpr std::int64_t kKloostermanDirectCap = 1'000'000;

/// S(alpha,beta;gamma) = sum over reduced residues delta mod gamma of
/// e(Re((alpha delta* + beta delta)/gamma)), delta* the inverse of delta.
/// Each phase numerator Re((alpha delta* + beta delta) conj(gamma)) is an
/// exact integer reduced mod norm(gamma) before the single trig call, so
/// the only float error is the final accumulation. The sum is real
/// (delta -> -delta conjugates terms); imagLeak reports the leak.
KloostermanResult kloosterman_direct(const KloostermanQuery& q,
                                     std::int64_t cap = kKloostermanDirectCap);

/// Closed form for the beta = 0 case (Ramanujan sum):
/// sum over ideal divisors nu of (alpha, gamma) of mu(gamma/nu) norm(nu).
/// alpha = 0 is allowed and gives the full Moebius-weighted divisor sum.
KloostermanResult ramanujan_eval(const GaussInt& alpha, const GaussInt& gamma);

/// Trivial bound |S| <= phi(gamma) and the Weil-Estermann bound
/// S^2 <= 8 tau_2(gamma)^2 norm((alpha,beta,gamma)) norm(gamma).
struct BoundCheck {
    bool trivialOk = false;
    bool weilOk = false;
    double ratioWeil = 0.0;  // value^2 / Weil bound
};
BoundCheck bound_check(const KloostermanQuery& q, const KloostermanResult& r);

/// A Schwartz-class test function with an effective support radius
/// (tails below 1e-12 outside |z| <= radius).
struct TestFunction {
    std::function<Complex(Complex)> value;
    double radius = 0.0;
    bool radial = false;
};

/// f(z) = exp(-pi |z/sigma0|^2), self-dual at sigma0 = 1.
TestFunction gaussian_test(double sigma0 = 1.0);

/// Compactly supported radial bump exp(-1/(1 - |z/scale|^2)) on |z| < scale.
TestFunction bump_test(double scale = 1.0);

/// f^(w) = integral of f(z) e(-Re(wz)) over the plane, by polar quadrature:
/// trapezoid in angle (spectral for the periodic integrand), Gauss-Legendre
/// radially on [0, radius]; node counts grow with |w| radius. A radial f
/// yields a radial transform.
Complex fourier_hat(const TestFunction& f, Complex w);

/// Two-sided check of a lattice summation identity.
struct PoissonReport {
    Complex lhs;
    Complex rhs;
    double absErr = 0.0;
};

/// sum_nu f(nu) e(Re(tau nu)) = sum_xi f^(xi - tau).
PoissonReport poisson_plain(Complex tau, double sigma0 = 1.0);

/// sum_{nu = alpha mod gamma} f(nu)
///   = norm(gamma)^{-1} sum_xi f^(xi/gamma) e(Re(alpha xi / gamma)).
PoissonReport poisson_progression(const GaussInt& alpha, const GaussInt& gamma,
                                  double sigma0 = 1.0);

/// sum_{(nu,gamma)=1} f(nu) e(Re(alpha nu* / gamma))
///   = norm(gamma)^{-1} sum_xi f^(xi/gamma) S(alpha, xi; gamma),
/// the inner Kloosterman sums memoized per residue of xi mod gamma.
PoissonReport poisson_twist(const GaussInt& alpha, const GaussInt& gamma,
                            double sigma0 = 1.0);

}  // namespace hz
