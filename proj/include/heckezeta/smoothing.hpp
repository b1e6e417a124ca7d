#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace hz {

using Complex = std::complex<double>;

/// Parameters of the bump-built smoothings. b is the cutoff base of rho
/// (supp rho' in [1/b, b]); eta the width of the W/Omega/Upsilon family.
struct SmoothingConfig {
    double b = 1.4142135623730951;    // sqrt(2)
    double eta = 0.23104906018664842; // log(2)/3
    int quadNodes = 256;
};

struct WEtaFamily {
    std::function<double(double)> W;
    std::function<double(double)> Omega;
    std::function<double(double)> Upsilon;
    double eta;
};

/// Precomputed evaluator for the bump Phi(t) = exp(-1/(1-t^2)) on (-1,1),
/// its derivatives, the cutoff rho built from it, the Mellin transform R(z)
/// of rho, and the W/Omega/Upsilon window family.
class SmoothingEngine {
public:
    explicit SmoothingEngine(SmoothingConfig cfg = {});

    const SmoothingConfig& config() const { return cfg_; }

    double phi(double t) const;
    /// k-th derivative of Phi, via the exact rational recurrence
    /// Phi^(k) = P_k(t)/(1-t^2)^(2k) * Phi. Supported for k <= 12.
    double phi_deriv(int k, double t) const;

    /// Integral of Phi over [lo, hi] (subset of [-1, 1]), from the prefix
    /// table plus a local Gauss-Legendre correction.
    double phi_integral(double lo, double hi) const;

    /// Normalizing constant c = (integral of Phi over R)^{-1}.
    double norm_const() const { return c_; }

    /// rho(u): 1 for u <= 1/b, 0 for u >= b, smooth monotone in between;
    /// satisfies rho(u) + rho(1/u) = 1.
    double rho(double u) const;

    /// rho_k(u) = (u d/du)^k rho(u), k >= 1, in closed form.
    double rho_k(int k, double u) const;

    /// rho~_K(u) = rho(u) + sum_{k=1..K} (-1)^k a_k rho_k(u).
    Complex rho_tilde(const std::vector<Complex>& a, double u) const;

    /// Mellin transform R(z) of rho, analytically continued off the simple
    /// pole at z = 0 (residue 1). Throws std::domain_error at z = 0.
    Complex mellin_R(Complex z) const;

    /// The window family of width cfg.eta: Omega a normalized bump on
    /// [1, e^eta], W(u) = eta^{-1} int_u^inf Omega, Upsilon(u) =
    /// W(u) - W(e^eta u).
    WEtaFamily w_eta_family() const;
    /// Same family at an explicit width (the second-moment identity uses
    /// eta0 = 1).
    WEtaFamily w_eta_family(double eta) const;

    double W_eta(double eta, double u) const;
    double omega_eta(double eta, double x) const;
    double upsilon_eta(double eta, double u) const;

private:
    SmoothingConfig cfg_;
    double c_;       // 1 / int Phi
    double log_b_;
    // Prefix integrals of Phi on a uniform grid over [-1, 1].
    std::vector<double> prefix_;
    double cell_;
    // Gauss-Legendre rule on [-1, 1] used for local corrections.
    std::vector<double> gl_x_, gl_w_;
    // quadNodes-point rule for Mellin/R quadrature.
    std::vector<double> glq_x_, glq_w_;
    // P_k coefficients for Phi^(k) = P_k/(1-t^2)^(2k) Phi, k = 0..kMaxDeriv.
    std::vector<std::vector<double>> pk_;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace hz
