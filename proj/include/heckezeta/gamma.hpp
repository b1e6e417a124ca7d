#pragma once

#include <complex>

namespace hz {

using Complex = std::complex<double>;

/// log Gamma and digamma on C, by upward recurrence into the Stirling
/// region. Targets ~1e-13 relative accuracy away from the poles.
class GammaEngine {
public:
    explicit GammaEngine(double asymptotic_threshold = 12.0, int bernoulli_terms = 10)
        : threshold_(asymptotic_threshold), terms_(bernoulli_terms) {}

    /// Principal branch of log Gamma (continuous on C minus (-inf, 0]).
    Complex log_gamma(Complex z) const;

    /// Gamma'(z)/Gamma(z). Throws std::domain_error at the poles.
    Complex digamma(Complex z) const;

private:
    double threshold_;
    int terms_;
};

/// Shared default-configured engine.
const GammaEngine& gamma_engine();

Complex log_gamma(Complex z);
Complex digamma(Complex z);

}  // namespace hz
