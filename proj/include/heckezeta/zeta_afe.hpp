#pragma once

#include "heckezeta/analytic.hpp"
#include "heckezeta/hecke_series.hpp"
#include "heckezeta/smoothing.hpp"

#include <complex>
#include <cstdint>

namespace hz {

/// How to split the two smoothed Dirichlet sums. Balanced means
/// x = y = sqrt(T); an explicit split must satisfy x*y = T and
/// 1/(2 C0) <= b*y <= 2 C0 T at evaluation time.
struct AfeSplit {
    bool balanced = true;
    double x = 0.0;
    double y = 0.0;
};

struct AfeConfig {
    int K = 4;
    AfeSplit split;
    SmoothingConfig smoothing;
    std::int64_t coeffCap = kCoeffTableCap;
};

struct ZetaValue {
    Complex value;
    double errEstimate = 0.0;
    double T = 0.0;
    double x = 0.0;
    double y = 0.0;
    std::int64_t termsMain = 0;
    std::int64_t termsDual = 0;
};

/// zeta(s, lambda^d) through the approximate functional equation:
/// a rho-smoothed sum of length ~ b*x, a dual rho~_K-smoothed sum of
/// length ~ b*y times X_d(s), and (for d = 0) the regularized pole term
/// (pi/4) e^{-|s-1|} / (s-1).
///
/// Admissible strip: -1/3 <= Re(s) <= 4/3, s not in {-2|d|, 2|d|+1}.
/// Throws std::domain_error (strip), std::invalid_argument (bad split),
/// std::length_error (coefficient cap).
///
/// In the small-conductor regime T < T(0,1/2) both sum lengths drop
/// below one term and the expansion carries no information; for d = 0
/// the value is then served by zeta_d0_oracle instead.
ZetaValue afe_eval(int d, Complex s, const AfeConfig& cfg = {});

/// Independent route for d = 0: zeta(s) L(s, chi_4), both factors by
/// accelerated alternating series. Accurate to ~1e-10 for
/// 0 <= Re(s) <= 2, |Im(s)| <= 60. Throws std::domain_error at s = 1.
Complex zeta_d0_oracle(Complex s);

/// |afe_eval(d,s) - X_d(s) afe_eval(-d,1-s)| / (1 + |afe_eval(d,s)|).
/// The underlying identity is exact, so this measures AFE truncation
/// noise only.
double fe_residual(int d, Complex s, const AfeConfig& cfg = {});

/// Reporting envelopes T^{max(0,(1-sigma)/2+eps,1/2-sigma)} and
/// T^{1/6+eps} with eps = 0.05; dashboard ratios only, never asserted
/// against unknown constants.
struct ReferenceBounds {
    double convexity = 0.0;
    double subconvexity = 0.0;
};
ReferenceBounds reference_bounds(int d, Complex s);

/// Majorant check for |zeta(1/2+it,lambda^d)|^h against a short-window
/// integral of the leading smoothed sum: lhs = |zeta|^h via afe_eval,
/// rhs = (3^h/eta) int_{-2eta}^{2eta} |sum_n rho(n e^{-theta} T^{-1/2})
/// delta(Lambda^d,n) n^{-1/2-it}|^h dtheta by Simpson. The implicit
/// constant is unknown, so only the ratio is reported.
struct WindowMajorant {
    double lhs = 0.0;
    double rhsIntegral = 0.0;
    double ratio = 0.0;
};
WindowMajorant window_majorant(int d, double t, int h, const AfeConfig& cfg = {});

}  // namespace hz
