#pragma once

#include "heckezeta/hecke_series.hpp"
#include "heckezeta/smoothing.hpp"
#include "heckezeta/zeta_afe.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hz {

/// Largest admissible D for a moment run.
inline constexpr double kMomentDeskCap = 24.0;

/// Composite-Simpson quadrature request. The effective step is further
/// clamped to min(0.25, pi / (4 sqrt(T_max))) so the integrand's
/// oscillation scale is always resolved.
struct QuadSpec {
    double step = 0.25;
};

/// One weighted-fourth-moment experiment:
///   E(D;M,A) = sum_{|d|<=D} int_{-D}^{D} |zeta(1/2+it,lambda^d)|^4
///              |P_M(A; it, lambda^d)|^2 dt.
struct MomentExperiment {
    double D = 4.0;
    double M = 1.0;
    CoeffMap A = CoeffMap::unit_indicator();
    QuadSpec quad;
    // K = 0 (plain smoothed sums): the Taylor-correction terms rho_k grow
    // like the bump's high derivatives and destroy the integrand at
    // desk-scale conductors, so moment runs default to the uncorrected AFE.
    AfeConfig afe{.K = 0};
    double theta = 2.0 / 9.0;  // spectral-gap exponent, in [0, 2/9]
    double epsilon = 0.1;      // reporting epsilon of the envelope bounds
    int threads = 0;           // 0 = HECKE_LAB_THREADS or hardware count
};

struct MomentEnvelopes {
    double boundL2 = 0.0;    // (D^{2+eps} + (1+D M^{-3/2})^theta D^{1+eps} M^2) sum|A|^2
    double boundMax = 0.0;   // D^{2+eps} sum|A|^2 + (1+D M^{-2})^theta D^{1+eps} M^3 max|A|^2
    double sarnak = 0.0;     // D^2 ln^4(D+2)
};

struct MomentResult {
    double E = 0.0;
    double errBar = 0.0;  // first-order AFE uncertainty, 4|zeta|^3 dzeta |P|^2
    std::vector<std::pair<int, double>> perD;  // (d, partial integral), d ascending
    MomentEnvelopes envelopes;
    double ratioL2 = 0.0;
    double ratioMax = 0.0;
    double ratioSarnak = 0.0;
    double stepUsed = 0.0;
    double runtimeSec = 0.0;
    MomentExperiment configEcho;

    std::string to_json() const;
};

/// Runs the experiment. Parallel over d with a fixed-order merge, so the
/// result is bit-identical for any worker count. Throws std::domain_error
/// when D exceeds the desk cap or M > D, std::logic_error when the d <-> -d
/// integrand symmetry fails beyond quadrature tolerance (real-valued A only).
MomentResult run_moment(const MomentExperiment& experiment);

/// Smoothed second-moment identity: with Upsilon the width-1 window,
///   lhs = (1/2D^2) sum_d int Upsilon(|2d+it|^2/D^2)
///                        |sum_xi C(xi) Lambda^d(xi) norm(xi)^{-it}|^2 dt,
///   rhs = sum_{|xi1-xi2| < QX} C(xi1) conj(C(xi2))
///                        hat(Upsilon o N)((D/pi) log(xi1/xi2)).
struct SecondMomentReport {
    double lhs = 0.0;
    Complex rhs;
    double relErr = 0.0;  // |lhs-rhs| / (|lhs| + |rhs| + 1e-12)
    std::int64_t pairs = 0;
};

/// Requires C supported where norm(xi)/X^2 in (1/2,2) and C(i xi) = C(xi);
/// throws std::invalid_argument otherwise. Q must lie in (0, 1/2].
SecondMomentReport second_moment_identity(double D, const CoeffMap& C, double X, double Q,
                                          const SmoothingConfig& smoothing = {});

/// Coefficient map for identity checks: the +-1 pattern s(xi) on the open
/// annulus norm(xi)/X^2 in (1/2,2), symmetrized over unit orbits by taking
/// the value at the canonical associate. Deterministic in the seed.
CoeffMap annulus_sign_map(double X, std::uint64_t seed);

struct EnvelopeRow {
    double D = 0.0, M = 0.0, E = 0.0;
    double boundL2 = 0.0, boundMax = 0.0, sarnak = 0.0;
    double ratioL2 = 0.0, ratioMax = 0.0, ratioSarnak = 0.0;
    bool flagged = false;  // some ratio exceeded the watermark
};

/// Per-result envelope ratios, recomputed at the given epsilon/theta.
/// Ratios above the watermark are flagged as likely implementation bugs.
std::vector<EnvelopeRow> envelope_report(const std::vector<MomentResult>& results,
                                         double epsilon = 0.1, double theta = 2.0 / 9.0,
                                         double watermark = 1e4);

std::string envelope_report_csv(const std::vector<EnvelopeRow>& rows);

}  // namespace hz
