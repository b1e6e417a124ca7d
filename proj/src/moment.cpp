#include "heckezeta/moment.hpp"

#include "heckezeta/analytic.hpp"
#include "heckezeta/gauss_arith.hpp"
#include "heckezeta/kloosterman.hpp"
#include "heckezeta/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace hz {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HECKE_LAB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs job(k) for k = 0..count-1 on `threads` workers. Each job writes only
/// its own output slot, so the final reduction order is fixed by k.
template <class Job>
void parallel_for(int count, int threads, Job job) {
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int k = 0; k < count; ++k) job(k);
        return;
    }
    std::atomic<int> nextIdx{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                int k = nextIdx.fetch_add(1);
                if (k >= count) return;
                job(k);
            }
        });
    }
    for (auto& th : pool) th.join();
}

double simpson_weight(int i, int n) {
    if (i == 0 || i == n) return 1.0;
    return (i % 2 == 1) ? 4.0 : 2.0;
}

MomentEnvelopes envelopes_for(double D, double M, double sumA2, double maxA2, double epsilon,
                              double theta) {
    MomentEnvelopes env;
    env.boundL2 = (std::pow(D, 2.0 + epsilon) +
                   std::pow(1.0 + D * std::pow(M, -1.5), theta) *
                       std::pow(D, 1.0 + epsilon) * M * M) *
                  sumA2;
    env.boundMax = std::pow(D, 2.0 + epsilon) * sumA2 +
                   std::pow(1.0 + D / (M * M), theta) * std::pow(D, 1.0 + epsilon) * M * M * M *
                       maxA2;
    double l = std::log(D + 2.0);
    env.sarnak = D * D * l * l * l * l;
    return env;
}

}  // namespace

MomentResult run_moment(const MomentExperiment& experiment) {
    const auto t0 = std::chrono::steady_clock::now();
    const double D = experiment.D;
    const double M = experiment.M;
    if (!(D >= 1.0) || D > kMomentDeskCap)
        throw std::domain_error("run_moment: D must lie in [1, desk cap]");
    if (!(M >= 1.0) || M > D) throw std::domain_error("run_moment: M must lie in [1, D]");
    if (!(experiment.theta >= 0.0) || experiment.theta > 2.0 / 9.0 + 1e-15)
        throw std::domain_error("run_moment: theta outside [0, 2/9]");
    if (!(experiment.epsilon > 0.0)) throw std::domain_error("run_moment: epsilon must be > 0");
    if (!(experiment.quad.step > 0.0)) throw std::domain_error("run_moment: step must be > 0");

    const int dMax = static_cast<int>(std::floor(D));

    // The bounds sum only over 0 < norm(mu) <= M.
    CoeffMap AM;
    AM.normBound = static_cast<std::int64_t>(std::floor(M));
    double sumA2 = 0.0, maxA2 = 0.0;
    bool realA = true;
    for (const auto& [mu, value] : experiment.A.support) {
        if (mu.norm() > AM.normBound) continue;
        AM.set(mu, value);
        double a2 = std::norm(value);
        sumA2 += a2;
        maxA2 = std::max(maxA2, a2);
        if (std::abs(value.imag()) > 1e-15) realA = false;
    }

    // Quadrature step resolving the AFE oscillation scale.
    const double tMaxCond = T_of(dMax, D);
    double step = std::min(experiment.quad.step,
                           std::min(0.25, M_PI / (4.0 * std::sqrt(tMaxCond))));
    int n = 2 * std::max<int>(1, static_cast<int>(std::ceil(D / step)));
    const double h = 2.0 * D / n;

    const int nD = 2 * dMax + 1;
    std::vector<double> partial(static_cast<std::size_t>(nD), 0.0);
    std::vector<double> partialErr(static_cast<std::size_t>(nD), 0.0);

    const int threads = resolve_threads(experiment.threads);
    parallel_for(nD, threads, [&](int k) {
        const int d = k - dMax;
        double acc = 0.0, accErr = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double t = -D + i * h;
            const ZetaValue z = afe_eval(d, Complex(0.5, t), experiment.afe);
            const Complex p = dirichlet_poly(AM, Complex(0.0, t), d);
            const double az = std::abs(z.value);
            const double p2 = std::norm(p);
            const double w = simpson_weight(i, n);
            acc += w * az * az * az * az * p2;
            accErr += w * 4.0 * az * az * az * z.errEstimate * p2;
        }
        partial[static_cast<std::size_t>(k)] = acc * h / 3.0;
        partialErr[static_cast<std::size_t>(k)] = accErr * h / 3.0;
    });

    MomentResult out;
    out.configEcho = experiment;
    out.stepUsed = h;
    out.perD.reserve(static_cast<std::size_t>(nD));
    for (int k = 0; k < nD; ++k) {
        out.perD.emplace_back(k - dMax, partial[static_cast<std::size_t>(k)]);
        out.E += partial[static_cast<std::size_t>(k)];
        out.errBar += partialErr[static_cast<std::size_t>(k)];
    }

    // delta(Lambda^d) = delta(Lambda^{-d}) plus conjugation symmetry make the
    // d and -d integrals equal (up to quadrature noise) when A is real.
    if (realA) {
        for (int d = 1; d <= dMax; ++d) {
            double a = partial[static_cast<std::size_t>(dMax + d)];
            double b = partial[static_cast<std::size_t>(dMax - d)];
            double tol = 1e-6 * 0.5 * (std::abs(a) + std::abs(b)) + 1e-12;
            if (std::abs(a - b) > tol)
                throw std::logic_error("run_moment: d <-> -d integrand symmetry violated");
        }
    }

    out.envelopes = envelopes_for(D, M, sumA2, maxA2, experiment.epsilon, experiment.theta);
    if (out.envelopes.boundL2 > 0.0) out.ratioL2 = out.E / out.envelopes.boundL2;
    if (out.envelopes.boundMax > 0.0) out.ratioMax = out.E / out.envelopes.boundMax;
    out.ratioSarnak = out.E / out.envelopes.sarnak;
    out.runtimeSec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::string MomentResult::to_json() const {
    nlohmann::json j;
    j["E"] = E;
    j["errBar"] = errBar;
    nlohmann::json per = nlohmann::json::array();
    for (const auto& [d, v] : perD) per.push_back({{"d", d}, {"integral", v}});
    j["perD"] = per;
    j["envelopes"] = {{"boundL2", envelopes.boundL2},
                      {"boundMax", envelopes.boundMax},
                      {"sarnak", envelopes.sarnak}};
    j["ratios"] = {{"l2", ratioL2}, {"max", ratioMax}, {"sarnak", ratioSarnak}};
    j["stepUsed"] = stepUsed;
    j["runtimeSec"] = runtimeSec;
    j["config"] = {{"D", configEcho.D},
                   {"M", configEcho.M},
                   {"quadStep", configEcho.quad.step},
                   {"theta", configEcho.theta},
                   {"epsilon", configEcho.epsilon},
                   {"threads", configEcho.threads},
                   {"afe",
                    {{"K", configEcho.afe.K},
                     {"balanced", configEcho.afe.split.balanced},
                     {"b", configEcho.afe.smoothing.b},
                     {"eta", configEcho.afe.smoothing.eta},
                     {"quadNodes", configEcho.afe.smoothing.quadNodes}}},
                   {"A", nlohmann::json::parse(configEcho.A.to_json())}};
    return j.dump(2);
}

SecondMomentReport second_moment_identity(double D, const CoeffMap& C, double X, double Q,
                                          const SmoothingConfig& smoothing) {
    if (!(D > 0.0)) throw std::invalid_argument("second_moment_identity: D must be > 0");
    if (!(X > 0.0)) throw std::invalid_argument("second_moment_identity: X must be > 0");
    if (!(Q > 0.0) || Q > 0.5)
        throw std::invalid_argument("second_moment_identity: Q must lie in (0, 1/2]");

    struct Entry {
        GaussInt xi;
        Complex value;
        double lnNorm;
        double arg;
        double absXi;
    };
    std::vector<Entry> entries;
    const double x2 = X * X;
    for (const auto& [xi, value] : C.support) {
        if (value == Complex(0.0, 0.0)) continue;
        const double nrm = static_cast<double>(xi.norm());
        if (!(nrm / x2 > 0.5) || !(nrm / x2 < 2.0))
            throw std::invalid_argument(
                "second_moment_identity: support outside the annulus norm/X^2 in (1/2,2)");
        GaussInt rotated{-xi.im, xi.re};  // i * xi
        auto it = C.support.find(rotated);
        Complex rotatedValue = (it == C.support.end()) ? Complex(0.0, 0.0) : it->second;
        if (std::abs(rotatedValue - value) > 1e-12)
            throw std::invalid_argument("second_moment_identity: C(i xi) != C(xi)");
        Entry e;
        e.xi = xi;
        e.value = value;
        e.lnNorm = std::log(nrm);
        e.arg = std::atan2(static_cast<double>(xi.im), static_cast<double>(xi.re));
        e.absXi = std::sqrt(nrm);
        entries.push_back(e);
    }

    SecondMomentReport out;
    if (entries.empty()) return out;

    SmoothingEngine eng(smoothing);
    const WEtaFamily fam = eng.w_eta_family(1.0);  // width-1 window, support [1/e, e]

    // Left side: direct d-sum and t-integral against the window.
    const int dMax = static_cast<int>(std::floor(0.5 * std::sqrt(std::exp(1.0)) * D));
    double lhs = 0.0;
    for (int d = -dMax; d <= dMax; ++d) {
        const double t2 = std::exp(1.0) * D * D - 4.0 * static_cast<double>(d) * d;
        if (t2 <= 0.0) continue;
        const double tLim = std::sqrt(t2);
        std::vector<Complex> rotatedCoeff(entries.size());
        for (std::size_t j = 0; j < entries.size(); ++j)
            rotatedCoeff[j] = entries[j].value * std::polar(1.0, 4.0 * d * entries[j].arg);
        const double step = 0.02;
        int n = 2 * std::max<int>(1, static_cast<int>(std::ceil(tLim / step)));
        const double h = 2.0 * tLim / n;
        double acc = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double t = -tLim + i * h;
            Complex sum(0.0, 0.0);
            for (std::size_t j = 0; j < entries.size(); ++j)
                sum += rotatedCoeff[j] * std::polar(1.0, -t * entries[j].lnNorm);
            const double window = fam.Upsilon((4.0 * d * d + t * t) / (D * D));
            acc += simpson_weight(i, n) * window * std::norm(sum);
        }
        lhs += acc * h / 3.0;
    }
    lhs /= 2.0 * D * D;
    out.lhs = lhs;

    // Right side: near-diagonal pairs against the radial Fourier transform of
    // the composed window z -> Upsilon(|z|^2).
    TestFunction window;
    window.radius = std::exp(0.5);
    window.radial = true;
    window.value = [fam](Complex z) { return Complex(fam.Upsilon(std::norm(z)), 0.0); };

    const double qx = Q * X;
    std::vector<std::pair<double, std::size_t>> byAbs;  // for the pair scan
    byAbs.reserve(entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j) byAbs.emplace_back(entries[j].absXi, j);
    std::sort(byAbs.begin(), byAbs.end());

    struct Pair {
        std::size_t j1, j2;
        double r;  // |(D/pi) log(xi1/xi2)|
    };
    std::vector<Pair> pairs;
    double rMax = 0.0;
    for (std::size_t a = 0; a < byAbs.size(); ++a) {
        for (std::size_t b = a; b < byAbs.size(); ++b) {
            if (byAbs[b].first - byAbs[a].first >= qx) break;
            const Entry& e1 = entries[byAbs[a].second];
            const Entry& e2 = entries[byAbs[b].second];
            const double dx = static_cast<double>(e1.xi.re - e2.xi.re);
            const double dy = static_cast<double>(e1.xi.im - e2.xi.im);
            if (dx * dx + dy * dy >= qx * qx) continue;
            const double logAbs = 0.5 * (e1.lnNorm - e2.lnNorm);
            double dArg = e1.arg - e2.arg;
            if (dArg > M_PI) dArg -= 2.0 * M_PI;
            if (dArg < -M_PI) dArg += 2.0 * M_PI;
            const double r = (D / M_PI) * std::hypot(logAbs, dArg);
            rMax = std::max(rMax, r);
            pairs.push_back({byAbs[a].second, byAbs[b].second, r});
        }
    }

    // Radial transform table; the integrand is band-limited by the window
    // radius, so a dense grid plus cubic interpolation is ample.
    const int tablePts = 513;
    const double rTop = rMax * 1.0000001 + 1e-9;
    std::vector<double> table(static_cast<std::size_t>(tablePts));
    for (int i = 0; i < tablePts; ++i) {
        const double r = rTop * i / (tablePts - 1);
        table[static_cast<std::size_t>(i)] = fourier_hat(window, Complex(r, 0.0)).real();
    }
    auto hatAt = [&](double r) {
        const double x = r / rTop * (tablePts - 1);
        int i1 = std::clamp(static_cast<int>(std::floor(x)), 1, tablePts - 3);
        const double u = x - i1;
        const double f0 = table[static_cast<std::size_t>(i1 - 1)];
        const double f1 = table[static_cast<std::size_t>(i1)];
        const double f2 = table[static_cast<std::size_t>(i1 + 1)];
        const double f3 = table[static_cast<std::size_t>(i1 + 2)];
        // Catmull-Rom cubic through the four neighbouring samples.
        return f1 + 0.5 * u * (f2 - f0 +
                               u * (2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3 +
                                    u * (3.0 * (f1 - f2) + f3 - f0)));
    };

    Complex rhs(0.0, 0.0);
    for (const Pair& p : pairs) {
        const Complex term =
            entries[p.j1].value * std::conj(entries[p.j2].value) * hatAt(p.r);
        rhs += term;
        if (p.j1 != p.j2) rhs += std::conj(term);  // the (j2, j1) partner
        out.pairs += (p.j1 == p.j2) ? 1 : 2;
    }
    out.rhs = rhs;
    out.relErr = std::abs(Complex(out.lhs, 0.0) - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-12);
    return out;
}

CoeffMap annulus_sign_map(double X, std::uint64_t seed) {
    if (!(X > 0.0)) throw std::invalid_argument("annulus_sign_map: X must be > 0");
    const double x2 = X * X;
    const std::int64_t hi = static_cast<std::int64_t>(std::ceil(2.0 * x2)) + 1;
    CoeffMap out;
    out.normBound = hi;
    Xoshiro256StarStar rng(seed);
    // enumerate_by_norm lists canonical associates in a fixed order; one sign
    // per unit orbit keeps C(i xi) = C(xi) by construction.
    for (const GaussInt& kappa : enumerate_by_norm(hi)) {
        const double nrm = static_cast<double>(kappa.norm());
        if (!(nrm / x2 > 0.5) || !(nrm / x2 < 2.0)) continue;
        const double sign = (rng.next() & 1ULL) ? 1.0 : -1.0;
        GaussInt xi = kappa;
        for (int k = 0; k < 4; ++k) {
            out.set(xi, Complex(sign, 0.0));
            xi = GaussInt{-xi.im, xi.re};
        }
    }
    return out;
}

std::vector<EnvelopeRow> envelope_report(const std::vector<MomentResult>& results,
                                         double epsilon, double theta, double watermark) {
    if (results.empty()) throw std::invalid_argument("envelope_report: no results");
    std::vector<EnvelopeRow> rows;
    rows.reserve(results.size());
    for (const MomentResult& r : results) {
        double sumA2 = 0.0, maxA2 = 0.0;
        const std::int64_t mCap = static_cast<std::int64_t>(std::floor(r.configEcho.M));
        for (const auto& [mu, value] : r.configEcho.A.support) {
            if (mu.norm() > mCap) continue;
            double a2 = std::norm(value);
            sumA2 += a2;
            maxA2 = std::max(maxA2, a2);
        }
        EnvelopeRow row;
        row.D = r.configEcho.D;
        row.M = r.configEcho.M;
        row.E = r.E;
        MomentEnvelopes env = envelopes_for(row.D, row.M, sumA2, maxA2, epsilon, theta);
        row.boundL2 = env.boundL2;
        row.boundMax = env.boundMax;
        row.sarnak = env.sarnak;
        if (env.boundL2 > 0.0) row.ratioL2 = r.E / env.boundL2;
        if (env.boundMax > 0.0) row.ratioMax = r.E / env.boundMax;
        row.ratioSarnak = r.E / env.sarnak;
        row.flagged = row.ratioL2 > watermark || row.ratioMax > watermark ||
                      row.ratioSarnak > watermark;
        rows.push_back(row);
    }
    return rows;
}

std::string envelope_report_csv(const std::vector<EnvelopeRow>& rows) {
    std::string out =
        "# envelope-report v1: D,M,E,boundL2,boundMax,sarnak,ratioL2,ratioMax,ratioSarnak,"
        "flagged\n";
    char line[512];
    for (const EnvelopeRow& r : rows) {
        std::snprintf(line, sizeof(line), "%.6g,%.6g,%.12g,%.12g,%.12g,%.12g,%.6g,%.6g,%.6g,%d\n",
                      r.D, r.M, r.E, r.boundL2, r.boundMax, r.sarnak, r.ratioL2, r.ratioMax,
                      r.ratioSarnak, r.flagged ? 1 : 0);
        out += line;
    }
    return out;
}

}  // namespace hz
