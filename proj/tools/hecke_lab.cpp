// hecke_lab: command-line surface of the Hecke zeta / Kloosterman /
// fourth-moment laboratory. JSON for structured results, CSV for
// plot-ready tables; every subcommand echoes its resolved configuration.

#include "heckezeta/analytic.hpp"
#include "heckezeta/gauss_arith.hpp"
#include "heckezeta/hecke_series.hpp"
#include "heckezeta/kloosterman.hpp"
#include "heckezeta/moment.hpp"
#include "heckezeta/rng.hpp"
#include "heckezeta/smoothing.hpp"
#include "heckezeta/zeta_afe.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace hz;

namespace {

int g_threads = 0;  // 0 = HECKE_LAB_THREADS env or hardware count

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(outPath);
    if (!out) throw std::runtime_error("cannot open output path: " + outPath);
    out << text << '\n';
}

// The mod-4 character on rational integers (Jacobi cross-check).
int char_value_int(std::int64_t k) {
    switch (k & 3) {
        case 1: return 1;
        case 3: return -1;
        default: return 0;
    }
}

json afe_config_echo(const AfeConfig& cfg) {
    return json{{"K", cfg.K},
                {"balanced", cfg.split.balanced},
                {"x", cfg.split.x},
                {"y", cfg.split.y},
                {"b", cfg.smoothing.b},
                {"eta", cfg.smoothing.eta},
                {"quadNodes", cfg.smoothing.quadNodes},
                {"coeffCap", cfg.coeffCap}};
}

GaussInt parse_gauss(const std::vector<std::int64_t>& pair, const char* name) {
    if (pair.size() != 2)
        throw CLI::ValidationError(std::string(name) + " expects two integers re,im");
    return GaussInt{pair[0], pair[1]};
}

// ---------------------------------------------------------------------------
// verify all: the invariant suite. Deterministic in the seed; prints one
// line per check and returns the number of failures.

struct CheckLog {
    int failures = 0;
    std::string text;

    void add(const std::string& name, bool ok, double measure, double tol) {
        char line[256];
        std::snprintf(line, sizeof(line), "[%s] %-34s measured %.6e  tol %.6e\n",
                      ok ? "PASS" : "FAIL", name.c_str(), measure, tol);
        text += line;
        if (!ok) ++failures;
    }
};

void verify_jacobi(CheckLog& log) {
    const std::int64_t N = 20000;
    CoeffTable tab = coeff_table(0, N);
    double worst = 0.0;
    for (std::int64_t n = 1; n <= N; ++n) {
        std::int64_t jac = 0;
        for (std::int64_t k = 1; k * k <= n; ++k) {
            if (n % k) continue;
            jac += char_value_int(k);
            if (k * k != n) jac += char_value_int(n / k);
        }
        worst = std::max(worst, std::abs(tab.at(n) - static_cast<double>(jac)));
    }
    log.add("jacobi-divisor-identity", worst == 0.0, worst, 0.0);
}

void verify_coeff_bounds(CheckLog& log) {
    const std::int64_t N = 2000;
    CoeffTable base = coeff_table(0, N);
    double worst = 0.0;
    for (int d = -6; d <= 6; ++d) {
        CoeffTable tab = coeff_table(d, N);
        for (std::int64_t n = 1; n <= N; ++n)
            worst = std::max(worst, std::abs(tab.at(n)) - base.at(n));
    }
    log.add("coefficient-majorant", worst <= 1e-12, worst, 1e-12);
}

void verify_gamma_factor(CheckLog& log) {
    double worstMod = 0.0, worstInv = 0.0;
    for (int d : {0, 1, 3, 8}) {
        for (double t : {0.5, 7.0, 21.0}) {
            Complex s(0.5, t);
            worstMod = std::max(worstMod, std::abs(std::abs(X_d(d, s)) - 1.0));
            Complex prod = X_d(d, Complex(0.4, t)) * X_d(d, Complex(0.6, -t));
            worstInv = std::max(worstInv, std::abs(prod - 1.0));
        }
    }
    log.add("gamma-factor-unimodular", worstMod <= 1e-12, worstMod, 1e-12);
    log.add("gamma-factor-inverse-pair", worstInv <= 1e-10, worstInv, 1e-10);
}

void verify_conductor(CheckLog& log) {
    const double c0 = 4.0 * M_PI * std::exp(0.5772156649015328606);
    double e1 = std::abs(T_of(0, 0.0) * c0 * c0 - 1.0);
    double e2 = std::abs(T_of(1, 0.0) * c0 * c0 / std::exp(16.0 / 3.0) - 1.0);
    double e3 = std::abs(T_of(3, 11.0) - T_of(-3, -11.0));
    log.add("conductor-central-value", e1 <= 1e-12, e1, 1e-12);
    log.add("conductor-d1-value", e2 <= 1e-12, e2, 1e-12);
    log.add("conductor-evenness", e3 == 0.0, e3, 0.0);
}

void verify_smoothing(CheckLog& log) {
    SmoothingEngine eng;
    double worstPart = 0.0;
    for (int i = 0; i <= 200; ++i) {
        double u = std::pow(10.0, -1.0 + 2.0 * i / 200.0);
        worstPart = std::max(worstPart, std::abs(eng.rho(u) + eng.rho(1.0 / u) - 1.0));
    }
    log.add("rho-partition-of-unity", worstPart <= 1e-12, worstPart, 1e-12);
    double worstOdd = 0.0;
    for (int i = 1; i <= 25; ++i) {
        Complex z(0.02 * i, 0.4);
        worstOdd = std::max(worstOdd, std::abs(eng.mellin_R(z) + eng.mellin_R(-z)));
    }
    log.add("mellin-R-odd", worstOdd <= 1e-9, worstOdd, 1e-9);
}

void verify_afe(CheckLog& log) {
    AfeConfig cfg;
    cfg.K = 0;
    double worstOracle = 0.0;
    for (double t : {20.0, 30.0, 40.0, 50.0}) {
        Complex s(0.5, t);
        Complex oracle = zeta_d0_oracle(s);
        worstOracle = std::max(worstOracle,
                               std::abs(afe_eval(0, s, cfg).value - oracle) / std::abs(oracle));
    }
    log.add("afe-oracle-uncorrected", worstOracle <= 0.75, worstOracle, 0.75);

    // First-order corrected sums (K = 1): higher-order rho_k corrections are
    // ill-conditioned at desk-scale conductors and are tracked separately by
    // the acceptance gate.
    AfeConfig cfg1;
    cfg1.K = 1;
    double worstFe = 0.0, worstRefl = 0.0;
    for (int d : {0, 1, 3}) {
        for (double t : {10.0, 30.0}) {
            worstFe = std::max(worstFe, fe_residual(d, Complex(0.4, t), cfg1));
            Complex a = afe_eval(d, Complex(0.6, t), cfg1).value;
            Complex b = afe_eval(d, Complex(0.6, -t), cfg1).value;
            worstRefl = std::max(worstRefl, std::abs(a - std::conj(b)));
        }
    }
    log.add("functional-equation-residual", worstFe <= 0.05, worstFe, 0.05);
    log.add("afe-reflection-symmetry", worstRefl <= 1e-12, worstRefl, 1e-12);
}

void verify_kloosterman(CheckLog& log, std::uint64_t seed) {
    Xoshiro256StarStar rng = Xoshiro256StarStar(seed).split(1);
    double worstRam = 0.0, worstLeak = 0.0;
    bool bounds = true, symmetry = true;
    for (const GaussInt& gamma : enumerate_by_norm(200)) {
        if (gamma.norm() < 2) continue;
        std::int64_t span = 2 * static_cast<std::int64_t>(gamma.norm()) + 1;
        for (int k = 0; k < 6; ++k) {
            GaussInt alpha{static_cast<std::int64_t>(rng.below(span)) - span / 2,
                           static_cast<std::int64_t>(rng.below(span)) - span / 2};
            KloostermanQuery q{alpha, GaussInt{0, 0}, gamma};
            auto direct = kloosterman_direct(q);
            auto closed = ramanujan_eval(alpha, gamma);
            worstRam = std::max(worstRam, std::abs(direct.value - closed.value));
            worstLeak = std::max(worstLeak,
                                 direct.imagLeak / static_cast<double>(gamma.norm()));
            GaussInt beta{static_cast<std::int64_t>(rng.below(span)) - span / 2,
                          static_cast<std::int64_t>(rng.below(span)) - span / 2};
            KloostermanQuery q2{alpha, beta, gamma};
            auto r2 = kloosterman_direct(q2);
            auto bc = bound_check(q2, r2);
            bounds = bounds && bc.trivialOk && bc.weilOk;
            auto swapped = kloosterman_direct({beta, alpha, gamma});
            symmetry = symmetry && std::abs(r2.value - swapped.value) <= 1e-9;
        }
    }
    log.add("ramanujan-vs-direct", worstRam <= 1e-6, worstRam, 1e-6);
    log.add("kloosterman-realness", worstLeak <= 1e-9, worstLeak, 1e-9);
    log.add("kloosterman-bounds", bounds, bounds ? 0.0 : 1.0, 0.0);
    log.add("kloosterman-argument-symmetry", symmetry, symmetry ? 0.0 : 1.0, 0.0);
}

void verify_poisson(CheckLog& log) {
    double worst = 0.0;
    for (double sigma0 : {0.8, 1.0, 1.3}) {
        worst = std::max(worst, poisson_plain(Complex(0.0, 0.0), sigma0).absErr);
        worst = std::max(worst, poisson_plain(Complex(0.3, -0.4), sigma0).absErr);
        worst = std::max(worst, poisson_progression(GaussInt{1, 0}, GaussInt{2, 1}, sigma0).absErr);
        worst = std::max(worst, poisson_progression(GaussInt{2, 3}, GaussInt{4, 1}, sigma0).absErr);
        worst = std::max(worst, poisson_twist(GaussInt{1, 0}, GaussInt{3, 0}, sigma0).absErr);
        worst = std::max(worst, poisson_twist(GaussInt{1, 2}, GaussInt{4, 1}, sigma0).absErr);
    }
    double theta = 0.0;
    for (std::int64_t a = -6; a <= 6; ++a) theta += std::exp(-M_PI * a * a);
    double selfDual = std::abs(poisson_plain(Complex(0.0, 0.0), 1.0).lhs.real() - theta * theta);
    log.add("poisson-identities", worst <= 1e-9, worst, 1e-9);
    log.add("theta-self-dual-value", selfDual <= 1e-10, selfDual, 1e-10);
}

void verify_second_moment(CheckLog& log, std::uint64_t seed) {
    CoeffMap c = annulus_sign_map(8.0, seed);
    auto r8 = second_moment_identity(8.0, c, 8.0, 0.5);
    auto r16 = second_moment_identity(16.0, c, 8.0, 0.5);
    log.add("second-moment-identity-D8", r8.relErr <= 0.05, r8.relErr, 0.05);
    log.add("second-moment-decay-D16", r16.relErr < r8.relErr, r16.relErr, r8.relErr);
}

void verify_moment(CheckLog& log) {
    MomentExperiment e;
    e.M = 1.0;
    e.threads = g_threads;
    e.D = 4.0;
    auto r4 = run_moment(e);
    e.D = 5.0;
    auto r5 = run_moment(e);
    log.add("moment-monotone-in-D", r5.E >= r4.E, r5.E - r4.E, 0.0);
    e.D = 4.0;
    e.threads = 1;
    double e1 = run_moment(e).E;
    e.threads = 2;
    double e2 = run_moment(e).E;
    log.add("moment-thread-invariance", e1 == e2, std::abs(e1 - e2), 0.0);
    bool ratios = r4.ratioL2 > 0 && r4.ratioMax > 0 && r4.ratioSarnak > 0 &&
                  r4.ratioL2 < 1e4 && r4.ratioMax < 1e4 && r4.ratioSarnak < 1e4;
    log.add("moment-envelope-watermark", ratios, r4.ratioSarnak, 1e4);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke zeta / Kloosterman / fourth-moment laboratory"};
    app.require_subcommand(1);

    std::string outPath;
    std::string format = "json";
    std::uint64_t seed = 7;
    app.add_option("--out", outPath, "write the artifact to this path (default stdout)");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", g_threads, "worker count (0 = HECKE_LAB_THREADS or hardware)");
    app.add_option("--seed", seed, "seed for randomized corpora");

    // ---- zeta eval / zeta fe-check ----
    auto* zeta = app.add_subcommand("zeta", "Hecke zeta evaluation");
    int zd = 0, zK = 4;
    double zt = 30.0, zsigma = 0.5, zb = SmoothingConfig{}.b, zx = 0.0, zy = 0.0;
    auto addZetaOpts = [&](CLI::App* cmd) {
        cmd->add_option("--d", zd, "character index d");
        cmd->add_option("--t", zt, "imaginary part of s");
        cmd->add_option("--sigma", zsigma, "real part of s");
        cmd->add_option("--K", zK, "Taylor-correction order");
        cmd->add_option("--b", zb, "smoothing cutoff base");
        cmd->add_option("--x", zx, "explicit main-sum length (with --y)");
        cmd->add_option("--y", zy, "explicit dual-sum length (with --x)");
    };
    auto* zEval = zeta->add_subcommand("eval", "evaluate zeta(s, lambda^d) via the AFE");
    addZetaOpts(zEval);
    auto* zFe = zeta->add_subcommand("fe-check", "functional-equation residual");
    addZetaOpts(zFe);

    // ---- coeff table ----
    auto* coeff = app.add_subcommand("coeff", "Hecke coefficients");
    int cd = 0;
    std::int64_t cN = 1000;
    auto* cTable = coeff->add_subcommand("table", "table of delta(Lambda^d, n)");
    cTable->add_option("--d", cd, "character index d");
    cTable->add_option("--N", cN, "table length");

    // ---- kloosterman ----
    auto* kl = app.add_subcommand("kloosterman", "Kloosterman / Ramanujan sums");
    std::vector<std::int64_t> kAlpha{1, 0}, kBeta{0, 0}, kGamma{3, 0};
    std::string kMethod = "direct";
    kl->add_option("--alpha", kAlpha, "alpha as re,im")->delimiter(',')->expected(1, 2);
    kl->add_option("--beta", kBeta, "beta as re,im")->delimiter(',')->expected(1, 2);
    kl->add_option("--gamma", kGamma, "gamma as re,im")->delimiter(',')->expected(1, 2);
    kl->add_option("--method", kMethod, "direct, ramanujan, or both")
        ->check(CLI::IsMember({"direct", "ramanujan", "both"}));

    // ---- poisson verify ----
    auto* poisson = app.add_subcommand("poisson", "summation identities");
    auto* pVerify = poisson->add_subcommand("verify", "check the identity matrix");

    // ---- smooth table ----
    auto* smooth = app.add_subcommand("smooth", "smoothing kernels");
    auto* sTable = smooth->add_subcommand("table", "rho and its scaled derivatives");
    double sb = SmoothingConfig{}.b;
    int sn = 64, sKmax = 4;
    sTable->add_option("--b", sb, "cutoff base");
    sTable->add_option("--n", sn, "sample count");
    sTable->add_option("--kmax", sKmax, "highest derivative order");

    // ---- moment run ----
    auto* moment = app.add_subcommand("moment", "weighted fourth moment");
    auto* mRun = moment->add_subcommand("run", "compute E(D;M,A)");
    double mD = 4.0, mM = 1.0, mStep = 0.25, mTheta = 2.0 / 9.0, mEps = 0.1;
    int mK = 0;
    std::string mConfigPath, mCoeffPath;
    mRun->add_option("--D", mD, "summation/integration range");
    mRun->add_option("--M", mM, "Dirichlet-polynomial length");
    mRun->add_option("--step", mStep, "requested Simpson step");
    mRun->add_option("--K", mK, "AFE correction order");
    mRun->add_option("--theta", mTheta, "spectral-gap exponent");
    mRun->add_option("--epsilon", mEps, "envelope epsilon");
    mRun->add_option("--config", mConfigPath, "JSON experiment spec (overrides flags)");
    mRun->add_option("--coeffs", mCoeffPath, "JSON CoeffMap for A (default unit indicator)");

    // ---- lemma17 check ----
    auto* lemma = app.add_subcommand("lemma17", "smoothed second-moment identity");
    auto* lCheck = lemma->add_subcommand("check", "two-sided identity check");
    double lD = 8.0, lX = 8.0, lQ = 0.5;
    lCheck->add_option("--D", lD, "window scale D");
    lCheck->add_option("--X", lX, "annulus scale X");
    lCheck->add_option("--Q", lQ, "near-diagonal width, in (0, 1/2]");

    // ---- verify all ----
    auto* verify = app.add_subcommand("verify", "invariant suites");
    auto* vAll = verify->add_subcommand("all", "run the full invariant suite");

    // Let the global options (--seed, --format, --out, --threads) appear
    // after a subcommand name, e.g. `hecke_lab verify all --seed 7`.
    std::function<void(CLI::App*)> enableFallthrough = [&](CLI::App* node) {
        for (CLI::App* sub : node->get_subcommands({})) {
            sub->fallthrough();
            enableFallthrough(sub);
        }
    };
    enableFallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    if (g_threads == 0) {
        if (const char* env = std::getenv("HECKE_LAB_THREADS")) g_threads = std::atoi(env);
    }

    try {
        if (zEval->parsed() || zFe->parsed()) {
            AfeConfig cfg;
            cfg.K = zK;
            cfg.smoothing.b = zb;
            if (zx > 0.0 && zy > 0.0) cfg.split = AfeSplit{false, zx, zy};
            Complex s(zsigma, zt);
            json j;
            j["config"] = afe_config_echo(cfg);
            j["d"] = zd;
            j["s_re"] = zsigma;
            j["s_im"] = zt;
            j["K"] = zK;
            if (zEval->parsed()) {
                ZetaValue v = afe_eval(zd, s, cfg);
                j["value_re"] = v.value.real();
                j["value_im"] = v.value.imag();
                j["err_estimate"] = v.errEstimate;
                j["T"] = v.T;
                j["x"] = v.x;
                j["y"] = v.y;
                j["terms_main"] = v.termsMain;
                j["terms_dual"] = v.termsDual;
                if (zd == 0 && std::abs(zt) <= 60.0) {
                    Complex oracle = zeta_d0_oracle(s);
                    j["oracle_re"] = oracle.real();
                    j["oracle_im"] = oracle.imag();
                    j["oracle_rel_err"] = std::abs(v.value - oracle) / std::abs(oracle);
                }
            } else {
                j["fe_residual"] = fe_residual(zd, s, cfg);
            }
            emit(j.dump(2), outPath);
            return 0;
        }

        if (cTable->parsed()) {
            CoeffTable tab = coeff_table(cd, cN);
            if (format == "csv") {
                std::string text = "# coeff-table v1: n,delta\n";
                char line[64];
                for (std::int64_t n = 1; n <= cN; ++n) {
                    std::snprintf(line, sizeof(line), "%lld,%.17g\n",
                                  static_cast<long long>(n), tab.at(n));
                    text += line;
                }
                emit(text, outPath);
            } else {
                json j;
                j["config"] = {{"d", cd}, {"N", cN}};
                j["values"] = tab.values;
                emit(j.dump(2), outPath);
            }
            return 0;
        }

        if (kl->parsed()) {
            KloostermanQuery q{parse_gauss(kAlpha, "--alpha"), parse_gauss(kBeta, "--beta"),
                               parse_gauss(kGamma, "--gamma")};
            json j;
            j["config"] = {{"alpha", {kAlpha[0], kAlpha.size() > 1 ? kAlpha[1] : 0}},
                           {"beta", {kBeta[0], kBeta.size() > 1 ? kBeta[1] : 0}},
                           {"gamma", {kGamma[0], kGamma.size() > 1 ? kGamma[1] : 0}},
                           {"method", kMethod}};
            KloostermanResult direct, closed;
            if (kMethod != "ramanujan") {
                direct = kloosterman_direct(q);
                auto bc = bound_check(q, direct);
                j["direct"] = {{"value", direct.value},
                               {"imag_leak", direct.imagLeak},
                               {"terms", direct.terms},
                               {"trivial_ok", bc.trivialOk},
                               {"weil_ok", bc.weilOk},
                               {"weil_ratio", bc.ratioWeil}};
            }
            if (kMethod != "direct") {
                closed = ramanujan_eval(q.alpha, q.gamma);
                j["ramanujan"] = {{"value", closed.value}};
            }
            if (kMethod == "both") j["agree"] = std::abs(direct.value - closed.value) <= 1e-6;
            emit(j.dump(2), outPath);
            return 0;
        }

        if (pVerify->parsed()) {
            CheckLog log;
            verify_poisson(log);
            std::fputs(log.text.c_str(), stdout);
            return log.failures == 0 ? 0 : 1;
        }

        if (sTable->parsed()) {
            SmoothingConfig cfg;
            cfg.b = sb;
            SmoothingEngine eng(cfg);
            std::string text = "# smooth-table v1: u,rho";
            for (int k = 1; k <= sKmax; ++k) text += ",rho_" + std::to_string(k);
            text += "\n";
            char buf[512];
            for (int i = 0; i < sn; ++i) {
                double u = std::pow(sb * sb, -1.0 + 2.0 * (i + 0.5) / sn);  // log grid in [b^-2, b^2]
                int len = std::snprintf(buf, sizeof(buf), "%.12g,%.12g", u, eng.rho(u));
                for (int k = 1; k <= sKmax; ++k)
                    len += std::snprintf(buf + len, sizeof(buf) - len, ",%.12g", eng.rho_k(k, u));
                text += buf;
                text += '\n';
            }
            emit(text, outPath);
            return 0;
        }

        if (mRun->parsed()) {
            MomentExperiment e;
            e.D = mD;
            e.M = mM;
            e.quad.step = mStep;
            e.afe.K = mK;
            e.theta = mTheta;
            e.epsilon = mEps;
            e.threads = g_threads;
            if (!mCoeffPath.empty()) {
                std::ifstream in(mCoeffPath);
                if (!in) throw std::runtime_error("cannot open --coeffs file");
                std::string text((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
                e.A = CoeffMap::from_json(text);
            }
            if (!mConfigPath.empty()) {
                std::ifstream in(mConfigPath);
                if (!in) throw std::runtime_error("cannot open --config file");
                json spec = json::parse(in);
                if (spec.contains("D")) e.D = spec["D"].get<double>();
                if (spec.contains("M")) e.M = spec["M"].get<double>();
                if (spec.contains("step")) e.quad.step = spec["step"].get<double>();
                if (spec.contains("K")) e.afe.K = spec["K"].get<int>();
                if (spec.contains("theta")) e.theta = spec["theta"].get<double>();
                if (spec.contains("epsilon")) e.epsilon = spec["epsilon"].get<double>();
                if (spec.contains("A")) e.A = CoeffMap::from_json(spec["A"].dump());
            }
            MomentResult r = run_moment(e);
            if (format == "csv") {
                emit(envelope_report_csv(envelope_report({r}, e.epsilon, e.theta)), outPath);
            } else {
                emit(r.to_json(), outPath);
            }
            return 0;
        }

        if (lCheck->parsed()) {
            CoeffMap c = annulus_sign_map(lX, seed);
            SecondMomentReport r = second_moment_identity(lD, c, lX, lQ);
            json j;
            j["config"] = {{"D", lD}, {"X", lX}, {"Q", lQ}, {"seed", seed}};
            j["lhs"] = r.lhs;
            j["rhs_re"] = r.rhs.real();
            j["rhs_im"] = r.rhs.imag();
            j["rel_err"] = r.relErr;
            j["pairs"] = r.pairs;
            j["support"] = c.support.size();
            emit(j.dump(2), outPath);
            return r.relErr <= 0.05 ? 0 : 1;
        }

        if (vAll->parsed()) {
            CheckLog log;
            char head[128];
            std::snprintf(head, sizeof(head), "verify all (seed %llu)\n",
                          static_cast<unsigned long long>(seed));
            log.text += head;
            verify_jacobi(log);
            verify_coeff_bounds(log);
            verify_gamma_factor(log);
            verify_conductor(log);
            verify_smoothing(log);
            verify_afe(log);
            verify_kloosterman(log, seed);
            verify_poisson(log);
            verify_second_moment(log, seed);
            verify_moment(log);
            char tail[64];
            std::snprintf(tail, sizeof(tail), "failures: %d\n", log.failures);
            log.text += tail;
            emit(log.text, outPath);
            return log.failures == 0 ? 0 : 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }

    std::cerr << "error: no subcommand executed\n";
    return 2;
}
