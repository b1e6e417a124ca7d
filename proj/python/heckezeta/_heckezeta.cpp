// Python bindings: thin, conversion-only layer over the C++ core.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heckezeta/gauss_arith.hpp"
#include "heckezeta/hecke_series.hpp"
#include "heckezeta/kloosterman.hpp"
#include "heckezeta/moment.hpp"
#include "heckezeta/zeta_afe.hpp"

#include <utility>
#include <vector>

namespace py = pybind11;
using namespace hz;

namespace {

GaussInt to_gauss(std::pair<long long, long long> p) { return GaussInt{p.first, p.second}; }

CoeffMap map_from_items(
    const std::vector<std::pair<std::pair<long long, long long>, Complex>>& items,
    std::int64_t norm_bound) {
    CoeffMap m;
    m.normBound = norm_bound;
    for (const auto& [key, value] : items) m.set(to_gauss(key), value);
    return m;
}

AfeConfig make_cfg(int K, double b) {
    AfeConfig cfg;
    cfg.K = K;
    cfg.smoothing.b = b;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_heckezeta, m) {
    m.doc() = "Hecke zeta functions over Z[i]: AFE evaluation, Kloosterman "
              "sums, and weighted fourth-moment experiments.";

    m.def("delta_coeff", &delta_coeff, py::arg("d"), py::arg("n"),
          "delta(Lambda^d, n): quarter sum of the character over norm-n points.");
    m.def(
        "coeff_table",
        [](int d, std::int64_t N) {
            return coeff_table(d, N).values;
        },
        py::arg("d"), py::arg("N"), "List of delta(Lambda^d, n) for n = 1..N.");
    m.def(
        "lattice_count", &lattice_count, py::arg("n"),
        "Number of Gaussian integers of norm exactly n.");

    m.def("t_of", &T_of, py::arg("d"), py::arg("t"), "Analytic conductor T(d, t).");
    m.def(
        "gamma_factor", [](int d, Complex s) { return X_d(d, s); }, py::arg("d"),
        py::arg("s"), "Gamma factor X_d(s).");

    py::class_<ZetaValue>(m, "ZetaValue")
        .def_readonly("value", &ZetaValue::value)
        .def_readonly("err_estimate", &ZetaValue::errEstimate)
        .def_readonly("T", &ZetaValue::T)
        .def_readonly("x", &ZetaValue::x)
        .def_readonly("y", &ZetaValue::y)
        .def_readonly("terms_main", &ZetaValue::termsMain)
        .def_readonly("terms_dual", &ZetaValue::termsDual)
        .def("__repr__", [](const ZetaValue& z) {
            return "ZetaValue(value=(" + std::to_string(z.value.real()) + "+" +
                   std::to_string(z.value.imag()) + "j), err_estimate=" +
                   std::to_string(z.errEstimate) + ")";
        });

    m.def(
        "afe_eval",
        [](int d, Complex s, int K, double b) { return afe_eval(d, s, make_cfg(K, b)); },
        py::arg("d"), py::arg("s"), py::arg("K") = 4,
        py::arg("b") = SmoothingConfig{}.b,
        "zeta(s, lambda^d) via the approximate functional equation.");
    m.def("zeta_d0_oracle", &zeta_d0_oracle, py::arg("s"),
          "Independent zeta(s) L(s, chi_4) route for d = 0.");
    m.def(
        "fe_residual",
        [](int d, Complex s, int K) {
            AfeConfig cfg;
            cfg.K = K;
            return fe_residual(d, s, cfg);
        },
        py::arg("d"), py::arg("s"), py::arg("K") = 1,
        "Normalized defect of afe(d,s) against X_d(s) afe(-d,1-s).");

    m.def(
        "kloosterman",
        [](std::pair<long long, long long> a, std::pair<long long, long long> b,
           std::pair<long long, long long> g) {
            KloostermanResult r = kloosterman_direct({to_gauss(a), to_gauss(b), to_gauss(g)});
            return py::make_tuple(r.value, r.imagLeak, r.terms);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
        "S(alpha, beta; gamma) by the direct sum; returns (value, imag_leak, terms).");
    m.def(
        "ramanujan",
        [](std::pair<long long, long long> a, std::pair<long long, long long> g) {
            return ramanujan_eval(to_gauss(a), to_gauss(g)).value;
        },
        py::arg("alpha"), py::arg("gamma"),
        "Closed form for S(alpha, 0; gamma) by Moebius over ideal divisors.");
    m.def(
        "poisson_plain",
        [](Complex tau, double sigma0) {
            PoissonReport r = poisson_plain(tau, sigma0);
            return py::make_tuple(r.lhs, r.rhs, r.absErr);
        },
        py::arg("tau") = Complex(0.0, 0.0), py::arg("sigma0") = 1.0,
        "Lattice summation identity check; returns (lhs, rhs, abs_err).");

    py::class_<MomentResult>(m, "MomentResult")
        .def_readonly("E", &MomentResult::E)
        .def_readonly("err_bar", &MomentResult::errBar)
        .def_readonly("per_d", &MomentResult::perD)
        .def_readonly("ratio_l2", &MomentResult::ratioL2)
        .def_readonly("ratio_max", &MomentResult::ratioMax)
        .def_readonly("ratio_sarnak", &MomentResult::ratioSarnak)
        .def_readonly("step_used", &MomentResult::stepUsed)
        .def("to_json", &MomentResult::to_json);

    m.def(
        "run_moment",
        [](double D, double M, double step, int K, int threads) {
            MomentExperiment e;
            e.D = D;
            e.M = M;
            e.quad.step = step;
            e.afe.K = K;
            e.threads = threads;
            return run_moment(e);
        },
        py::arg("D"), py::arg("M") = 1.0, py::arg("step") = 0.25, py::arg("K") = 0,
        py::arg("threads") = 0,
        "Weighted fourth moment E(D; M, U) with the unit-indicator weights.");

    m.def(
        "second_moment_identity",
        [](double D,
           const std::vector<std::pair<std::pair<long long, long long>, Complex>>& coeffs,
           double X, double Q) {
            CoeffMap c = map_from_items(coeffs, static_cast<std::int64_t>(2.0 * X * X) + 1);
            SecondMomentReport r = second_moment_identity(D, c, X, Q);
            return py::make_tuple(r.lhs, r.rhs, r.relErr, r.pairs);
        },
        py::arg("D"), py::arg("coeffs"), py::arg("X"), py::arg("Q") = 0.5,
        "Two-sided smoothed second-moment identity; returns "
        "(lhs, rhs, rel_err, pairs).");
    m.def(
        "annulus_sign_map",
        [](double X, std::uint64_t seed) {
            std::vector<std::pair<std::pair<long long, long long>, Complex>> out;
            for (const auto& [xi, v] : annulus_sign_map(X, seed).support)
                out.emplace_back(std::make_pair(static_cast<long long>(xi.re),
                                                static_cast<long long>(xi.im)),
                                 v);
            return out;
        },
        py::arg("X"), py::arg("seed") = 7,
        "Seeded unit-orbit-symmetric +-1 coefficients on the annulus "
        "norm/X^2 in (1/2, 2).");
}
