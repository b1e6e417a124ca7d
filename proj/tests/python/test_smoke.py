import cmath
import math

import pytest

import heckezeta as hz


def test_coefficients():
    assert hz.delta_coeff(0, 5) == pytest.approx(2.0)
    assert hz.delta_coeff(1, 5) == pytest.approx(-0.56)
    assert hz.coeff_table(0, 10) == pytest.approx([1, 1, 0, 1, 2, 0, 0, 1, 1, 2])
    assert hz.lattice_count(25) == 4 * 3


def test_gamma_factor_and_conductor():
    assert abs(abs(hz.gamma_factor(3, 0.5 + 12j)) - 1.0) < 1e-10
    c0 = 4 * math.pi * math.exp(0.5772156649015329)
    assert hz.t_of(0, 0.0) == pytest.approx(c0**-2, rel=1e-10)
    assert hz.t_of(2, 5.0) == hz.t_of(-2, -5.0)


def test_afe_against_oracle():
    s = 0.5 + 30j
    truth = hz.zeta_d0_oracle(s)
    got = hz.afe_eval(0, s, K=0)
    assert abs(got.value - truth) / (1 + abs(truth)) < 0.75
    assert got.err_estimate > 0
    assert got.terms_main >= 1


def test_fe_residual_first_order():
    assert hz.fe_residual(2, 0.4 + 20j, K=1) < 0.05


def test_kloosterman():
    value, leak, terms = hz.kloosterman((1, 0), (1, 0), (1, 1))
    assert value == pytest.approx(1.0)
    assert terms == 1
    assert leak < 1e-12
    assert hz.ramanujan((1, 0), (3, 0)) == pytest.approx(-1.0)
    direct, _, _ = hz.kloosterman((4, 1), (0, 0), (5, 2))
    assert direct == pytest.approx(hz.ramanujan((4, 1), (5, 2)), abs=1e-8)


def test_poisson_plain():
    lhs, rhs, err = hz.poisson_plain()
    assert err < 1e-9
    assert lhs.real == pytest.approx(1.180340599, rel=1e-8)


def test_moment_run():
    r = hz.run_moment(4.0, threads=2)
    assert r.E > 0
    assert r.ratio_sarnak == pytest.approx(
        r.E / (16.0 * math.log(6.0) ** 4), rel=1e-12
    )
    assert len(r.per_d) == 9
    assert r.to_json().startswith("{")


def test_second_moment_identity():
    coeffs = hz.annulus_sign_map(8.0, seed=7)
    assert coeffs
    lhs, rhs, rel_err, pairs = hz.second_moment_identity(8.0, coeffs, 8.0, 0.5)
    assert lhs > 0
    assert pairs > 0
    assert rel_err <= 0.05
