"""Hecke zeta functions over Z[i]: AFE evaluation, Gaussian-integer
Kloosterman sums, and weighted fourth-moment experiments."""

from ._heckezeta import (
    MomentResult,
    ZetaValue,
    afe_eval,
    annulus_sign_map,
    coeff_table,
    delta_coeff,
    fe_residual,
    gamma_factor,
    kloosterman,
    lattice_count,
    poisson_plain,
    ramanujan,
    run_moment,
    second_moment_identity,
    t_of,
    zeta_d0_oracle,
)

__all__ = [
    "MomentResult",
    "ZetaValue",
    "afe_eval",
    "annulus_sign_map",
    "coeff_table",
    "delta_coeff",
    "fe_residual",
    "gamma_factor",
    "kloosterman",
    "lattice_count",
    "poisson_plain",
    "ramanujan",
    "run_moment",
    "second_moment_identity",
    "t_of",
    "zeta_d0_oracle",
]
