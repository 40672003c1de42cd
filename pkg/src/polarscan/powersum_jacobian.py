"""Jacobian of the power-sum parameterization, for dim Sigma by rank.

The map sends (Q_1..Q_s, A) to the r-tuple of forms [Q_1^d..Q_s^d] A.
Its image is the affine cone over Sigma, so at a general point
dim Sigma = rank(Jacobian) - r^2. The columns come in closed form from
the first-order expansion: perturbing Q_i in direction x_j contributes
d * A[i,k] * Q_i^(d-1) x_j to output slot k, and perturbing A[i,k]
contributes Q_i^d to slot k. This route shares no assembly code with the
grove system and serves as an independent cross-check of every dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grove_system import Configuration
from .modp import MatrixFp, rank
from .poly import LinearForm, monomial_basis, power, raise_shift


class DegenerateConfigurationError(ArithmeticError):
    """The sampled point failed a sanity bound; resample instead of trusting it."""


@dataclass(eq=False)
class PowerSumJacobian:
    """Assembled Jacobian: r*C(n+d,d) rows, s*(n+1) + s*r columns."""

    config: Configuration
    matrix: MatrixFp


def build_powersum_jacobian(cfg: Configuration) -> PowerSumJacobian:
    n, d, r, s = cfg.n, cfg.d, cfg.r, cfg.s
    p = cfg.prime.p
    size = monomial_basis(n, d).size
    amat = cfg.amatrix % p

    m = np.zeros((r * size, s * (n + 1) + s * r), dtype=np.int64)
    for i in range(s):
        q = LinearForm(tuple(cfg.qpoints[i]))
        pow_d = power(q, d, p).coeffs
        if d > 1:
            pow_dm1 = power(q, d - 1, p).coeffs
        for j in range(n + 1):
            # coefficients of Q_i^(d-1) x_j inside the degree-d basis
            col = np.zeros(size, dtype=np.int64)
            if d > 1:
                col[raise_shift(n, d - 1, j)] = pow_dm1
            else:
                col[raise_shift(n, 0, j)] = 1
            col = d % p * col % p
            jcol = i * (n + 1) + j
            for k in range(r):
                m[k * size:(k + 1) * size, jcol] = amat[i, k] * col % p
        for k in range(r):
            m[k * size:(k + 1) * size, s * (n + 1) + i * r + k] = pow_d
    return PowerSumJacobian(cfg, MatrixFp(m, p))


def sigma_dim_from_jacobian(cfg: Configuration) -> int:
    """dim Sigma at the sampled point: Jacobian rank minus r^2.

    Mod-p ranks only ever undershoot the true rank, so a value below the
    r^2 floor means the sample was degenerate; raise rather than return
    a negative dimension.
    """
    jac = build_powersum_jacobian(cfg)
    rk = rank(jac.matrix)
    r2 = cfg.r * cfg.r
    if rk < r2:
        raise DegenerateConfigurationError(
            f"jacobian rank {rk} below r^2 = {r2}; configuration is degenerate"
        )
    return rk - r2
