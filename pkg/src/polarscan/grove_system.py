"""Linear system whose kernel parameterizes groves for sampled data.

For a configuration of s points Q_i in P^n and an s x r scalar matrix A
with rows p_i in P^(r-1), the unknowns are the coefficients of r
operators u_1..u_r of degree d. Two row blocks constrain them:

  membership    u_j(Q_i) = 0                        (r*s rows)
  singularity   sum_j A[i,j] * du_j/dz_k (Q_i) = 0  (s*(n+1) rows)

so a kernel vector is an r-tuple of degree-d forms all vanishing on the
point set, with every row-combination singular at its point: exactly a
grove. For general data the nullity equals codim(Sigma, G(r, S_d)), and
by semicontinuity the nullity at *any* sample (and mod any prime) is an
upper-bound certificate: if it hits max(0, N2 - N1), Sigma is not
deficient.

The domain-restricted variant solves the membership block first and
represents the singularity conditions through apolar contraction against
Q_i^(d-1) * x_k; it is an independent cross-check route kept deliberately
free of the partial-derivative evaluation code used above.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from math import comb

import numpy as np

from .modp import MatrixFp, PrimeModulus, nullspace, rank, sample_prime, subseed
from .poly import (
    Form,
    LinearForm,
    apolar_apply,
    monomial_basis,
    monomial_values,
    mul_by_var,
    partial_monomial_values,
    power,
)

COORD_BOUND = 1 << 16


class ParameterError(ValueError):
    """Invalid (n, d, r, s) tuple."""


def validate_tuple(n: int, d: int, r: int, s: int) -> None:
    if n < 1 or d < 1:
        raise ParameterError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    top = comb(n + d, d)
    if not 1 <= r <= s <= top:
        raise ParameterError(
            f"need 1 <= r <= s <= C(n+d,d) = {top}, got r={r}, s={s}"
        )


@dataclass(eq=False)
class Configuration:
    """Sampled data: s integer points of P^n and an s x r integer matrix."""

    n: int
    d: int
    r: int
    s: int
    qpoints: np.ndarray  # (s, n+1) integers in [0, 2^16)
    amatrix: np.ndarray  # (s, r) integers in [0, 2^16)
    seed: int
    prime: PrimeModulus

    def __post_init__(self):
        validate_tuple(self.n, self.d, self.r, self.s)
        self.qpoints = np.asarray(self.qpoints, dtype=np.int64)
        self.amatrix = np.asarray(self.amatrix, dtype=np.int64)
        if self.qpoints.shape != (self.s, self.n + 1):
            raise ValueError("qpoints shape mismatch")
        if self.amatrix.shape != (self.s, self.r):
            raise ValueError("amatrix shape mismatch")
        if not self.qpoints.any(axis=1).all():
            raise ValueError("zero point in configuration")
        if not self.amatrix.any(axis=1).all():
            raise ValueError("zero row in coefficient matrix")

    def with_prime(self, prime: PrimeModulus) -> "Configuration":
        return replace(self, prime=prime)


def _sample_rows(rng: random.Random, count: int, width: int) -> np.ndarray:
    rows = []
    while len(rows) < count:
        row = [rng.randrange(COORD_BOUND) for _ in range(width)]
        if any(row):
            rows.append(row)
    return np.array(rows, dtype=np.int64)


def sample_configuration(
    n: int,
    d: int,
    r: int,
    s: int,
    seed: int,
    prime: PrimeModulus | None = None,
    salt: int = 0,
) -> Configuration:
    """Draw a configuration from a seeded RNG; deterministic given (seed, salt).

    Coordinates are uniform in [0, 2^16), so every configuration is a
    genuine integer point and mod-p results bound the rational ones. Zero
    points and zero rows are resampled. The prime defaults to one derived
    from the same seed.
    """
    validate_tuple(n, d, r, s)
    rng = random.Random(subseed(seed, "config", salt))
    qpoints = _sample_rows(rng, s, n + 1)
    amatrix = _sample_rows(rng, s, r)
    if prime is None:
        prime = sample_prime(random.Random(subseed(seed, "prime", salt)))
    return Configuration(n, d, r, s, qpoints, amatrix, seed, prime)


def veronese_matrix(cfg: Configuration) -> MatrixFp:
    """The s x C(n+d,d) matrix whose rows are the coefficients of Q_i^d."""
    p = cfg.prime.p
    rows = [power(LinearForm(tuple(q)), cfg.d, p).coeffs for q in cfg.qpoints]
    return MatrixFp(np.array(rows, dtype=np.int64), p)


def powers_independent(cfg: Configuration) -> bool:
    """Whether the Q_i^d are linearly independent mod p (degenerate samples fail)."""
    return rank(veronese_matrix(cfg)) == cfg.s


@dataclass(eq=False)
class GroveSystem:
    """Assembled constraint matrix: (r*s + s*(n+1)) rows, r*C(n+d,d) columns."""

    config: Configuration
    matrix: MatrixFp


def build_grove_system(cfg: Configuration) -> GroveSystem:
    n, d, r, s = cfg.n, cfg.d, cfg.r, cfg.s
    p = cfg.prime.p
    basis = monomial_basis(n, d)
    size = basis.size
    amat = cfg.amatrix % p

    evals = np.array(
        [monomial_values(q, basis, p) for q in cfg.qpoints], dtype=np.int64
    )  # (s, C): row i = all monomials at Q_i
    m = np.zeros((r * s + s * (n + 1), r * size), dtype=np.int64)

    for j in range(r):
        m[j * s:(j + 1) * s, j * size:(j + 1) * size] = evals

    row = r * s
    for i in range(s):
        for k in range(n + 1):
            dvals = partial_monomial_values(cfg.qpoints[i], k, basis, p)
            for j in range(r):
                m[row, j * size:(j + 1) * size] = amat[i, j] * dvals % p
            row += 1
    return GroveSystem(cfg, MatrixFp(m, p))


def grove_nullity(cfg: Configuration) -> int:
    """Kernel dimension of the grove system; codim Sigma for generic data."""
    system = build_grove_system(cfg)
    return system.matrix.cols - rank(system.matrix)


def grove_kernel(cfg: Configuration) -> np.ndarray:
    """Deterministic kernel basis, shape (nullity, r*C(n+d,d))."""
    _, basis = nullspace(build_grove_system(cfg).matrix)
    return basis


def restricted_grove_nullity(cfg: Configuration) -> int:
    """Nullity via the domain-restricted formulation (small cross-check cases).

    Solves the membership equations first: a kernel basis of the point
    evaluation matrix spans the degree-d forms through all Q_i. The class
    of an operator u modulo the forms doubly vanishing at Q_i is then
    represented by the n+1 contractions u o (Q_i^(d-1) x_k), and the
    returned value is the nullity of the resulting
    s*(n+1) x r*(C(n+d,d) - s) matrix.
    """
    n, d, r, s = cfg.n, cfg.d, cfg.r, cfg.s
    p = cfg.prime.p
    basis = monomial_basis(n, d)
    amat = cfg.amatrix % p

    evals = MatrixFp(
        np.array([monomial_values(q, basis, p) for q in cfg.qpoints], dtype=np.int64), p
    )
    nkernel, ideal_basis = nullspace(evals)

    # contraction[i][(k, l)] = w_l o (Q_i^(d-1) x_k)
    contr = np.zeros((s, n + 1, nkernel), dtype=np.int64)
    for i in range(s):
        q = LinearForm(tuple(cfg.qpoints[i]))
        qpow = power(q, d - 1, p) if d > 1 else None
        for k in range(n + 1):
            qk = mul_by_var(qpow, k, p) if qpow is not None else _var_form(n, k)
            for l in range(nkernel):
                w = Form(basis, ideal_basis[l], "R")
                contr[i, k, l] = apolar_apply(w, qk, p).coeffs[0]

    m = np.zeros((s * (n + 1), r * nkernel), dtype=np.int64)
    row = 0
    for i in range(s):
        for k in range(n + 1):
            for j in range(r):
                m[row, j * nkernel:(j + 1) * nkernel] = amat[i, j] * contr[i, k] % p
            row += 1
    mat = MatrixFp(m, p)
    return mat.cols - rank(mat)


def _var_form(n: int, k: int) -> Form:
    basis = monomial_basis(n, 1)
    coeffs = np.zeros(basis.size, dtype=np.int64)
    coeffs[basis.rank(tuple(1 if j == k else 0 for j in range(n + 1)))] = 1
    return Form(basis, coeffs, "S")
