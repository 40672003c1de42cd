"""Closed-form constructions: the balanced binary matrix and the Segre grove.

For binary forms (n = 1) a block-structured 0/1 coefficient matrix makes
the grove system decouple into r independent divisibility conditions on
P^1, so its nullity has the exact closed form

    (r - beta) * max(0, d - alpha - s + 1) + beta * max(0, d - alpha - s)

with s = r*alpha + beta, 0 <= beta < r. That value always equals
max(0, N2 - N1), which certifies that no binary case is deficient.

For (n, d, r, s) = (5, 2, 3, 8), points on the Segre threefold
P^1 x P^2 -> P^5 carry an explicit grove: the net spanned by the three
2x2 minors of [[z0, z1, z2], [z3, z4, z5]]. Each member of the net is a
rank-4 quadric singular along a line of the threefold, which is what
makes this tuple deficient.
"""

from __future__ import annotations

import random

import numpy as np
from dataclasses import dataclass

from .engine import expected_bounds
from .grove_system import (
    Configuration,
    ParameterError,
    grove_nullity,
    powers_independent,
    sample_configuration,
)
from .modp import MatrixFp, nullspace, rank, sample_prime, subseed
from .poly import Form, evaluate, monomial_basis, partial

# 2x2 minors of [[z0, z1, z2], [z3, z4, z5]]: each as {exponent pair: sign}
_MINORS = (
    {(1, 5): 1, (2, 4): -1},
    {(2, 3): 1, (0, 5): -1},
    {(0, 4): 1, (1, 3): -1},
)


@dataclass(eq=False)
class BalancedBlockMatrix:
    """s x r 0/1 matrix assigning each of the s points to one output slot.

    The transpose consists of r - beta width-alpha blocks followed by
    beta width-(alpha+1) blocks, block i carrying all 1's in its i-th row.
    """

    r: int
    s: int
    alpha: int
    beta: int
    entries: np.ndarray


def balanced_matrix(r: int, s: int) -> BalancedBlockMatrix:
    if not 1 <= r <= s:
        raise ParameterError(f"need 1 <= r <= s, got r={r}, s={s}")
    alpha, beta = divmod(s, r)
    entries = np.zeros((s, r), dtype=np.int64)
    col = 0
    for block in range(r):
        width = alpha if block < r - beta else alpha + 1
        entries[col:col + width, block] = 1
        col += width
    return BalancedBlockMatrix(r, s, alpha, beta, entries)


def binary_splitting_nullity(d: int, r: int, s: int) -> int:
    """Global-section count of the split kernel bundle on P^1."""
    alpha, beta = divmod(s, r)
    return (r - beta) * max(0, d - alpha - s + 1) + beta * max(0, d - alpha - s)


def _binary_configuration(d: int, r: int, s: int, seed: int) -> Configuration:
    """n=1 configuration with balanced A and points distinct mod p."""
    prime = sample_prime(random.Random(subseed(seed, "binary-prime")))
    amatrix = balanced_matrix(r, s).entries
    for salt in range(64):
        rng = random.Random(subseed(seed, "binary-points", salt))
        qpoints = []
        while len(qpoints) < s:
            pt = (rng.randrange(1 << 16), rng.randrange(1 << 16))
            if any(pt):
                qpoints.append(pt)
        cfg = Configuration(1, d, r, s, np.array(qpoints), amatrix, seed, prime)
        # full Veronese rank == pairwise projective distinctness mod p here
        if powers_independent(cfg):
            return cfg
    raise ParameterError(f"could not sample distinct binary points for s={s}")


def verify_binary_theorem(d: int, r: int, s: int, seed: int = 0) -> bool:
    """Check nullity == splitting formula == max(0, N2 - N1) on a sample."""
    if not 1 <= r <= s <= d + 1:
        raise ParameterError(f"need 1 <= r <= s <= d+1, got r={r}, s={s}, d={d}")
    cfg = _binary_configuration(d, r, s, seed)
    nullity = grove_nullity(cfg)
    _, _, expected = expected_bounds(1, d, r, s)
    return nullity == binary_splitting_nullity(d, r, s) == expected


def segre_embed(a, b) -> tuple:
    """P^1 x P^2 -> P^5: ([a0, a1], [b0, b1, b2]) -> row-major products."""
    a0, a1 = a
    if not (a0 or a1) or not any(b):
        raise ValueError("segre_embed requires nonzero inputs")
    return (a0 * b[0], a0 * b[1], a0 * b[2], a1 * b[0], a1 * b[1], a1 * b[2])


def minor_net_form(abc, p: int) -> Form:
    """The quadric a*G0 + b*G1 + c*G2 attached to [a, b, c], as an operator."""
    basis = monomial_basis(5, 2)
    coeffs = np.zeros(basis.size, dtype=np.int64)
    for weight, minor in zip(abc, _MINORS):
        for (k, l), sign in minor.items():
            exp = [0] * 6
            exp[k] += 1
            exp[l] += 1
            coeffs[basis.rank(tuple(exp))] += sign * int(weight)
    return Form(basis, coeffs % p, "R")


def _hessian(quadric: Form, p: int) -> MatrixFp:
    basis = quadric.basis
    nv = basis.n + 1
    h = np.zeros((nv, nv), dtype=np.int64)
    for idx, exp in enumerate(basis.exponents):
        c = int(quadric.coeffs[idx]) % p
        if c == 0:
            continue
        vars_ = [j for j, e in enumerate(exp) for _ in range(e)]
        k, l = vars_
        if k == l:
            h[k, k] = 2 * c % p
        else:
            h[k, l] = h[l, k] = c
    return MatrixFp(h, p)


@dataclass(eq=False)
class SegreData:
    """Eight sampled factors and their embedded images."""

    apoints: np.ndarray  # (8, 2)
    ppoints: np.ndarray  # (8, 3)
    qpoints: np.ndarray  # (8, 6), row i = segre_embed(apoints[i], ppoints[i])


def sample_segre_data(seed: int, coord_bound: int = 1 << 8) -> SegreData:
    """Random factor points; the bound keeps embedded coordinates below 2^16."""
    rng = random.Random(subseed(seed, "segre-data"))

    def draw(width):
        while True:
            pt = tuple(rng.randrange(coord_bound) for _ in range(width))
            if any(pt):
                return pt

    apoints = [draw(2) for _ in range(8)]
    ppoints = [draw(3) for _ in range(8)]
    qpoints = [segre_embed(a, b) for a, b in zip(apoints, ppoints)]
    return SegreData(
        np.array(apoints, dtype=np.int64),
        np.array(ppoints, dtype=np.int64),
        np.array(qpoints, dtype=np.int64),
    )


def segre_grove_check(seed: int = 0) -> bool:
    """Verify the minor-net grove on random Segre-threefold points.

    For each sampled [a, b, c] and its embedded point Q: the attached
    quadric is singular at Q, its 6x6 symmetric matrix has rank exactly 4,
    and the kernel is spanned by [a,b,c,0,0,0] and [0,0,0,a,b,c].
    """
    data = sample_segre_data(seed)
    p = sample_prime(random.Random(subseed(seed, "segre-prime"))).p
    # base locus: every net generator vanishes on every embedded point
    for j in range(3):
        gen = minor_net_form([1 if t == j else 0 for t in range(3)], p)
        if any(evaluate(gen, pt, p) != 0 for pt in data.qpoints):
            return False
    for i in range(8):
        abc = data.ppoints[i]
        q = data.qpoints[i]
        quadric = minor_net_form(abc, p)
        if evaluate(quadric, q, p) != 0:
            return False
        if any(evaluate(partial(quadric, k, p), q, p) != 0 for k in range(6)):
            return False
        hessian = _hessian(quadric, p)
        if rank(hessian) != 4:
            return False
        nullity, kernel = nullspace(hessian)
        if nullity != 2:
            return False
        gens = np.array(
            [list(abc) + [0, 0, 0], [0, 0, 0] + list(abc)], dtype=np.int64
        )
        for gen in gens:
            prod = hessian.entries.astype(object) @ (gen % p)
            if any(int(x) % p != 0 for x in prod):
                return False
    return True


def segre_case_nullity(seed: int = 0, segre_points: bool = False) -> int:
    """Grove-system nullity for (5, 2, 3, 8).

    With segre_points=False the configuration is fully random (the target
    value is 1: a unique grove up to scalar). With segre_points=True the
    points are arranged on the Segre threefold with matrix rows equal to
    the P^2 factors, which carries the constructed grove, so the nullity
    is at least 1.
    """
    if not segre_points:
        prime = sample_prime(random.Random(subseed(seed, "prime")))
        cfg = sample_configuration(5, 2, 3, 8, seed, prime=prime)
        return grove_nullity(cfg)
    data = sample_segre_data(seed)
    prime = sample_prime(random.Random(subseed(seed, "segre-prime")))
    cfg = Configuration(5, 2, 3, 8, data.qpoints, data.ppoints, seed, prime)
    return grove_nullity(cfg)
