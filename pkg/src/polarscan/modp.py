"""Exact dense linear algebra over a prime field F_p.

All ranks and nullspaces are computed by Gaussian elimination with
first-nonzero pivoting; in exact arithmetic no pivot-magnitude heuristics
are needed and the result is deterministic for a given input. The modulus
is restricted to (2^30, 2^31) so that int64 holds every intermediate
product: entries live in [0, p), so a*b < 2^62 and a - f*b > -2^63.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field

import numpy as np

PRIME_LOW = 1 << 30
PRIME_HIGH = 1 << 31

# Deterministic Miller-Rabin witness set, valid for all n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin, exact below 3.3e24)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def subseed(*parts) -> int:
    """Derive an independent 63-bit sub-seed from hashable parts.

    Uses SHA-256 so derivations are stable across Python and numpy
    versions; report determinism relies on this.
    """
    digest = hashlib.sha256(repr(parts).encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1


@dataclass(frozen=True)
class PrimeModulus:
    """An odd prime p with 2^30 < p < 2^31, verified at construction."""

    p: int

    def __post_init__(self):
        if not (PRIME_LOW < self.p < PRIME_HIGH):
            raise ValueError(f"modulus {self.p} outside (2^30, 2^31)")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def __int__(self) -> int:
        return self.p


def sample_prime(rng: random.Random) -> PrimeModulus:
    """Sample a uniform prime in (2^30, 2^31) from a seeded RNG."""
    while True:
        candidate = rng.randrange(PRIME_LOW + 1, PRIME_HIGH, 2)
        if is_prime(candidate):
            return PrimeModulus(candidate)


@dataclass(eq=False)
class MatrixFp:
    """Dense matrix over F_p. Immutable by convention after construction."""

    entries: np.ndarray
    p: int
    rows: int = field(init=False)
    cols: int = field(init=False)

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError(f"expected a 2-D array, got ndim={a.ndim}")
        self.entries = a % self.p
        self.rows, self.cols = a.shape


def _eliminate(a: np.ndarray, p: int, reduced: bool) -> tuple[int, list[int]]:
    """In-place elimination; returns (rank, pivot columns).

    With reduced=True the matrix is left in reduced row echelon form,
    otherwise only the forward pass runs (enough for rank).
    """
    m, n = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv], :] = a[[piv, r], :]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = a[r, c:] * inv % p
        if reduced:
            others = np.nonzero(a[:, c])[0]
            others = others[others != r]
            if others.size:
                a[others, c:] = (a[others, c:] - a[others, c][:, None] * a[r, c:][None, :]) % p
        elif r + 1 < m:
            a[r + 1:, c:] = (a[r + 1:, c:] - a[r + 1:, c][:, None] * a[r, c:][None, :]) % p
        pivots.append(c)
        r += 1
    return r, pivots


def rank(m: MatrixFp) -> int:
    """Rank of m over F_p."""
    if m.rows == 0 or m.cols == 0:
        return 0
    work = m.entries.copy()
    r, _ = _eliminate(work, m.p, reduced=False)
    return r


def rref(m: MatrixFp) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of m and its pivot columns."""
    work = m.entries.copy()
    if m.rows == 0 or m.cols == 0:
        return work, []
    _, pivots = _eliminate(work, m.p, reduced=True)
    return work, pivots


def nullspace(m: MatrixFp) -> tuple[int, np.ndarray]:
    """Nullity and a basis of the right kernel of m.

    The basis is the reduced-echelon free-variable parameterization: one
    vector per free column f, with entry 1 at f and -RREF[t, f] at the
    pivot column of row t. Deterministic given m.
    """
    reduced, pivots = rref(m)
    p = m.p
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = np.zeros((len(free), m.cols), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for t, c in enumerate(pivots):
            basis[row, c] = (-int(reduced[t, f])) % p
    return len(free), basis


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact product mod p (object dtype internally; test-scale sizes)."""
    prod = np.asarray(a, dtype=object) @ np.asarray(b, dtype=object)
    return (prod % p).astype(np.int64)
