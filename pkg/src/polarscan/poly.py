"""Homogeneous multivariate polynomial arithmetic over F_p.

Forms live on a fixed monomial basis in n+1 variables, ordered by
descending lexicographic exponent vectors (index 0 is x_0^d). The same
coefficient representation serves two dual roles, tagged by `side`:
"S" for polynomials in the point variables x_i and "R" for differential
operators in the dual variables. The apolar contraction pairs an R-side
form of degree e with an S-side form of degree d >= e via the rule
op^J (x^I) = I!/(I-J)! x^(I-J), which never vanishes mod p since every
factor is at most d < p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


def _exponents(nvars: int, degree: int):
    if nvars == 1:
        yield (degree,)
        return
    for e0 in range(degree, -1, -1):
        for rest in _exponents(nvars - 1, degree - e0):
            yield (e0,) + rest


@dataclass(frozen=True, eq=False)
class MonomialBasis:
    """Degree-d monomials in n+1 variables, descending lexicographic."""

    n: int
    d: int

    def __post_init__(self):
        exps = tuple(_exponents(self.n + 1, self.d))
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "size", len(exps))
        object.__setattr__(self, "expmat", np.array(exps, dtype=np.int64))
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(exps)})

    def rank(self, exponent) -> int:
        return self._index[tuple(exponent)]

    def unrank(self, index: int):
        return self.exponents[index]


@lru_cache(maxsize=None)
def monomial_basis(n: int, d: int) -> MonomialBasis:
    """Shared MonomialBasis instances keyed by (n, d)."""
    return MonomialBasis(n, d)


@lru_cache(maxsize=None)
def multinomials(n: int, d: int) -> tuple[int, ...]:
    """Multinomial coefficients d!/I! over the (n, d) basis, exact ints."""
    fact_d = math.factorial(d)
    out = []
    for exp in monomial_basis(n, d).exponents:
        denom = 1
        for e in exp:
            denom *= math.factorial(e)
        out.append(fact_d // denom)
    return tuple(out)


@lru_cache(maxsize=None)
def lower_shift(n: int, d: int, k: int) -> np.ndarray:
    """Index map I -> I - e_k from the (n, d) basis into (n, d-1); -1 if I_k = 0."""
    src = monomial_basis(n, d)
    dst = monomial_basis(n, d - 1)
    out = np.full(src.size, -1, dtype=np.int64)
    for i, exp in enumerate(src.exponents):
        if exp[k] > 0:
            lowered = exp[:k] + (exp[k] - 1,) + exp[k + 1:]
            out[i] = dst.rank(lowered)
    return out


@lru_cache(maxsize=None)
def raise_shift(n: int, d: int, k: int) -> np.ndarray:
    """Index map I -> I + e_k from the (n, d) basis into (n, d+1)."""
    src = monomial_basis(n, d)
    dst = monomial_basis(n, d + 1)
    out = np.empty(src.size, dtype=np.int64)
    for i, exp in enumerate(src.exponents):
        raised = exp[:k] + (exp[k] + 1,) + exp[k + 1:]
        out[i] = dst.rank(raised)
    return out


@dataclass(eq=False)
class Form:
    """Dense coefficient vector of a homogeneous form on a MonomialBasis."""

    basis: MonomialBasis
    coeffs: np.ndarray
    side: str  # "S" (forms in x_i) or "R" (operators in the duals)

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=np.int64)
        if self.coeffs.shape != (self.basis.size,):
            raise ValueError("coefficient vector does not match basis size")
        if self.side not in ("S", "R"):
            raise ValueError(f"side must be 'S' or 'R', got {self.side!r}")

    def is_zero(self) -> bool:
        return not self.coeffs.any()


@dataclass(frozen=True, eq=False)
class LinearForm:
    """A nonzero point of P^n / linear form, by its n+1 coordinates."""

    coords: tuple

    def __post_init__(self):
        if not any(self.coords):
            raise ValueError("linear form must be nonzero")


def _power_table(coords, d: int, p: int) -> list[list[int]]:
    # table[j][e] = coords[j]^e mod p
    table = []
    for c in coords:
        c = int(c) % p
        row = [1] * (d + 1)
        for e in range(1, d + 1):
            row[e] = row[e - 1] * c % p
        table.append(row)
    return table


def monomial_values(coords, basis: MonomialBasis, p: int) -> np.ndarray:
    """Values of every basis monomial at the given coordinates, mod p."""
    table = _power_table(coords, basis.d, p)
    vals = np.ones(basis.size, dtype=np.int64)
    for j in range(basis.n + 1):
        col = np.asarray(table[j], dtype=np.int64)
        vals = vals * col[basis.expmat[:, j]] % p
    return vals


def partial_monomial_values(coords, k: int, basis: MonomialBasis, p: int) -> np.ndarray:
    """Values of d(x^I)/d(x_k) at the given coordinates, for every basis I."""
    table = _power_table(coords, basis.d, p)
    expk = basis.expmat[:, k]
    vals = expk % p
    for j in range(basis.n + 1):
        col = np.asarray(table[j], dtype=np.int64)
        exps = basis.expmat[:, j]
        if j == k:
            exps = np.maximum(exps - 1, 0)  # the expk factor zeroes I_k = 0 rows
        vals = vals * col[exps] % p
    return vals


def power(q: LinearForm, d: int, p: int, side: str = "S") -> Form:
    """The d-th power of a linear form, as a dense degree-d Form."""
    if d < 1:
        raise ValueError("power requires d >= 1")
    n = len(q.coords) - 1
    basis = monomial_basis(n, d)
    mults = np.array([m % p for m in multinomials(n, d)], dtype=np.int64)
    coeffs = mults * monomial_values(q.coords, basis, p) % p
    return Form(basis, coeffs, side)


def evaluate(f: Form, point, p: int) -> int:
    """Evaluate a form at a point with n+1 coordinates, mod p."""
    if len(point) != f.basis.n + 1:
        raise ValueError("coordinate count does not match basis")
    vals = f.coeffs % p * monomial_values(point, f.basis, p) % p
    # entries < p ~ 2^31 and size <= ~3000, so the int64 sum cannot overflow
    return int(vals.sum() % p)


def partial(f: Form, k: int, p: int) -> Form:
    """Formal partial derivative with respect to variable k."""
    basis = f.basis
    if basis.d < 1:
        raise ValueError("cannot differentiate a degree-0 form")
    dst = monomial_basis(basis.n, basis.d - 1)
    out = np.zeros(dst.size, dtype=np.int64)
    shift = lower_shift(basis.n, basis.d, k)
    mask = shift >= 0
    out[shift[mask]] = f.coeffs[mask] * basis.expmat[mask, k] % p
    return Form(dst, out, f.side)


def mul_by_var(f: Form, k: int, p: int) -> Form:
    """Multiply a form by its k-th variable (degree d -> d+1)."""
    basis = f.basis
    dst = monomial_basis(basis.n, basis.d + 1)
    out = np.zeros(dst.size, dtype=np.int64)
    out[raise_shift(basis.n, basis.d, k)] = f.coeffs % p
    return Form(dst, out, f.side)


def apolar_apply(u: Form, f: Form, p: int) -> Form:
    """Apolar contraction of an R-side u (degree e) into an S-side f (degree d).

    Returns the S-side form of degree d - e with
    result[I - J] += u[J] * f[I] * I!/(I-J)! over all J <= I.
    """
    if u.side != "R" or f.side != "S":
        raise ValueError("contraction takes an R-side operator and an S-side form")
    if u.basis.n != f.basis.n:
        raise ValueError("variable counts differ")
    e, d = u.basis.d, f.basis.d
    if e > d:
        raise ValueError(f"operator degree {e} exceeds form degree {d}")
    n = u.basis.n
    dst = monomial_basis(n, d - e)
    fbasis = f.basis
    out = [0] * dst.size
    for ju, uc in enumerate(u.coeffs):
        uc = int(uc) % p
        if uc == 0:
            continue
        jexp = u.basis.exponents[ju]
        for it, texp in enumerate(dst.exponents):
            iexp = tuple(a + b for a, b in zip(jexp, texp))
            fc = int(f.coeffs[fbasis.rank(iexp)]) % p
            if fc == 0:
                continue
            c = 1
            for a, b in zip(iexp, jexp):
                # falling factorial a!/(a-b)!
                for t in range(a, a - b, -1):
                    c *= t
            out[it] = (out[it] + uc * fc * c) % p
    return Form(dst, np.array(out, dtype=np.int64), "S")
