"""Per-tuple analysis: dimension, deficiency, and certificate status.

Every numeric claim follows a two-prime, two-configuration protocol.
Mod-p nullities can only overshoot the generic kernel dimension (special
sample or unlucky prime), never undershoot it, so:

  * nullity == max(0, N2 - N1) on any single sample *proves* Sigma is not
    deficient (the semicontinuity squeeze);
  * a consistently larger nullity is strong evidence of deficiency but
    not a proof, and is labelled as such;
  * disagreement across primes/configurations triggers bounded
    resampling, then an Inconclusive verdict.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

import numpy as np

from .grove_system import (
    Configuration,
    ParameterError,
    grove_kernel,
    grove_nullity,
    powers_independent,
    sample_configuration,
    validate_tuple,
)
from .modp import MatrixFp, rank, sample_prime, subseed
from .poly import Form, evaluate, monomial_basis, partial
from .powersum_jacobian import DegenerateConfigurationError, sigma_dim_from_jacobian

NON_DEFICIENCY_PROVED = "NonDeficiencyProved"
DEFICIENCY_EVIDENCE = "DeficiencyEvidence"
INCONCLUSIVE = "Inconclusive"

CONFIG_RESAMPLES = 3
PRIME_RESAMPLES = 2
METHODS = ("eta", "jacobian", "both")


class Bounds(NamedTuple):
    N1: int
    N2: int
    expected_codim: int


def expected_bounds(n: int, d: int, r: int, s: int) -> Bounds:
    """Parameter counts N1 = sn + r(s-r), N2 = dim G(r, S_d), and their gap."""
    validate_tuple(n, d, r, s)
    n1 = s * n + r * (s - r)
    n2 = r * (comb(n + d, d) - r)
    return Bounds(n1, n2, max(0, n2 - n1))


@dataclass
class SigmaReport:
    """Result record for one (n, d, r, s) tuple."""

    n: int
    d: int
    r: int
    s: int
    N1: int
    N2: int
    dim_sigma: int
    deficiency: int
    method_agreement: bool | None
    certificate: str
    primes: tuple[int, int]
    seeds: tuple[int, int]
    elapsed_ms: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "r": self.r,
            "s": self.s,
            "N1": self.N1,
            "N2": self.N2,
            "dim_sigma": self.dim_sigma,
            "deficiency": self.deficiency,
            "method_agreement": self.method_agreement,
            "certificate": self.certificate,
            "primes": list(self.primes),
            "seeds": list(self.seeds),
            "elapsed_ms": self.elapsed_ms,
        }


def _sample_nondegenerate(n, d, r, s, seed, primes):
    """Integer configuration whose power vectors are independent mod both primes."""
    for salt in range(32):
        cfg = sample_configuration(n, d, r, s, seed, prime=primes[0], salt=salt)
        if all(powers_independent(cfg.with_prime(p)) for p in primes):
            return cfg
    raise DegenerateConfigurationError(
        f"no nondegenerate configuration for {(n, d, r, s)} from seed {seed}"
    )


def _two_primes(prime_seed, round_idx):
    p1 = sample_prime(random.Random(subseed(prime_seed, "prime", round_idx, 0)))
    p2 = sample_prime(random.Random(subseed(prime_seed, "prime", round_idx, 1)))
    bump = 2
    while p2.p == p1.p:
        p2 = sample_prime(random.Random(subseed(prime_seed, "prime", round_idx, bump)))
        bump += 1
    return p1, p2


def analyze(
    n: int,
    d: int,
    r: int,
    s: int,
    seed: int = 0,
    prime_seed: int | None = None,
    methods: str = "eta",
) -> SigmaReport:
    """Dimension/deficiency verdict for one tuple under the repetition protocol.

    methods: "eta" uses the grove-system nullity, "jacobian" the power-sum
    rank, "both" runs the two independently and also records whether they
    agreed.
    """
    validate_tuple(n, d, r, s)
    if methods not in METHODS:
        raise ParameterError(f"methods must be one of {METHODS}, got {methods!r}")
    t0 = time.perf_counter()
    n1, n2, expected = expected_bounds(n, d, r, s)
    min_n = min(n1, n2)
    if prime_seed is None:
        prime_seed = subseed(seed, "primes")

    primes = seeds = None
    dims: list[int] = []
    for prime_round in range(1 + PRIME_RESAMPLES):
        p1, p2 = _two_primes(prime_seed, prime_round)
        for cfg_round in range(1 + CONFIG_RESAMPLES):
            s1 = subseed(seed, "cfg", prime_round, cfg_round, 0)
            s2 = subseed(seed, "cfg", prime_round, cfg_round, 1)
            primes = (p1.p, p2.p)
            seeds = (s1, s2)
            dims = []
            consistent = True
            for cfg_seed in (s1, s2):
                cfg = _sample_nondegenerate(n, d, r, s, cfg_seed, (p1, p2))
                for pm in (p1, p2):
                    run = cfg.with_prime(pm)
                    run_dims = []
                    if methods in ("eta", "both"):
                        nullity = grove_nullity(run)
                        if nullity < expected:
                            raise AssertionError(
                                f"nullity {nullity} below semicontinuity floor "
                                f"{expected} for {(n, d, r, s)}"
                            )
                        run_dims.append(n2 - nullity)
                    if methods in ("jacobian", "both"):
                        dim_j = sigma_dim_from_jacobian(run)
                        if dim_j > min_n:
                            raise AssertionError(
                                f"jacobian dimension {dim_j} above min(N1, N2) "
                                f"= {min_n} for {(n, d, r, s)}"
                            )
                        run_dims.append(dim_j)
                    if len(set(run_dims)) != 1:
                        consistent = False
                    dims.extend(run_dims)
            if consistent and len(set(dims)) == 1:
                dim_sigma = dims[0]
                deficiency = min_n - dim_sigma
                certificate = (
                    NON_DEFICIENCY_PROVED if deficiency == 0 else DEFICIENCY_EVIDENCE
                )
                return SigmaReport(
                    n, d, r, s, n1, n2, dim_sigma, deficiency,
                    None if methods != "both" else True,
                    certificate, primes, seeds,
                    int((time.perf_counter() - t0) * 1000),
                )

    # persistent disagreement: report the largest dimension seen (the one
    # compatible with every observed upper bound) but refuse a verdict
    dim_sigma = max(dims)
    return SigmaReport(
        n, d, r, s, n1, n2, dim_sigma, min_n - dim_sigma,
        None if methods != "both" else False,
        INCONCLUSIVE, primes, seeds,
        int((time.perf_counter() - t0) * 1000),
    )


@dataclass(eq=False)
class GroveElement:
    """One kernel basis vector, read as an r-tuple of degree-d operators."""

    forms: tuple[Form, ...]
    t: int  # projective dimension of the spanned linear system
    dim_l: int | None  # r - (t + 2); None encodes the empty projection center
    point_checks: tuple[bool, ...]

    @property
    def verified(self) -> bool:
        return all(self.point_checks)


@dataclass(eq=False)
class GroveCertificate:
    """Kernel basis plus direct re-verification of the grove conditions."""

    config: Configuration
    elements: tuple[GroveElement, ...]

    @property
    def verified(self) -> bool:
        return all(e.verified for e in self.elements)


def _check_grove_element(cfg: Configuration, forms) -> tuple[bool, ...]:
    """Definition-level re-check through evaluate/partial, per point.

    Independent of the system assembly: each form must vanish at every
    point, and each row combination must be identically zero (the row's
    point lies on the projection center) or have all partials vanishing
    at its point.
    """
    p = cfg.prime.p
    flags = []
    for i in range(cfg.s):
        q = cfg.qpoints[i]
        ok = all(evaluate(u, q, p) == 0 for u in forms)
        combo = np.zeros(forms[0].basis.size, dtype=np.int64)
        for j, u in enumerate(forms):
            combo = (combo + int(cfg.amatrix[i, j]) % p * u.coeffs) % p
        if combo.any():
            vform = Form(forms[0].basis, combo, "R")
            ok = ok and evaluate(vform, q, p) == 0
            ok = ok and all(
                evaluate(partial(vform, k, p), q, p) == 0 for k in range(cfg.n + 1)
            )
        flags.append(ok)
    return tuple(flags)


def extract_groves(cfg: Configuration) -> GroveCertificate:
    """Kernel basis of the grove system with per-element verification data.

    Raises ValueError when the kernel is trivial (no grove exists for the
    sampled data).
    """
    kernel = grove_kernel(cfg)
    if kernel.shape[0] == 0:
        raise ValueError(f"empty kernel for {(cfg.n, cfg.d, cfg.r, cfg.s)}: no grove")
    p = cfg.prime.p
    basis = monomial_basis(cfg.n, cfg.d)
    size = basis.size
    elements = []
    for vec in kernel:
        coeff_rows = vec.reshape(cfg.r, size)
        forms = tuple(Form(basis, row.copy(), "R") for row in coeff_rows)
        t = rank(MatrixFp(coeff_rows, p)) - 1
        dim_l = cfg.r - (t + 2)
        elements.append(
            GroveElement(
                forms=forms,
                t=t,
                dim_l=None if dim_l < 0 else dim_l,
                point_checks=_check_grove_element(cfg, forms),
            )
        )
    return GroveCertificate(cfg, tuple(elements))
