"""Randomized textures: triviality probability and explicit angle witnesses.

For k orientation angles drawn uniformly on (0, pi), joined with the fixed
orientation 0, the probability that the Taylor bound is trivial equals
1 - (k+1)/2^k.  ``estimate_trivial_probability`` checks this by Monte
Carlo; ``find_kl`` produces, for powers of a single rotation angle phi,
two iterate indices whose reduced angles straddle pi/2 within a gap of
pi/2, certifying triviality of the generated texture.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .taylor import HALF_PI


@dataclass(frozen=True, slots=True)
class McConfig:
    """Monte Carlo setup: k random angles per draw, sample count, RNG seed."""

    k: int
    n_samples: int
    seed: int

    def __post_init__(self):
        if self.k < 1:
            raise DomainError(f"k = {self.k!r} must be >= 1")
        if self.n_samples < 1:
            raise DomainError(f"n_samples = {self.n_samples!r} must be >= 1")


@dataclass(frozen=True, slots=True)
class McResult:
    estimate: float
    std_error: float
    analytic: float


def trivial_probability(k: int) -> float:
    """Closed-form probability 1 - (k+1)/2^k of a trivial Taylor bound."""
    if k < 1:
        raise DomainError(f"k = {k!r} must be >= 1")
    return 1.0 - (k + 1) / 2.0**k


def _trivial_rows(thetas: np.ndarray) -> np.ndarray:
    """Row-wise triviality of angle tuples in (0, pi), 0 prepended.

    Vectorized twin of ``taylor.is_trivial``: sort each row and look for a
    consecutive pair straddling pi/2 at distance <= pi/2.
    """
    n = thetas.shape[0]
    full = np.sort(np.concatenate([np.zeros((n, 1)), thetas], axis=1), axis=1)
    left, right = full[:, :-1], full[:, 1:]
    hit = (left <= HALF_PI) & (right >= HALF_PI) & (right - left <= HALF_PI)
    return hit.any(axis=1)


def estimate_trivial_probability(cfg: McConfig) -> McResult:
    """Monte Carlo frequency of trivial textures against the closed form.

    Draws ``n_samples`` i.i.d. tuples of ``k`` angles uniform on (0, pi),
    prepends the orientation 0, and counts trivial Taylor bounds.  The
    generator is seeded PCG64, so identical configs give identical
    results; the standard error is the binomial one.
    """
    rng = np.random.default_rng(cfg.seed)
    thetas = rng.uniform(0.0, math.pi, size=(cfg.n_samples, cfg.k))
    trivial = _trivial_rows(thetas)
    est = float(trivial.mean())
    se = math.sqrt(est * (1.0 - est) / cfg.n_samples)
    return McResult(estimate=est, std_error=se, analytic=trivial_probability(cfg.k))


def _reduced_iterate(j: int, phi: float) -> float:
    """Angle of the j-th power of a rotation by phi, reduced to [0, pi)."""
    return j * phi - math.floor(j * phi / math.pi) * math.pi


def find_kl(phi: float) -> tuple[int, int, float, float]:
    """Iterate indices (k, l) whose reduced angles certify triviality.

    For phi in (0, pi) returns indices and reduced angles theta_k <
    theta_l with pi/2 in [theta_k, theta_l] and theta_l - theta_k <=
    pi/2.  For phi < pi/2 the indices are floor(pi/(2 phi)) and its
    successor; for phi in [(1 - 2^(1-m)) pi, (1 - 2^-m) pi) they are
    2^(m-1) and 2^(m-2).  The single orientation pi/2 is already
    orthogonal to 0, so phi = pi/2 returns the degenerate witness
    (1, 1, pi/2, pi/2).
    """
    if not 0.0 < phi < math.pi:
        raise DomainError(f"phi = {phi!r} outside (0, pi)")
    if phi == HALF_PI:
        return (1, 1, HALF_PI, HALF_PI)
    if phi < HALF_PI:
        k = math.floor(math.pi / (2.0 * phi))
        # float guard: insist on theta_k <= pi/2 < theta_{k+1}
        while k > 1 and _reduced_iterate(k, phi) > HALF_PI:
            k -= 1
        while _reduced_iterate(k + 1, phi) < HALF_PI:
            k += 1
        return (k, k + 1, _reduced_iterate(k, phi), _reduced_iterate(k + 1, phi))
    m = math.floor(-math.log2(1.0 - phi / math.pi)) + 1
    while phi < (1.0 - 2.0 ** (1 - m)) * math.pi:
        m -= 1
    while phi >= (1.0 - 2.0**-m) * math.pi:
        m += 1
    l, k = 2 ** (m - 2), 2 ** (m - 1)
    return (k, l, _reduced_iterate(k, phi), _reduced_iterate(l, phi))
