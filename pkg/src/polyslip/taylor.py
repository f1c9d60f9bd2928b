"""Taylor inner bounds for polycrystal textures.

A texture is a finite set of grain orientation angles.  The constant-strain
(Taylor) bound is the intersection of the per-orientation relaxed strain
sets; it collapses to at most three orientations: 0 and the two angles
bracketing pi/2.  In shear-frame coordinates relative to e1 the
intersection is a (beta, gamma) region bounded by the curves

    gamma_pm(theta, beta) = -beta*cot(theta) +- sqrt(sin(theta)^-2 - beta^-2)

for beta in [sin(theta), 1].  All angle sets are normalized to [0, pi)
with first element 0; the applied shift is recorded so callers can rotate
results back.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, EmptyInput, NotSL2
from .mat2 import DEFAULT_TOL, E1, Mat2, decompose, is_SO2

HALF_PI = math.pi / 2

#: gamma_bounds is undefined at theta in {0, pi}; stay this far away.
THETA_MIN = 1e-8

SINGLE_CRYSTAL = "single_crystal"
PAIR = "pair"
TRIPLE = "triple"


@dataclass(frozen=True, slots=True)
class AngleSet:
    """Normalized orientation angles: sorted, distinct, in [0, pi), first 0.

    ``shift`` is the rotation removed during normalization; bounds computed
    from this set correspond to the original texture rotated by ``-shift``.
    """

    thetas: tuple[float, ...]
    shift: float = 0.0

    def __post_init__(self):
        if not self.thetas:
            raise EmptyInput("angle set is empty")
        if self.thetas[0] != 0.0:
            raise DomainError("normalized angle set must start at 0")
        for a, b in zip(self.thetas, self.thetas[1:]):
            if not a < b:
                raise DomainError("angles must be strictly increasing")
        if not self.thetas[-1] < math.pi:
            raise DomainError("angles must lie in [0, pi)")

    @property
    def N(self) -> int:
        return len(self.thetas)


def normalize(angles, tol: float = DEFAULT_TOL) -> AngleSet:
    """Reduce raw angles mod pi, sort, merge near-duplicates, shift to 0.

    Orientations are line-like (a slip direction and its negative act
    identically), hence the mod-pi reduction; duplicates are merged
    circularly so values just below pi collapse onto 0.
    """
    values = list(angles)
    if not values:
        raise EmptyInput("no angles given")
    reduced = []
    for a in values:
        r = math.fmod(float(a), math.pi)
        if r < 0.0:
            r += math.pi
        if r >= math.pi:  # guard fmod edge at the upper end
            r -= math.pi
        reduced.append(r)
    reduced.sort()
    deduped = [reduced[0]]
    for r in reduced[1:]:
        if r - deduped[-1] > tol:
            deduped.append(r)
    if len(deduped) > 1 and (deduped[0] + math.pi) - deduped[-1] <= tol:
        deduped.pop()
    shift = deduped[0]
    shifted = tuple(0.0 if i == 0 else t - shift for i, t in enumerate(deduped))
    return AngleSet(thetas=shifted, shift=shift)


def gamma_bounds(theta: float, beta: float, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Admissible shear interval [gamma_-, gamma_+] at stretch beta.

    Requires theta in (0, pi) and beta in [sin(theta), 1] up to tol.  At
    beta = 1 the interval is [-2*cot(theta), 0] for theta < pi/2 and
    [0, -2*cot(theta)] for theta >= pi/2.
    """
    if not THETA_MIN < theta < math.pi - THETA_MIN:
        raise DomainError(f"theta = {theta!r} outside (0, pi)")
    st = math.sin(theta)
    if beta < st - tol or beta > 1 + tol:
        raise DomainError(f"beta = {beta!r} outside [sin(theta), 1] = [{st!r}, 1]")
    disc = max(0.0, 1.0 / (st * st) - 1.0 / (beta * beta))
    root = math.sqrt(disc)
    center = -beta * math.cos(theta) / st
    return (center - root, center + root)


def in_lambda(theta: float, beta: float, gamma: float, tol: float = DEFAULT_TOL) -> bool:
    """Membership of (beta, gamma) in the shear-frame region of theta."""
    if not 0.0 < theta < math.pi:
        raise DomainError(f"theta = {theta!r} outside (0, pi)")
    st = math.sin(theta)
    if beta <= 0.0 or beta < st - tol or beta > 1.0 + tol:
        return False
    disc = max(0.0, 1.0 / (st * st) - 1.0 / (beta * beta))
    root = math.sqrt(disc)
    center = -beta * math.cos(theta) / st
    return center - root - tol <= gamma <= center + root + tol


@dataclass(frozen=True, slots=True)
class TaylorBound:
    """The at-most-three orientations that determine the Taylor bound."""

    kind: str
    angles: tuple[float, ...]

    def member(self, F: Mat2, tol: float = DEFAULT_TOL) -> bool:
        if any(a == HALF_PI for a in self.angles):
            # an orientation orthogonal to 0 pins the bound to rotations
            return is_SO2(F, tol)
        frame = decompose(F, E1, tol)
        if frame.beta > 1.0 + tol:
            return False
        return all(in_lambda(a, frame.beta, frame.gamma, tol)
                   for a in self.angles if a > 0.0)


def reduce_angles(angles: AngleSet) -> TaylorBound:
    """Collapse a normalized angle set to the bracketing pair around pi/2.

    With the convention that an implicit angle pi closes the fan, the
    bound of the full set equals the bound of {0, theta_n, theta_n+1}
    where theta_n < pi/2 <= theta_n+1; angles equal to 0 or pi drop out.
    """
    thetas = angles.thetas
    n = bisect_left(thetas, HALF_PI)  # number of angles strictly below pi/2
    theta_n = thetas[n - 1]
    theta_next = thetas[n] if n < len(thetas) else math.pi
    reduced = [0.0]
    if theta_n > 0.0:
        reduced.append(theta_n)
    if theta_next < math.pi:
        reduced.append(theta_next)
    kind = (SINGLE_CRYSTAL, PAIR, TRIPLE)[len(reduced) - 1]
    return TaylorBound(kind=kind, angles=tuple(reduced))


def taylor_member(F: Mat2, angles: AngleSet, tol: float = DEFAULT_TOL) -> bool:
    """Constant-strain attainability of F for the given texture.

    Equivalent to F lying in every rotated relaxed strain set of the
    texture; evaluated through the three-orientation reduction.  If
    ``angles`` was normalized with a nonzero ``shift``, the bound of the
    raw texture is the rotated one: test ``F @ rotation(angles.shift)``
    here to decide membership for the original orientations.
    """
    return reduce_angles(angles).member(F, tol)


def taylor_member_batch(F: np.ndarray, angles: AngleSet, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Vectorized ``taylor_member`` over an (n, 2, 2) array of matrices."""
    F = np.asarray(F, dtype=float)
    dets = F[:, 0, 0] * F[:, 1, 1] - F[:, 0, 1] * F[:, 1, 0]
    if np.any(np.abs(dets - 1.0) > tol):
        raise NotSL2("batch contains matrices with det != 1")
    beta = np.hypot(F[:, 0, 0], F[:, 1, 0])
    gamma = (F[:, 0, 1] * F[:, 0, 0] + F[:, 1, 1] * F[:, 1, 0]) / beta
    bound = reduce_angles(angles)
    if any(a == HALF_PI for a in bound.angles):
        return (np.abs(beta - 1.0) <= tol) & (np.abs(gamma) <= tol)
    ok = beta <= 1.0 + tol
    for a in bound.angles:
        if a == 0.0:
            continue
        st = math.sin(a)
        with np.errstate(divide="ignore"):
            disc = np.clip(1.0 / (st * st) - 1.0 / (beta * beta), 0.0, None)
        root = np.sqrt(disc)
        center = -beta * math.cos(a) / st
        ok &= (beta >= st - tol) & (gamma >= center - root - tol) & (gamma <= center + root + tol)
    return ok


def is_trivial(angles: AngleSet) -> bool:
    """True iff the Taylor bound of the texture is exactly the rotations.

    Holds iff some consecutive pair of angles straddles pi/2 while being
    at most pi/2 apart.
    """
    thetas = angles.thetas
    for a, b in zip(thetas, thetas[1:]):
        if a <= HALF_PI <= b and b - a <= HALF_PI:
            return True
    return False


def taylor_M_member(F: Mat2, angles: AngleSet, tol: float = DEFAULT_TOL) -> bool:
    """Constant-strain attainability without relaxation.

    Membership forces the stretch to be exactly 1; the shear must lie in
    the full-stretch interval of every nonzero orientation, which is
    [-2*cot(theta), 0] below pi/2 and [0, -2*cot(theta)] above (the
    beta = 1 case of ``gamma_bounds``, angle first, stretch second).
    """
    frame = decompose(F, E1, tol)
    if abs(frame.beta - 1.0) > tol:
        return False
    for theta in angles.thetas[1:]:
        edge = -2.0 / math.tan(theta)
        lo, hi = (edge, 0.0) if theta < HALF_PI else (0.0, edge)
        if not lo - tol <= frame.gamma <= hi + tol:
            return False
    return True
