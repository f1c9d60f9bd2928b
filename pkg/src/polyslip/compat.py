"""Rank-one compatibility across interfaces and laminate splitting.

A matrix A is nu-compatible with a target set B when some rank-one
perturbation a(x)nu lands A + a(x)nu inside B; equivalently A and the
target agree on the interface direction perp(nu).  For the single-slip
sets this reduces, in shear-frame coordinates (beta, gamma) of A relative
to the slip direction s, to

    ((s.nu_perp / s.nu) * beta + gamma)^2 + 1/beta^2  >=  1

when s.nu != 0, and to plain relaxed-set membership when nu = perp(s).

``laminate_split`` writes any volume-preserving strain as a convex
combination of two rank-one connected strains, each inside the union of
the relaxed sets of two independent slip directions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import bracket as _downhill_bracket
from scipy.optimize import brentq, minimize_scalar

from .errors import NotSL2, ParallelSlips
from .mat2 import DEFAULT_TOL, Mat2, Vec2, decompose
from .slip import in_M, in_N


@dataclass(frozen=True, slots=True)
class RankOneConnection:
    """Witness of compatibility: target = A + a(x)nu lies in the target set."""

    a: Vec2
    nu: Vec2
    target: Mat2


@dataclass(frozen=True, slots=True)
class LaminateSplit:
    """F = lam * F_plus + (1 - lam) * F_minus with rank(F_plus - F_minus) <= 1.

    ``t_plus`` and ``t_minus`` are the parameters of the two endpoints on
    the rank-one line through F (t = 0).
    """

    F_plus: Mat2
    F_minus: Mat2
    lam: float
    t_plus: float
    t_minus: float


def _check_sl2(F: Mat2, tol: float) -> None:
    if abs(F.det() - 1) > tol:
        raise NotSL2(f"det F = {float(F.det())!r}, expected 1")


def nu_compatible(F: Mat2, s: Vec2, nu: Vec2, tol: float = DEFAULT_TOL) -> bool:
    """Rank-one compatibility of F with the relaxed strain set of s across nu.

    ``s`` and ``nu`` must be unit vectors; F must be volume preserving.
    The perpendicular case |s.nu| <= tol degenerates to set membership.
    """
    _check_sl2(F, tol)
    sn = s.dot(nu)
    if abs(sn) <= tol:
        return in_N(F, s, tol)
    frame = decompose(F, s, tol)
    c = s.dot(nu.perp()) / sn
    lhs = (c * frame.beta + frame.gamma) ** 2 + 1.0 / frame.beta**2
    return lhs >= 1.0 - tol


def find_connection(F: Mat2, s: Vec2, nu: Vec2, tol: float = DEFAULT_TOL):
    """Construct a rank-one connection from F into the strain set of s.

    Returns a ``RankOneConnection`` whose target satisfies |target s| = 1
    (exact membership, not just the relaxed set) whenever s.nu != 0, or
    ``None`` exactly when ``nu_compatible`` is False.
    """
    _check_sl2(F, tol)
    sn = s.dot(nu)
    if abs(sn) <= tol:
        if in_N(F, s, tol):
            return RankOneConnection(a=Vec2(0.0, 0.0), nu=nu, target=F)
        return None
    if in_M(F, s, tol):
        return RankOneConnection(a=Vec2(0.0, 0.0), nu=nu, target=F)
    frame = decompose(F, s, tol)
    c = s.dot(nu.perp()) / sn
    beta, gamma = frame.beta, frame.gamma
    lhs = (c * beta + gamma) ** 2 + 1.0 / beta**2
    if lhs < 1.0 - tol:
        return None
    # Solve xi . n = 1 on the unit circle, n the interface image of F in
    # the (s, perp(s)) frame; |n| >= 1 guarantees a solution.
    n = s * (c * beta + gamma) + s.perp() * (1.0 / beta)
    nn = max(float(n.norm2()), 1.0)
    w = math.sqrt(1.0 - 1.0 / nn)
    xi = n * (1.0 / nn) + n.perp() * (w / math.sqrt(nn))
    # The rotation taking perp(s) to xi maps s to -perp(xi).
    rbar_s = -xi.perp()
    gamma_bar = n.dot(rbar_s) - c
    rbar = Mat2.outer(rbar_s, s) + Mat2.outer(xi, s.perp())
    gbar = rbar @ (Mat2.identity() + Mat2.outer(s, s.perp()) * gamma_bar)
    target = Mat2.rotation(frame.rho) @ gbar
    a = (target - F) @ nu
    # Re-anchor so target - F = a(x)nu holds exactly, not just to roundoff.
    target = F + Mat2.outer(a, nu)
    return RankOneConnection(a=a, nu=nu, target=target)


def connector_search(F: Mat2, s: Vec2, nu: Vec2, tol: float = DEFAULT_TOL, span: float = 1.0):
    """Brute-force rank-one connector, independent of the closed form.

    The volume constraint det(F + a(x)nu) = 1 confines a to the line
    t * w with w = perp(adj(F)^T nu).  Golden-section minimization of the
    stretched-norm objective |(F + t w(x)nu) s|^2 along that line decides
    feasibility; a root bracket then produces an explicit witness with
    |target s| = 1.  Returns the jump vector a, or None.
    """
    w = (F.adjugate().transpose() @ nu).perp()
    sn = s.dot(nu)
    fs = F @ s

    def stretch2(t: float) -> float:
        g = fs + w * (t * sn)
        return float(g.norm2())

    if abs(sn) <= tol:
        # a(x)nu cannot change Fs; feasible iff F already qualifies.
        return Vec2(0.0, 0.0) if fs.norm2() <= (1 + tol) ** 2 else None
    xa, xb, xc = _downhill_bracket(stretch2, xa=0.0, xb=1.0)[:3]
    res = minimize_scalar(stretch2, bracket=(xa, xb, xc), method="golden",
                          options={"xtol": 1e-13})
    t_star, h_min = float(res.x), float(res.fun)
    if h_min > (1.0 + tol) ** 2:
        return None
    if abs(h_min - 1.0) <= tol:
        return w * t_star  # vertex already on the set
    hi = max(abs(t_star), span)
    for _ in range(200):
        if stretch2(t_star + hi) > 1.0:
            break
        hi *= 2.0
    else:
        raise ArithmeticError("stretched norm failed to grow along the jump line")
    t0 = brentq(lambda t: stretch2(t) - 1.0, t_star, t_star + hi, xtol=1e-14)
    return w * t0


def laminate_split(F: Mat2, s: Vec2, s_prime: Vec2, tol: float = DEFAULT_TOL) -> LaminateSplit:
    """Split F into rank-one connected strains inside two slip-set unions.

    Walks the rank-one line F_t = F(Id + t a(x)b), with {a, b} the
    orthogonal pair {s + s', s - s'} ordered so that |Fb| < |Fa|; then
    |F_t a| is constant while |F_t b| grows quadratically, so the norm
    gap has one root on each side of t = 0.  At the roots the images of
    s and s' are orthogonal, which forces the shorter one below 1.

    Returns the trivial split (lam = 1, both factors F) when F already
    lies in either relaxed set, and when Fs . Fs' vanishes within tol
    (possible only alongside membership).
    """
    _check_sl2(F, tol)
    if abs(s.cross(s_prime)) <= tol:
        raise ParallelSlips("slip directions coincide up to sign")
    if in_N(F, s, tol) or in_N(F, s_prime, tol):
        return LaminateSplit(F_plus=F, F_minus=F, lam=1.0, t_plus=0.0, t_minus=0.0)
    u, w = s + s_prime, s - s_prime
    d = (F @ s).dot(F @ s_prime)
    if abs(d) <= tol:
        return LaminateSplit(F_plus=F, F_minus=F, lam=1.0, t_plus=0.0, t_minus=0.0)
    a, b = (w, u) if d < 0 else (u, w)
    fa, fb = F @ a, F @ b
    b2 = float(b.norm2())
    # |F_t b|^2 - |F_t a|^2 = q2 t^2 + q1 t + q0 with q0 < 0 < q2
    q2 = b2 * b2 * float(fa.norm2())
    q1 = 2.0 * b2 * float(fa.dot(fb))
    q0 = float(fb.norm2() - fa.norm2())
    disc = q1 * q1 - 4.0 * q2 * q0
    if disc > tol:
        root = math.sqrt(disc)
        t_plus = (-q1 + root) / (2.0 * q2)
        t_minus = (-q1 - root) / (2.0 * q2)
    else:
        # nearly degenerate parabola: locate the sign changes directly
        span = max(1.0, abs(q1 / q2))
        t_plus = _bisect_root(lambda t: (q2 * t + q1) * t + q0, 0.0, span)
        t_minus = _bisect_root(lambda t: (q2 * t + q1) * t + q0, 0.0, -span)
    dyad = Mat2.outer(a, b)
    f_plus = F @ (Mat2.identity() + dyad * t_plus)
    f_minus = F @ (Mat2.identity() + dyad * t_minus)
    lam = -t_minus / (t_plus - t_minus)
    return LaminateSplit(F_plus=f_plus, F_minus=f_minus, lam=lam,
                         t_plus=t_plus, t_minus=t_minus)


def _bisect_root(f, inner: float, outer: float) -> float:
    lo, hi = inner, outer
    while f(hi) < 0.0:
        hi *= 2.0
        if abs(hi) > 1e12:
            raise ArithmeticError("no sign change on the rank-one line")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
