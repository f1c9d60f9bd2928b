"""Shared samplers and independent oracles for the test suite.

The oracles here deliberately avoid the library's reduction formulas:
they evaluate definitions directly (all-angle intersections, stretched
norms) so agreement is meaningful.
"""

from __future__ import annotations

import math

import numpy as np

from polyslip.mat2 import E1, Mat2, ShearFrame, Vec2


def rand_sl2(rng, beta_lo=0.3, beta_hi=1.5, gamma_lo=-3.0, gamma_hi=3.0) -> Mat2:
    """Random volume-preserving matrix R(rho) (beta e1 | 1/beta e2 + gamma e1)."""
    rho = rng.uniform(0.0, 2.0 * math.pi)
    beta = rng.uniform(beta_lo, beta_hi)
    gamma = rng.uniform(gamma_lo, gamma_hi)
    return ShearFrame(rho, beta, gamma, E1).reconstruct()


def rand_sl2_batch(rng, n, beta_lo=0.3, beta_hi=1.5, gamma_lo=-3.0, gamma_hi=3.0) -> np.ndarray:
    """(n, 2, 2) array of random SL(2) matrices, same law as ``rand_sl2``."""
    rho = rng.uniform(0.0, 2.0 * math.pi, n)
    beta = rng.uniform(beta_lo, beta_hi, n)
    gamma = rng.uniform(gamma_lo, gamma_hi, n)
    c, s = np.cos(rho), np.sin(rho)
    out = np.empty((n, 2, 2))
    # R(rho) @ [[beta, gamma], [0, 1/beta]]
    out[:, 0, 0] = c * beta
    out[:, 0, 1] = c * gamma - s / beta
    out[:, 1, 0] = s * beta
    out[:, 1, 1] = s * gamma + c / beta
    return out


def rotations_batch(rng, n) -> np.ndarray:
    rho = rng.uniform(0.0, 2.0 * math.pi, n)
    c, s = np.cos(rho), np.sin(rho)
    out = np.empty((n, 2, 2))
    out[:, 0, 0] = c
    out[:, 0, 1] = -s
    out[:, 1, 0] = s
    out[:, 1, 1] = c
    return out


def rand_unit(rng) -> Vec2:
    t = rng.uniform(0.0, 2.0 * math.pi)
    return Vec2(math.cos(t), math.sin(t))


def mat_of(row: np.ndarray) -> Mat2:
    return Mat2(float(row[0, 0]), float(row[0, 1]), float(row[1, 0]), float(row[1, 1]))


def brute_force_taylor(F: Mat2, thetas, tol=1e-9) -> bool:
    """All-orientations intersection test, straight from the definition."""
    if abs(F.det() - 1) > tol:
        return False
    for theta in thetas:
        v = F @ Vec2(math.cos(theta), math.sin(theta))
        if v.norm() > 1.0 + tol:
            return False
    return True


def brute_force_taylor_batch(F: np.ndarray, thetas, tol=1e-9) -> np.ndarray:
    """Vectorized all-orientations intersection over an (n, 2, 2) array."""
    dets = F[:, 0, 0] * F[:, 1, 1] - F[:, 0, 1] * F[:, 1, 0]
    ok = np.abs(dets - 1.0) <= tol
    for theta in thetas:
        cx, sx = math.cos(theta), math.sin(theta)
        vx = F[:, 0, 0] * cx + F[:, 0, 1] * sx
        vy = F[:, 1, 0] * cx + F[:, 1, 1] * sx
        ok &= np.hypot(vx, vy) <= 1.0 + tol
    return ok


def scan_trivial(thetas) -> bool:
    """Direct consecutive-pair scan for a trivial bound (test-local copy)."""
    half = math.pi / 2
    ts = sorted(thetas)
    for i in range(len(ts) - 1):
        if ts[i] <= half <= ts[i + 1] and ts[i + 1] - ts[i] <= half:
            return True
    return False
