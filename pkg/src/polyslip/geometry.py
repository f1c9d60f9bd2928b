"""Polycrystal geometry and outer bounds from boundary compatibility.

A polycrystal is a planar domain partitioned into grains, each carrying a
texture angle in [0, pi) that rotates the reference slip direction e1.
Boundaries are closed, positively oriented loops of line segments and
circular arcs, which keeps outward normals in closed form while covering
every construction used here (polygonal domains, disks cut by chords or
radii).

Two outer bounds on the attainable affine boundary strains are computed
from rank-one compatibility along the domain boundary:

* the full bound samples compatibility at many boundary points
  (``outer_bound_full_member``),
* the perpendicular-point bound only uses points where the outward
  normal is orthogonal to the local slip direction; there compatibility
  degenerates to plain strain-set membership, so the bound is a finite
  intersection of relaxed sets (``outer_bound_perp``).

Grain boundary curves must be split wherever they transition between the
domain boundary and the interior; each curve is classified as a whole.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .errors import InvalidPolycrystal, NotSL2
from .mat2 import DEFAULT_TOL, Mat2, Vec2, decompose
from .slip import slip_direction

TAU = 2.0 * math.pi

#: Positional tolerance for coincidence of points and curves.
POS_TOL = 1e-9

#: Angular tolerance for normal-direction coverage tests.
ANGULAR_TOL = 1e-6


# ---------------------------------------------------------------------------
# boundary curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Segment:
    """Straight boundary piece from p to q."""

    p: Vec2
    q: Vec2

    @property
    def start(self) -> Vec2:
        return self.p

    @property
    def end(self) -> Vec2:
        return self.q

    def length(self) -> float:
        return (self.q - self.p).norm()

    def point_at(self, u: float) -> Vec2:
        return self.p + (self.q - self.p) * u

    def normal_at(self, u: float) -> Vec2:
        """Outward normal, assuming the curve runs counterclockwise."""
        d = (self.q - self.p).unit()
        return Vec2(d.y, -d.x)

    def rotated(self, phi: float) -> "Segment":
        R = Mat2.rotation(phi)
        return Segment(R @ self.p, R @ self.q)


@dataclass(frozen=True, slots=True)
class Arc:
    """Circular boundary piece.

    The sweep runs from ``from_angle`` to ``to_angle`` in the orientation
    given by ``ccw``; a full circle is encoded by a sweep of 2*pi (e.g.
    from 0 to 2*pi counterclockwise).
    """

    center: Vec2
    radius: float
    from_angle: float
    to_angle: float
    ccw: bool = True

    def __post_init__(self):
        if self.radius <= 0:
            raise InvalidPolycrystal(f"arc radius {self.radius!r} must be positive")

    def sweep(self) -> float:
        raw = self.to_angle - self.from_angle if self.ccw else self.from_angle - self.to_angle
        s = math.fmod(raw, TAU)
        if s < 0:
            s += TAU
        if s == 0.0 and raw != 0.0:
            s = TAU
        return s

    def length(self) -> float:
        return self.radius * self.sweep()

    def angle_at(self, u: float) -> float:
        step = self.sweep() * u
        return self.from_angle + (step if self.ccw else -step)

    def point_at(self, u: float) -> Vec2:
        t = self.angle_at(u)
        return self.center + Vec2(math.cos(t), math.sin(t)) * self.radius

    @property
    def start(self) -> Vec2:
        return self.point_at(0.0)

    @property
    def end(self) -> Vec2:
        return self.point_at(1.0)

    def normal_at(self, u: float) -> Vec2:
        """Outward normal for a counterclockwise loop: radial for ccw arcs."""
        t = self.angle_at(u)
        n = Vec2(math.cos(t), math.sin(t))
        return n if self.ccw else -n

    def covers_angle(self, t: float, tol: float = ANGULAR_TOL) -> bool:
        """Whether direction t (mod 2 pi) lies within the swept range."""
        origin = self.from_angle if self.ccw else self.from_angle - self.sweep()
        d = math.fmod(t - origin, TAU)
        if d < 0:
            d += TAU
        return d <= self.sweep() + tol or d >= TAU - tol

    def rotated(self, phi: float) -> "Arc":
        return Arc(Mat2.rotation(phi) @ self.center, self.radius,
                   self.from_angle + phi, self.to_angle + phi, self.ccw)


Curve = Union[Segment, Arc]


def _loop_area(curves) -> float:
    """Signed area enclosed by a closed curve loop (Green's theorem)."""
    total = 0.0
    for c in curves:
        if isinstance(c, Segment):
            total += 0.5 * float(c.p.cross(c.q))
        else:
            t0 = c.from_angle
            sw = c.sweep() * (1.0 if c.ccw else -1.0)
            t1 = t0 + sw
            r, cx, cy = c.radius, float(c.center.x), float(c.center.y)
            total += 0.5 * (r * r * sw
                            + cx * r * (math.sin(t1) - math.sin(t0))
                            - cy * r * (math.cos(t1) - math.cos(t0)))
    return total


def _check_closed(curves, what: str) -> None:
    if not curves:
        raise InvalidPolycrystal(f"{what}: empty boundary loop")
    for c, d in zip(curves, curves[1:] + [curves[0]]):
        if (c.end - d.start).norm() > POS_TOL:
            raise InvalidPolycrystal(f"{what}: loop does not close at {c.end.to_floats()}")


# ---------------------------------------------------------------------------
# overlap and membership predicates
# ---------------------------------------------------------------------------

def _segment_overlap_length(a: Segment, b: Segment) -> float:
    da, db = a.q - a.p, b.q - b.p
    la = da.norm()
    if la < POS_TOL or db.norm() < POS_TOL:
        return 0.0
    ua = da * (1.0 / la)
    if abs(ua.cross(db)) > POS_TOL * max(1.0, db.norm()):
        # directions not parallel
        return 0.0
    if abs(ua.cross(b.p - a.p)) > POS_TOL:
        return 0.0
    t1, t2 = ua.dot(b.p - a.p), ua.dot(b.q - a.p)
    lo, hi = min(t1, t2), max(t1, t2)
    return max(0.0, min(hi, la) - max(lo, 0.0))


def _arc_overlap_length(a: Arc, b: Arc) -> float:
    if (a.center - b.center).norm() > POS_TOL or abs(a.radius - b.radius) > POS_TOL:
        return 0.0
    lo_a = a.from_angle if a.ccw else a.from_angle - a.sweep()
    lo_b = b.from_angle if b.ccw else b.from_angle - b.sweep()
    # circular interval intersection, measured in radians
    lo_b = lo_a + math.fmod(lo_b - lo_a, TAU)
    if lo_b < lo_a:
        lo_b += TAU
    overlap = 0.0
    for shift in (0.0, -TAU):
        s = max(lo_a, lo_b + shift)
        e = min(lo_a + a.sweep(), lo_b + shift + b.sweep())
        overlap += max(0.0, e - s)
    return overlap * a.radius


def curve_overlap_length(a: Curve, b: Curve) -> float:
    """Length of the common portion of two curves (0 for mixed kinds)."""
    if isinstance(a, Segment) and isinstance(b, Segment):
        return _segment_overlap_length(a, b)
    if isinstance(a, Arc) and isinstance(b, Arc):
        return _arc_overlap_length(a, b)
    return 0.0


def point_on_curve(p: Vec2, c: Curve, tol: float = POS_TOL) -> bool:
    if isinstance(c, Segment):
        d = c.q - c.p
        l2 = float(d.norm2())
        if l2 == 0.0:
            return (p - c.p).norm() <= tol
        u = float((p - c.p).dot(d)) / l2
        u = min(1.0, max(0.0, u))
        return (p - c.point_at(u)).norm() <= tol
    r = (p - c.center).norm()
    if abs(r - c.radius) > tol:
        return False
    t = math.atan2(float(p.y - c.center.y), float(p.x - c.center.x))
    return c.covers_angle(t, tol / c.radius)


# ---------------------------------------------------------------------------
# polycrystal data model
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Grain:
    """A grain: a closed ccw boundary loop plus a texture angle in [0, pi)."""

    id: int
    boundary: tuple[Curve, ...]
    theta: float

    def slip(self) -> Vec2:
        return slip_direction(self.theta)

    def area(self) -> float:
        return _loop_area(list(self.boundary))


@dataclass(frozen=True)
class Polycrystal:
    """Domain boundary loop plus grains partitioning the domain."""

    domain: tuple[Curve, ...]
    grains: tuple[Grain, ...]

    def __post_init__(self):
        _check_closed(list(self.domain), "domain")
        if _loop_area(list(self.domain)) <= 0:
            raise InvalidPolycrystal("domain loop must be counterclockwise")
        if not self.grains:
            raise InvalidPolycrystal("polycrystal needs at least one grain")
        ids = [g.id for g in self.grains]
        if len(set(ids)) != len(ids):
            raise InvalidPolycrystal("grain ids must be unique")
        total = 0.0
        for g in self.grains:
            _check_closed(list(g.boundary), f"grain {g.id}")
            a = g.area()
            if a <= 0:
                raise InvalidPolycrystal(f"grain {g.id}: loop must be counterclockwise")
            if not 0.0 <= g.theta < math.pi:
                raise InvalidPolycrystal(f"grain {g.id}: theta outside [0, pi)")
            total += a
        dom_area = _loop_area(list(self.domain))
        if abs(total - dom_area) > 1e-6 * dom_area:
            raise InvalidPolycrystal(
                f"grain areas sum to {total!r}, domain area is {dom_area!r}")
        for i, g in enumerate(self.grains):
            for h in self.grains[i + 1:]:
                if _textures_equal(g.theta, h.theta) and _grains_adjacent(g, h):
                    raise InvalidPolycrystal(
                        f"adjacent grains {g.id} and {h.id} share texture angle")

    def grain_by_id(self, gid: int) -> Grain:
        for g in self.grains:
            if g.id == gid:
                return g
        raise KeyError(gid)

    def texture_angles(self) -> list[float]:
        return [g.theta for g in self.grains]

    def rotated(self, phi: float) -> "Polycrystal":
        """The polycrystal rotated rigidly by phi (textures co-rotate)."""
        def rot_theta(t: float) -> float:
            r = math.fmod(t + phi, math.pi)
            return r + math.pi if r < 0 else r
        return Polycrystal(
            domain=tuple(c.rotated(phi) for c in self.domain),
            grains=tuple(Grain(g.id, tuple(c.rotated(phi) for c in g.boundary),
                               rot_theta(g.theta)) for g in self.grains),
        )


def _textures_equal(a: float, b: float, tol: float = DEFAULT_TOL) -> bool:
    d = abs(a - b)
    return d <= tol or abs(d - math.pi) <= tol


def _grains_adjacent(g: Grain, h: Grain) -> bool:
    shared = 0.0
    for c in g.boundary:
        for d in h.boundary:
            shared += curve_overlap_length(c, d)
            if shared > POS_TOL:
                return True
    return False


# ---------------------------------------------------------------------------
# boundary analysis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryAnalysis:
    """Structure of the domain boundary relative to the grain textures."""

    boundary_grains: tuple[int, ...]
    dual_points: tuple[Vec2, ...]
    perp_points: tuple[tuple[Vec2, int], ...]
    J: frozenset
    J_prime: frozenset
    outer_curves: dict = field(default_factory=dict, compare=False)


def _outer_curves_of(pc: Polycrystal, g: Grain) -> list[Curve]:
    out = []
    for c in g.boundary:
        probes = (c.start, c.point_at(0.5), c.end)
        if all(any(point_on_curve(p, d) for d in pc.domain) for p in probes):
            out.append(c)
    return out


def _near(p: Vec2, q: Vec2, tol: float = POS_TOL) -> bool:
    return (p - q).norm() <= tol


def analyze_boundary(pc: Polycrystal, angular_tol: float = ANGULAR_TOL) -> BoundaryAnalysis:
    """Classify the domain boundary: grains, dual points, perpendicular points.

    Dual points are domain-boundary points where two or more boundary
    grains meet; they are excluded from all compatibility tests.  A
    perpendicular point of grain i is a non-dual boundary point whose
    outward normal is orthogonal to the grain's slip direction; ``J``
    collects the grains possessing one.  ``J_prime`` collects grains
    whose outer boundary normals (up to sign) cover every direction,
    tested by interval arithmetic at ``angular_tol``.
    """
    outer: dict[int, list[Curve]] = {}
    for g in pc.grains:
        curves = _outer_curves_of(pc, g)
        if curves:
            outer[g.id] = curves
    boundary_grains = tuple(sorted(outer))

    endpoints: list[tuple[Vec2, int]] = []
    for gid, curves in outer.items():
        for c in curves:
            endpoints.append((c.start, gid))
            endpoints.append((c.end, gid))
    dual: list[Vec2] = []
    for p, gid in endpoints:
        if any(_near(p, q) for q in dual):
            continue
        owners = {h for q, h in endpoints if _near(p, q)}
        if len(owners) >= 2:
            dual.append(p)

    perp: list[tuple[Vec2, int]] = []
    for gid in boundary_grains:
        s = pc.grain_by_id(gid).slip()
        s_angle = math.atan2(float(s.y), float(s.x))
        for c in outer[gid]:
            if isinstance(c, Segment):
                if abs(float(c.normal_at(0.5).dot(s))) <= angular_tol:
                    mid = c.point_at(0.5)
                    if not any(_near(mid, q) for q in dual):
                        perp.append((mid, gid))
            else:
                for t in (s_angle + math.pi / 2, s_angle - math.pi / 2):
                    if c.covers_angle(t, angular_tol):
                        pt = c.center + Vec2(math.cos(t), math.sin(t)) * c.radius
                        if not any(_near(pt, q) for q in dual):
                            if not any(gid == h and _near(pt, q) for q, h in perp):
                                perp.append((pt, gid))

    j = frozenset(gid for _, gid in perp)
    j_prime = frozenset(gid for gid in boundary_grains
                        if _normals_cover_circle(outer[gid], angular_tol))
    return BoundaryAnalysis(boundary_grains=boundary_grains,
                            dual_points=tuple(dual),
                            perp_points=tuple(perp),
                            J=j, J_prime=j_prime,
                            outer_curves=outer)


def _normals_cover_circle(curves, angular_tol: float) -> bool:
    """Do the +-normal directions of the curves cover all of [0, pi)?

    Segments contribute isolated directions and are ignored; arcs
    contribute their swept radial range.  Intervals are reduced mod pi
    and merged, allowing joints up to ``angular_tol``.
    """
    pieces: list[tuple[float, float]] = []
    for c in curves:
        if not isinstance(c, Arc):
            continue
        sweep = c.sweep()
        if sweep >= math.pi - angular_tol:
            return True
        lo = c.from_angle if c.ccw else c.from_angle - sweep
        lo = math.fmod(lo, math.pi)
        if lo < 0:
            lo += math.pi
        hi = lo + sweep
        if hi <= math.pi:
            pieces.append((lo, hi))
        else:
            pieces.append((lo, math.pi))
            pieces.append((0.0, hi - math.pi))
    if not pieces:
        return False
    pieces.sort()
    merged = [list(pieces[0])]
    for lo, hi in pieces[1:]:
        if lo <= merged[-1][1] + angular_tol:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    if len(merged) > 1:
        return False
    return merged[0][0] <= angular_tol and merged[0][1] >= math.pi - angular_tol


# ---------------------------------------------------------------------------
# outer bounds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OuterBound:
    """Finite intersection of relaxed slip sets, or all of SL(2) if empty."""

    slip_directions: tuple[Vec2, ...]
    trivial_flag: bool

    def member(self, F: Mat2, tol: float = DEFAULT_TOL) -> bool:
        if abs(F.det() - 1) > tol:
            return False
        return all((F @ s).norm2() <= (1 + tol) ** 2 for s in self.slip_directions)


def outer_bound_perp(pc: Polycrystal, angular_tol: float = ANGULAR_TOL) -> OuterBound:
    """Outer bound from perpendicular boundary points only.

    Intersects the relaxed sets of the slip directions of grains in J;
    with J empty there is no constraint beyond det = 1 and the bound
    degenerates to SL(2) (``trivial_flag``).
    """
    analysis = analyze_boundary(pc, angular_tol)
    directions: list[Vec2] = []
    seen: list[float] = []
    for gid in sorted(analysis.J):
        theta = pc.grain_by_id(gid).theta
        if any(_textures_equal(theta, t) for t in seen):
            continue
        seen.append(theta)
        directions.append(slip_direction(theta))
    return OuterBound(slip_directions=tuple(directions),
                      trivial_flag=len(directions) == 0)


@dataclass(frozen=True)
class _BoundarySamples:
    """Per-grain boundary sample normals, perpendicular points included."""

    grain_theta: dict
    normals: dict  # gid -> (m, 2) float array


def boundary_samples(pc: Polycrystal, n_samples: int = 720,
                     analysis: Optional[BoundaryAnalysis] = None) -> _BoundarySamples:
    """Arc-length-uniform samples of outward normals along grain boundaries.

    Samples use the midpoint rule per curve so dual points (curve
    endpoints) are never hit; detected perpendicular points are always
    appended so the sharpest constraints are retained at any density.
    """
    if analysis is None:
        analysis = analyze_boundary(pc)
    lengths = {gid: sum(c.length() for c in curves)
               for gid, curves in analysis.outer_curves.items()}
    total = sum(lengths.values())
    normals: dict[int, list[tuple[float, float]]] = {gid: [] for gid in lengths}
    for gid, curves in analysis.outer_curves.items():
        for c in curves:
            m = max(1, round(n_samples * c.length() / total))
            for j in range(m):
                n = c.normal_at((j + 0.5) / m)
                normals[gid].append((float(n.x), float(n.y)))
    for pt, gid in analysis.perp_points:
        s = pc.grain_by_id(gid).slip()
        n = Vec2(-float(s.y), float(s.x))
        normals[gid].append((n.x, n.y))
        normals[gid].append((-n.x, -n.y))
    return _BoundarySamples(
        grain_theta={gid: pc.grain_by_id(gid).theta for gid in normals},
        normals={gid: np.asarray(rows, dtype=float) for gid, rows in normals.items()},
    )


def compatible_with_normals(F: Mat2, theta: float, normals: np.ndarray,
                            tol: float = DEFAULT_TOL) -> bool:
    """Vectorized rank-one compatibility of F against many interface normals.

    Same decision as ``compat.nu_compatible`` with slip direction at angle
    theta, evaluated for every row of ``normals`` at once.
    """
    s = slip_direction(theta)
    frame = decompose(F, s, tol)
    sn = normals[:, 0] * float(s.x) + normals[:, 1] * float(s.y)
    crs = normals[:, 0] * float(s.y) - normals[:, 1] * float(s.x)
    perp_mask = np.abs(sn) <= tol
    if np.any(perp_mask) and frame.beta > 1.0 + tol:
        return False
    rest = ~perp_mask
    if not np.any(rest):
        return True
    c = crs[rest] / sn[rest]
    lhs = (c * frame.beta + frame.gamma) ** 2 + 1.0 / frame.beta**2
    return bool(np.all(lhs >= 1.0 - tol))


def outer_bound_full_member(F: Mat2, pc: Polycrystal, n_samples: int = 720,
                            tol: float = DEFAULT_TOL,
                            samples: Optional[_BoundarySamples] = None) -> bool:
    """Sampled membership in the full boundary-compatibility bound.

    Tests rank-one compatibility of F with the local slip system at
    ``n_samples`` boundary points (dual points excluded, perpendicular
    points always included); returns False at the first failing point.
    The sampled test over-approximates the bound; raise ``n_samples`` to
    sharpen it.  Precomputed ``samples`` may be passed when testing many
    matrices against one polycrystal.
    """
    if abs(F.det() - 1) > tol:
        raise NotSL2(f"det F = {float(F.det())!r}, expected 1")
    if samples is None:
        samples = boundary_samples(pc, n_samples)
    for gid, normals in samples.normals.items():
        if not compatible_with_normals(F, samples.grain_theta[gid], normals, tol):
            return False
    return True


def equal_perp_full(pc: Polycrystal, angular_tol: float = ANGULAR_TOL) -> bool:
    """Sufficient condition for the two outer bounds to coincide.

    True iff every boundary grain has a perpendicular point.
    """
    analysis = analyze_boundary(pc, angular_tol)
    return set(analysis.J) == set(analysis.boundary_grains)


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------

def _curve_to_dict(c: Curve) -> dict:
    if isinstance(c, Segment):
        return {"kind": "segment", "p": list(c.p.to_floats()), "q": list(c.q.to_floats())}
    return {"kind": "arc", "center": list(c.center.to_floats()), "radius": float(c.radius),
            "from_angle": float(c.from_angle), "to_angle": float(c.to_angle),
            "ccw": bool(c.ccw)}


def _curve_from_dict(d: dict) -> Curve:
    kind = d["kind"]
    if kind == "segment":
        return Segment(Vec2(*map(float, d["p"])), Vec2(*map(float, d["q"])))
    if kind == "arc":
        return Arc(Vec2(*map(float, d["center"])), float(d["radius"]),
                   float(d["from_angle"]), float(d["to_angle"]), bool(d.get("ccw", True)))
    raise ValueError(f"unknown curve kind {kind!r}")


def polycrystal_to_dict(pc: Polycrystal) -> dict:
    return {
        "domain": [_curve_to_dict(c) for c in pc.domain],
        "grains": [{"id": g.id, "boundary": [_curve_to_dict(c) for c in g.boundary],
                    "theta": float(g.theta)} for g in pc.grains],
    }


def polycrystal_from_dict(d: dict) -> Polycrystal:
    return Polycrystal(
        domain=tuple(_curve_from_dict(c) for c in d["domain"]),
        grains=tuple(Grain(id=int(g["id"]),
                           boundary=tuple(_curve_from_dict(c) for c in g["boundary"]),
                           theta=float(g["theta"]))
                     for g in d["grains"]),
    )


def load_polycrystal(path) -> Polycrystal:
    with open(path, "r", encoding="utf-8") as fh:
        return polycrystal_from_dict(json.load(fh))


# ---------------------------------------------------------------------------
# stock constructions
# ---------------------------------------------------------------------------

def quadrant_disk() -> Polycrystal:
    """Unit disk cut into four quadrant grains with alternating textures.

    Sector boundaries at 45 + 90 k degrees; textures alternate between 0
    and pi/2, so every boundary grain has a perpendicular point and the
    polycrystal is fully rigid.
    """
    o = Vec2(0.0, 0.0)
    grains = []
    for i in range(4):
        a = math.pi / 4 + i * math.pi / 2
        b = a + math.pi / 2
        pa = Vec2(math.cos(a), math.sin(a))
        pb = Vec2(math.cos(b), math.sin(b))
        grains.append(Grain(
            id=i + 1,
            boundary=(Segment(o, pa), Arc(o, 1.0, a, b, True), Segment(pb, o)),
            theta=0.0 if i % 2 == 0 else math.pi / 2,
        ))
    domain = (Arc(o, 1.0, 0.0, TAU, True),)
    return Polycrystal(domain=domain, grains=tuple(grains))


def chord_disk(heights, thetas) -> Polycrystal:
    """Unit disk sliced by horizontal chords into len(heights)+1 bands.

    ``heights`` are strictly increasing chord heights in (-1, 1);
    ``thetas`` gives one texture angle per band, bottom to top, with
    adjacent bands distinct mod pi.
    """
    hs = list(heights)
    if sorted(hs) != hs or any(not -1 < h < 1 for h in hs):
        raise InvalidPolycrystal("chord heights must be increasing and inside (-1, 1)")
    if len(thetas) != len(hs) + 1:
        raise InvalidPolycrystal("need one texture angle per band")
    o = Vec2(0.0, 0.0)

    def chord_pts(h):
        x = math.sqrt(max(0.0, 1.0 - h * h))
        return Vec2(-x, h), Vec2(x, h)

    def ang(p: Vec2) -> float:
        return math.atan2(float(p.y), float(p.x))

    grains = []
    bounds = [-1.0] + hs + [1.0]
    for i, theta in enumerate(thetas):
        a, b = bounds[i], bounds[i + 1]
        curves: list[Curve] = []
        if a == -1.0:
            lt, rt = chord_pts(b)
            curves.append(Arc(o, 1.0, ang(lt), ang(rt), True))
            curves.append(Segment(rt, lt))
        elif b == 1.0:
            la, ra = chord_pts(a)
            curves.append(Segment(la, ra))
            curves.append(Arc(o, 1.0, ang(ra), ang(la), True))
        else:
            la, ra = chord_pts(a)
            lb, rb = chord_pts(b)
            curves.append(Segment(la, ra))
            curves.append(Arc(o, 1.0, ang(ra), ang(rb), True))
            curves.append(Segment(rb, lb))
            curves.append(Arc(o, 1.0, ang(lb), ang(la), True))
        grains.append(Grain(id=i + 1, boundary=tuple(curves), theta=float(theta)))
    domain = (Arc(o, 1.0, 0.0, TAU, True),)
    return Polycrystal(domain=domain, grains=tuple(grains))


def halfdisk_bicrystal(theta_top: float, theta_bottom: float) -> Polycrystal:
    """Unit disk split along the horizontal diameter into two grains."""
    return chord_disk([0.0], [theta_bottom, theta_top])


def sheared_square_polycrystal() -> Polycrystal:
    """The three-grain tilted square carrying the two-slip construction.

    Grain 3 (texture 0) surrounds the central square; grains 1 and 2
    (texture pi/2) are the two wedges.  No side normal is orthogonal to
    e1 or e2, so the perpendicular-point bound is all of SL(2).
    """
    def poly(vv):
        pts = [Vec2(float(x), float(y)) for x, y in vv]
        return tuple(Segment(a, b) for a, b in zip(pts, pts[1:] + pts[:1]))

    g1 = Grain(id=1, boundary=poly([(0, 0), (1, 1), (2, 2), (1, 3)]), theta=math.pi / 2)
    g2 = Grain(id=2, boundary=poly([(2, 0), (3, -1), (4, 2), (3, 1)]), theta=math.pi / 2)
    g3 = Grain(id=3, boundary=poly([(0, 0), (3, -1), (2, 0), (3, 1), (4, 2),
                                    (1, 3), (2, 2), (1, 1)]), theta=0.0)
    domain = poly([(0, 0), (3, -1), (4, 2), (1, 3)])
    return Polycrystal(domain=domain, grains=(g1, g2, g3))


def random_chord_disk(rng: np.random.Generator, n_grains: int,
                      min_gap: float = 0.2, min_angle_gap: float = 0.05) -> Polycrystal:
    """Random chord-sliced disk with adjacent-distinct textures."""
    if not 2 <= n_grains <= 8:
        raise InvalidPolycrystal("n_grains must be between 2 and 8")
    while True:
        hs = np.sort(rng.uniform(-0.8, 0.8, size=n_grains - 1))
        if n_grains == 2 or np.min(np.diff(hs)) > min_gap:
            break
    thetas = [float(rng.uniform(0.0, math.pi))]
    for _ in range(n_grains - 1):
        while True:
            t = float(rng.uniform(0.0, math.pi))
            d = abs(t - thetas[-1])
            if min(d, math.pi - d) > min_angle_gap:
                thetas.append(t)
                break
    return chord_disk([float(h) for h in hs], thetas)
