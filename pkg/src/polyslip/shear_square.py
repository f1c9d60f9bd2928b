"""Piecewise-affine shear of a tilted square through two slip systems.

The domain is the square with corners (0,0), (1,3), (4,2), (3,-1),
partitioned into eight triangles around a central square.  For a shear
parameter gamma with |gamma| <= sqrt(3) - 1 an explicit continuous,
piecewise-affine map exists whose cell gradients alternate between the
relaxed strain sets of the slip directions e1 and e2 and whose boundary
trace is the affine map x -> F_gamma x with

    F_gamma = 1/5 [[3 gamma + 4, 4 gamma - 3], [3, 4]].

Since the texture {e1, e2} pins the constant-strain bound to rotations
while F_gamma is a rotation only at gamma = 0, every nonzero gamma in
range exhibits an attainable boundary strain outside that bound.

With rational gamma the whole construction is rational and ``verify``
checks continuity, incompressibility, membership, boundary trace and the
jump conditions with zero arithmetic error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import GammaOutOfRange
from .mat2 import E1, E2, Mat2, Vec2, is_SO2
from .slip import in_N
from .taylor import is_trivial, normalize

#: Admissible shear range is |gamma| <= GAMMA_MAX.
GAMMA_MAX = math.sqrt(3.0) - 1.0

_CELL_VERTICES = {
    "S": ((1, 1), (2, 0), (3, 1), (2, 2)),
    "T1": ((0, 0), (2, 0), (1, 1)),
    "T2": ((0, 0), (1, 1), (1, 3)),
    "T3": ((1, 1), (2, 2), (1, 3)),
    "T4": ((1, 3), (2, 2), (4, 2)),
    "T5": ((2, 2), (3, 1), (4, 2)),
    "T6": ((3, -1), (4, 2), (3, 1)),
    "T7": ((3, -1), (3, 1), (2, 0)),
    "T8": ((0, 0), (3, -1), (2, 0)),
}

#: Slip direction carried by each cell gradient.
GRAIN_OF_CELL = {
    "S": "e1", "T1": "e1", "T5": "e1", "T4": "e1", "T8": "e1",
    "T2": "e2", "T3": "e2", "T6": "e2", "T7": "e2",
}

#: Corners of the tilted square, counterclockwise.
DOMAIN_CORNERS = ((0, 0), (3, -1), (4, 2), (1, 3))


@dataclass(frozen=True, slots=True)
class Cell:
    """One affine piece x -> A x + b on a convex polygon."""

    name: str
    vertices: tuple[Vec2, ...]
    A: Mat2
    b: Vec2

    def value(self, p: Vec2) -> Vec2:
        return self.A @ p + self.b

    def contains(self, p: Vec2, tol=0) -> bool:
        verts = self.vertices
        for i, v in enumerate(verts):
            w = verts[(i + 1) % len(verts)]
            if (w - v).cross(p - v) < -tol:
                return False
        return True

    def area(self):
        verts = self.vertices
        twice = sum(v.cross(verts[(i + 1) % len(verts)]) for i, v in enumerate(verts))
        return twice / 2 if isinstance(twice, (float,)) else Fraction(twice, 2)


@dataclass(frozen=True, slots=True)
class PwAffineMap:
    """A continuous piecewise-affine map given by its affine cells."""

    cells: tuple[Cell, ...]

    def cell(self, name: str) -> Cell:
        for c in self.cells:
            if c.name == name:
                return c
        raise KeyError(name)

    def cell_containing(self, p: Vec2, tol=0) -> Cell:
        for c in self.cells:
            if c.contains(p, tol):
                return c
        raise KeyError(f"point {p} outside every cell")

    def interfaces(self) -> list[tuple[Cell, Cell, Vec2, Vec2]]:
        """Pairs of cells sharing an edge, with the shared endpoints."""
        out = []
        for i, c1 in enumerate(self.cells):
            for c2 in self.cells[i + 1:]:
                shared = [v for v in c1.vertices if v in c2.vertices]
                if len(shared) == 2:
                    out.append((c1, c2, shared[0], shared[1]))
        return out


@dataclass(frozen=True, slots=True)
class ShearSquareBuild:
    gamma: object
    map: PwAffineMap
    F_gamma: Mat2
    grain_assignment: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return not isinstance(self.gamma, float)


def _gamma_in_range(gamma) -> bool:
    g = abs(gamma)
    if isinstance(gamma, float):
        return (1.0 + g) ** 2 <= 3.0 * (1.0 + 1e-12)
    return (1 + g) ** 2 <= 3


def _gradients(gamma) -> dict[str, Mat2]:
    one = Fraction(1) if not isinstance(gamma, float) else 1.0
    h = one / 2
    a15 = Mat2(1 + gamma, 3 * gamma - 1, one, 3 * one) * h
    a37 = Mat2(3 + gamma, gamma - 1, one, one) * h
    a26 = Mat2(1 + 3 * gamma, gamma - 1, 3 * one, one) * h
    a48 = Mat2(1 + gamma, gamma - 3, one, one) * h
    return {
        "S": Mat2(one, gamma * one, 0 * one, one),
        "T1": a15, "T5": a15,
        "T3": a37, "T7": a37,
        "T2": a26, "T6": a26,
        "T4": a48, "T8": a48,
    }


def boundary_matrix(gamma) -> Mat2:
    """Affine boundary strain of the construction."""
    one = Fraction(1) if not isinstance(gamma, float) else 1.0
    fifth = one / 5
    return Mat2(3 * gamma + 4, 4 * gamma - 3, 3 * one, 4 * one) * fifth


def build(gamma, pre_rotation: Optional[Mat2] = None) -> ShearSquareBuild:
    """Assemble the nine-cell map for a shear parameter gamma.

    ``gamma`` may be a float, int or ``Fraction``; exact inputs give an
    exactly verifiable build.  ``pre_rotation`` left-multiplies every
    cell gradient by a rotation, which rotates the boundary strain the
    same way.

    Raises
    ------
    GammaOutOfRange
        If |gamma| > sqrt(3) - 1, where a cell would leave its strain set.
    """
    if isinstance(gamma, float) and gamma.is_integer():
        gamma = int(gamma)
    if not _gamma_in_range(gamma):
        raise GammaOutOfRange(f"|gamma| = {abs(float(gamma))!r} exceeds sqrt(3) - 1")
    grads = _gradients(gamma)
    f_gamma = boundary_matrix(gamma)
    if pre_rotation is not None:
        grads = {name: pre_rotation @ A for name, A in grads.items()}
        f_gamma = pre_rotation @ f_gamma

    verts = {name: tuple(Vec2(x, y) for x, y in vv) for name, vv in _CELL_VERTICES.items()}
    zero = Vec2(0 * grads["S"].a11, 0 * grads["S"].a11)

    # Translations follow from continuity: walk the cell adjacency from S
    # and match values at a shared vertex; finally shift so v(0,0) = (0,0).
    b = {"S": zero}
    adjacency = {name: [] for name in verts}
    names = list(verts)
    for i, n1 in enumerate(names):
        for n2 in names[i + 1:]:
            shared = [v for v in verts[n1] if v in verts[n2]]
            if len(shared) == 2:
                adjacency[n1].append((n2, shared[0]))
                adjacency[n2].append((n1, shared[0]))
    queue = ["S"]
    while queue:
        cur = queue.pop()
        for nxt, pt in adjacency[cur]:
            if nxt not in b:
                b[nxt] = (grads[cur] @ pt + b[cur]) - grads[nxt] @ pt
                queue.append(nxt)
    origin = Vec2(0 * grads["S"].a11, 0 * grads["S"].a11)
    anchor_cell = "T1"
    v00 = grads[anchor_cell] @ origin + b[anchor_cell]
    b = {name: bb - v00 for name, bb in b.items()}

    cells = tuple(Cell(name=name, vertices=verts[name], A=grads[name], b=b[name])
                  for name in names)
    return ShearSquareBuild(gamma=gamma, map=PwAffineMap(cells=cells),
                            F_gamma=f_gamma, grain_assignment=dict(GRAIN_OF_CELL))


@dataclass(frozen=True, slots=True)
class VerificationReport:
    """Outcome of the five structural checks on a build."""

    continuity: bool
    determinant: bool
    membership: bool
    boundary_trace: bool
    rank_one_jumps: bool
    failures: tuple[str, ...] = ()

    @property
    def all_passed(self) -> bool:
        return (self.continuity and self.determinant and self.membership
                and self.boundary_trace and self.rank_one_jumps)

    def as_dict(self) -> dict:
        return {
            "continuity": self.continuity,
            "determinant": self.determinant,
            "membership": self.membership,
            "boundary_trace": self.boundary_trace,
            "rank_one_jumps": self.rank_one_jumps,
            "all_passed": self.all_passed,
        }


def verify(build_: ShearSquareBuild, tol: Optional[float] = None) -> VerificationReport:
    """Run the five checks; exact (tol = 0) for rational builds.

    (a) value agreement at both endpoints of all internal interfaces,
    (b) unit determinant on every cell, (c) strain-set membership per
    grain assignment, (d) boundary trace equal to x -> F_gamma x at the
    corners and two interior points per edge, (e) gradient jumps across
    interfaces annihilate the edge direction (rank-one with the edge
    normal).
    """
    if tol is None:
        tol = 0.0 if build_.exact else 1e-9
    failures = []
    pam = build_.map

    interfaces = pam.interfaces()
    continuity = True
    jumps = True
    for c1, c2, p, q in interfaces:
        if _vec_err(c1.value(p) - c2.value(p)) > tol or _vec_err(c1.value(q) - c2.value(q)) > tol:
            continuity = False
            failures.append(f"continuity: {c1.name}|{c2.name}")
        jump = c1.A - c2.A
        if _vec_err(jump @ (q - p)) > tol:
            jumps = False
            failures.append(f"jump: {c1.name}|{c2.name}")

    determinant = True
    membership = True
    slip_of = {"e1": E1, "e2": E2}
    for cell in pam.cells:
        if abs(cell.A.det() - 1) > tol:
            determinant = False
            failures.append(f"det: {cell.name}")
        s = slip_of[build_.grain_assignment[cell.name]]
        if not in_N(cell.A, s, tol):
            membership = False
            failures.append(f"membership: {cell.name}")

    boundary = True
    corners = [Vec2(x, y) for x, y in DOMAIN_CORNERS]
    probes = list(corners)
    for a, bb in zip(corners, corners[1:] + corners[:1]):
        for lam_num in (1, 2):
            lam = Fraction(lam_num, 3) if build_.exact else lam_num / 3
            probes.append(a + (bb - a) * lam)
    geo_tol = 0 if build_.exact else 1e-9
    for p in probes:
        cell = pam.cell_containing(p, geo_tol)
        if _vec_err(cell.value(p) - build_.F_gamma @ p) > tol:
            boundary = False
            failures.append(f"boundary trace at {p.to_floats()}")

    return VerificationReport(continuity=continuity, determinant=determinant,
                              membership=membership, boundary_trace=boundary,
                              rank_one_jumps=jumps, failures=tuple(failures))


def _vec_err(v: Vec2) -> float:
    return max(abs(float(v.x)), abs(float(v.y)))


def average_gradient(build_: ShearSquareBuild) -> Mat2:
    """Area-weighted mean of the cell gradients; equals F_gamma."""
    total = None
    area_sum = None
    for cell in build_.map.cells:
        a = cell.area()
        term = cell.A * a
        total = term if total is None else total + term
        area_sum = a if area_sum is None else area_sum + a
    return total * (1 / area_sum)


def grain_components(build_: ShearSquareBuild) -> list[tuple[str, frozenset]]:
    """Connected components of the cell grain assignment.

    Two cells are joined when they share an edge and carry the same slip
    direction; the components are the grains of the induced polycrystal.
    """
    assign = build_.grain_assignment
    neighbors = {c.name: set() for c in build_.map.cells}
    for c1, c2, _, _ in build_.map.interfaces():
        if assign[c1.name] == assign[c2.name]:
            neighbors[c1.name].add(c2.name)
            neighbors[c2.name].add(c1.name)
    seen = set()
    comps = []
    for name in neighbors:
        if name in seen:
            continue
        stack, comp = [name], set()
        while stack:
            cur = stack.pop()
            if cur in comp:
                continue
            comp.add(cur)
            stack.extend(neighbors[cur] - comp)
        seen |= comp
        comps.append((assign[name], frozenset(comp)))
    return comps


def conclusion(gamma) -> dict:
    """Summary flags: trivial bound, rotation boundary value, separation."""
    if isinstance(gamma, float) and gamma.is_integer():
        gamma = int(gamma)
    if not _gamma_in_range(gamma):
        raise GammaOutOfRange(f"|gamma| = {abs(float(gamma))!r} exceeds sqrt(3) - 1")
    taylor_trivial = is_trivial(normalize([0.0, math.pi / 2]))
    if isinstance(gamma, float):
        f_in_so2 = is_SO2(boundary_matrix(gamma), 1e-12)
    else:
        f_in_so2 = gamma == 0
    return {
        "taylor_trivial": taylor_trivial,
        "F_in_SO2": f_in_so2,
        "separates": taylor_trivial and not f_in_so2,
    }


def render_svg(build_: ShearSquareBuild) -> str:
    """Reference and deformed configurations side by side, colored by grain."""
    from .svg import SvgCanvas

    pam = build_.map
    corners = [Vec2(float(x), float(y)) for x, y in DOMAIN_CORNERS]
    ref_pts = [v for c in pam.cells for v in c.vertices]
    def_pts = [c.value(v) for c in pam.cells for v in c.vertices]
    xs = [float(p.x) for p in ref_pts]
    ys = [float(p.y) for p in ref_pts + def_pts]
    dxs = [float(p.x) for p in def_pts]
    shift = max(xs) - min(dxs) + 1.0
    canvas = SvgCanvas(min(xs) - 0.2, min(ys) - 0.2,
                       max(dxs) + shift + 0.2, max(ys) + 0.2, width=900)
    fill = {"e1": "#f4a442", "e2": "#4d9fd6"}
    for c in pam.cells:
        color = fill[build_.grain_assignment[c.name]]
        canvas.polygon([p.to_floats() for p in c.vertices], fill=color,
                       stroke="black", stroke_width=0.02, opacity=0.9)
        canvas.polygon([(float(c.value(v).x) + shift, float(c.value(v).y))
                        for v in c.vertices], fill=color,
                       stroke="black", stroke_width=0.02, opacity=0.9)
    canvas.polygon([p.to_floats() for p in corners], fill="none",
                   stroke="black", stroke_width=0.04)
    return canvas.render()


def mesh_dict(build_: ShearSquareBuild) -> dict:
    """Reference and deformed vertex lists with cell connectivity."""
    index: dict[tuple[float, float], int] = {}
    ref: list[list[float]] = []
    deformed: list[list[float]] = []
    cells_out = []
    for cell in build_.map.cells:
        ids = []
        for v in cell.vertices:
            key = v.to_floats()
            if key not in index:
                index[key] = len(ref)
                ref.append(list(key))
                deformed.append(list(cell.value(v).to_floats()))
            ids.append(index[key])
        cells_out.append({"name": cell.name, "vertices": ids,
                          "grain": build_.grain_assignment[cell.name]})
    return {
        "gamma": float(build_.gamma),
        "boundary_matrix": build_.F_gamma.to_rows(),
        "vertices_reference": ref,
        "vertices_deformed": deformed,
        "cells": cells_out,
    }
