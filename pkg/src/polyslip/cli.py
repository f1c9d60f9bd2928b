"""Command-line front end.

Every subcommand prints a single JSON object (or a key,value CSV with
``--format csv``) to stdout and diagnostics to stderr.  Exit codes:
0 success, 1 domain errors (invalid matrices, angles out of range, bad
polycrystals), 2 usage, parse or I/O errors.  Angles are radians unless
``--degrees`` is given; outputs are always radians.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import geometry, random_textures, shear_square
from .compat import find_connection, laminate_split, nu_compatible
from .errors import DomainError, PolyslipError
from .mat2 import Mat2, Vec2
from .svg import SvgCanvas
from .taylor import gamma_bounds, in_lambda, is_trivial, normalize, reduce_angles, taylor_M_member, taylor_member

_PALETTE = ("#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377")


def _parse_floats(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip() != ""]


def _parse_matrix(text: str) -> Mat2:
    vals = _parse_floats(text)
    if len(vals) != 4:
        raise ValueError("matrix needs 4 comma-separated entries, row-major")
    return Mat2(*vals)


def _parse_unit(text: str) -> Vec2:
    vals = _parse_floats(text)
    if len(vals) != 2:
        raise ValueError("vector needs 2 comma-separated entries")
    return Vec2(*vals).unit()


def _parse_gamma(text: str):
    # "1/2" or "0.5" parse exactly; exact gamma keeps the build rational
    try:
        return Fraction(text)
    except ValueError:
        return float(text)


def _angles_arg(text: str, degrees: bool) -> list[float]:
    vals = _parse_floats(text)
    if degrees:
        vals = [math.radians(v) for v in vals]
    return vals


def emit_lambda_plot(thetas, grid: int):
    """Raster the shear-frame regions and trace their boundary curves.

    Returns ``(svg_text, csv_text, summary)``.  The raster walks a
    (beta, gamma) grid and fills every cell whose center lies in the
    region of some angle; the CSV lists the exact boundary curves with
    columns ``theta,beta,gamma_minus,gamma_plus``.
    """
    for t in thetas:
        if not 0.0 < t < math.pi:
            raise DomainError(f"theta = {t!r} outside (0, pi)")
    gmax = 0.0
    for t in thetas:
        lo, hi = gamma_bounds(t, 1.0)
        gmax = max(gmax, abs(lo), abs(hi))
    gmax = min(max(gmax * 1.1, 0.5), 8.0)
    bmin, bmax = 0.0, 1.05

    canvas = SvgCanvas(-gmax, bmin, gmax, bmax, width=720)
    csv_lines = ["theta,beta,gamma_minus,gamma_plus"]
    filled = []
    db = (bmax - bmin) / grid
    dg = 2.0 * gmax / grid
    for k, theta in enumerate(thetas):
        color = _PALETTE[k % len(_PALETTE)]
        count = 0
        for i in range(grid):
            beta = bmin + (i + 0.5) * db
            for j in range(grid):
                gamma = -gmax + (j + 0.5) * dg
                if in_lambda(theta, beta, gamma):
                    canvas.rect(-gmax + j * dg, bmin + i * db, dg, db,
                                fill=color, opacity=0.45)
                    count += 1
        filled.append(count)
        st = math.sin(theta)
        for i in range(grid + 1):
            beta = st + (1.0 - st) * i / grid
            lo, hi = gamma_bounds(theta, min(beta, 1.0))
            csv_lines.append(f"{theta!r},{beta!r},{lo!r},{hi!r}")
    canvas.polyline([(-gmax, 0), (gmax, 0)], stroke="#888888", stroke_width=0.004)
    canvas.polyline([(0, bmin), (0, bmax)], stroke="#888888", stroke_width=0.004)
    summary = {"thetas": list(thetas), "grid": grid, "cells_filled": filled}
    return canvas.render(), "\n".join(csv_lines) + "\n", summary


def _cmd_taylor(args) -> dict:
    aset = normalize(_angles_arg(args.angles, args.degrees), args.tol)
    bound = reduce_angles(aset)
    return {
        "angles": list(aset.thetas),
        "shift": aset.shift,
        "kind": bound.kind,
        "reduced": list(bound.angles),
        "trivial": is_trivial(aset),
    }


def _cmd_member(args) -> dict:
    aset = normalize(_angles_arg(args.angles, args.degrees), args.tol)
    F = _parse_matrix(args.matrix)
    if args.space == "M":
        member = taylor_M_member(F, aset, args.tol)
    else:
        member = taylor_member(F, aset, args.tol)
    return {"member": member, "space": args.space, "reduced": list(reduce_angles(aset).angles)}


def _cmd_compat(args) -> dict:
    F = _parse_matrix(args.matrix)
    s = _parse_unit(args.slip)
    nu = _parse_unit(args.normal)
    ok = nu_compatible(F, s, nu, args.tol)
    conn = find_connection(F, s, nu, args.tol)
    payload = {"compatible": ok, "connection": None}
    if conn is not None:
        payload["connection"] = {"a": list(conn.a.to_floats()),
                                 "target": conn.target.to_rows()}
    return payload


def _cmd_laminate(args) -> dict:
    F = _parse_matrix(args.matrix)
    s = _parse_unit(args.slip)
    s2 = _parse_unit(args.slip2)
    split = laminate_split(F, s, s2, args.tol)
    return {
        "lambda": split.lam,
        "t_plus": split.t_plus,
        "t_minus": split.t_minus,
        "F_plus": split.F_plus.to_rows(),
        "F_minus": split.F_minus.to_rows(),
    }


def _cmd_outer(args) -> dict:
    pc = geometry.load_polycrystal(args.polycrystal)
    analysis = geometry.analyze_boundary(pc, args.angular_tol)
    bound = geometry.outer_bound_perp(pc, args.angular_tol)
    payload = {
        "boundary_grains": list(analysis.boundary_grains),
        "dual_points": [list(p.to_floats()) for p in analysis.dual_points],
        "perp_points": [{"point": list(p.to_floats()), "grain": g}
                        for p, g in analysis.perp_points],
        "J": sorted(analysis.J),
        "J_prime": sorted(analysis.J_prime),
        "perp_bound": {"directions": [list(s.to_floats()) for s in bound.slip_directions],
                       "trivial": bound.trivial_flag},
        "equal_perp_full": geometry.equal_perp_full(pc, args.angular_tol),
    }
    if args.matrix is not None:
        F = _parse_matrix(args.matrix)
        payload["member_perp"] = bound.member(F, args.tol)
        payload["member_full"] = geometry.outer_bound_full_member(
            F, pc, n_samples=args.samples, tol=args.tol)
    return payload


def _cmd_mc(args) -> dict:
    cfg = random_textures.McConfig(k=args.k, n_samples=args.n, seed=args.seed)
    res = random_textures.estimate_trivial_probability(cfg)
    return {"k": args.k, "n": args.n, "seed": args.seed,
            "estimate": res.estimate, "stderr": res.std_error,
            "analytic": res.analytic}


def _cmd_shear(args) -> dict:
    gamma = _parse_gamma(args.gamma)
    build = shear_square.build(gamma)
    payload = {
        "gamma": float(build.gamma),
        "exact": build.exact,
        "F": build.F_gamma.to_rows(),
        "conclusion": shear_square.conclusion(gamma),
        "checks": None,
    }
    if args.verify:
        payload["checks"] = shear_square.verify(build).as_dict()
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(shear_square.render_svg(build))
        payload["svg"] = args.svg
    if args.mesh:
        with open(args.mesh, "w", encoding="utf-8") as fh:
            json.dump(shear_square.mesh_dict(build), fh, indent=2, sort_keys=True)
            fh.write("\n")
        payload["mesh"] = args.mesh
    return payload


def _cmd_lambda_plot(args) -> dict:
    thetas = _angles_arg(args.thetas, args.degrees)
    svg_text, csv_text, summary = emit_lambda_plot(thetas, args.grid)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg_text)
        summary["svg"] = args.svg
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
        summary["csv"] = args.csv
    return summary


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyslip",
        description="Strain bounds for planar single-slip polycrystals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--tol", type=float, default=1e-9,
                       help="floating-point tolerance (default 1e-9)")
        p.add_argument("--degrees", action="store_true",
                       help="interpret input angles as degrees")
        p.add_argument("--format", choices=("json", "csv"), default="json",
                       help="stdout payload format")

    p = sub.add_parser("taylor", help="reduce a texture and test triviality")
    p.add_argument("--angles", required=True, help="comma-separated orientation angles")
    common(p)
    p.set_defaults(func=_cmd_taylor)

    p = sub.add_parser("member", help="constant-strain membership of a matrix")
    p.add_argument("--angles", required=True)
    p.add_argument("--matrix", required=True, help="a11,a12,a21,a22 row-major")
    p.add_argument("--space", choices=("N", "M"), default="N",
                   help="relaxed (N) or unrelaxed (M) strain sets")
    common(p)
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("compat", help="rank-one interface compatibility")
    p.add_argument("--matrix", required=True)
    p.add_argument("--slip", required=True, help="slip direction sx,sy (normalized)")
    p.add_argument("--normal", required=True, help="interface normal nx,ny (normalized)")
    common(p)
    p.set_defaults(func=_cmd_compat)

    p = sub.add_parser("laminate", help="split a strain into two slip-set strains")
    p.add_argument("--matrix", required=True)
    p.add_argument("--slip", required=True)
    p.add_argument("--slip2", required=True)
    common(p)
    p.set_defaults(func=_cmd_laminate)

    p = sub.add_parser("outer", help="boundary analysis and outer bounds")
    p.add_argument("--polycrystal", required=True, help="polycrystal JSON file")
    p.add_argument("--matrix", help="optional matrix to test for membership")
    p.add_argument("--samples", type=int, default=720,
                   help="boundary sampling density for the full bound")
    p.add_argument("--angular-tol", type=float, default=geometry.ANGULAR_TOL)
    common(p)
    p.set_defaults(func=_cmd_outer)

    p = sub.add_parser("mc", help="Monte Carlo triviality probability")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=_cmd_mc)

    p = sub.add_parser("shear", help="tilted-square two-slip construction")
    p.add_argument("--gamma", required=True,
                   help="shear parameter; fractions like 1/2 stay exact")
    p.add_argument("--verify", action="store_true", help="run the five checks")
    p.add_argument("--svg", help="write reference/deformed figure")
    p.add_argument("--mesh", help="write mesh JSON")
    common(p)
    p.set_defaults(func=_cmd_shear)

    p = sub.add_parser("lambda-plot", help="raster the shear-frame regions")
    p.add_argument("--thetas", required=True, help="comma-separated angles in (0, pi)")
    p.add_argument("--grid", type=int, default=200)
    p.add_argument("--svg", help="output SVG path")
    p.add_argument("--csv", help="output CSV path for boundary curves")
    common(p)
    p.set_defaults(func=_cmd_lambda_plot)

    return parser


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "csv":
        lines = ["key,value"]
        for key in sorted(payload):
            lines.append(f"{key},{json.dumps(payload[key], sort_keys=True)}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except PolyslipError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args.format)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
