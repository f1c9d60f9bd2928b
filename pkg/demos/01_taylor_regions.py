"""Constant-strain bounds of a texture, step by step.

A texture with many orientations sounds expensive to intersect, but the
bound only ever depends on orientation 0 and the two angles bracketing
the right angle.  This script reduces a seven-orientation fan, probes
memberships, and renders the shear-frame regions whose intersection
encodes the bound.
"""

import math

from polyslip import (gamma_bounds, is_trivial, normalize, psi, reduce_angles,
                      rotation, taylor_member)
from polyslip.cli import emit_lambda_plot

degs = [0, 30, 55, 80, 115, 140, 165]
aset = normalize([math.radians(d) for d in degs])
bound = reduce_angles(aset)

print(f"texture angles (deg):   {degs}")
print(f"reduced to ({bound.kind}): {[round(math.degrees(a), 1) for a in bound.angles]}")
print(f"trivial bound?          {is_trivial(aset)}")

# rotations always qualify; a generic stretch does not
print(f"rotation member?        {taylor_member(rotation(0.3), aset)}")
print(f"stretch member?         {taylor_member(psi(0.7, 0.0), aset)}")

# walk the admissible shear interval at a few stretches for the 80 degree angle
theta = math.radians(80)
print(f"\nshear intervals for theta = 80 deg:")
for beta in (math.sin(theta) + 1e-12, 0.99, 1.0):
    lo, hi = gamma_bounds(theta, beta)
    print(f"  beta = {beta:.4f}: gamma in [{lo:+.4f}, {hi:+.4f}]")

# a texture straddling the right angle with a wide gap stays non-trivial
wide = normalize([0.0, math.pi / 6, 5 * math.pi / 6])
print(f"\n{{0, 30, 150}} deg trivial?  {is_trivial(wide)}")

svg, csv, summary = emit_lambda_plot([math.pi / 10, 2 * math.pi / 10, 9 * math.pi / 10], 300)
with open("taylor_regions.svg", "w", encoding="utf-8") as fh:
    fh.write(svg)
with open("taylor_regions.csv", "w", encoding="utf-8") as fh:
    fh.write(csv)
print(f"\nwrote taylor_regions.svg / .csv (cells filled: {summary['cells_filled']})")
