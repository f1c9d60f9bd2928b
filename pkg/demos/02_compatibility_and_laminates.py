"""Rank-one interfaces: when can a strain meet a slip set across a line?

Whether a jump a(x)nu can carry a matrix into the strain set of a slip
direction depends only on the shear-frame coordinates and the angle
between slip and interface.  The second half splits an arbitrary
volume-preserving strain into a two-slip laminate.
"""

from polyslip import (Mat2, ShearFrame, Vec2, E1, E2, decompose,
                      find_connection, in_M, in_N, laminate_split,
                      nu_compatible)

F = Mat2(2.0, 0.0, 0.0, 0.5)
print(f"F = diag(2, 1/2), slip e1")
print(f"  compatible across normal e1? {nu_compatible(F, E1, E1)}")
print(f"  compatible across normal e2? {nu_compatible(F, E1, E2)}   "
      f"(perpendicular case: reduces to |F e1| <= 1, here |F e1| = 2)")

# an over-stretched strain (|G e1| = 1.6 > 1): not in the set itself, but
# still reachable across a 45-degree interface
G = ShearFrame(rho=0.0, beta=1.6, gamma=0.8, s=E1).reconstruct()
nu = Vec2(1.0, 1.0).unit()
print(f"\nstretched strain, interface at 45 degrees:")
print(f"  compatible? {nu_compatible(G, E1, nu)}")
conn = find_connection(G, E1, nu)
print(f"  jump vector a = ({conn.a.x:+.4f}, {conn.a.y:+.4f})")
print(f"  target in the strain set? {in_M(conn.target, E1)}")
print(f"  jump annihilates the interface direction? "
      f"{((conn.target - G) @ nu.perp()).norm() < 1e-12}")

sp = Vec2(1.0, 1.0).unit()
split = laminate_split(F, E1, sp)
print(f"\nlaminate of diag(2, 1/2) between slips e1 and (1,1)/sqrt(2):")
print(f"  weight lambda = {split.lam:.4f}, parameters t = "
      f"({split.t_minus:+.4f}, {split.t_plus:+.4f})")
for tag, H in (("F_plus ", split.F_plus), ("F_minus", split.F_minus)):
    frame = decompose(H, E1)
    members = [s for s, v in (("e1", in_N(H, E1)), ("s'", in_N(H, sp))) if v]
    print(f"  {tag}: det = {H.det():.12f}, member of relaxed set(s) {members}")
recon = split.lam * split.F_plus + (1 - split.lam) * split.F_minus
print(f"  convex combination reproduces F? {(recon - F).max_abs() < 1e-12}")
