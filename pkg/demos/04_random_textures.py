"""How fast do random textures pin the constant-strain bound to rotations?

With k orientations drawn uniformly (plus the reference orientation 0)
the probability of a trivial bound is 1 - (k+1)/2^k, so a myriad of
random grains is almost surely rigid in the constant-strain sense.  The
table compares Monte Carlo frequencies with the closed form; the second
part certifies triviality for the powers of one fixed rotation.
"""

import math

from polyslip import McConfig, estimate_trivial_probability, find_kl, is_trivial, normalize

print(" k   estimate     closed form   |diff| / stderr")
for k in range(1, 9):
    res = estimate_trivial_probability(McConfig(k=k, n_samples=100_000, seed=2024 + k))
    sig = abs(res.estimate - res.analytic) / res.std_error if res.std_error else 0.0
    print(f"{k:2d}   {res.estimate:.5f}      {res.analytic:.5f}       {sig:4.2f}")

print("\niterate witnesses for a single rotation angle phi:")
for phi in (math.pi / 3, math.pi / 4, 0.8 * math.pi, 2.5):
    k, l, tk, tl = find_kl(phi)
    cert = is_trivial(normalize([0.0, tk, tl]))
    print(f"  phi = {phi:.4f}: powers ({k}, {l}) give angles "
          f"({tk:.4f}, {tl:.4f}); trivial: {cert}")
