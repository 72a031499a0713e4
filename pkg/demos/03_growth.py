"""Sphere sizes of the Cayley graphs of F(2), F(3), F(4) and the length sandwich."""

import time
from fractions import Fraction

from fpgroups import ball, diagram_to_normal_form, metric_D

for p, radius in [(2, 8), (3, 4), (4, 3)]:
    start = time.perf_counter()
    b = ball(p, radius)
    took = time.perf_counter() - start
    sizes = b.sphere_sizes
    ratios = [f"{b_ / a:.2f}" for a, b_ in zip(sizes[1:], sizes[2:])]
    print(f"F({p}) spheres {sizes}  ({took:.1f}s)")
    print(f"      successive ratios {ratios}")

# Every element of the ball satisfies D/(3(p-1)) <= |x| <= 3D.  The extreme
# ratios show how much room the constants leave.
print()
for p, radius in [(2, 8), (3, 4)]:
    lo, hi = Fraction(10**9), Fraction(0)
    for x, r in ball(p, radius).elements():
        d = metric_D(diagram_to_normal_form(x))
        if d:
            lo, hi = min(lo, Fraction(r, d)), max(hi, Fraction(r, d))
    print(f"F({p}) radius {radius}: |x|/D ranges over [{lo}, {hi}], allowed [{Fraction(1, 3 * (p - 1))}, 3]")
