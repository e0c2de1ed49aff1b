"""A disjunction whose hull needs a whole family of inequalities.

K is the 3-dimensional second-order cone and the disjunction is
-x3 >= -1 or -x2 >= 0, which normalizes with the sides swapped.
"""
import numpy as np

from socdisj import (ConeSpec, b_sets, beta_star, cut_family, inf_f, membership_batch, normalize,
                     preflight, separate)
from socdisj.cone import sample_cone_points

d = normalize(ConeSpec.second_order(3), [0, 0, -1], -1, [0, -1, 0], 0)
print("sides swapped by normalization:", d.swapped)
print("report:", preflight(d).to_dict())
print("B sets:", b_sets(d))

# the minimizing multiplier moves with the point
for x in ([0.5, 0.5, 1.0], [0.0, 0.5, 0.8], [-0.3, 0.2, 0.5]):
    val, arg = inf_f(d, x)
    print(f"x = {x}: critical beta {beta_star(d, x):.6f}, inf f over B1 = {val:.6f} at {arg:.6f}")

res = separate(d, [0, 2, 3])
print("separation of (0, 2, 3):", res.cut.to_dict(), "violation", res.violation)

rng = np.random.default_rng(7)
X = sample_cone_points(d.cone, "interior", 20000, rng) * rng.uniform(0, 3, (20000, 1))
inside = membership_batch(d, X)
print(f"fraction of sampled cone points in the hull: {inside.mean():.3f}")
print("cut family size at k = 21:", len(cut_family(d)))
