"""A disjunction whose hull needs exactly one extra inequality.

K is the 3-dimensional second-order cone and the disjunction is
x3 >= 1 or x1 + x3 >= 1.
"""
import numpy as np

from socdisj import (ConeSpec, b_sets, cut_family, d_sets, inf_f, linear_certificate,
                     membership, normalize, preflight, separate)

d = normalize(ConeSpec.second_order(3), [0, 0, 1], 1, [1, 0, 1], 1)
rep = preflight(d)
print("assumptions hold:", rep.passed, "| single inequality:", rep.single_inequality,
      "| closed:", rep.conv_closed)
print("D sets:", d_sets(d))
print("B sets:", b_sets(d))

for x in ([0, 0, 1], [0, 0, 0.4], [0.5, 0, 0.6], [-1, 0, 1.2]):
    val, arg = inf_f(d, x)
    print(f"x = {x}: member {membership(d, x)}, inf f = {val:.4f} at beta = {arg:.4f}")

res = separate(d, [0, 0, 0.4])
print("separating cut:", res.cut.to_dict(), "violation", round(res.violation, 12))

cert = linear_certificate(d, 1.0, 1, [1, 0])
print("certificate at beta = 1 along w~ = (1, 0):", cert.to_dict())

# B collapses to {1}, so the family has one cut per side
cuts = cut_family(d, 5)
X = np.array([[0, 0, 1], [1, 0, 1.5], [0.2, 0.3, 0.9]])
print(f"margins of the {len(cuts)} cuts at three points:")
print(np.round(np.array([c.margin(X) for c in cuts]), 6))
