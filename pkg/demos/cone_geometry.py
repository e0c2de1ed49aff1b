"""Classify a few vectors against second-order and p-order cones."""
import numpy as np

from socdisj import ConeSpec, classify_porder, classify_soc, p_norm, sample_cone_points

points = [(0, 0, 1), (3, 4, 5), (3, 4, 4.9), (0, 0, 0), (-1, 0, -2)]
for v in points:
    print(f"{str(v):16s} soc: {classify_soc(v).name:12s} p=3: {classify_porder(v, 3.0).name}")

# the 3-cone is larger than the 2-cone, which is larger than the 1.5-cone
v = np.array([0.6, 0.6, 1.0])
for p in (1.5, 2.0, 3.0):
    print(f"p={p}: |x~|_p = {p_norm(v[:-1], p):.4f}  ->  {classify_porder(v, p).name}")

rng = np.random.default_rng(0)
X = sample_cone_points(ConeSpec.second_order(4), "boundary", 5, rng)
print("boundary samples, x_n - |x~|:", np.round(X[:, -1] - np.linalg.norm(X[:, :-1], axis=1), 14))
