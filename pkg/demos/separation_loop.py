"""A small cutting-plane loop: minimize a linear objective over the hull.

Each round solves the relaxation over K plus the cuts found so far (by a crude
grid over a box) and asks the oracle to separate the minimizer.
We keep the loop dependency free, so the relaxation is a brute-force search.
"""
import numpy as np

from socdisj import ConeSpec, Separated, normalize, separate

d = normalize(ConeSpec.second_order(3), [0, 0, 1], 1, [1, 0, 1], 1)
obj = np.array([0.3, 0.1, 1.0])

g = np.linspace(-2, 2, 81)
G = np.array(np.meshgrid(g, g, np.linspace(0, 2, 41), indexing="ij")).reshape(3, -1).T
G = G[G[:, 2] >= np.linalg.norm(G[:, :2], axis=1)]

cuts = []
for it in range(8):
    keep = np.ones(len(G), dtype=bool)
    for c in cuts:
        keep &= c.margin(G) >= -1e-9
    x = G[keep][np.argmin(G[keep] @ obj)]
    res = separate(d, x)
    print(f"round {it}: x = {np.round(x, 3)}, objective {x @ obj:.4f}, {res.kind}")
    if not isinstance(res, Separated):
        break
    cuts.append(res.cut)
