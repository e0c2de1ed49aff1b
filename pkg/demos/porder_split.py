"""Split disjunctions on a p-order cone: t1 x_i >= 1 or -t2 x_i >= 1."""
import numpy as np

from socdisj import (POrderSplitInstance, pcomplement_margin, pmain_margin, split_cut_margin,
                     tau_star)
from socdisj.cone import ConeSpec, sample_cone_points

inst = POrderSplitInstance(3, 3.0, 1, 3.0, 1.0)
for x in ([1 / 3, 0, 1 / 3], [0, 0, 0.1], [0, 0, 2], [-1, 0, 1]):
    print(f"x = {np.round(x, 4)}: split cut {split_cut_margin(inst, x):+.5f}, "
          f"tau* = {tau_star(x, 1, 3.0):.5f}")

rng = np.random.default_rng(5)
for p in (1.5, 2.0, 3.0):
    inst = POrderSplitInstance(4, p, 2, 2.0, 0.5)
    X = sample_cone_points(ConeSpec.p_order(4, p), "interior", 5000, rng) * rng.uniform(0.1, 2, (5000, 1))
    a, b, c = split_cut_margin(inst, X), pmain_margin(inst, X), pcomplement_margin(inst, X)
    agree = np.mean((a >= 0) == (b >= 0))
    print(f"p = {p}: sign agreement of split cut and main form {agree:.4f}, "
          f"min complement margin {c.min():.2e}")
