r"""
How loose is the bound on random graphs?
========================================

For G(n, p) graphs the bound is always valid but not always tight. This
tallies ``bound - ω(G)`` over a few hundred seeded graphs per density.
"""

import collections

import matplotlib.pyplot as plt
import numpy as np

from cliqueceiling import accn, brute_force_omega, gen_gnp

n = 20
probs = (0.1, 0.3, 0.5, 0.7, 0.9)
gaps = {}
for p in probs:
    gaps[p] = collections.Counter(
        accn(g).bound_primary - brute_force_omega(g)
        for g in (gen_gnp(n, p, seed) for seed in range(300))
    )
    print(f"p={p}: " + ", ".join(f"gap {k}: {v}" for k, v in sorted(gaps[p].items())))

fig, ax = plt.subplots(figsize=(6, 3.5))
width = 0.15
for i, p in enumerate(probs):
    ks = np.array(sorted(gaps[p]))
    ax.bar(ks + (i - 2) * width, [gaps[p][k] for k in ks], width, label=f"p={p}")
ax.set_xlabel("bound - ω(G)")
ax.set_ylabel("graphs")
ax.legend()
fig.tight_layout()
fig.savefig("random_graph_gap.png", dpi=120)
