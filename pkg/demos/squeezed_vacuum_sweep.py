"""
Squeezed vacuum: two meridians and a south pole
===============================================

Squeezed-vacuum stars come in +-z pairs on two meridians fixed by arg(xi).
An odd cutoff adds one star at the south pole.  Raising the squeezing
pulls the constellation towards the north pole.  A larger cutoff keeps the
same two meridians and a similar spread of polar angles.
"""

import math

import numpy as np

from majorana_stars import SymmetryKind, squeezed_vacuum, stars
from majorana_stars.analytic import smsv_reduced_roots

# %%
# Phases depend only on arg(xi).
xi = 0.2 * np.exp(1j * math.pi / 3)
for N in (19, 20):
    s = stars(squeezed_vacuum(SymmetryKind.hw(N), xi))
    print(f"N={N}: phases {sorted({round(float(p), 6) for p in s.phis})}, south pole {s.south_pole_count}")
print("expected", sorted({round(math.pi / 2 - math.pi / 6, 6), round(3 * math.pi / 2 - math.pi / 6, 6)}))

# %%
# The reduced equation is half the degree and only has positive roots.
pred = smsv_reduced_roots(xi, 20)
print("reduced roots:", np.round(pred.reduced_roots.real, 6))

# %%
# Sweep the squeezing; polar angles shrink as xi grows.
for x in (0.05, 0.2, 0.5, 0.9):
    th = stars(squeezed_vacuum(SymmetryKind.hw(20), x)).thetas
    print(f"xi={x:4.2f}  theta range [{th.min():.3f}, {th.max():.3f}]")

# %%
# Truncation: the extra stars of the larger cutoff also reach closer to
# the north pole, so the leading angles shift while the overall spread stays
# similar.
a = np.sort(stars(squeezed_vacuum(SymmetryKind.hw(20), 0.2)).thetas)
b = np.sort(stars(squeezed_vacuum(SymmetryKind.hw(30), 0.2)).thetas)
print("leading polar angles, N=20:", np.round(a[:4], 4))
print("leading polar angles, N=30:", np.round(b[:4], 4))

# %%
# Optional picture.
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    fig, ax = plt.subplots(subplot_kw={"projection": "polar"})
    for N, marker in ((20, "o"), (30, "x")):
        s = stars(squeezed_vacuum(SymmetryKind.hw(N), 0.2))
        ax.scatter(s.phis, s.thetas, marker=marker, label=f"N={N}")
    ax.legend()
    fig.savefig("squeezed_vacuum_sweep.png", dpi=120)
    print("wrote squeezed_vacuum_sweep.png")
