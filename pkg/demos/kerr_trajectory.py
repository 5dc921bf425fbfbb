"""
Stars under Kerr evolution
==========================

Under H = Omega n^2 a coherent state turns into cat states at rational
fractions of the period 2 pi / Omega and comes back as |-alpha> at half the
period.  We follow the stars through the special times.
"""

import math

import numpy as np

from majorana_stars import EvolutionSpec, SymmetryKind, coherent, special_times, trajectory
from majorana_stars.analytic import cat_two_roots

alpha, N = 2.0, 20
spec = EvolutionSpec(omega_nl=1.0, times=tuple(special_times(1.0)))
for t, s in trajectory(coherent(SymmetryKind.hw(N), alpha), spec):
    print(f"t={t:6.4f}  distinct stars={len(s.stars):2d}  multiplicities={s.multiplicities[:3]}...")

# %%
# At t = pi/2 the two-component cat has stars on two meridians with polar
# angles given by a tangent formula.
_, cat = trajectory(coherent(SymmetryKind.hw(N), alpha), EvolutionSpec(times=(math.pi / 2,)))[0]
pred = sorted(p.theta for p in cat_two_roots(alpha, N))
print("max polar-angle error vs formula:", np.max(np.abs(np.sort(cat.thetas) - pred)))

# %%
# At t = pi/4 most stars line up on the four diagonal phases, but the two
# outermost roots stay about 0.34 rad away however large the cutoff.
for N in (20, 50):
    _, s = trajectory(coherent(SymmetryKind.hw(N), alpha), EvolutionSpec(times=(math.pi / 4,)))[0]
    rel = np.mod(s.phis, math.pi / 2) - math.pi / 4
    print(f"N={N}: phase offsets from the diagonals, largest three {np.sort(np.abs(rel))[-3:]}")
