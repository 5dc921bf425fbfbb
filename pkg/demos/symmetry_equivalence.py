"""
Three symmetries, one constellation
===================================

HW, SU(2) and SU(1,1) use different star-equation weights, but a state
carried between them with :func:`transfer` keeps its stars.  For squeezed
vacua the same holds once the squeezing is rescaled.
"""

import numpy as np

from majorana_stars import SymmetryKind, build_star_polynomial, find_roots, from_amplitudes, squeezed_vacuum, transfer
from majorana_stars.analytic import matched_squeezing
from majorana_stars.starsolver import match_roots

rng = np.random.default_rng(11)
d = 12
hw = from_amplitudes(SymmetryKind.hw(d), rng.normal(size=d + 1) + 1j * rng.normal(size=d + 1))
base, _ = find_roots(build_star_polynomial(hw))

# %%
# Same amplitudes, different symmetry: the stars move.  Transferred
# amplitudes: the stars stay put.
for target in (SymmetryKind.su2(d / 2), SymmetryKind.su11(0.5, d)):
    naive, _ = find_roots(build_star_polynomial(from_amplitudes(target, hw.amplitudes)))
    moved, _ = find_roots(build_star_polynomial(transfer(hw, target)))
    print(f"{target.kind}: raw amplitudes {match_roots(base, naive):.3g}, transferred {match_roots(base, moved):.3g}")

# %%
# Squeezed vacua with matched squeezing.
xi = 0.2
ref, _ = find_roots(build_star_polynomial(squeezed_vacuum(SymmetryKind.hw(20), xi)))
for target in (SymmetryKind.su2(10), SymmetryKind.su11(0.5, 20)):
    xs = matched_squeezing(SymmetryKind.hw(20), xi, target)
    got, _ = find_roots(build_star_polynomial(squeezed_vacuum(target, xs)))
    print(f"{target.kind}: xi={xs.real:.3g}  max root distance {match_roots(ref, got):.3g}")
