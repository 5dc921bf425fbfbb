"""
Coherent states collapse to a single star
=========================================

A coherent state has one star, repeated as many times as the polynomial
degree.  We check this for all three symmetries and then look at how the
numerical roots behave before the multiplicity is certified.
"""

import numpy as np

from majorana_stars import SymmetryKind, build_star_polynomial, coherent, stars
from majorana_stars.polyroots import aberth

# %%
# One parameter, three symmetries.  The star sits at z = 1/alpha in each.
alpha = 0.6 + 0.2j
for sym in (SymmetryKind.hw(30), SymmetryKind.su2(15), SymmetryKind.su11(0.5, 30)):
    s = stars(coherent(sym, alpha))
    (star,) = s.stars
    print(f"{sym.kind:5s} multiplicity={star.multiplicity:2d}  z={star.z:.12f}  1/alpha={1 / alpha:.12f}")

# %%
# Before certification: a plain Aberth run scatters a 20-fold root on a
# circle of radius about eps**(1/20).  The root *sum* is still sharp.
poly = build_star_polynomial(coherent(SymmetryKind.su2(10), 2.0))
raw, _, _ = aberth(poly.finite_coeffs)
print("raw scatter around 0.5:", np.abs(raw - 0.5).max())
print("raw root sum - 10     :", abs(raw.sum() - 10))

# %%
# The package clusters the scatter and certifies the multiplicity, giving a
# single point with the right weight.
print(stars(coherent(SymmetryKind.su2(10), 2.0)).stars)
