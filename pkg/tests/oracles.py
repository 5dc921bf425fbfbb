"""Independent reference computations for the test-suite.

Nothing here touches the package's root finder.
"""
import math

import mpmath as mp
import numpy as np
from numpy.polynomial import hermite_e


def hermite_zeros(n):
    """Zeros of the probabilists' Hermite polynomial He_n."""
    c = np.zeros(n + 1)
    c[-1] = 1
    return np.sort(hermite_e.hermeroots(c))


def smsv_star_roots(xi, cutoff):
    """Squeezed-vacuum stars: z = 1 / (i sqrt(xi) x) over nonzero Hermite zeros x."""
    x = hermite_zeros(cutoff)
    x = x[np.abs(x) > 1e-12]
    return 1 / (1j * np.sqrt(complex(xi)) * x)


def smsv_reduced_roots(cutoff):
    """Reduced-equation roots u = 1/(2 x^2) over positive Hermite zeros."""
    x = hermite_zeros(cutoff)
    return np.sort(1 / (2 * x[x > 1e-12] ** 2))


def mp_roots(coeffs_ascending, dps=60):
    """High-precision roots with mpmath (coefficients may be mpmath numbers)."""
    with mp.workdps(dps):
        roots = mp.polyroots(list(coeffs_ascending)[::-1], maxsteps=400, extraprec=4 * dps)
        return np.array([complex(r) for r in roots])


def four_cat_coeffs(cutoff, alpha):
    """Exact star coefficients of a coherent state evolved to a quarter of a half-period."""
    return [mp.binomial(cutoff, n) * (-alpha) ** n * mp.expjpi(-mp.mpf(n * n % 8) / 4)
            for n in range(cutoff + 1)]


def four_phase_deviation(u):
    """Distance of arg(u) to the nearest of pi/4, 3pi/4, 5pi/4, 7pi/4."""
    a = np.mod(np.angle(u), 2 * np.pi)
    centres = (2 * np.arange(4) + 1) * np.pi / 4
    return np.min(np.abs(a[:, None] - centres[None, :]), axis=1)


def binomial_power_coeffs(d, root):
    """Ascending coefficients of (1 - z/root)^d using exact integers where possible."""
    return np.array([math.comb(d, n) * (-1 / root) ** n for n in range(d + 1)], dtype=complex)
