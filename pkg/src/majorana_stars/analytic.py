"""Closed-form constellations used to cross-check the numerical solver.

Nothing here calls :func:`majorana_stars.starsolver.build_star_polynomial`;
the squeezed-vacuum routine solves its own half-degree reduced equation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from . import polyroots
from .algebra import SU2, SymmetryKind
from .starsolver import SolverConfig

__all__ = [
    "CatStarPrediction",
    "SqueezedPrediction",
    "coherent_root",
    "cat_two_roots",
    "reduced_equation_coefficients",
    "smsv_reduced_roots",
    "squeezed_equivalence_map",
    "matched_squeezing",
]


def coherent_root(sym: SymmetryKind, alpha: complex) -> tuple[complex, int]:
    """The single fully degenerate star of a coherent state: ``z = 1/alpha``."""
    alpha = complex(alpha)
    if alpha == 0:
        return complex(math.inf, 0), sym.degree
    return 1 / alpha, sym.degree


@dataclass(frozen=True)
class CatStarPrediction:
    n: int
    z: complex
    theta: float
    phi: float


def cat_two_roots(alpha: complex, cutoff: int) -> list[CatStarPrediction]:
    """Stars of the two-component cat reached at a quarter Kerr period.

    ``z_n = (i/alpha) tan((4n+1) pi / (4 N_c))`` for ``n = 0 .. N_c-1``.  The
    azimuth sits on ``pi/2 - arg(alpha)`` while the tangent is positive and
    jumps to ``3pi/2 - arg(alpha)`` once ``n`` passes ``(N_c-1)//2``.
    """
    alpha = complex(alpha)
    if alpha == 0 or cutoff < 1:
        raise ValueError("need alpha != 0 and cutoff >= 1")
    arg = math.atan2(alpha.imag, alpha.real)
    out = []
    for n in range(cutoff):
        t = math.tan((4 * n + 1) * math.pi / (4 * cutoff))
        base = math.pi / 2 if n <= (cutoff - 1) // 2 else 3 * math.pi / 2
        out.append(CatStarPrediction(
            n=n,
            z=1j * t / alpha,
            theta=2 * math.atan(abs(t) / abs(alpha)),
            phi=(base - arg) % (2 * math.pi),
        ))
    return out


def reduced_equation_coefficients(cutoff: int) -> np.ndarray:
    """Ascending coefficients ``(-1)^n / ((N_c - 2n)! n!)``, ``n = 0 .. N_c//2``, scaled to max 1."""
    m = np.arange(cutoff // 2 + 1)
    log_mag = -(gammaln(cutoff - 2 * m + 1.0) + gammaln(m + 1.0))
    return np.where(m % 2 == 0, 1.0, -1.0) * np.exp(log_mag - log_mag.max())


@dataclass(frozen=True)
class SqueezedPrediction:
    """Reduced roots, the star roots they generate, and the count at infinity."""

    reduced_roots: np.ndarray
    star_roots: np.ndarray
    infinite_count: int
    degenerate: bool = False


def smsv_reduced_roots(xi: complex, cutoff: int, cfg: SolverConfig = SolverConfig()) -> SqueezedPrediction:
    """Stars of the HW squeezed vacuum via the reduced equation in ``u = -z^2 xi / 2``.

    Each positive root ``u_k`` yields the pair ``z = +-i sqrt(2 u_k / xi)``;
    an odd cutoff leaves one star at the south pole.  ``xi = 0`` is the
    vacuum: every star sits at the south pole and ``degenerate`` is set.

    The monomial reduced equation becomes badly conditioned once the cutoff
    passes about 40; rounding the coefficients alone then shifts the small
    roots visibly.
    """
    xi = complex(xi)
    if xi == 0:
        return SqueezedPrediction(np.zeros(0), np.zeros(0, dtype=complex), cutoff, degenerate=True)
    coeffs = reduced_equation_coefficients(cutoff)
    if coeffs.size > 1:
        reduced, _ = polyroots.solve(
            coeffs, max_iter=cfg.max_iter, step_tol=cfg.root_tol,
            residual_tol=cfg.residual_tol, cluster_radius=cfg.cluster_radius,
        )
    else:
        reduced = np.zeros(0, dtype=complex)
    reduced = np.sort_complex(reduced)
    half = np.sqrt(2 * reduced.real / xi)
    star_roots = np.concatenate([1j * half, -1j * half])
    return SqueezedPrediction(reduced, star_roots, cutoff % 2)


def squeezed_equivalence_map(sym: SymmetryKind, xi: complex) -> complex:
    """Scale ``s`` with ``u = s z^2`` turning the squeezed-vacuum star equation into the reduced one."""
    xi = complex(xi)
    if sym.kind == SU2:
        return -xi / (2 * sym.two_j)
    return -xi / 2


def matched_squeezing(source: SymmetryKind, xi: complex, target: SymmetryKind) -> complex:
    """Squeezing for ``target`` giving the same star roots as ``xi`` does for ``source``."""
    s = squeezed_equivalence_map(source, xi)
    unit = squeezed_equivalence_map(target, 1.0)
    return s / unit
