"""Simultaneous root finding for dense complex polynomials.

Coefficients are ascending, ``p(z) = sum_n a[n] z^n``.  The iteration is
Aberth-Ehrlich; afterwards every root is Newton-polished in extended
precision and groups of roots that scatter around a multiple root are
certified and collapsed onto that root.

Evaluation switches to the reversed polynomial ``z^d p(1/z)`` whenever
``|z| > 1`` so that Horner's scheme never overflows.
"""
from __future__ import annotations

import numpy as np
from scipy.sparse.csgraph import connected_components

__all__ = [
    "RootFindingError",
    "aberth",
    "relative_residuals",
    "chordal_distance",
    "symmetric_function_errors",
    "solve",
]

_EPS = np.finfo(float).eps
_XDTYPE = np.clongdouble
# chordal radii tried (coarse to fine) when looking for scattered multiple roots
_CLUSTER_SCHEDULE = (0.5, 0.25, 0.1, 0.05, 0.02, 0.01, 3e-3, 1e-3, 3e-4, 1e-4, 1e-5)


class RootFindingError(ArithmeticError):
    """Raised when the iteration stalls; carries the best iterate."""

    def __init__(self, message, roots, residuals, iterations):
        super().__init__(message)
        self.roots = roots
        self.residuals = residuals
        self.iterations = iterations


def chordal_distance(z, w):
    """Chordal distance on the Riemann sphere (diameter 2)."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    return 2 * np.abs(z - w) / np.hypot(1, np.abs(z)) / np.hypot(1, np.abs(w))


def _horner(coeffs, x):
    """Return ``p(x)``, ``p'(x)`` and ``sum |a_n| |x|^n`` for ascending coefficients."""
    p = np.full(x.shape, coeffs[-1], dtype=x.dtype)
    dp = np.zeros_like(p)
    ax = np.abs(x)
    s = np.full(ax.shape, abs(coeffs[-1]), dtype=ax.dtype)
    for c in coeffs[-2::-1]:
        dp = dp * x + p
        p = p * x + c
        s = s * ax + abs(c)
    return p, dp, s


def _newton_terms(coeffs, z):
    """Newton ratio ``p/p'`` and relative residual ``|p| / sum|a_n||z|^n`` at each ``z``."""
    d = len(coeffs) - 1
    ratio = np.empty_like(z)
    rres = np.empty(z.shape, dtype=np.abs(z).dtype)
    inner = np.abs(z) <= 1
    if inner.any():
        p, dp, s = _horner(coeffs, z[inner])
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio[inner] = p / dp
            # s == 0 only when z == 0 is an exact root
            rres[inner] = np.where(s > 0, np.abs(p) / s, 0)
    outer = ~inner
    if outer.any():
        zo = z[outer]
        w = 1 / zo
        q, dq, s = _horner(coeffs[::-1], w)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio[outer] = zo * q / (d * q - w * dq)
        rres[outer] = np.abs(q) / s
    return ratio, rres


def relative_residuals(coeffs, roots) -> np.ndarray:
    """``|p(z)| / sum_n |a_n| |z|^n`` for each root (extended precision)."""
    roots = np.asarray(roots, dtype=complex)
    if roots.size == 0:
        return np.zeros(0)
    xc = np.asarray(coeffs, dtype=_XDTYPE)
    _, rres = _newton_terms(xc, roots.astype(_XDTYPE))
    return rres.astype(float)


def _initial_guesses(coeffs):
    d = len(coeffs) - 1
    radius = (abs(coeffs[0]) / abs(coeffs[-1])) ** (1.0 / d)
    k = np.arange(d)
    # offset keeps the start off the real axis and away from symmetric traps
    angles = 2 * np.pi * k / d + np.pi / (2 * d) + 0.4
    return radius * np.exp(1j * angles)


def aberth(coeffs, z0=None, *, max_iter=500, step_tol=1e-12):
    """Plain Aberth-Ehrlich iteration.

    Returns ``(roots, converged_mask, iterations)``.  A root is frozen once its
    correction falls below ``step_tol`` relative to its modulus or once its
    relative residual reaches the rounding floor.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    d = len(coeffs) - 1
    z = _initial_guesses(coeffs) if z0 is None else np.array(z0, dtype=complex)
    active = np.ones(d, dtype=bool)
    floor = 4 * _EPS
    it = 0
    for it in range(1, max_iter + 1):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        ratio, rres = _newton_terms(coeffs, z[idx])
        done = (rres <= floor) | (ratio == 0)
        diff = z[idx, None] - z[None, :]
        diff[np.arange(idx.size), idx] = np.inf
        repulsion = np.sum(1 / diff, axis=1)
        step = ratio / (1 - ratio * repulsion)
        bad = ~np.isfinite(step)
        step[bad | done] = 0
        z[idx] -= step
        small = np.abs(step) <= step_tol * np.maximum(np.abs(z[idx]), _EPS)
        active[idx[(done | small) & ~bad]] = False
    else:
        it = max_iter
    return z, ~active, it


def _polish(coeffs, roots, sweeps=3):
    """Newton refinement in extended precision; a step is kept only if it helps."""
    if roots.size == 0:
        return roots
    xc = np.asarray(coeffs, dtype=_XDTYPE)
    z = roots.astype(_XDTYPE)
    ratio, rres = _newton_terms(xc, z)
    for _ in range(sweeps):
        with np.errstate(invalid="ignore"):
            cand = z - ratio
        ok = np.isfinite(cand)
        cand = np.where(ok, cand, z)
        c_ratio, c_rres = _newton_terms(xc, cand)
        better = ok & (c_rres < rres)
        if not better.any():
            break
        z = np.where(better, cand, z)
        ratio = np.where(better, c_ratio, ratio)
        rres = np.where(better, c_rres, rres)
    return z.astype(complex)


_BINOM_CACHE: dict[int, np.ndarray] = {}


def _binomials(d):
    """Lower-triangular ``C(n, i)`` for ``0 <= i <= n <= d`` in extended precision."""
    if d not in _BINOM_CACHE:
        table = np.zeros((d + 1, d + 1), dtype=np.longdouble)
        table[:, 0] = 1
        for n in range(1, d + 1):
            table[n, 1:n + 1] = table[n - 1, 0:n] + table[n - 1, 1:n + 1]
        _BINOM_CACHE[d] = table
    return _BINOM_CACHE[d]


def _taylor_shift(coeffs, c):
    """Coefficients ``b_i = sum_n a_n C(n, i) c^(n-i)`` of ``p(c + h) = sum_i b_i h^i``."""
    a = np.asarray(coeffs, dtype=_XDTYPE)
    d = len(a) - 1
    table = _binomials(d)
    gap = np.arange(d + 1)[:, None] - np.arange(d + 1)[None, :]
    powers = np.where(gap >= 0, np.asarray(c, dtype=_XDTYPE) ** np.maximum(gap, 0), 0)
    return (table * powers * a[:, None]).sum(axis=0)


def _taylor_scale(abs_coeffs, r):
    """Same shift applied to ``|a_n|`` at ``|c|``: the rounding scale of each ``b_i``."""
    return np.real(_taylor_shift(abs_coeffs, r))


def _certify_cluster(coeffs, members_z, tol):
    """Try to explain ``members_z`` as one root of multiplicity ``len(members_z)``.

    Returns the refined multiple root or ``None``.  Works on the reversed
    polynomial when the cluster lies outside the unit disk.
    """
    k = len(members_z)
    centre = np.mean(members_z)
    flip = abs(centre) > 1
    if flip:
        work = np.asarray(coeffs[::-1], dtype=_XDTYPE)
        c = _XDTYPE(np.mean(1 / members_z))
    else:
        work = np.asarray(coeffs, dtype=_XDTYPE)
        c = _XDTYPE(centre)
    abs_work = np.abs(work)
    # Newton on p^(k-1), which has a simple root at a genuine k-fold root of p
    for _ in range(8):
        b = _taylor_shift(work, c)
        if b[k] == 0:
            return None
        h = -b[k - 1] / (k * b[k])
        c = c + h
        if abs(h) <= 2 * np.finfo(np.longdouble).eps * max(abs(c), 1):
            break
    b = _taylor_shift(work, c)
    scale = _taylor_scale(abs_work, abs(c))
    rel = np.abs(b[:k]) / scale[:k]
    if not np.all(rel <= tol):
        return None
    root = complex(1 / c) if flip else complex(c)
    if flip and c == 0:
        return None
    return root


def _groups(z, radius):
    dist = chordal_distance(z[:, None], z[None, :])
    _, labels = connected_components(dist <= radius, directed=False)
    return labels


def _log_pseudo_value(coeffs, z, tol):
    """``log(|p(z)| + tol * sum|a_n||z|^n)``, overflow-free for any ``|z|``."""
    d = len(coeffs) - 1
    out = np.empty(z.shape)
    inner = np.abs(z) <= 1
    if inner.any():
        p, _, s = _horner(coeffs, z[inner])
        out[inner] = np.log(np.abs(p) + tol * s)
    outer = ~inner
    if outer.any():
        zo = z[outer]
        q, _, s = _horner(coeffs[::-1], 1 / zo)
        out[outer] = d * np.log(np.abs(zo)) + np.log(np.abs(q) + tol * s)
    return out


def _inclusion_components(coeffs, z, tol):
    """Group roots whose Weierstrass inclusion discs overlap at perturbation level ``tol``.

    Disc ``i`` has radius ``d |p~(z_i)| / |a_d prod_{j!=i}(z_i - z_j)|`` where
    ``|p~|`` adds ``tol`` times the coefficient-magnitude polynomial, so every
    root of every ``tol``-relative perturbation lies in the union of discs.
    """
    d = len(coeffs) - 1
    diff = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(diff, 1.0)
    with np.errstate(divide="ignore"):
        log_prod = np.log(diff).sum(axis=1)
    log_r = np.log(d) + _log_pseudo_value(coeffs, z, tol) - np.log(abs(coeffs[-1])) - log_prod
    radius = np.exp(np.minimum(log_r, 700.0))
    np.fill_diagonal(diff, 0.0)
    touching = diff <= radius[:, None] + radius[None, :]
    _, labels = connected_components(touching, directed=False)
    return labels


def _collapse_multiple(coeffs, roots, tol, finest):
    """Replace certified scattered clusters by their multiple root."""
    roots = roots.copy()
    pending = []
    if roots.size >= 2:
        labels = _inclusion_components(coeffs, roots, tol)
        for lab in np.unique(labels):
            idx = np.flatnonzero(labels == lab)
            if idx.size < 2:
                continue
            root = _certify_cluster(coeffs, roots[idx], tol)
            if root is None:
                pending.append(idx)
            else:
                roots[idx] = root
    for radius in _CLUSTER_SCHEDULE:
        if radius < finest:
            break
        nxt = []
        for idx in pending:
            if idx.size < 2:
                continue
            labels = _groups(roots[idx], radius)
            for lab in np.unique(labels):
                sub = idx[labels == lab]
                if sub.size < 2:
                    continue
                root = _certify_cluster(coeffs, roots[sub], tol)
                if root is None:
                    nxt.append(sub)
                else:
                    roots[sub] = root
        pending = nxt
    return roots


def symmetric_function_errors(coeffs, roots):
    """Relative mismatch of the root sum and root product with the coefficients.

    Root sum is compared with ``-a[d-1]/a[d]`` relative to ``sum |z_i|``;
    the product with ``(-1)^d a[0]/a[d]`` in log-modulus and phase.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    roots = np.asarray(roots, dtype=complex)
    d = len(coeffs) - 1
    if d == 0:
        return 0.0, 0.0
    total = np.sum(roots)
    expected_sum = -coeffs[d - 1] / coeffs[d]
    sum_err = abs(total - expected_sum) / max(np.sum(np.abs(roots)), abs(expected_sum), np.finfo(float).tiny)
    if np.any(roots == 0) or coeffs[0] == 0:
        prod_err = 0.0 if (np.any(roots == 0) and coeffs[0] == 0) else np.inf
        return float(sum_err), float(prod_err)
    log_prod = np.sum(np.log(roots.astype(complex)))
    expected = np.log(((-1) ** d) * coeffs[0] / coeffs[d])
    dlog = log_prod - expected
    phase = (dlog.imag + np.pi) % (2 * np.pi) - np.pi
    prod_err = abs(complex(dlog.real, phase))
    return float(sum_err), float(prod_err)


def solve(coeffs, *, max_iter=500, step_tol=1e-12, residual_tol=1e-8, cluster_radius=1e-6):
    """All roots of ``sum a[n] z^n`` (``a[-1] != 0``) with per-root relative residuals.

    Exact zero roots (vanishing low-order coefficients) are split off first.
    Raises :class:`RootFindingError` if the iteration does not converge and
    some root still violates ``residual_tol``.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    if coeffs.size == 0 or coeffs[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    nz = int(np.flatnonzero(coeffs)[0])
    zeros = np.zeros(nz, dtype=complex)
    core = coeffs[nz:]
    d = core.size - 1
    if d == 0:
        return zeros, np.zeros(nz)
    if d == 1:
        found = np.array([-core[0] / core[1]])
        converged = True
        iterations = 0
    else:
        found, mask, iterations = aberth(core, max_iter=max_iter, step_tol=step_tol)
        converged = bool(mask.all())
    found = _polish(core, found)
    found = _collapse_multiple(core, found, residual_tol, cluster_radius)
    roots = np.concatenate([zeros, found])
    residuals = relative_residuals(coeffs, roots)
    if not converged and not np.all(residuals <= residual_tol):
        raise RootFindingError(
            f"Aberth iteration did not converge in {max_iter} steps "
            f"(max relative residual {residuals.max():.3g})",
            roots, residuals, iterations,
        )
    return roots, residuals
