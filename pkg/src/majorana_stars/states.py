"""Amplitude vectors for coherent, squeezed-vacuum and cat states.

All constructors return a :class:`PureState` that is normalized and whose
first nonzero amplitude is real and positive.  Infinite-dimensional states
(HW and SU(1,1)) are truncated at the cutoff and renormalized.
"""
from __future__ import annotations

import math
import json
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.special import gammaln

from .algebra import HW, SU2, SU11, SymmetryKind, dimension, ladder_prefactors

__all__ = [
    "DomainError",
    "PureState",
    "from_amplitudes",
    "coherent",
    "squeezed_vacuum",
    "cat_two",
    "cat_four",
    "transfer",
    "load_amplitudes",
    "save_amplitudes",
]


class DomainError(ValueError):
    """A state parameter lies outside the region where the state exists."""


def _fix_phase(amps: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(amps)
    if nz.size:
        first = amps[nz[0]]
        amps = amps * (abs(first) / first)
        amps[nz[0]] = abs(first)
    return amps


def _finalize(amps) -> np.ndarray:
    amps = np.array(amps, dtype=complex)
    norm = np.linalg.norm(amps)
    if not np.isfinite(norm):
        raise ValueError("amplitudes contain non-finite values")
    if norm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return _fix_phase(amps / norm)


@dataclass(frozen=True, eq=False)
class PureState:
    """A normalized pure state over the number basis ``|0>, ..., |degree>``."""

    sym: SymmetryKind
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.ndim != 1 or amps.shape[0] != dimension(self.sym):
            raise ValueError(
                f"expected {dimension(self.sym)} amplitudes for {self.sym}, got shape {amps.shape}"
            )
        amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def overlap(self, other: "PureState") -> complex:
        """``<self|other>``."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def __len__(self):
        return self.amplitudes.shape[0]


def from_amplitudes(sym: SymmetryKind, raw) -> PureState:
    """Normalize an arbitrary amplitude vector into a state of ``sym``."""
    raw = np.asarray(raw, dtype=complex)
    if raw.ndim != 1 or raw.shape[0] != dimension(sym):
        raise ValueError(f"expected {dimension(sym)} amplitudes, got {raw.shape[0] if raw.ndim == 1 else raw.shape}")
    return PureState(sym, _finalize(raw))


def _from_log(sym, n, log_mag, phase) -> PureState:
    amps = np.zeros(dimension(sym), dtype=complex)
    amps[n] = np.exp(log_mag - np.max(log_mag) + 1j * phase)
    return PureState(sym, _finalize(amps))


def _vacuum(sym) -> PureState:
    amps = np.zeros(dimension(sym), dtype=complex)
    amps[0] = 1.0
    return PureState(sym, amps)


def _coherent_log(sym: SymmetryKind, alpha: complex):
    n = np.arange(dimension(sym))
    log_mag = ladder_prefactors(sym) + n * np.log(abs(alpha)) - 0.5 * gammaln(n + 1.0)
    return n, log_mag, n * np.angle(alpha)


def _check_coherent(sym, alpha):
    if sym.kind == SU11 and abs(alpha) >= 1:
        raise DomainError(f"coherent parameter outside unit disk: |{alpha}| >= 1")


def coherent(sym: SymmetryKind, alpha: complex) -> PureState:
    """Coherent state with amplitudes proportional to ``g(n) alpha^n / sqrt(n!)``.

    For SU(2) ``alpha`` plays the role of the stereographic parameter ``eta``
    and the amplitudes reduce to ``sqrt(C(2j, n)) eta^n``; for SU(1,1) it is
    ``beta`` and must lie inside the unit disk.
    """
    alpha = complex(alpha)
    _check_coherent(sym, alpha)
    if alpha == 0:
        return _vacuum(sym)
    return _from_log(sym, *_coherent_log(sym, alpha))


def squeezed_vacuum(sym: SymmetryKind, xi: complex) -> PureState:
    """Squeezed vacuum of the chosen symmetry; odd amplitudes are exactly zero.

    Parameters
    ----------
    sym : SymmetryKind
        Target symmetry.
    xi : complex
        Squeezing parameter.  HW requires ``|xi| < 1``.  For SU(1,1) the
        untruncated state also needs ``|xi| < 1``; larger values are still
        representable after truncation but emit a :class:`RuntimeWarning`.

    Returns
    -------
    PureState
    """
    xi = complex(xi)
    if sym.kind == HW and abs(xi) >= 1:
        raise DomainError(f"squeezing parameter must satisfy |xi| < 1, got {xi}")
    if sym.kind == SU11 and abs(xi) >= 1:
        warnings.warn(
            f"|xi| = {abs(xi):.3g} >= 1: the SU(1,1) squeezed vacuum only exists after truncation",
            RuntimeWarning,
            stacklevel=2,
        )
    if xi == 0:
        return _vacuum(sym)

    m = np.arange(sym.degree // 2 + 1)
    # log|xi| taken separately so tiny |xi| cannot underflow to log(0)
    log_half = math.log(abs(xi)) - math.log(2)
    lf_m = gammaln(m + 1.0)
    half_lf_2m = 0.5 * gammaln(2 * m + 1.0)
    if sym.kind == HW:
        log_mag = m * log_half + half_lf_2m - lf_m
    elif sym.kind == SU2:
        d = sym.two_j
        log_mag = (m * (log_half - math.log(d)) + half_lf_2m - lf_m
                   + 0.5 * (gammaln(d + 1.0) - gammaln(d - 2 * m + 1.0)))
    else:
        two_k = 2 * sym.bargmann
        log_mag = (m * log_half + half_lf_2m - lf_m
                   + 0.5 * (gammaln(two_k + 2 * m) - gammaln(two_k)))
    return _from_log(sym, 2 * m, log_mag, m * np.angle(xi))


def _superpose(sym, alpha, weights) -> PureState:
    """Sum of coherent states ``sum_k c_k |r_k alpha>`` with unit-modulus ``r_k``."""
    alpha = complex(alpha)
    _check_coherent(sym, alpha)
    if alpha == 0:
        amps = np.zeros(dimension(sym), dtype=complex)
        amps[0] = sum(c for c, _ in weights)
        return from_amplitudes(sym, amps)
    n, log_mag, phase = _coherent_log(sym, alpha)
    base = np.exp(log_mag - log_mag.max() + 1j * phase)
    mix = sum(c * r ** n for c, r in weights)
    return from_amplitudes(sym, base * mix)


def cat_two(sym: SymmetryKind, alpha: complex) -> PureState:
    """``e^{-i pi/4}|alpha> + e^{i pi/4}|-alpha>``, normalized.

    This is what a coherent state becomes after a quarter of the Kerr period.
    """
    w = np.exp(1j * np.pi / 4)
    return _superpose(sym, alpha, [(np.conj(w), 1), (w, -1)])


def cat_four(sym: SymmetryKind, alpha: complex) -> PureState:
    """``e^{-i pi/4}|alpha> + |i alpha> - e^{-i pi/4}|-alpha> + |-i alpha>``, normalized."""
    w = np.exp(-1j * np.pi / 4)
    return _superpose(sym, alpha, [(w, 1), (1, 1j), (-w, -1), (1, -1j)])


def transfer(state: PureState, target: SymmetryKind) -> PureState:
    """Re-express ``state`` in ``target`` keeping the coherent-state generating vector.

    Amplitudes are rescaled by ``g_target(n) / g_source(n)``, so a coherent
    state (or any Kerr-evolved coherent state) of one symmetry maps onto the
    corresponding state of the other.  Both symmetries must have the same
    degree.  Star polynomials of the source and the result coincide.
    """
    if target.degree != state.sym.degree:
        raise ValueError(f"degree mismatch: {state.sym.degree} vs {target.degree}")
    log_ratio = ladder_prefactors(target) - ladder_prefactors(state.sym)
    mag = np.abs(state.amplitudes)
    keep = mag > 0
    log_mag = np.full(mag.shape, -np.inf)
    log_mag[keep] = np.log(mag[keep]) + log_ratio[keep]
    amps = np.zeros_like(state.amplitudes)
    amps[keep] = np.exp(log_mag[keep] - log_mag[keep].max()) * np.exp(1j * np.angle(state.amplitudes[keep]))
    return from_amplitudes(target, amps)


def load_amplitudes(path) -> np.ndarray:
    """Read a JSON array of ``[re, im]`` pairs (index = basis number)."""
    data = json.loads(Path(path).read_text())
    if not isinstance(data, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(v, (int, float)) for v in p) for p in data
    ):
        raise ValueError(f"{path}: expected a JSON array of [re, im] pairs")
    return np.array([complex(re, im) for re, im in data])


def save_amplitudes(path, amplitudes) -> None:
    pairs = [[float(c.real), float(c.imag)] for c in np.asarray(amplitudes, dtype=complex)]
    Path(path).write_text(json.dumps(pairs) + "\n")
