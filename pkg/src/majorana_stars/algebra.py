"""Symmetry classes and the star-equation weight sequences.

Every weight is carried as a natural-log magnitude plus a sign so that
factorials of the cutoff (``N_c = 100`` and beyond) never overflow.  The
linear-scale value is only formed after the caller has subtracted the
largest log-magnitude of the whole polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np
from scipy.special import gammaln

__all__ = [
    "SymmetryKind",
    "LogWeight",
    "dimension",
    "star_weight",
    "star_weights",
    "ladder_prefactor",
    "ladder_prefactors",
]

HW = "hw"
SU2 = "su2"
SU11 = "su11"
KINDS = (HW, SU2, SU11)


@dataclass(frozen=True)
class SymmetryKind:
    """Which algebra a state lives in, with its dimension parameters.

    Use the classmethods :meth:`hw`, :meth:`su2` and :meth:`su11` rather than
    the raw constructor.  The spin is stored as the integer ``two_j`` so that
    half-integer spins stay exact.
    """

    kind: str
    cutoff: int | None = None
    two_j: int | None = None
    bargmann: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown symmetry {self.kind!r}")
        if self.kind in (HW, SU11):
            if self.cutoff is None or int(self.cutoff) != self.cutoff or self.cutoff < 1:
                raise ValueError(f"cutoff must be a positive integer, got {self.cutoff!r}")
            object.__setattr__(self, "cutoff", int(self.cutoff))
        if self.kind == SU2:
            if self.two_j is None or int(self.two_j) != self.two_j or self.two_j < 1:
                raise ValueError(f"2j must be a positive integer, got {self.two_j!r}")
            object.__setattr__(self, "two_j", int(self.two_j))
        if self.kind == SU11:
            if self.bargmann is None or not np.isfinite(self.bargmann) or self.bargmann <= 0:
                raise ValueError(f"Bargmann index must be positive, got {self.bargmann!r}")
            object.__setattr__(self, "bargmann", float(self.bargmann))

    @classmethod
    def hw(cls, cutoff: int) -> "SymmetryKind":
        """Single boson mode truncated at ``cutoff`` excitations."""
        return cls(HW, cutoff=cutoff)

    @classmethod
    def su2(cls, spin) -> "SymmetryKind":
        """Spin-``j`` representation; ``spin`` may be ``0.5``, ``"3/2"``, ``Fraction(5, 2)``..."""
        two_j = 2 * Fraction(spin)
        if two_j.denominator != 1:
            raise ValueError(f"spin must be a positive half-integer, got {spin!r}")
        return cls(SU2, two_j=int(two_j))

    @classmethod
    def su11(cls, bargmann: float, cutoff: int) -> "SymmetryKind":
        """Discrete SU(1,1) series with Bargmann index ``k`` truncated at ``cutoff``."""
        return cls(SU11, cutoff=cutoff, bargmann=bargmann)

    @property
    def spin(self) -> Fraction:
        if self.kind != SU2:
            raise AttributeError("only SU(2) symmetries carry a spin")
        return Fraction(self.two_j, 2)

    @property
    def degree(self) -> int:
        """Highest basis index, i.e. the nominal degree of the star polynomial."""
        return self.two_j if self.kind == SU2 else self.cutoff

    def describe(self) -> dict:
        if self.kind == HW:
            return {"symmetry": HW, "cutoff": self.cutoff}
        if self.kind == SU2:
            return {"symmetry": SU2, "spin": self.two_j / 2}
        return {"symmetry": SU11, "bargmann": self.bargmann, "cutoff": self.cutoff}


class LogWeight(NamedTuple):
    """A real weight ``sign * exp(log_magnitude)``."""

    log_magnitude: float
    sign: int

    @property
    def value(self) -> float:
        return self.sign * float(np.exp(self.log_magnitude))


def dimension(sym: SymmetryKind) -> int:
    return sym.degree + 1


def _indices(sym: SymmetryKind, n=None) -> np.ndarray:
    if n is None:
        return np.arange(dimension(sym))
    n_arr = np.asarray(n)
    if np.any(n_arr != np.floor(n_arr)) or np.any(n_arr < 0) or np.any(n_arr > sym.degree):
        raise IndexError(f"index {n!r} outside 0..{sym.degree}")
    return n_arr.astype(int)


def _log_star_magnitudes(sym: SymmetryKind, n: np.ndarray) -> np.ndarray:
    lf = gammaln(n + 1.0)
    if sym.kind == SU2:
        d = sym.two_j
        return 0.5 * (gammaln(d + 1.0) - lf - gammaln(d - n + 1.0))
    N = sym.cutoff
    falling = gammaln(N + 1.0) - gammaln(N - n + 1.0)
    if sym.kind == HW:
        return falling - 0.5 * lf
    two_k = 2.0 * sym.bargmann
    return falling + 0.5 * (gammaln(two_k) - lf - gammaln(two_k + n))


def star_weights(sym: SymmetryKind) -> tuple[np.ndarray, np.ndarray]:
    """All star-equation weights as ``(log_magnitudes, signs)`` arrays.

    ========  ==========================================================
    SU(2)     ``(-1)^n sqrt(C(2j, n))``
    HW        ``(-1)^n N_c! / ((N_c - n)! sqrt(n!))``
    SU(1,1)   ``(-1)^n N_c!/(N_c - n)! sqrt(Gamma(2k)/(n! Gamma(2k+n)))``
    ========  ==========================================================
    """
    n = _indices(sym)
    signs = np.where(n % 2 == 0, 1, -1)
    return _log_star_magnitudes(sym, n), signs


def star_weight(sym: SymmetryKind, n: int) -> LogWeight:
    idx = _indices(sym, n)
    return LogWeight(float(_log_star_magnitudes(sym, idx)), 1 if idx % 2 == 0 else -1)


def _log_ladder(sym: SymmetryKind, n: np.ndarray) -> np.ndarray:
    if sym.kind == HW:
        return np.zeros(np.shape(n))
    if sym.kind == SU2:
        d = sym.two_j
        return 0.5 * (gammaln(d + 1.0) - gammaln(d - n + 1.0))
    two_k = 2.0 * sym.bargmann
    return 0.5 * (gammaln(two_k + n) - gammaln(two_k))


def ladder_prefactors(sym: SymmetryKind) -> np.ndarray:
    """Log of the coherent-state prefactors ``g(n)`` for every basis index.

    A coherent state has amplitudes proportional to ``g(n) alpha^n / sqrt(n!)``.
    """
    return _log_ladder(sym, _indices(sym))


def ladder_prefactor(sym: SymmetryKind, n: int) -> LogWeight:
    idx = _indices(sym, n)
    return LogWeight(float(_log_ladder(sym, idx)), 1)
