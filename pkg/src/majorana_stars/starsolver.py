"""Star polynomials, their roots and the resulting Bloch-sphere constellations."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse.csgraph import connected_components

from . import polyroots
from .algebra import SU2, star_weights
from .polyroots import RootFindingError, chordal_distance
from .states import PureState

__all__ = [
    "SolverConfig",
    "StarPolynomial",
    "Star",
    "StarSet",
    "RootFindingError",
    "build_star_polynomial",
    "classic_majorana_polynomial",
    "find_roots",
    "roots_to_bloch",
    "stars",
    "root_to_bloch",
    "bloch_to_root",
    "match_roots",
]

LEAD_TOL = 1e-12


@dataclass(frozen=True)
class SolverConfig:
    root_tol: float = 1e-12
    residual_tol: float = 1e-8
    max_iter: int = 500
    cluster_radius: float = 1e-6

    def __post_init__(self):
        for name in ("root_tol", "residual_tol", "max_iter", "cluster_radius"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")

    def describe(self) -> dict:
        return {
            "root_tol": self.root_tol,
            "residual_tol": self.residual_tol,
            "max_iter": self.max_iter,
            "cluster_radius": self.cluster_radius,
        }


@dataclass(frozen=True, eq=False)
class StarPolynomial:
    """Ascending coefficients ``a_n`` scaled so that ``max |a_n| = 1``.

    Coefficients above ``effective_degree`` are at most ``LEAD_TOL`` and are
    read as roots at infinity.
    """

    coeffs: np.ndarray
    effective_degree: int

    @property
    def nominal_degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def infinite_root_count(self) -> int:
        return self.nominal_degree - self.effective_degree

    @property
    def finite_coeffs(self) -> np.ndarray:
        return self.coeffs[: self.effective_degree + 1]

    def __call__(self, z):
        return np.polynomial.polynomial.polyval(z, self.coeffs)


def _effective_degree(coeffs, lead_tol):
    big = np.flatnonzero(np.abs(coeffs) > lead_tol)
    if big.size == 0:
        raise ValueError("star polynomial vanishes identically")
    return int(big[-1])


def _from_log(log_mag, phase, lead_tol) -> StarPolynomial:
    finite = np.isfinite(log_mag)
    coeffs = np.zeros(log_mag.shape, dtype=complex)
    if not finite.any():
        raise ValueError("star polynomial vanishes identically")
    coeffs[finite] = np.exp(log_mag[finite] - log_mag[finite].max() + 1j * phase[finite])
    coeffs.flags.writeable = False
    return StarPolynomial(coeffs, _effective_degree(coeffs, lead_tol))


def build_star_polynomial(state: PureState, lead_tol: float = LEAD_TOL) -> StarPolynomial:
    """Weight the amplitudes with the symmetry's star-equation weights.

    ``a_n = w_n C_n`` is formed in the log domain and rescaled so that the
    largest coefficient has modulus one.
    """
    log_w, sign = star_weights(state.sym)
    amps = state.amplitudes
    mag = np.abs(amps)
    with np.errstate(divide="ignore"):
        log_mag = np.where(mag > 0, np.log(np.where(mag > 0, mag, 1.0)) + log_w, -np.inf)
    phase = np.angle(amps) + np.where(sign < 0, np.pi, 0.0)
    return _from_log(log_mag, phase, lead_tol)


def classic_majorana_polynomial(state: PureState, lead_tol: float = LEAD_TOL) -> StarPolynomial:
    """Majorana's original spin star equation, in ascending powers of ``z``.

    The coefficient of ``z^n`` is ``(-1)^(2j-n) C_n / sqrt(n! (2j-n)!)``.
    Only meaningful for SU(2); kept as an independent cross-check of
    :func:`build_star_polynomial`.
    """
    if state.sym.kind != SU2:
        raise ValueError("the classic Majorana equation is defined for SU(2) states only")
    d = state.sym.two_j
    coeffs = np.array(
        [(-1) ** (d - n) * c / math.sqrt(math.factorial(n) * math.factorial(d - n))
         for n, c in enumerate(state.amplitudes)],
        dtype=complex,
    )
    coeffs /= np.abs(coeffs).max()
    coeffs.flags.writeable = False
    return StarPolynomial(coeffs, _effective_degree(coeffs, lead_tol))


def find_roots(poly: StarPolynomial, cfg: SolverConfig = SolverConfig()):
    """The ``effective_degree`` finite roots of ``poly`` and their relative residuals.

    Multiple roots come back as repeated values once certified; see
    :mod:`majorana_stars.polyroots`.
    """
    if poly.effective_degree == 0:
        return np.zeros(0, dtype=complex), np.zeros(0)
    return polyroots.solve(
        poly.finite_coeffs,
        max_iter=cfg.max_iter,
        step_tol=cfg.root_tol,
        residual_tol=cfg.residual_tol,
        cluster_radius=cfg.cluster_radius,
    )


@dataclass(frozen=True)
class Star:
    theta: float
    phi: float
    multiplicity: int = 1

    @property
    def z(self) -> complex:
        return bloch_to_root(self.theta, self.phi)

    @property
    def xyz(self) -> tuple[float, float, float]:
        st = math.sin(self.theta)
        return (st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta))


@dataclass(frozen=True)
class StarSet:
    """Finite stars sorted by ``(theta, phi)`` plus the south-pole count."""

    stars: tuple[Star, ...]
    south_pole_count: int = 0
    residual_max: float = 0.0
    roots: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=complex), compare=False, repr=False)

    @property
    def multiplicities(self) -> list[int]:
        return [s.multiplicity for s in self.stars]

    @property
    def degree(self) -> int:
        return sum(self.multiplicities) + self.south_pole_count

    @property
    def thetas(self) -> np.ndarray:
        return np.array([s.theta for s in self.stars])

    @property
    def phis(self) -> np.ndarray:
        return np.array([s.phi for s in self.stars])

    def points(self) -> list[tuple[float, float]]:
        """Every star repeated by multiplicity, south-pole stars last as ``(pi, 0)``."""
        out = [(s.theta, s.phi) for s in self.stars for _ in range(s.multiplicity)]
        return out + [(math.pi, 0.0)] * self.south_pole_count

    def xyz(self) -> np.ndarray:
        pts = self.points()
        if not pts:
            return np.zeros((0, 3))
        th, ph = np.array(pts).T
        return np.column_stack([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)])


def root_to_bloch(z: complex) -> tuple[float, float]:
    """``z = tan(theta/2) e^{i phi}``; ``phi`` is 0 at the north pole."""
    if z == 0:
        return 0.0, 0.0
    theta = 2.0 * math.atan(abs(z))
    phi = math.atan2(z.imag, z.real) % (2 * math.pi)
    if phi >= 2 * math.pi:
        phi = 0.0
    return theta, phi + 0.0


def bloch_to_root(theta: float, phi: float) -> complex:
    if theta >= math.pi:
        return complex(math.inf, 0)
    return math.tan(theta / 2) * complex(math.cos(phi), math.sin(phi))


def _cluster_representative(members):
    centre = np.mean(members)
    if abs(centre) > 1:
        centre = 1 / np.mean(1 / members)
    return complex(centre)


def roots_to_bloch(roots, infinite_root_count: int = 0, cfg: SolverConfig = SolverConfig(),
                   residual_max: float = 0.0) -> StarSet:
    """Map roots to sphere points, merging roots closer than ``cfg.cluster_radius`` (chordal)."""
    roots = np.asarray(roots, dtype=complex)
    stars_ = []
    if roots.size:
        close = chordal_distance(roots[:, None], roots[None, :]) <= cfg.cluster_radius
        _, labels = connected_components(close, directed=False)
        for lab in np.unique(labels):
            members = roots[labels == lab]
            theta, phi = root_to_bloch(_cluster_representative(members))
            stars_.append(Star(theta, phi, int(members.size)))
    stars_.sort(key=lambda s: (s.theta, s.phi))
    return StarSet(tuple(stars_), int(infinite_root_count), float(residual_max), roots)


def stars(state: PureState, cfg: SolverConfig = SolverConfig()) -> StarSet:
    """Majorana constellation of ``state`` in its own symmetry."""
    poly = build_star_polynomial(state)
    roots, residuals = find_roots(poly, cfg)
    rmax = float(residuals.max()) if residuals.size else 0.0
    return roots_to_bloch(roots, poly.infinite_root_count, cfg, rmax)


def match_roots(a, b) -> float:
    """Largest distance between two root lists under the best one-to-one pairing."""
    from scipy.optimize import linear_sum_assignment

    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.size != b.size:
        raise ValueError(f"root counts differ: {a.size} vs {b.size}")
    if a.size == 0:
        return 0.0
    cost = np.abs(a[:, None] - b[None, :])
    i, j = linear_sum_assignment(cost)
    return float(cost[i, j].max())
