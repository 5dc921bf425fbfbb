"""Evolution under ``H = omega N + Omega N^2`` and star trajectories.

The Hamiltonian is diagonal in the number basis, so every time point is
obtained from ``t = 0`` by an exact phase factor; nothing is integrated.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .starsolver import RootFindingError, SolverConfig, StarSet, stars
from .states import PureState, from_amplitudes

__all__ = ["EvolutionSpec", "kerr_evolve", "trajectory", "special_times", "TrajectoryError"]


@dataclass(frozen=True)
class EvolutionSpec:
    """Nonlinear strength ``omega_nl`` (Omega), linear splitting ``omega_lin`` and sample times."""

    omega_nl: float = 1.0
    omega_lin: float = 0.0
    times: tuple[float, ...] = (0.0,)

    def __post_init__(self):
        if not self.omega_nl > 0:
            raise ValueError("nonlinear strength must be positive")
        if self.omega_lin < 0:
            raise ValueError("linear splitting must be non-negative")
        times = tuple(float(t) for t in self.times)
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("times must be strictly increasing")
        object.__setattr__(self, "times", times)

    @property
    def period(self) -> float:
        return 2 * math.pi / self.omega_nl


def kerr_evolve(state: PureState, spec: EvolutionSpec, t: float) -> PureState:
    """``C_n(t) = C_n(0) exp(-i (Omega n^2 + omega n) t)``, global phase re-fixed."""
    n = np.arange(len(state), dtype=float)
    phase = (spec.omega_nl * n * n + spec.omega_lin * n) * t
    return from_amplitudes(state.sym, state.amplitudes * np.exp(-1j * phase))


class TrajectoryError(RootFindingError):
    def __init__(self, t, err: RootFindingError):
        super().__init__(f"t={t!r}: {err}", err.roots, err.residuals, err.iterations)
        self.t = t


def trajectory(state: PureState, spec: EvolutionSpec, cfg: SolverConfig = SolverConfig(),
               workers: int | None = None) -> list[tuple[float, StarSet]]:
    """Constellation at every time in ``spec.times``, in order.

    Time points are independent; with ``workers > 1`` they are solved in a
    thread pool and reassembled in input order.
    """
    def one(t):
        try:
            return t, stars(kerr_evolve(state, spec, t), cfg)
        except RootFindingError as err:
            raise TrajectoryError(t, err) from err

    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(one, spec.times))
    return [one(t) for t in spec.times]


def special_times(omega_nl: float) -> list[float]:
    """``0, pi/4, pi/2, pi, 2pi`` in units of ``1/Omega``."""
    if not omega_nl > 0:
        raise ValueError("nonlinear strength must be positive")
    return [0.0, math.pi / (4 * omega_nl), math.pi / (2 * omega_nl), math.pi / omega_nl,
            2 * math.pi / omega_nl]
