"""Majorana constellations of HW, SU(2) and SU(1,1) pure states.

Typical use::

    from majorana_stars import SymmetryKind, coherent, stars
    s = stars(coherent(SymmetryKind.hw(20), 2.0))
"""
from .algebra import SymmetryKind, LogWeight, dimension, star_weight, ladder_prefactor
from .states import (
    DomainError,
    PureState,
    coherent,
    squeezed_vacuum,
    cat_two,
    cat_four,
    from_amplitudes,
    transfer,
)
from .starsolver import (
    SolverConfig,
    StarPolynomial,
    Star,
    StarSet,
    RootFindingError,
    build_star_polynomial,
    classic_majorana_polynomial,
    find_roots,
    roots_to_bloch,
    stars,
)
from .dynamics import EvolutionSpec, kerr_evolve, trajectory, special_times

__version__ = "0.1.0"
