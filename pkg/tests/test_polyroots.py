import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from majorana_stars.polyroots import (
    RootFindingError,
    aberth,
    chordal_distance,
    relative_residuals,
    solve,
    symmetric_function_errors,
)
from majorana_stars.starsolver import match_roots

from . import oracles


def test_quadratic_closed_form():
    roots, res = solve(np.array([1, -2, math.sqrt(2)], dtype=complex))
    b = math.sqrt(math.sqrt(2) - 1)
    expected = [(1 + 1j * b) / math.sqrt(2), (1 - 1j * b) / math.sqrt(2)]
    assert match_roots(roots, expected) <= 1e-14
    assert res.max() <= 1e-15


def test_linear_and_zero_roots():
    roots, _ = solve(np.array([2, -4], dtype=complex))
    np.testing.assert_allclose(roots, [0.5])
    roots, _ = solve(np.array([0, 0, -1, 1], dtype=complex))
    assert match_roots(roots, [0, 0, 1]) == 0


def test_matches_mpmath_on_wilkinson_like():
    # roots 1..12 are badly conditioned but well separated
    coeffs = np.poly(np.arange(1, 13))[::-1].astype(complex)
    roots, _ = solve(coeffs)
    ref = oracles.mp_roots([int(c.real) for c in coeffs])
    assert match_roots(roots, ref) <= 1e-6


@pytest.mark.parametrize("d, root", [(20, 0.5), (50, -0.5), (12, 0.3 + 0.4j), (30, 3.0)])
def test_high_multiplicity_collapses(d, root):
    coeffs = oracles.binomial_power_coeffs(d, root)
    coeffs /= np.abs(coeffs).max()
    roots, res = solve(coeffs)
    assert roots.size == d
    assert np.all(roots == roots[0])
    assert abs(roots[0] - root) <= 1e-9 * max(1, abs(root))
    assert res.max() <= 1e-8


def test_mixed_multiplicities():
    target = [0.5] * 6 + [-1j] * 3 + [2.0]
    coeffs = np.poly(target)[::-1]
    roots, _ = solve(coeffs)
    assert match_roots(roots, target) <= 1e-9
    assert np.count_nonzero(roots == roots[np.argmin(abs(roots - 0.5))]) == 6


def test_symmetric_functions_of_cluster():
    coeffs = oracles.binomial_power_coeffs(20, 0.5)
    roots, _ = solve(coeffs)
    s_err, p_err = symmetric_function_errors(coeffs, roots)
    assert s_err <= 1e-9 and p_err <= 1e-9
    assert abs(roots.sum() - 10) <= 1e-6


def test_chordal_distance():
    assert chordal_distance(0, 1e200) == pytest.approx(2.0)
    assert chordal_distance(1, -1) == pytest.approx(2.0)
    assert chordal_distance(1j, 1j) == 0
    assert chordal_distance(1e8, 1e8 * 1j) == pytest.approx(2 * math.sqrt(2) * 1e-8)


def test_failure_reports_diagnostics():
    coeffs = np.poly(np.arange(1, 25))[::-1].astype(complex)
    with pytest.raises(RootFindingError) as info:
        solve(coeffs, max_iter=1, residual_tol=1e-30)
    err = info.value
    assert err.roots.size == 24 and err.residuals.size == 24 and err.iterations >= 1


def test_aberth_accepts_initial_guesses():
    coeffs = np.array([-1, 0, 0, 1], dtype=complex)
    z, _, _ = aberth(coeffs, np.array([0.9, -0.4 + 0.8j, -0.4 - 0.8j]))
    cube = np.exp(2j * np.pi * np.arange(3) / 3)
    assert match_roots(z, cube) <= 1e-12


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 25), st.integers(0, 2**32 - 1))
def test_random_polynomials_against_numpy(d, seed):
    rng = np.random.default_rng(seed)
    coeffs = rng.normal(size=d + 1) + 1j * rng.normal(size=d + 1)
    roots, res = solve(coeffs)
    assert res.max() <= 1e-8
    np.testing.assert_array_less(relative_residuals(coeffs, roots), 1e-8)
    ref = np.roots(coeffs[::-1])
    gap = chordal_distance(ref[:, None], ref[None, :])
    np.fill_diagonal(gap, np.inf)
    if gap.min() > 1e-3:
        assert match_roots(roots, ref) <= 1e-8 * max(1, np.abs(ref).max())


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 20), st.integers(0, 2**32 - 1))
def test_conjugate_coefficients_conjugate_roots(d, seed):
    rng = np.random.default_rng(seed)
    coeffs = rng.normal(size=d + 1) + 1j * rng.normal(size=d + 1)
    a, _ = solve(coeffs)
    b, _ = solve(np.conj(coeffs))
    assert match_roots(np.conj(a), b) <= 1e-8 * max(1, np.abs(a).max())
