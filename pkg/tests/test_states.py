import cmath
import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from majorana_stars import SymmetryKind
from majorana_stars.states import (
    DomainError,
    PureState,
    cat_four,
    cat_two,
    coherent,
    from_amplitudes,
    load_amplitudes,
    save_amplitudes,
    squeezed_vacuum,
    transfer,
)

complexes = st.complex_numbers(max_magnitude=3.0, allow_nan=False, allow_infinity=False)
disk = st.complex_numbers(max_magnitude=0.95, allow_nan=False, allow_infinity=False)
symmetries = st.one_of(
    st.integers(1, 60).map(SymmetryKind.hw),
    st.integers(1, 40).map(lambda d: SymmetryKind.su2(d / 2)),
    st.tuples(st.floats(0.1, 5.0), st.integers(1, 60)).map(lambda p: SymmetryKind.su11(*p)),
)


def test_coherent_vacuum():
    s = coherent(SymmetryKind.hw(4), 0)
    assert np.array_equal(s.amplitudes, [1, 0, 0, 0, 0])


def test_coherent_spin_half():
    s = coherent(SymmetryKind.su2(0.5), 1)
    np.testing.assert_allclose(s.amplitudes, [1 / math.sqrt(2)] * 2, atol=1e-15)


def test_coherent_hw_truncated():
    # (1, 1, 1/sqrt2) normalised by hand
    s = coherent(SymmetryKind.hw(2), 1)
    norm = math.sqrt(1 + 1 + 0.5)
    np.testing.assert_allclose(s.amplitudes, [1 / norm, 1 / norm, 1 / math.sqrt(2) / norm], atol=1e-15)
    np.testing.assert_allclose(s.amplitudes.real, [0.6325, 0.6325, 0.4472], atol=5e-5)


def test_coherent_su2_is_binomial():
    j2, eta = 6, 0.7 - 0.4j
    s = coherent(SymmetryKind.su2(j2 / 2), eta)
    raw = np.array([math.sqrt(math.comb(j2, n)) * eta ** n for n in range(j2 + 1)])
    raw /= np.linalg.norm(raw)
    np.testing.assert_allclose(s.amplitudes, raw, atol=1e-14)


def test_coherent_su11_domain():
    with pytest.raises(DomainError, match="unit disk"):
        coherent(SymmetryKind.su11(0.5, 10), 1.0)
    coherent(SymmetryKind.su11(0.5, 10), 0.99)


def test_squeezed_hw_ratios():
    s = squeezed_vacuum(SymmetryKind.hw(4), 0.2)
    a = s.amplitudes
    assert math.isclose(a[2].real / a[0].real, 0.2 * math.sqrt(2) / 2, rel_tol=1e-14)
    assert math.isclose(a[4].real / a[0].real, 0.04 * math.sqrt(24) / 8, rel_tol=1e-14)
    assert math.isclose(a[4].real / a[0].real, 0.024494897427831782, rel_tol=1e-14)


def test_squeezed_zero_is_vacuum():
    s = squeezed_vacuum(SymmetryKind.hw(20), 0)
    assert s.amplitudes[0] == 1 and not np.any(s.amplitudes[1:])


def test_squeezed_su2_even_only():
    s = squeezed_vacuum(SymmetryKind.su2(2), 0.8)
    assert s.amplitudes[1] == 0 and s.amplitudes[3] == 0
    raw = np.array([(0.8 / 8) ** m * math.sqrt(math.factorial(2 * m) * math.factorial(4))
                    / (math.factorial(m) * math.sqrt(math.factorial(4 - 2 * m))) for m in range(3)])
    raw /= np.linalg.norm(raw)
    np.testing.assert_allclose(s.amplitudes[::2].real, raw, rtol=1e-14)


def test_squeezed_su11_coefficients():
    k, xi = 0.75, 0.3 + 0.1j
    s = squeezed_vacuum(SymmetryKind.su11(k, 6), xi)
    raw = np.array([(xi / 2) ** m * math.sqrt(math.factorial(2 * m) * math.gamma(2 * k + 2 * m))
                    / (math.factorial(m) * math.sqrt(math.gamma(2 * k))) for m in range(4)])
    raw /= np.linalg.norm(raw)
    np.testing.assert_allclose(s.amplitudes[::2], raw, atol=1e-14)


def test_squeezed_domains():
    with pytest.raises(DomainError):
        squeezed_vacuum(SymmetryKind.hw(5), 1.0)
    with pytest.warns(RuntimeWarning):
        squeezed_vacuum(SymmetryKind.su11(0.5, 6), 1.5)
    squeezed_vacuum(SymmetryKind.su2(3), 5.0)


def test_cat_two_limit_alpha_zero():
    s = cat_two(SymmetryKind.hw(2), 0)
    np.testing.assert_allclose(s.amplitudes, [1, 0, 0], atol=1e-15)


def test_cat_two_parity_pattern():
    s = cat_two(SymmetryKind.hw(4), 1)
    n = np.arange(5)
    w = cmath.exp(1j * math.pi / 4)
    raw = (w.conjugate() + w * (-1) ** n) / np.sqrt([math.factorial(k) for k in n])
    raw /= np.linalg.norm(raw)
    raw *= abs(raw[0]) / raw[0]
    np.testing.assert_allclose(s.amplitudes, raw, atol=1e-15)
    # odd components carry the e^{-i pi/2} relative phase
    assert cmath.isclose(s.amplitudes[1] / s.amplitudes[0], -1j, abs_tol=1e-15)


def test_cat_four_vacuum_component():
    s = cat_four(SymmetryKind.hw(3), 0)
    np.testing.assert_allclose(s.amplitudes, [1, 0, 0, 0], atol=1e-15)


def test_cat_four_direct_sum():
    sym = SymmetryKind.hw(8)
    w = cmath.exp(-1j * math.pi / 4)
    parts = [(w, 1), (1, 1j), (-w, -1), (1, -1j)]
    raw = sum(c * coherent(sym, r).amplitudes for c, r in parts)
    expected = from_amplitudes(sym, raw)
    np.testing.assert_allclose(cat_four(sym, 1).amplitudes, expected.amplitudes, atol=1e-15)


def test_from_amplitudes():
    s = from_amplitudes(SymmetryKind.hw(2), [1, 1, 1])
    np.testing.assert_allclose(s.amplitudes, [1 / math.sqrt(3)] * 3, atol=1e-15)
    s = from_amplitudes(SymmetryKind.su2(0.5), [0, 5])
    np.testing.assert_array_equal(s.amplitudes, [0, 1])
    with pytest.raises(ValueError):
        from_amplitudes(SymmetryKind.hw(1), [0, 0])
    with pytest.raises(ValueError):
        from_amplitudes(SymmetryKind.hw(1), [1, 2, 3])


def test_pure_state_is_read_only():
    s = coherent(SymmetryKind.hw(3), 0.5)
    with pytest.raises(ValueError):
        s.amplitudes[0] = 2
    with pytest.raises(ValueError):
        PureState(SymmetryKind.hw(3), [1, 0])


def test_amplitude_file_roundtrip(tmp_path):
    amps = [0.5 + 0.5j, -0.5, 0.5j]
    path = tmp_path / "amps.json"
    save_amplitudes(path, amps)
    assert json.loads(path.read_text()) == [[0.5, 0.5], [-0.5, 0.0], [0.0, 0.5]]
    np.testing.assert_array_equal(load_amplitudes(path), amps)
    path.write_text('{"re": 1}')
    with pytest.raises(ValueError):
        load_amplitudes(path)


@settings(max_examples=60, deadline=None)
@given(symmetries, disk)
def test_constructors_are_normalised(sym, alpha):
    for s in (coherent(sym, alpha), squeezed_vacuum(sym, alpha), cat_two(sym, alpha), cat_four(sym, alpha)):
        assert abs(s.norm - 1) <= 1e-12
        nz = np.flatnonzero(s.amplitudes)
        assert s.amplitudes[nz[0]].imag == 0 and s.amplitudes[nz[0]].real > 0


@settings(max_examples=60, deadline=None)
@given(symmetries, disk)
def test_squeezed_odd_amplitudes_are_exactly_zero(sym, xi):
    assert not np.any(squeezed_vacuum(sym, xi).amplitudes[1::2])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.complex_numbers(min_magnitude=0.05, max_magnitude=3.0))
def test_coherent_phase_progression(N, alpha):
    s = coherent(SymmetryKind.hw(N), alpha)
    n = np.arange(N + 1)
    big = np.abs(s.amplitudes) > 1e-200
    d = np.angle(s.amplitudes[big]) - n[big] * cmath.phase(alpha)
    assert np.allclose(np.exp(1j * d), 1, atol=1e-9)


def test_transfer_maps_coherent_states():
    su2 = SymmetryKind.su2(4)
    hw = SymmetryKind.hw(8)
    su11 = SymmetryKind.su11(0.7, 8)
    for alpha in (0.3, 0.5 - 0.2j):
        moved = transfer(coherent(hw, alpha), su2)
        np.testing.assert_allclose(moved.amplitudes, coherent(su2, alpha).amplitudes, atol=1e-14)
        moved = transfer(coherent(su2, alpha), su11)
        np.testing.assert_allclose(moved.amplitudes, coherent(su11, alpha).amplitudes, atol=1e-14)
    with pytest.raises(ValueError):
        transfer(coherent(hw, 0.1), SymmetryKind.hw(3))
