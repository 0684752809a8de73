import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from numpy.testing import assert_allclose

from paradist.labels import p_count
from paradist.symmetry import (
    LengthNotPowerOfThree,
    NonRealInput,
    NotOrbitConstant,
    expand,
    palindrome_check,
    reduce,
    reverse_conjugate,
    symmetrize_permutation,
)
from paradist.tensor import MatrixForm, a_alpha, kron_power


def null_vectors(alpha, n, real=False):
    """Null-space basis of the order-n system, real embedding optional."""
    a = kron_power(a_alpha(alpha, MatrixForm.REDUCED), n)
    if real:
        stacked = np.vstack([a.real, a.imag])
        _, s, vt = np.linalg.svd(stacked, full_matrices=True)
        rank = np.sum(s > 1e-10 * s[0])
        return vt[rank:]
    _, s, vt = np.linalg.svd(a, full_matrices=True)
    rank = np.sum(s > 1e-10 * s[0])
    return vt[rank:].conj()


def test_two_element_orbit_average():
    x = np.zeros(9)
    x[1] = 2.0  # label 01
    out = symmetrize_permutation(x)
    assert_allclose(out[1], 1.0)
    assert_allclose(out[3], 1.0)  # label 10
    assert_allclose(np.delete(out, [1, 3]), 0.0)


def test_orbit_constant_fixed_point(rng):
    for n in range(1, 5):
        y = rng.standard_normal(p_count(n))
        x = expand(y)
        assert_allclose(symmetrize_permutation(x), x, atol=1e-14)


def test_symmetrize_preserves_null_space(rng):
    for n in (2, 3):
        alpha = 2.2
        a = kron_power(a_alpha(alpha, MatrixForm.REDUCED), n)
        basis = null_vectors(alpha, n)
        coeffs = rng.standard_normal(len(basis))
        x = coeffs @ basis
        sym = symmetrize_permutation(x)
        assert np.max(np.abs(a @ sym)) <= 1e-12 * max(1.0, np.max(np.abs(sym)))


def test_symmetrize_preserves_nonnegativity(rng):
    x = rng.uniform(0, 1, 27)
    assert np.min(symmetrize_permutation(x)) >= 0


def test_length_validation():
    with pytest.raises(LengthNotPowerOfThree):
        symmetrize_permutation(np.ones(5))
    with pytest.raises(LengthNotPowerOfThree):
        reverse_conjugate(np.ones(2))


def test_reverse_is_reversal_for_order_one():
    assert_allclose(reverse_conjugate(np.array([1.0, 2.0, 3.0])), [3.0, 2.0, 1.0])


def test_reverse_is_involution(rng):
    x = rng.standard_normal(81)
    assert_allclose(reverse_conjugate(reverse_conjugate(x)), x, atol=0)


def test_reverse_preserves_null_membership(rng):
    for n in range(1, 6):
        # at order 1 a real null vector only exists where the system is real
        alpha = math.pi if n == 1 else 1.9
        a = kron_power(a_alpha(alpha, MatrixForm.REDUCED), n)
        basis = null_vectors(alpha, n, real=True)
        assert len(basis) > 0
        for _ in range(5):
            x = rng.standard_normal(len(basis)) @ basis
            flipped = reverse_conjugate(x)
            scale = max(1.0, float(np.max(np.abs(x))))
            assert np.max(np.abs(a @ flipped)) <= 1e-11 * scale


def test_reverse_rejects_complex_input():
    with pytest.raises(NonRealInput):
        reverse_conjugate(np.array([1.0, 1j, 0.0]))


def test_reverse_maps_orbits_to_mirrored_orbits(rng):
    for n in (2, 3):
        y = rng.standard_normal(p_count(n))
        flipped = reduce(reverse_conjugate(expand(y)))
        # mirrored reduced vector equals reduction of the reversed expansion
        assert_allclose(expand(flipped), expand(y)[::-1], atol=0)


def test_expand_order_one():
    assert_allclose(expand(np.array([1.0, 1.0, 1.0])), [1, 1, 1])


def test_expand_reproduces_pattern():
    y = np.arange(1.0, 7.0)  # a=1 c=2 f=3 b=4 e=5 d=6 in column order
    x = expand(y)
    a, c, f, b, e, d = y
    assert_allclose(x, [a, b, c, b, d, e, c, e, f])


def test_expand_zero():
    assert_allclose(expand(np.zeros(6)), np.zeros(9))


def test_reduce_round_trip(rng):
    for n in range(1, 7):
        y = rng.standard_normal(p_count(n))
        assert_allclose(reduce(expand(y)), y, atol=0)


def test_reduce_of_pattern():
    a, b, c, d, e, f = 1.0, 2.0, 3.0, 4.0, 5.0, 6.0
    x = np.array([a, b, c, b, d, e, c, e, f])
    assert_allclose(reduce(x), [a, c, f, b, e, d])


def test_reduce_rejects_non_constant():
    x = np.array([1.0, 2.0, 3.0, 9.0, 4.0, 5.0, 3.0, 5.0, 6.0])
    with pytest.raises(NotOrbitConstant):
        reduce(x)


def test_palindrome_examples():
    alpha = 2.5
    y2 = np.array([1, math.cos(2 * alpha), 1, -math.cos(alpha), -math.cos(alpha), 1])
    assert palindrome_check(y2)
    assert palindrome_check(np.ones(6))
    bad = y2.copy()
    bad[0] += 1.0
    assert not palindrome_check(bad)


@given(st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=2**31 - 1))
def test_expand_reduce_identity(n, seed):
    y = np.random.default_rng(seed).standard_normal(p_count(n))
    np.testing.assert_allclose(reduce(expand(y)), y, atol=0)
