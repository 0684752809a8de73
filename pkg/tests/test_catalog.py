import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from paradist.catalog import (
    AlphaOutOfInterval,
    alpha_interval,
    conjectured_threshold,
    explicit_nns,
    in_interval,
    interval_samples,
    pad_solution,
    quadrant_of,
    verify_catalog_entry,
    verify_vector,
)
from paradist.labels import p_count
from paradist.symmetry import palindrome_check
from paradist.tensor import build_C


def test_intervals():
    assert alpha_interval(1) == (math.pi, math.pi)
    lo, hi = alpha_interval(2)
    assert_allclose((lo, hi), (3 * math.pi / 4, math.pi))
    lo, hi = alpha_interval(4)
    assert_allclose((lo, hi), (5 * math.pi / 8, 2 * math.pi / 3))
    for n in range(2, 11):
        lo, hi = alpha_interval(n)
        assert_allclose(lo, conjectured_threshold(n))
        assert_allclose(hi, conjectured_threshold(n - 1))
        assert in_interval(n, lo)
        assert not in_interval(n, hi)


def test_explicit_order_one():
    assert_allclose(explicit_nns(1, math.pi), [1, 1, 1])


def test_explicit_order_two_at_left_endpoint():
    y = explicit_nns(2, 3 * math.pi / 4)
    root_half = math.sqrt(2) / 2
    assert_allclose(y, [1, 0, 1, root_half, root_half, 1], atol=1e-15)


def test_explicit_order_three_at_left_endpoint():
    y = explicit_nns(3, 2 * math.pi / 3)
    r = math.sqrt(3) / 2
    assert_allclose(y, [3 * r, 0, 0, 3 * r, r, r, r, r, r, 0], atol=1e-14)


def test_interval_enforced():
    with pytest.raises(AlphaOutOfInterval):
        explicit_nns(2, 2.0)
    with pytest.raises(AlphaOutOfInterval):
        explicit_nns(1, 3.0)
    with pytest.raises(ValueError):
        explicit_nns(11, 1.6)


def test_quadrant_examples():
    a2 = 0.5 * sum(alpha_interval(2))
    assert quadrant_of(1, a2, 2) == 2
    assert quadrant_of(2, a2, 2) == 4
    a5 = 0.5 * sum(alpha_interval(5))
    assert quadrant_of(3, a5, 5) == 4


def quadrant_by_signs(angle):
    c, s = math.cos(angle), math.sin(angle)
    quads = []
    if c >= -1e-12 and s >= -1e-12:
        quads.append(1)
    if c <= 1e-12 and s >= -1e-12:
        quads.append(2)
    if c <= 1e-12 and s <= 1e-12:
        quads.append(3)
    if c >= -1e-12 and s <= 1e-12:
        quads.append(4)
    return quads


def test_quadrants_match_signs():
    for n in range(2, 11):
        for alpha in interval_samples(n, 7):
            for k in range(n + 1):
                q = quadrant_of(k, float(alpha), n)
                assert q in quadrant_by_signs(k * float(alpha))


def test_quadrant_validation():
    with pytest.raises(ValueError):
        quadrant_of(0, math.pi, 1)
    with pytest.raises(AlphaOutOfInterval):
        quadrant_of(1, 1.0, 3)


def test_interval_samples_cover_left_endpoint():
    for n in range(1, 11):
        samples = interval_samples(n, 20)
        assert len(samples) == 20
        lo, hi = alpha_interval(n)
        assert samples[0] == lo
        assert all(in_interval(n, a) for a in samples)


def test_catalog_verifies_on_samples():
    for n in range(1, 11):
        for alpha in interval_samples(n, 5):
            report = verify_catalog_entry(n, float(alpha))
            assert report.passed, (n, alpha, report)
            assert report.residual_inf <= 1e-9
            assert report.min_entry >= -1e-12


def test_catalog_vectors_are_palindromic():
    for n in range(1, 11):
        for alpha in interval_samples(n, 3):
            assert palindrome_check(explicit_nns(n, float(alpha)))


def test_report_shape_and_dict():
    report = verify_catalog_entry(2, 3 * math.pi / 4)
    payload = report.to_dict()
    assert payload["n"] == 2
    assert payload["passed"] is True
    assert payload["tolerances"]["residual"] == 1e-9


def test_pad_first_order_solution():
    padded = pad_solution(explicit_nns(1, math.pi))
    assert len(padded) == p_count(2)
    residual = np.max(np.abs(build_C(math.pi, 2) @ padded))
    assert residual <= 1e-12
    assert np.min(padded) >= 0


def test_pad_zero_and_nonnegativity(rng):
    assert_allclose(pad_solution(np.zeros(6)), np.zeros(10))
    y = rng.uniform(0, 1, p_count(3))
    assert np.min(pad_solution(y)) >= 0


def test_pad_chain_across_orders():
    for n in range(1, 10):
        alpha = float(interval_samples(n, 3)[1] if n > 1 else math.pi)
        y = explicit_nns(n, alpha)
        padded = pad_solution(y)
        report = verify_vector(padded, alpha, n + 1)
        assert report.passed, (n, alpha, report)


def test_pad_requires_valid_weights():
    with pytest.raises(ValueError):
        pad_solution(np.ones(6), weights=(1.0, -0.5, 0.0))
