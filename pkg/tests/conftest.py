"""Shared oracles: the displayed matrices, written out entry by entry."""

import numpy as np
import pytest


def displayed_c2(z):
    return np.array([
        [1, -2 * z**2, z**4, 0, 0, 0],
        [0, z, -z**3, 1, -z**2, 0],
        [0, 0, z**2, 0, 2 * z, 1],
    ], dtype=complex)


def displayed_c3(z):
    return np.array([
        [1, -3 * z**2, 3 * z**4, -z**6, 0, 0, 0, 0, 0, 0],
        [0, z, -2 * z**3, z**5, 1, -2 * z**2, z**4, 0, 0, 0],
        [0, 0, z**2, -z**4, 0, 2 * z, -2 * z**3, 1, -z**2, 0],
        [0, 0, 0, z**3, 0, 0, 3 * z**2, 0, 3 * z, 1],
    ], dtype=complex)


def displayed_b2(z):
    c = displayed_c2(z)
    return c[[0, 1, 1, 2]]


def displayed_b3(z):
    c = displayed_c3(z)
    # binary row labels in lexicographic order, by ones count 0,1,1,2,1,2,2,3
    return c[[0, 1, 1, 2, 1, 2, 2, 3]]


@pytest.fixture
def rng():
    return np.random.default_rng(20260811)
