"""Vector algebra primitives."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from geomfreq.geometry import cross, inner, norm, triple_scalar, vec3

finite = st.floats(
    min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False
)
vectors = st.tuples(finite, finite, finite).map(lambda t: vec3(*t))


def test_vec3_is_readonly_float64():
    a = vec3(1.0, 2.0, 3.0)
    assert a.dtype == np.float64
    with pytest.raises(ValueError):
        a[0] = 9.0


def test_vec3_rejects_non_finite():
    with pytest.raises(ValueError):
        vec3(1.0, float("nan"), 0.0)
    with pytest.raises(ValueError):
        vec3(float("inf"), 0.0, 0.0)


def test_inner_examples():
    assert inner(vec3(1, 0, 0), vec3(0, 1, 0)) == 0.0
    assert inner(vec3(1, 2, 3), vec3(1, 2, 3)) == 14.0
    # balanced three-phase snapshot against the zero-sequence direction
    v = vec3(0.0, -6.0 * math.sqrt(3.0), 6.0 * math.sqrt(3.0))
    assert abs(inner(v, vec3(1, 1, 1))) < 1e-12


def test_cross_examples():
    np.testing.assert_allclose(cross(vec3(1, 0, 0), vec3(0, 1, 0)), [0, 0, 1])
    a = vec3(2.0, -1.0, 5.0)
    np.testing.assert_allclose(cross(a, a), [0, 0, 0])
    np.testing.assert_allclose(cross(vec3(1, 2, 3), vec3(4, 5, 6)), [-3, 6, -3])


def test_triple_scalar_examples():
    assert triple_scalar(vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)) == 1.0
    a, b = vec3(1, 2, 3), vec3(4, 5, 6)
    assert triple_scalar(a, a, b) == 0.0
    assert triple_scalar(vec3(1, 2, 3), vec3(4, 5, 6), vec3(7, 8, 10)) == -3.0


@given(vectors, vectors)
def test_cross_orthogonal_to_factors(a, b):
    axb = cross(a, b)
    scale = max(norm(a) * norm(axb), norm(b) * norm(axb), 1.0)
    assert abs(inner(a, axb)) <= 1e-12 * scale
    assert abs(inner(b, axb)) <= 1e-12 * scale


@given(vectors, vectors)
def test_cross_antisymmetric(a, b):
    np.testing.assert_array_equal(cross(a, b), -cross(b, a))


@given(vectors, vectors, vectors)
def test_triple_product_cyclic(a, b, c):
    t1 = triple_scalar(a, b, c)
    t2 = triple_scalar(c, a, b)
    t3 = triple_scalar(b, c, a)
    scale = max(norm(a) * norm(b) * norm(c), 1.0)
    assert abs(t1 - t2) <= 1e-12 * scale
    assert abs(t1 - t3) <= 1e-12 * scale


@given(vectors, vectors)
def test_lagrange_identity(a, b):
    lhs = norm(cross(a, b)) ** 2
    rhs = norm(a) ** 2 * norm(b) ** 2 - inner(a, b) ** 2
    scale = max(norm(a) ** 2 * norm(b) ** 2, 1.0)
    assert abs(lhs - rhs) <= 1e-10 * scale
