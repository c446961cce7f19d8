import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rinehart.exactnum import (
    ContainmentError,
    DimensionMismatch,
    complement,
    format_scalar,
    full_space,
    intersect,
    is_direct,
    nullspace,
    parse_scalar,
    rref,
    span,
    sum_,
    zero_space,
)

F = Fraction


def test_parse_and_format_roundtrip():
    assert parse_scalar("3/6") == F(1, 2)
    assert parse_scalar("-4") == F(-4)
    assert format_scalar(F(-2, 4)) == "-1/2"
    assert format_scalar(F(6, 3)) == "2"
    with pytest.raises(ValueError):
        parse_scalar(0.5)


def test_rref_is_canonical():
    S = rref([(2, 4, 0), (1, 2, 1)])
    T = rref([(0, 0, 3), (1, 2, 0)])
    assert S == T
    assert S.basis_rows == ((1, 2, 0), (0, 0, 1))
    assert S.pivots == (0, 2)


def test_membership_and_coordinates():
    S = span([(1, 1, 0), (0, 1, 1)], 3)
    assert (1, 2, 1) in S
    assert (1, 0, 0) not in S
    coords = S.coordinates((1, 2, 1))
    assert coords is not None
    assert tuple(sum(c * r[k] for c, r in zip(coords, S.basis_rows)) for k in range(3)) == (1, 2, 1)


def test_intersection_of_planes_is_a_line():
    S = span([(1, 0, 0), (0, 1, 0)], 3)
    T = span([(0, 1, 0), (0, 0, 1)], 3)
    assert intersect(S, T) == span([(0, 1, 0)], 3)
    assert sum_(S, T) == full_space(3)


def test_nullspace():
    K = nullspace([(1, 1, 1)], 3)
    assert K.dim == 2
    for r in K.basis_rows:
        assert sum(r) == 0


def test_complement_inside_enclosing_space():
    W = span([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)], 4)
    S = span([(1, 1, 0, 0)], 4)
    U = complement(S, W)
    assert U.dim == 2
    assert W.contains(U)
    assert is_direct([S, U], 4) and sum_(S, U) == W
    with pytest.raises(ContainmentError):
        complement(span([(0, 0, 0, 1)], 4), W)


def test_ambient_mismatch_raises():
    with pytest.raises(DimensionMismatch):
        sum_(zero_space(2), zero_space(3))


def _small_subspaces():
    """Every subspace of Q^3 spanned by at most two vectors with entries in {-1, 0, 1}."""
    vectors = list(itertools.product((-1, 0, 1), repeat=3))
    seen = []
    for k in (0, 1, 2):
        for combo in itertools.combinations(vectors, k):
            S = rref(list(combo), 3)
            if S not in seen:
                seen.append(S)
    return seen


def modular_law_cases(limit=1000):
    spaces = _small_subspaces()
    return list(itertools.islice(itertools.product(spaces, repeat=2), limit))


def test_modular_law_enumerated():
    cases = modular_law_cases()
    assert len(cases) == 1000
    for S, T in cases:
        assert S.dim + T.dim == sum_(S, T).dim + intersect(S, T).dim


small = st.integers(-3, 3).map(Fraction)
rows = st.lists(st.tuples(small, small, small, small), max_size=4)


@settings(max_examples=60, deadline=None)
@given(rows, rows)
def test_modular_law_property(a, b):
    S, T = rref(a, 4), rref(b, 4)
    I = intersect(S, T)
    assert S.contains(I) and T.contains(I)
    assert S.dim + T.dim == sum_(S, T).dim + I.dim


@settings(max_examples=60, deadline=None)
@given(rows, rows)
def test_complement_property(a, b):
    S = rref(a, 4)
    W = sum_(S, rref(b, 4))
    U = complement(S, W)
    assert intersect(S, U).is_zero()
    assert sum_(S, U) == W
