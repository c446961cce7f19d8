from fractions import Fraction

import pytest

from rinehart.axioms import (
    check_fi,
    check_lie_rinehart,
    check_skew,
    validate_all,
)
from rinehart.instances import BUILTIN_NAMES, builtin
from rinehart.mutation import entries, mutate, scalings


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_builtins_pass_every_axiom(pairs, name):
    reports = validate_all(pairs[name])
    assert [r for r in reports if not r.passed] == []


def test_reports_count_tuples(pairs):
    P = pairs["B1"]
    assert check_skew(P).tuples_checked == 4 ** 3
    assert check_fi(P).tuples_checked == 4 ** 5


def test_violations_are_sorted_and_deterministic(pairs):
    P = pairs["B1"]
    key = sorted(P.L.bracket)[0]
    Q = mutate(P, "bracket", key, next(iter(P.L.bracket[key])), 5)
    a = check_fi(Q).to_dict()
    b = check_fi(Q).to_dict()
    assert a == b
    assert a["violations"]


# B3's action of the weight vectors on h1 is a genuine free parameter: any value
# (including zero) still satisfies every axiom.
FREE = {("action", (1, 0)), ("action", (2, 0))}


def _failing(P):
    return [r for r in validate_all(P) if not r.passed]


@pytest.mark.parametrize("name", ["B1", "B3"])
def test_every_non_free_scaling_is_caught(pairs, name):
    P = pairs[name]
    caught = 0
    for (table, key, k, _), Q in scalings(P):
        if (table, key) in FREE:
            continue
        assert _failing(Q), f"{name}: scaling {table} {key} -> {k} went unnoticed"
        caught += 1
    assert caught >= 20


@pytest.mark.parametrize("name", ["B1", "B3"])
def test_every_non_free_deletion_is_caught(pairs, name):
    P = pairs[name]
    for table, key, k, _ in entries(P):
        if (table, key) in FREE:
            continue
        assert _failing(mutate(P, table, key, k, 0))


@pytest.mark.parametrize("value", [Fraction(0), Fraction(2), Fraction(-3, 7)])
def test_free_parameters_are_valid_deformations(pairs, value):
    P = pairs["B3"]
    for table, key in sorted(FREE):
        k = next(iter(P.action[key]))
        assert not _failing(mutate(P, table, key, k, value))


def test_new_entry_breaks_grading_or_identities(pairs):
    P = pairs["B3"]
    # a bracket of two Cartan elements landing on h1 breaks the fundamental identity
    Q = mutate(P, "bracket", (0, 1, 0), 0, 1)
    assert _failing(Q)


def test_lie_rinehart_check_on_color_heisenberg():
    from rinehart.grading import BiCharacter, GradingGroup
    from rinehart.structures import ColorCommAlgebra, GradedBasis, LieColorAlgebra

    one = Fraction(1)
    G = GradingGroup((2, 2))
    eps = BiCharacter(G, exponent_matrix=((0, 1), (1, 0)))
    Lb = GradedBasis(("e1", "e2", "z"), ((1, 0), (0, 1), (1, 1)))
    A = ColorCommAlgebra(GradedBasis(("u",), ((0, 0),)), {(0, 0): {0: one}})
    action = {(0, j): {j: one} for j in range(3)}
    good = LieColorAlgebra(Lb, {(0, 1): {2: one}, (1, 0): {2: one}})
    assert check_lie_rinehart(good, A, {}, action, eps).passed
    # with the ordinary sign the bracket is not color skew
    bad = LieColorAlgebra(Lb, {(0, 1): {2: one}, (1, 0): {2: -one}})
    assert not check_lie_rinehart(bad, A, {}, action, eps).passed
