from fractions import Fraction

import pytest

from rinehart.grading import BiCharacter, GradingError, GradingGroup, validate_bicharacter


def test_group_elements_are_lexicographic():
    G = GradingGroup((2, 3))
    assert G.order == 6
    assert G.elements[:3] == ((0, 0), (0, 1), (0, 2))
    assert G.add((1, 2), (1, 2)) == (0, 1)
    assert G.neg((1, 1)) == (1, 2)


def test_trivial_group():
    G = GradingGroup(())
    assert G.elements == ((),)
    eps = BiCharacter.trivial(G)
    assert eps((), ()) == 1
    rep = validate_bicharacter(eps)
    assert rep.passed and rep.details["triples_checked"] == 1


def test_klein_color_signs():
    G = GradingGroup((2, 2))
    eps = BiCharacter(G, exponent_matrix=((0, 1), (1, 0)))
    assert eps((1, 0), (0, 1)) == -1
    assert eps((1, 0), (1, 0)) == 1
    assert eps((1, 1), (1, 1)) == 1
    rep = validate_bicharacter(eps)
    assert rep.passed
    assert rep.details["triples_checked"] == 64


def test_super_sign():
    G = GradingGroup((2,))
    eps = BiCharacter(G, exponent_matrix=((1,),))
    assert eps((1,), (1,)) == -1
    assert validate_bicharacter(eps).passed


def test_bad_table_is_reported():
    G = GradingGroup((2,))
    eps = BiCharacter(G, table=((1, 1), (-1, 1)))
    rep = validate_bicharacter(eps)
    assert not rep.passed
    assert rep.violations


def test_non_unit_value_is_reported():
    G = GradingGroup((2,))
    eps = BiCharacter(G, table=((1, 1), (1, Fraction(2))))
    rep = validate_bicharacter(eps)
    assert any(v["condition"].startswith("values") for v in rep.violations)


def test_shape_errors():
    G = GradingGroup((2,))
    with pytest.raises(GradingError):
        BiCharacter(G, exponent_matrix=((0, 1), (1, 0)))
    with pytest.raises(GradingError):
        BiCharacter(G)
