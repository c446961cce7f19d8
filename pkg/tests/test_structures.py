from fractions import Fraction

import pytest

from rinehart.axioms import validate_all
from rinehart.grading import BiCharacter, GradingGroup
from rinehart.instances import b1_spec, b3_spec, builtin
from rinehart.structures import (
    ColorCommAlgebra,
    ColorTrace,
    DegreeError,
    GradedBasis,
    GradingMismatch,
    LieColorAlgebra,
    OrientationConflict,
    PairSpec,
    StructureError,
    TraceError,
    UnknownName,
    build_pair,
    direct_sum,
    e,
    pair_to_spec,
    tau_construct,
)

ONE = Fraction(1)


def _spec(**kw):
    base = dict(
        moduli=(),
        exponent_matrix=(),
        eps_table=None,
        L_names=("x", "y", "z"),
        L_degrees=((), (), ()),
        A_names=("u",),
        A_degrees=((),),
    )
    base.update(kw)
    return PairSpec(**base)


def test_bracket_completed_by_skew():
    P = build_pair(_spec(bracket=[(("x", "y", "z"), {"x": ONE})]))
    x, y, z = (P.L.basis.lookup(n) for n in "xyz")
    assert P.L.bracket[(x, y, z)] == {x: 1}
    assert P.L.bracket[(y, x, z)] == {x: -1}
    assert P.L.bracket[(z, y, x)] == {x: -1}
    assert P.L.bracket[(y, z, x)] == {x: 1}
    assert len(P.L.bracket) == 6


def test_consistent_second_orientation_is_accepted():
    P = build_pair(_spec(bracket=[(("x", "y", "z"), {"x": ONE}), (("y", "x", "z"), {"x": -ONE})]))
    assert len(P.L.bracket) == 6


def test_conflicting_orientation_raises():
    with pytest.raises(OrientationConflict):
        build_pair(_spec(bracket=[(("x", "y", "z"), {"x": ONE}), (("y", "x", "z"), {"x": ONE})]))


def test_repeated_argument_is_forced_to_zero():
    with pytest.raises(OrientationConflict):
        build_pair(_spec(bracket=[(("x", "x", "z"), {"x": ONE})]))


def test_unknown_name():
    with pytest.raises(UnknownName):
        build_pair(_spec(bracket=[(("x", "y", "w"), {"x": ONE})]))


def test_degree_mismatch():
    spec = _spec(
        moduli=(2,),
        exponent_matrix=((0,),),
        L_degrees=((1,), (0,), (0,)),
        A_degrees=((0,),),
        bracket=[(("x", "y", "z"), {"y": ONE})],
    )
    with pytest.raises(DegreeError):
        build_pair(spec)


def test_degree_outside_group():
    with pytest.raises(DegreeError):
        build_pair(_spec(moduli=(2,), exponent_matrix=((0,),), L_degrees=((3,), (0,), (0,)), A_degrees=((0,),)))


def test_color_sign_in_completion():
    # Z2 with the super sign: swapping two odd elements does not change sign.
    spec = _spec(
        moduli=(2,),
        exponent_matrix=((1,),),
        L_degrees=((1,), (1,), (0,)),
        A_degrees=((0,),),
        bracket=[(("x", "y", "z"), {"z": ONE})],
    )
    P = build_pair(spec)
    assert P.L.bracket[(1, 0, 2)] == {2: 1}
    assert P.L.bracket[(0, 2, 1)] == {2: -1}


def test_rho_completion():
    P = build_pair(b3_spec())
    h1, h2 = P.L.basis.lookup("h1"), P.L.basis.lookup("h2")
    ap = P.A.basis.lookup("ap")
    assert P.rho[(h1, h2, ap)] == {ap: 1}
    assert P.rho[(h2, h1, ap)] == {ap: -1}


def test_tau_bracket_on_b2():
    P = builtin("B2")
    n = P.L.basis.lookup
    assert P.br(e(n("h")), e(n("e1")), e(n("e2"))) == {n("z"): 1}
    assert P.br(e(n("e1")), e(n("e2")), e(n("h"))) == {n("z"): 1}
    assert all(r.passed for r in validate_all(P))


def _b2_parts():
    G = GradingGroup((2, 2))
    eps = BiCharacter(G, exponent_matrix=((0, 1), (1, 0)))
    Lb = GradedBasis(("e1", "e2", "z", "h"), ((1, 0), (0, 1), (1, 1), (0, 0)))
    Lc = LieColorAlgebra(Lb, {(0, 1): {2: ONE}, (1, 0): {2: ONE}})
    A = ColorCommAlgebra(GradedBasis(("u",), ((0, 0),)), {(0, 0): {0: ONE}})
    action = {(0, j): {j: ONE} for j in range(4)}
    return Lc, A, action, eps


def test_tau_must_be_even():
    Lc, A, action, eps = _b2_parts()
    with pytest.raises(TraceError):
        tau_construct(Lc, A, {}, action, ColorTrace((1, 0, 0, 0)), eps)


def test_tau_must_vanish_on_brackets():
    Lc, A, action, eps = _b2_parts()
    # z = [e1, e2] but z is odd, so use h with a bracket landing on it
    Lc2 = LieColorAlgebra(Lc.basis, {(0, 1): {2: ONE}, (1, 0): {2: ONE}, (3, 3): {}})
    with pytest.raises(TraceError):
        tau_construct(Lc2, A, {}, action, ColorTrace((0, 0, 1, 0)), eps)


def test_tau_rejects_non_lie_rinehart_input():
    Lc, A, action, eps = _b2_parts()
    bad_action = dict(action)
    bad_action[(0, 0)] = {0: Fraction(2)}
    with pytest.raises(StructureError):
        tau_construct(Lc, A, {}, bad_action, ColorTrace((0, 0, 0, 1)), eps)


def test_direct_sum_renames_and_separates():
    P = builtin("B3sum")
    assert P.nL == 8 and P.nA == 6
    assert "xp_1" in P.L.basis.names and "xp_2" in P.L.basis.names
    assert P.cartan == ("h1_1", "h2_1", "h1_2", "h2_2")
    i, j = P.L.basis.lookup("h1_1"), P.L.basis.lookup("xp_2")
    assert P.br(e(i), e(P.L.basis.lookup("h2_1")), e(j)) == {}


def test_direct_sum_needs_same_grading():
    with pytest.raises(GradingMismatch):
        direct_sum(builtin("B3"), builtin("B2"))


def test_spec_roundtrip_preserves_pair():
    for name in ("B1", "B3", "B2"):
        P = builtin(name)
        Q = build_pair(pair_to_spec(P))
        assert Q.L.bracket == P.L.bracket
        assert Q.A.product == P.A.product
        assert Q.action == P.action
        assert Q.rho == P.rho


def test_b1_orbit_has_24_entries():
    P = build_pair(b1_spec())
    assert len(P.L.bracket) == 24
