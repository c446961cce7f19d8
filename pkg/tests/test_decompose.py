from fractions import Fraction

import pytest

from rinehart.decompose import (
    A_ideal_closure,
    check_tight,
    class_ideal_L,
    decompose_A,
    decompose_L,
    ideal_closure,
    is_ideal_A,
    is_ideal_L,
    pairing,
    radicals,
    simplicity_probe,
)
from rinehart.exactnum import full_space, intersect, span, unit_vec, zero_space
from rinehart.connections import root_classes


@pytest.mark.parametrize("name", ["B3", "B3sum"])
@pytest.mark.parametrize("mode", ["strict", "verbatim"])
def test_L_decomposition(splits, name, mode):
    S = splits[name]
    d = decompose_L(S, mode)
    assert d.passed
    for I, rep in zip(d.ideals, d.ideal_reports):
        assert rep.passed
        assert is_ideal_L(S.pair, I.total).passed
    acc = d.dimension_accounting
    assert acc["dim_complement"] + sum(acc["dims_ideals"]) == S.pair.nL


@pytest.mark.parametrize("name", ["B3", "B3sum"])
def test_A_decomposition(splits, name):
    S = splits[name]
    d = decompose_A(S)
    assert d.passed
    for J in d.ideals:
        assert is_ideal_A(S.pair, J.total).passed
    acc = d.dimension_accounting
    assert acc["dim_complement"] + sum(acc["dims_ideals"]) == S.pair.nA


def test_b3_dimensions(splits):
    dL = decompose_L(splits["B3"])
    assert dL.complement.dim == 2 and [I.total.dim for I in dL.ideals] == [2]
    dA = decompose_A(splits["B3"])
    assert dA.complement.dim == 1 and [J.total.dim for J in dA.ideals] == [2]


def test_b3sum_blocks(splits):
    S = splits["B3sum"]
    dL = decompose_L(S, "strict")
    names = S.pair.L.basis.names
    blocks = [{names[i] for i in I.total.pivots} for I in dL.ideals]
    assert sorted(map(sorted, blocks)) == [["xm_1", "xp_1"], ["xm_2", "xp_2"]]
    assert all(v["passed"] for v in dL.cross_checks.values())
    assert dL.directness["pairwise_zero"] and dL.directness["sum_direct"]
    # H is not generated by the root spaces here, so directness is measured, not asserted
    assert dL.directness["verdict"] == "not asserted"


def test_verbatim_merges_b3sum(splits):
    dL = decompose_L(splits["B3sum"], "verbatim")
    assert len(dL.ideals) == 1 and dL.ideals[0].total.dim == 4


def test_non_ideal_is_rejected(pairs):
    P = pairs["B3"]
    h1 = P.L.basis.lookup("h1")
    rep = is_ideal_L(P, span([unit_vec(P.nL, h1)], P.nL))
    assert not rep.passed


def test_radicals(pairs):
    P = pairs["B3"]
    r = radicals(P)
    assert r.ann_L.is_zero() and r.z_rho.is_zero() and r.ann_A.is_zero()
    assert r.ker_rho.dim == 2
    assert r.z_rho == intersect(r.ann_L, r.ker_rho)
    r0 = radicals(pairs["B0"])
    assert r0.ann_L == full_space(2)


def test_tightness_report(splits):
    t = check_tight(splits["B3"])
    sub = t.details["sub_conditions"]
    assert sub["Z_rho_zero"] and sub["Ann_A_zero"] and sub["AA_equals_A"] and sub["AL_equals_L"]
    assert not sub["H_equals_generated_sum"] and not sub["A0_equals_generated_sum"]
    assert not t.passed


def test_pairing_partners_are_reported_without_tightness(splits):
    rep = pairing(splits["B3sum"], require_tight=False)
    assert rep.details["partners"] == {"0": [], "1": []}
    gated = pairing(splits["B3sum"])
    assert not gated.passed and "precondition" in gated.details


def test_closures(pairs):
    P = pairs["B1"]
    for i in range(4):
        assert ideal_closure(P, [unit_vec(4, i)]) == full_space(4)
    assert ideal_closure(P, []) == zero_space(4)
    Q = pairs["B3"]
    xp = Q.L.basis.lookup("xp")
    C = ideal_closure(Q, [unit_vec(Q.nL, xp)])
    assert C == span([unit_vec(Q.nL, xp)], Q.nL)  # [xp, L, L] only returns multiples of xp
    ap = Q.A.basis.lookup("ap")
    assert A_ideal_closure(Q, [unit_vec(Q.nA, ap)]).dim == 1


def test_probes(pairs, splits):
    assert simplicity_probe(pairs["B1"]).details["L_verdict"] == "simple (probe)"
    b0 = simplicity_probe(pairs["B0"]).details
    assert b0["L_verdict"] == "not simple" and not b0["nonzero_conditions"]["[L,L,L] != 0"]
    rep = simplicity_probe(splits["B3sum"])
    assert rep.passed
    assert all(r["closures_inside"] for r in rep.details["L_ideals"] + rep.details["A_ideals"])
    assert not rep.details["hypotheses_hold"]


def test_class_ideal_contains_its_root_spaces(splits):
    S = splits["B3sum"]
    part = root_classes(S, "strict")
    for i, cls in enumerate(part.classes):
        I = class_ideal_L(S, cls, i)
        for a in cls:
            assert I.total.contains(S.L_space(a))
