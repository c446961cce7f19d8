import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rinehart.connections import (
    ConnectionError_,
    ConnectionWitness,
    RootSystem,
    check_root_shift,
    check_weight_closure,
    replay_root_witness,
    replay_weight_witness,
    root_classes,
    root_connected,
    weight_classes,
    weight_connected,
)
from rinehart.split import BilinearFunctional


def f(x):
    return BilinearFunctional(((Fraction(x),),))


def system(pi, lam):
    return RootSystem(frozenset(f(x) for x in pi), frozenset(f(x) for x in lam))


# ---- independent oracle: enumerate every chain with k <= 3 over plain integers ----

def oracle_root_connected(pi, lam, a, b, mode, kmax=3):
    """Literal reading of the chain definition with first element a; d = 1 so functionals are numbers."""
    pm_pi = {x for p in pi for x in (p, -p)}
    pm_all = pm_pi | {x for l in lam for x in (l, -l)}
    elems = sorted(pm_all | {0})
    if b in (a, -a):
        return True  # k = 1
    for k in range(2, kmax + 1):
        for pairs in itertools.product(itertools.product(elems, repeat=2), repeat=k):
            s = a
            ok = True
            for i, (g, m) in enumerate(pairs, start=1):
                if mode == "strict" and s + g not in pm_all:
                    ok = False
                    break
                s = s + g + m
                if i < k and s not in pm_pi:
                    ok = False
                    break
            if ok and s in (b, -b):
                return True
    return False


def oracle_weight_connected(pi, lam, l0, m0, kmax=3):
    pm_lam = {x for l in lam for x in (l, -l)}
    moves = sorted({x for p in pi for x in (p, -p)} | pm_lam)
    if m0 in (l0, -l0):
        return True
    for k in range(2, kmax + 2):
        for etas in itertools.product(moves, repeat=k - 1):
            s = l0
            ok = True
            for i, e in enumerate(etas, start=2):
                s += e
                if i < k and s not in pm_lam:
                    ok = False
                    break
            if ok and s in (m0, -m0):
                return True
    return False


def symmetric(values):
    return sorted({x for v in values for x in (v, -v)})


@pytest.mark.parametrize("mode", ["strict", "verbatim"])
@pytest.mark.parametrize(
    "pi,lam",
    [
        ([1, -1, 5, -5], []),
        ([1, -1, 3, -3], [2, -2]),
        ([1, 4], [2]),
        ([1, -1, 2, -2, 3, -3, 4, -4], []),
        ([2, -2, 7, -7], [5, -5]),
    ],
)
def test_bfs_matches_oracle_examples(pi, lam, mode):
    R = system(pi, lam)
    for a, b in itertools.product(pi, repeat=2):
        w = root_connected(R, f(a), f(b), mode, max_steps=3)
        assert (w is not None) == oracle_root_connected(pi, lam, a, b, mode), (a, b)


roots = st.lists(st.integers(-3, 3).filter(bool), min_size=1, max_size=4, unique=True)


@settings(max_examples=25, deadline=None)
@given(roots, st.lists(st.integers(-3, 3).filter(bool), max_size=2, unique=True), st.booleans())
def test_bfs_matches_oracle_property(pi, lam, make_symmetric):
    if make_symmetric:
        pi = symmetric(pi)
    assert len(pi) <= 8
    R = system(pi, lam)
    for mode in ("strict", "verbatim"):
        for a, b in itertools.product(pi, repeat=2):
            w = root_connected(R, f(a), f(b), mode, max_steps=3)
            assert (w is not None) == oracle_root_connected(pi, lam, a, b, mode)
            if w is not None:
                assert replay_root_witness(R, f(a), f(b), w)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-4, 4).filter(bool), max_size=3, unique=True),
       st.lists(st.integers(-4, 4).filter(bool), min_size=1, max_size=4, unique=True))
def test_weight_bfs_matches_oracle(pi, lam):
    R = system(pi, lam)
    for a, b in itertools.product(lam, repeat=2):
        w = weight_connected(R, f(a), f(b), max_steps=3)
        assert (w is not None) == oracle_weight_connected(pi, lam, a, b)
        if w is not None:
            assert replay_weight_witness(R, f(a), f(b), w)


def test_k1_base_case():
    R = system([1, -1], [])
    w = root_connected(R, f(1), f(1))
    assert w.chain == [f(1)]
    assert root_connected(R, f(1), f(-1)).chain == [f(1)]


def test_verbatim_cancellation_chain():
    # {a, -a, b}: a + (-a) + b = b, padded with a zero pair
    R = system([1, -1, 5, -5], [])
    zero = f(0)
    chain = [f(1), f(-1), f(5), zero, zero]
    w = ConnectionWitness("root", "verbatim", chain, [f(1), f(5), f(5)])
    assert replay_root_witness(R, f(1), f(5), w)
    assert not replay_root_witness(R, f(1), f(5), ConnectionWitness("root", "strict", chain, w.partial_sums))
    assert root_connected(R, f(1), f(5), "verbatim") is not None
    assert root_connected(R, f(1), f(5), "strict") is None


def test_tampered_witness_is_rejected():
    R = system([1, -1, 2, -2], [])
    w = root_connected(R, f(1), f(2), "strict")
    assert w is not None and replay_root_witness(R, f(1), f(2), w)
    bad = ConnectionWitness(w.kind, w.mode, list(w.chain), list(w.partial_sums))
    bad.chain[1] = f(9)
    assert not replay_root_witness(R, f(1), f(2), bad)
    # a witness must start at the source root
    assert not replay_root_witness(R, f(1), f(2), ConnectionWitness("root", "strict", [f(2)], [f(2)]))


def test_not_a_root():
    R = system([1], [])
    with pytest.raises(ConnectionError_):
        root_connected(R, f(1), f(3))
    with pytest.raises(ConnectionError_):
        weight_connected(R, f(1), f(1))


def test_weight_base_case():
    R = system([], [3, -3])
    assert weight_connected(R, f(3), f(-3)).chain == [f(3)]


def test_b3sum_classes(splits):
    S = splits["B3sum"]
    strict = root_classes(S, "strict")
    assert len(strict.classes) == 2 and strict.equivalence_verified
    assert len(root_classes(S, "verbatim").classes) == 1
    w = weight_classes(S)
    assert len(w.classes) == 2 and w.notes["closure_under_eta_verified"]


def test_b3_single_classes(splits):
    S = splits["B3"]
    for mode in ("strict", "verbatim"):
        assert len(root_classes(S, mode).classes) == 1
    assert len(weight_classes(S).classes) == 1


def test_empty_weight_system():
    R = system([1, -1], [])
    assert weight_classes(R).classes == []


@settings(max_examples=20, deadline=None)
@given(roots, st.lists(st.integers(-3, 3).filter(bool), max_size=2, unique=True), st.randoms())
def test_partition_is_order_invariant_and_an_equivalence(pi, lam, rnd):
    pi = symmetric(pi)
    R = system(pi, lam)
    shuffled = list(pi)
    rnd.shuffle(shuffled)
    R2 = system(shuffled, list(reversed(lam)))
    for mode in ("strict", "verbatim"):
        a, b = root_classes(R, mode), root_classes(R2, mode)
        assert a.classes == b.classes
        assert a.equivalence_verified


@settings(max_examples=20, deadline=None)
@given(roots, st.lists(st.integers(-3, 3).filter(bool), max_size=2, unique=True))
def test_shift_property_verbatim(pi, lam):
    R = system(symmetric(pi), lam)
    assert check_root_shift(R, root_classes(R, "verbatim"))


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(-3, 3).filter(bool), max_size=2, unique=True),
       st.lists(st.integers(-3, 3).filter(bool), min_size=1, max_size=4, unique=True))
def test_weight_closure_property(pi, lam):
    R = system(pi, lam)
    assert check_weight_closure(R, weight_classes(R))
