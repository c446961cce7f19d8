"""Builtin example pairs, pinned by structure constants.

B0     2-dim abelian L, 1-dim A, trivial grading.
B1     the simple 4-dim 3-Lie algebra over a unital 1-dim A, zero anchor.
B2     a Z2 x Z2 graded pair obtained from a color trace.
B3     a split pair with 2-dim Cartan {h1, h2}, roots +-alpha, weights +-lambda.
B3sum  B3 + B3.

B3 uses a 3-dim A = {u, ap, am}: u is a unit acting as the identity on L, and
ap, am are the weight vectors with ap.h1 = xp and am.h1 = xm.
"""
from __future__ import annotations

from fractions import Fraction

from .grading import BiCharacter, GradingGroup
from .structures import (
    ColorCommAlgebra,
    ColorTrace,
    GradedBasis,
    LieColorAlgebra,
    PairSpec,
    RinehartPair,
    build_pair,
    direct_sum,
    tau_construct,
)

BUILTIN_NAMES = ("B0", "B1", "B2", "B3", "B3sum")

ONE = Fraction(1)


def _trivial_spec(L_names, A_names, **tables) -> PairSpec:
    return PairSpec(
        moduli=(),
        exponent_matrix=(),
        eps_table=None,
        L_names=tuple(L_names),
        L_degrees=tuple(() for _ in L_names),
        A_names=tuple(A_names),
        A_degrees=tuple(() for _ in A_names),
        **tables,
    )


def b0_spec() -> PairSpec:
    return _trivial_spec(("e1", "e2"), ("u",), cartan=("e1", "e2"))


def b1_spec() -> PairSpec:
    L = ("e1", "e2", "e3", "e4")
    return _trivial_spec(
        L,
        ("u",),
        bracket=[
            (("e1", "e2", "e3"), {"e4": ONE}),
            (("e1", "e2", "e4"), {"e3": ONE}),
            (("e1", "e3", "e4"), {"e2": ONE}),
            (("e2", "e3", "e4"), {"e1": ONE}),
        ],
        product=[(("u", "u"), {"u": ONE})],
        action=[(("u", x), {x: ONE}) for x in L],
    )


def b3_spec() -> PairSpec:
    L = ("h1", "h2", "xp", "xm")
    A = ("u", "ap", "am")
    return _trivial_spec(
        L,
        A,
        bracket=[
            (("h1", "h2", "xp"), {"xp": ONE}),
            (("h1", "h2", "xm"), {"xm": -ONE}),
        ],
        product=[
            (("u", "u"), {"u": ONE}),
            (("u", "ap"), {"ap": ONE}),
            (("ap", "u"), {"ap": ONE}),
            (("u", "am"), {"am": ONE}),
            (("am", "u"), {"am": ONE}),
        ],
        action=[(("u", x), {x: ONE}) for x in L]
        + [(("ap", "h1"), {"xp": ONE}), (("am", "h1"), {"xm": ONE})],
        rho=[
            (("h1", "h2", "ap"), {"ap": ONE}),
            (("h1", "h2", "am"), {"am": -ONE}),
        ],
        cartan=("h1", "h2"),
    )


def b2_pair() -> RinehartPair:
    G = GradingGroup((2, 2))
    eps = BiCharacter(G, exponent_matrix=((0, 1), (1, 0)))
    Lb = GradedBasis(("e1", "e2", "z", "h"), ((1, 0), (0, 1), (1, 1), (0, 0)))
    # [e2, e1] = -eps(e2, e1)[e1, e2] = z
    Lc = LieColorAlgebra(Lb, {(0, 1): {2: ONE}, (1, 0): {2: ONE}})
    A = ColorCommAlgebra(GradedBasis(("u",), ((0, 0),)), {(0, 0): {0: ONE}})
    action = {(0, j): {j: ONE} for j in range(4)}
    tau = ColorTrace((0, 0, 0, 1))
    return tau_construct(Lc, A, {}, action, tau, eps)


def builtin(name: str) -> RinehartPair:
    if name == "B0":
        return build_pair(b0_spec())
    if name == "B1":
        return build_pair(b1_spec())
    if name == "B2":
        return b2_pair()
    if name == "B3":
        return build_pair(b3_spec())
    if name == "B3sum":
        return direct_sum(builtin("B3"), builtin("B3"))
    raise KeyError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
