"""Structure-constant containers and constructors for 3-Lie-Rinehart color pairs.

Tables are sparse: a key of basis indices maps to a sparse output vector
``{index: Fraction}``. Missing keys are zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .exactnum import ZERO, sp_axpy, sp_scale
from .grading import BiCharacter, GradingGroup


class StructureError(ValueError):
    """Malformed structure constants (unknown name, bad degree, orientation conflict)."""


class UnknownName(StructureError):
    pass


class DegreeError(StructureError):
    pass


class OrientationConflict(StructureError):
    pass


class TraceError(StructureError):
    pass


class GradingMismatch(StructureError):
    pass


@dataclass(frozen=True)
class GradedBasis:
    names: tuple
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "degrees", tuple(tuple(d) for d in self.degrees))
        if len(self.names) != len(self.degrees):
            raise StructureError("names and degrees differ in length")
        if len(set(self.names)) != len(self.names):
            raise StructureError(f"duplicate basis names in {self.names}")

    @property
    def dim(self) -> int:
        return len(self.names)

    @cached_property
    def index(self) -> dict:
        return {n: i for i, n in enumerate(self.names)}

    def lookup(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownName(f"unknown basis name {name!r}") from None


@dataclass(frozen=True)
class ColorCommAlgebra:
    basis: GradedBasis
    product: dict = field(default_factory=dict)  # (i, j) -> {k: c}


@dataclass(frozen=True)
class ThreeLieColorAlgebra:
    basis: GradedBasis
    bracket: dict = field(default_factory=dict)  # (i, j, k) -> {l: c}


@dataclass(frozen=True)
class LieColorAlgebra:
    basis: GradedBasis
    bracket: dict = field(default_factory=dict)  # (i, j) -> {k: c}


@dataclass(frozen=True)
class ColorTrace:
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))


@dataclass(frozen=True)
class RinehartPair:
    L: ThreeLieColorAlgebra
    A: ColorCommAlgebra
    eps: BiCharacter
    action: dict = field(default_factory=dict)  # (a_i, e_j) -> {e_k: c}
    rho: dict = field(default_factory=dict)  # (e_i, e_j, a_k) -> {a_l: c}
    cartan: tuple | None = None

    @property
    def group(self) -> GradingGroup:
        return self.eps.group

    @property
    def nL(self) -> int:
        return self.L.basis.dim

    @property
    def nA(self) -> int:
        return self.A.basis.dim

    # Degrees as positions in the group's element list, for table lookups.
    @cached_property
    def Ldeg(self) -> tuple:
        idx = self.group.index
        return tuple(idx[self.group.check(d)] for d in self.L.basis.degrees)

    @cached_property
    def Adeg(self) -> tuple:
        idx = self.group.index
        return tuple(idx[self.group.check(d)] for d in self.A.basis.degrees)

    @cached_property
    def E(self) -> tuple:
        return self.eps.matrix

    @cached_property
    def ADD(self) -> tuple:
        G = self.group
        els = G.elements
        return tuple(tuple(G.index[G.add(g, h)] for h in els) for g in els)

    # multilinear evaluation on sparse vectors
    def br(self, u: dict, v: dict, w: dict) -> dict:
        out: dict = {}
        table = self.L.bracket
        for i, a in u.items():
            for j, b in v.items():
                ab = a * b
                for k, c in w.items():
                    val = table.get((i, j, k))
                    if val:
                        sp_axpy(out, ab * c, val)
        return out

    def mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        table = self.A.product
        for i, x in a.items():
            for j, y in b.items():
                val = table.get((i, j))
                if val:
                    sp_axpy(out, x * y, val)
        return out

    def act(self, a: dict, x: dict) -> dict:
        out: dict = {}
        for i, s in a.items():
            for j, t in x.items():
                val = self.action.get((i, j))
                if val:
                    sp_axpy(out, s * t, val)
        return out

    def rh(self, x: dict, y: dict, a: dict) -> dict:
        """rho(x, y)(a)."""
        out: dict = {}
        for i, s in x.items():
            for j, t in y.items():
                st = s * t
                for k, c in a.items():
                    val = self.rho.get((i, j, k))
                    if val:
                        sp_axpy(out, st * c, val)
        return out

    def name_vec(self, v: dict, side: str = "L") -> dict:
        names = (self.L if side == "L" else self.A).basis.names
        return {names[k]: c for k, c in sorted(v.items())}


def e(i: int) -> dict:
    """Sparse unit vector."""
    return {i: Fraction(1)}


# --------------------------------------------------------------------------
# Building from named entries


@dataclass
class PairSpec:
    """Named, uncompleted description of a pair, as read from a file."""

    moduli: tuple
    exponent_matrix: tuple | None
    eps_table: tuple | None
    L_names: tuple
    L_degrees: tuple
    A_names: tuple
    A_degrees: tuple
    bracket: list = field(default_factory=list)  # [((x, y, z), {name: Fraction})]
    product: list = field(default_factory=list)  # [((a, b), {name: Fraction})]
    action: list = field(default_factory=list)  # [((a, x), {name: Fraction})]
    rho: list = field(default_factory=list)  # [((x, y, a), {name: Fraction})]
    cartan: tuple | None = None


def _named_value(basis: GradedBasis, value: dict) -> dict:
    out = {}
    for name, c in value.items():
        c = Fraction(c)
        if c:
            k = basis.lookup(name)
            out[k] = out.get(k, ZERO) + c
    return {k: c for k, c in out.items() if c}


def _check_degree(G, basis_out, value, expected, what):
    for k in value:
        if tuple(basis_out.degrees[k]) != expected:
            raise DegreeError(
                f"{what}: output {basis_out.names[k]} has degree {basis_out.degrees[k]}, expected {expected}"
            )


def _merge(table: dict, key, value: dict, what: str) -> None:
    old = table.get(key)
    if old is not None and old != value:
        raise OrientationConflict(f"{what}: conflicting values at {key}")
    if value:
        table[key] = value
    elif old is None:
        table[key] = {}


def _bracket_orbit(key, value, E, deg) -> dict:
    """All orientations of a triple reachable by the two adjacent eps-swaps."""
    orbit = {key: value}
    stack = [key]
    while stack:
        t = stack.pop()
        x, y, z = t
        cur = orbit[t]
        for nt, sign in (((y, x, z), -E[deg[x]][deg[y]]), ((x, z, y), -E[deg[y]][deg[z]])):
            # [t] = sign * [nt]  =>  [nt] = sign^{-1} [t] = sign [t] since sign = +-1
            nv = sp_scale(1 / sign, cur)
            if nt in orbit:
                if orbit[nt] != nv:
                    raise OrientationConflict(f"bracket entry {key} contradicts eps-skew symmetry at {nt}")
            else:
                orbit[nt] = nv
                stack.append(nt)
    return orbit


def _complete(entries: dict, orbit_fn, what: str) -> dict:
    table: dict = {}
    for key, value in entries.items():
        for k, v in orbit_fn(key, value).items():
            _merge(table, k, v, what)
    return {k: v for k, v in table.items() if v}


def complete_bracket(raw: dict, E, deg) -> dict:
    return _complete(raw, lambda k, v: _bracket_orbit(k, v, E, deg), "bracket")


def complete_rho(raw: dict, E, deg) -> dict:
    def orbit(key, value):
        x, y, a = key
        sign = -E[deg[x]][deg[y]]
        out = {key: value}
        swapped = (y, x, a)
        nv = sp_scale(1 / sign, value)
        if swapped in out and out[swapped] != nv:
            raise OrientationConflict(f"rho entry {key} contradicts eps-skew symmetry")
        out[swapped] = nv
        return out

    return _complete(raw, orbit, "rho")


def build_pair(spec: PairSpec) -> RinehartPair:
    G = GradingGroup(spec.moduli)
    if spec.exponent_matrix is not None:
        eps = BiCharacter(G, exponent_matrix=spec.exponent_matrix)
    else:
        eps = BiCharacter(G, table=spec.eps_table)
    for d in list(spec.L_degrees) + list(spec.A_degrees):
        if not G.contains(d):
            raise DegreeError(f"degree {d} is not an element of Z{list(G.moduli)}")
    Lb = GradedBasis(spec.L_names, spec.L_degrees)
    Ab = GradedBasis(spec.A_names, spec.A_degrees)
    deg_idx = G.index
    Ldeg = [deg_idx[tuple(d)] for d in Lb.degrees]
    E = eps.matrix

    def dsum(*ds):
        out = G.zero
        for d in ds:
            out = G.add(out, d)
        return out

    raw_br: dict = {}
    for names, value in spec.bracket:
        key = tuple(Lb.lookup(n) for n in names)
        if len(key) != 3:
            raise StructureError(f"bracket entry needs 3 arguments, got {names}")
        val = _named_value(Lb, value)
        _check_degree(G, Lb, val, dsum(*(Lb.degrees[i] for i in key)), f"bracket {list(names)}")
        _merge_raw(raw_br, key, val, "bracket")
    bracket = complete_bracket(raw_br, E, Ldeg)

    product: dict = {}
    for names, value in spec.product:
        key = (Ab.lookup(names[0]), Ab.lookup(names[1]))
        val = _named_value(Ab, value)
        _check_degree(G, Ab, val, dsum(*(Ab.degrees[i] for i in key)), f"product {list(names)}")
        _merge_raw(product, key, val, "product")

    action: dict = {}
    for names, value in spec.action:
        key = (Ab.lookup(names[0]), Lb.lookup(names[1]))
        val = _named_value(Lb, value)
        _check_degree(G, Lb, val, dsum(Ab.degrees[key[0]], Lb.degrees[key[1]]), f"action {list(names)}")
        _merge_raw(action, key, val, "action")

    raw_rho: dict = {}
    for names, value in spec.rho:
        key = (Lb.lookup(names[0]), Lb.lookup(names[1]), Ab.lookup(names[2]))
        val = _named_value(Ab, value)
        _check_degree(
            G, Ab, val, dsum(Lb.degrees[key[0]], Lb.degrees[key[1]], Ab.degrees[key[2]]), f"rho {list(names)}"
        )
        _merge_raw(raw_rho, key, val, "rho")
    rho = complete_rho(raw_rho, E, Ldeg)

    cartan = None
    if spec.cartan is not None:
        cartan = tuple(spec.cartan)
        for n in cartan:
            Lb.lookup(n)
    return RinehartPair(
        ThreeLieColorAlgebra(Lb, bracket),
        ColorCommAlgebra(Ab, {k: v for k, v in product.items() if v}),
        eps,
        {k: v for k, v in action.items() if v},
        rho,
        cartan,
    )


def _merge_raw(table: dict, key, value, what):
    if key in table and table[key] != value:
        raise OrientationConflict(f"{what}: duplicate entry {key} with a different value")
    table[key] = value


def pair_to_spec(P: RinehartPair) -> PairSpec:
    """Inverse of build_pair: keep one orientation (sorted indices) of each bracket and rho orbit."""
    Ln, An = P.L.basis.names, P.A.basis.names

    def named(v, names):
        return {names[k]: c for k, c in sorted(v.items())}

    bracket = [
        (tuple(Ln[i] for i in key), named(v, Ln))
        for key, v in sorted(P.L.bracket.items())
        if key[0] <= key[1] <= key[2] and v
    ]
    product = [((An[i], An[j]), named(v, An)) for (i, j), v in sorted(P.A.product.items()) if v]
    action = [((An[i], Ln[j]), named(v, Ln)) for (i, j), v in sorted(P.action.items()) if v]
    rho = [
        ((Ln[i], Ln[j], An[k]), named(v, An))
        for (i, j, k), v in sorted(P.rho.items())
        if i <= j and v
    ]
    return PairSpec(
        moduli=P.group.moduli,
        exponent_matrix=P.eps.exponent_matrix,
        eps_table=P.eps.table,
        L_names=P.L.basis.names,
        L_degrees=P.L.basis.degrees,
        A_names=P.A.basis.names,
        A_degrees=P.A.basis.degrees,
        bracket=bracket,
        product=product,
        action=action,
        rho=rho,
        cartan=P.cartan,
    )


# --------------------------------------------------------------------------
# Constructors


def trivial_action(L: ThreeLieColorAlgebra, A: ColorCommAlgebra, action: dict, eps: BiCharacter,
                   cartan=None) -> RinehartPair:
    """The pair with zero anchor."""
    G = eps.group
    for (i, j), val in action.items():
        if not (0 <= i < A.basis.dim and 0 <= j < L.basis.dim):
            raise StructureError(f"action key {(i, j)} out of range")
        expected = G.add(A.basis.degrees[i], L.basis.degrees[j])
        for k in val:
            if not (0 <= k < L.basis.dim):
                raise StructureError(f"action value index {k} out of range")
            if tuple(L.basis.degrees[k]) != expected:
                raise DegreeError(f"action ({A.basis.names[i]}, {L.basis.names[j]}) lands in the wrong degree")
    return RinehartPair(L, A, eps, {k: dict(v) for k, v in action.items() if v}, {}, cartan)


def tau_construct(Lc: LieColorAlgebra, A: ColorCommAlgebra, rho1: dict, action: dict, tau: ColorTrace,
                  eps: BiCharacter, check_pair: bool = True) -> RinehartPair:
    """Ternary bracket and anchor induced by a color trace on a Lie-Rinehart color pair.

    ``rho1`` maps ``(x_i, a_k) -> {a_l: c}``.
    """
    n = Lc.basis.dim
    G = eps.group
    idx = G.index
    deg = [idx[tuple(d)] for d in Lc.basis.degrees]
    E = eps.matrix
    zero = idx[G.zero]
    t = tau.values
    if len(t) != n:
        raise TraceError(f"trace has {len(t)} values for a {n}-dim algebra")
    for i, v in enumerate(t):
        if v and deg[i] != zero:
            raise TraceError(f"trace is not even: nonzero on {Lc.basis.names[i]} of degree {Lc.basis.degrees[i]}")

    def tau_of(v: dict) -> Fraction:
        return sum((c * t[k] for k, c in v.items()), ZERO)

    for (i, j), val in Lc.bracket.items():
        if tau_of(val):
            raise TraceError(f"trace does not vanish on [{Lc.basis.names[i]}, {Lc.basis.names[j]}]")
    for a in range(A.basis.dim):
        for x in range(n):
            tx = tau_of(action.get((a, x), {}))
            for y in range(n):
                lhs = sp_scale(tx, {y: Fraction(1)})
                rhs = sp_scale(t[x], action.get((a, y), {}))
                if lhs != rhs:
                    raise TraceError(
                        f"trace compatibility fails at a={A.basis.names[a]}, "
                        f"x={Lc.basis.names[x]}, y={Lc.basis.names[y]}"
                    )
    if check_pair:
        from .axioms import check_lie_rinehart

        rep = check_lie_rinehart(Lc, A, rho1, action, eps)
        if not rep.passed:
            raise StructureError(f"input is not a Lie-Rinehart color pair: {rep.violations[:3]}")

    lb = Lc.bracket
    bracket: dict = {}
    for x1 in range(n):
        for x2 in range(n):
            for x3 in range(n):
                out: dict = {}
                if t[x1]:
                    sp_axpy(out, t[x1], lb.get((x2, x3), {}))
                if t[x2]:
                    sp_axpy(out, -E[deg[x1]][deg[x2]] * t[x2], lb.get((x1, x3), {}))
                if t[x3]:
                    s12 = G.index[G.add(Lc.basis.degrees[x1], Lc.basis.degrees[x2])]
                    sp_axpy(out, E[deg[x3]][s12] * t[x3], lb.get((x1, x2), {}))
                if out:
                    bracket[(x1, x2, x3)] = out
    rho: dict = {}
    for x in range(n):
        for y in range(n):
            for k in range(A.basis.dim):
                out = {}
                if t[x]:
                    sp_axpy(out, t[x], rho1.get((y, k), {}))
                if t[y]:
                    sp_axpy(out, -E[deg[x]][deg[y]] * t[y], rho1.get((x, k), {}))
                if out:
                    rho[(x, y, k)] = out
    return RinehartPair(ThreeLieColorAlgebra(Lc.basis, bracket), A, eps, dict(action), rho)


def _same_eps(b1: BiCharacter, b2: BiCharacter) -> bool:
    return b1.group == b2.group and b1.matrix == b2.matrix


def direct_sum(P1: RinehartPair, P2: RinehartPair) -> RinehartPair:
    """L1 + L2 and A1 + A2 with all cross terms zero.

    Basis names get suffixes ``_1``/``_2`` when the two sides share a name.
    """
    if not _same_eps(P1.eps, P2.eps):
        raise GradingMismatch("direct_sum needs the same grading group and bicharacter")
    clash = bool(set(P1.L.basis.names) & set(P2.L.basis.names) or set(P1.A.basis.names) & set(P2.A.basis.names))

    def rn(names, s):
        return tuple(f"{n}_{s}" for n in names) if clash else tuple(names)

    n1, m1 = P1.nL, P1.nA
    Lb = GradedBasis(rn(P1.L.basis.names, 1) + rn(P2.L.basis.names, 2), P1.L.basis.degrees + P2.L.basis.degrees)
    Ab = GradedBasis(rn(P1.A.basis.names, 1) + rn(P2.A.basis.names, 2), P1.A.basis.degrees + P2.A.basis.degrees)

    def shift(v, s):
        return {k + s: c for k, c in v.items()}

    bracket = dict(P1.L.bracket)
    bracket.update({(i + n1, j + n1, k + n1): shift(v, n1) for (i, j, k), v in P2.L.bracket.items()})
    product = dict(P1.A.product)
    product.update({(i + m1, j + m1): shift(v, m1) for (i, j), v in P2.A.product.items()})
    action = dict(P1.action)
    action.update({(i + m1, j + n1): shift(v, n1) for (i, j), v in P2.action.items()})
    rho = dict(P1.rho)
    rho.update({(i + n1, j + n1, k + m1): shift(v, m1) for (i, j, k), v in P2.rho.items()})
    cartan = None
    if P1.cartan is not None and P2.cartan is not None:
        c1 = tuple(Lb.names[P1.L.basis.lookup(n)] for n in P1.cartan)
        c2 = tuple(Lb.names[n1 + P2.L.basis.lookup(n)] for n in P2.cartan)
        cartan = c1 + c2
    return RinehartPair(
        ThreeLieColorAlgebra(Lb, bracket), ColorCommAlgebra(Ab, product), P1.eps, action, rho, cartan
    )
