"""Root and weight extraction from a declared adapted basis, and structural predicates.

Maximality of the Cartan part is checked through L_0 = H: no basis vector outside
the declared Cartan may have the zero root.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import Subspace, rref, unit_vec
from .report import Report
from .structures import RinehartPair


class SplitError(ValueError):
    pass


class MissingCartan(SplitError):
    pass


class NotAdapted(SplitError):
    pass


class NonAbelianCartan(SplitError):
    pass


class ZeroRootOutsideCartan(SplitError):
    pass


class NotAdaptedWeight(SplitError):
    pass


@dataclass(frozen=True, order=True)
class BilinearFunctional:
    values: tuple  # d x d, entry (i, j) is the value on (h_i, h_j)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(tuple(Fraction(x) for x in row) for row in self.values))

    @classmethod
    def zero(cls, d: int) -> "BilinearFunctional":
        return cls(tuple((0,) * d for _ in range(d)))

    @classmethod
    def scalar(cls, c) -> "BilinearFunctional":
        """A 1x1 functional, handy for synthetic root systems."""
        return cls(((c,),))

    @property
    def d(self) -> int:
        return len(self.values)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.values for x in row)

    def __add__(self, other: "BilinearFunctional") -> "BilinearFunctional":
        if self.d != other.d:
            raise ValueError("functionals on different Cartan dimensions")
        return BilinearFunctional(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.values, other.values)))

    def __neg__(self) -> "BilinearFunctional":
        return BilinearFunctional(tuple(tuple(-a for a in r) for r in self.values))

    def __sub__(self, other):
        return self + (-other)

    def __call__(self, i: int, j: int) -> Fraction:
        return self.values[i][j]

    def to_list(self) -> list:
        return [[str(x) for x in row] for row in self.values]

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.values) + "]"


@dataclass
class SplitDatum:
    pair: RinehartPair
    cartan_idx: tuple
    cartan: Subspace
    root_of: tuple  # per L basis vector: BilinearFunctional, or None for the Cartan
    weight_of: tuple  # per A basis vector: BilinearFunctional (zero for A_0)
    roots: dict = field(default_factory=dict)  # functional -> Subspace of L
    weights: dict = field(default_factory=dict)  # functional -> Subspace of A
    A0: Subspace | None = None
    Pi_g: dict = field(default_factory=dict)  # degree tuple -> tuple of roots
    Lam_g: dict = field(default_factory=dict)

    @property
    def d(self) -> int:
        return len(self.cartan_idx)

    @property
    def Pi(self) -> tuple:
        return tuple(sorted(self.roots))

    @property
    def Lam(self) -> tuple:
        return tuple(sorted(self.weights))

    @property
    def zero(self) -> BilinearFunctional:
        return BilinearFunctional.zero(self.d)

    def L_indices(self, alpha: BilinearFunctional | None) -> list:
        """Basis indices of L_alpha; ``None`` or the zero functional selects H."""
        if alpha is None or alpha.is_zero():
            return list(self.cartan_idx)
        return [i for i, r in enumerate(self.root_of) if r == alpha]

    def A_indices(self, lam: BilinearFunctional) -> list:
        return [i for i, w in enumerate(self.weight_of) if w == lam]

    def L_root(self, i: int) -> BilinearFunctional:
        r = self.root_of[i]
        return self.zero if r is None else r

    def L_space(self, alpha: BilinearFunctional) -> Subspace:
        n = self.pair.nL
        return rref([unit_vec(n, i) for i in self.L_indices(alpha)], n)

    def A_space(self, lam: BilinearFunctional) -> Subspace:
        m = self.pair.nA
        return rref([unit_vec(m, i) for i in self.A_indices(lam)], m)

    def to_dict(self) -> dict:
        P = self.pair
        Ln, An = P.L.basis.names, P.A.basis.names
        return {
            "cartan": [Ln[i] for i in self.cartan_idx],
            "roots": [
                {"root": a.to_list(), "basis": [Ln[i] for i in self.L_indices(a)]} for a in self.Pi
            ],
            "weights": [
                {"weight": w.to_list(), "basis": [An[i] for i in self.A_indices(w)]} for w in self.Lam
            ],
            "A0": [An[i] for i in self.A_indices(self.zero)],
            "Pi_g": {str(list(g)): [a.to_list() for a in rs] for g, rs in sorted(self.Pi_g.items())},
            "Lam_g": {str(list(g)): [w.to_list() for w in ws] for g, ws in sorted(self.Lam_g.items())},
            "maximality": "maximality via L_0 = H",
        }


def extract_split(P: RinehartPair, cartan_names=None) -> SplitDatum:
    names = cartan_names if cartan_names is not None else P.cartan
    if not names:
        raise MissingCartan("no Cartan basis declared")
    Lb = P.L.basis
    try:
        H = tuple(Lb.index[n] for n in names)
    except KeyError as exc:
        raise MissingCartan(f"Cartan name {exc.args[0]!r} is not an L basis vector") from None
    if len(set(H)) != len(H):
        raise MissingCartan("Cartan names repeat")
    d = len(H)
    n, m = P.nL, P.nA
    B = P.L.bracket
    for t in itertools.product(H, repeat=3):
        if B.get(t):
            raise NonAbelianCartan(f"[{', '.join(Lb.names[i] for i in t)}] is nonzero")

    root_of = []
    for x in range(n):
        if x in H:
            root_of.append(None)
            continue
        vals = []
        for hi in H:
            row = []
            for hj in H:
                v = B.get((hi, hj, x), {})
                extra = {k: c for k, c in v.items() if k != x}
                if extra:
                    raise NotAdapted(
                        f"[{Lb.names[hi]}, {Lb.names[hj]}, {Lb.names[x]}] is not a multiple of {Lb.names[x]}"
                    )
                row.append(v.get(x, Fraction(0)))
            vals.append(tuple(row))
        f = BilinearFunctional(tuple(vals))
        if f.is_zero():
            raise ZeroRootOutsideCartan(f"{Lb.names[x]} has zero root but is not in the declared Cartan")
        root_of.append(f)

    weight_of = []
    An = P.A.basis.names
    for a in range(m):
        vals = []
        for hi in H:
            row = []
            for hj in H:
                v = P.rho.get((hi, hj, a), {})
                extra = {k: c for k, c in v.items() if k != a}
                if extra:
                    raise NotAdaptedWeight(
                        f"rho({Lb.names[hi]}, {Lb.names[hj]})({An[a]}) is not a multiple of {An[a]}"
                    )
                row.append(v.get(a, Fraction(0)))
            vals.append(tuple(row))
        weight_of.append(BilinearFunctional(tuple(vals)))

    S = SplitDatum(P, H, rref([unit_vec(n, i) for i in H], n), tuple(root_of), tuple(weight_of))
    Pi_g = defaultdict(set)
    for x, r in enumerate(root_of):
        if r is not None:
            Pi_g[Lb.degrees[x]].add(r)
    Lam_g = defaultdict(set)
    for a, w in enumerate(weight_of):
        if not w.is_zero():
            Lam_g[P.A.basis.degrees[a]].add(w)
    S.roots = {r: S.L_space(r) for r in sorted({r for r in root_of if r is not None})}
    S.weights = {w: S.A_space(w) for w in sorted({w for w in weight_of if not w.is_zero()})}
    S.A0 = S.A_space(S.zero)
    S.Pi_g = {g: tuple(sorted(v)) for g, v in Pi_g.items()}
    S.Lam_g = {g: tuple(sorted(v)) for g, v in Lam_g.items()}
    return S


def _space_index(S: SplitDatum, f: BilinearFunctional, side: str):
    """Basis indices of the space attached to ``f`` (H or A_0 for zero), or None if f is not a root/weight."""
    if side == "L":
        if f.is_zero():
            return set(S.cartan_idx)
        return set(S.L_indices(f)) if f in S.roots else None
    if f.is_zero():
        return set(S.A_indices(f))
    return set(S.A_indices(f)) if f in S.weights else None


def check_space_closure(S: SplitDatum) -> Report:
    """Products of root/weight spaces land in the space of the summed functional and degree."""
    P = S.pair
    n, m = P.nL, P.nA
    Ld, Ad = P.L.basis.degrees, P.A.basis.degrees
    G = P.group
    Ln, An = P.L.basis.names, P.A.basis.names
    violations = []
    counts = {"1": 0, "2": 0, "3": 0, "4": 0}
    wt = [S.weight_of[a] for a in range(m)]

    def verify(part, tup, out: dict, f: BilinearFunctional, degree, side):
        counts[part] += 1
        if not out:
            return
        allowed = _space_index(S, f, side)
        degs = Ld if side == "L" else Ad
        bad = [k for k in out if allowed is None or k not in allowed or tuple(degs[k]) != tuple(degree)]
        if bad:
            names = Ln if side == "L" else An
            violations.append({
                "part": part,
                "tuple": list(tup),
                "target": str(f),
                "stray": [names[k] for k in bad],
            })

    for t in itertools.product(range(n), repeat=3):
        f = S.L_root(t[0]) + S.L_root(t[1]) + S.L_root(t[2])
        g = G.add(G.add(Ld[t[0]], Ld[t[1]]), Ld[t[2]])
        verify("1", [Ln[i] for i in t], P.L.bracket.get(t, {}), f, g, "L")
    for a, b in itertools.product(range(m), repeat=2):
        verify("2", [An[a], An[b]], P.A.product.get((a, b), {}), wt[a] + wt[b], G.add(Ad[a], Ad[b]), "A")
    for a, x in itertools.product(range(m), range(n)):
        verify("3", [An[a], Ln[x]], P.action.get((a, x), {}), wt[a] + S.L_root(x), G.add(Ad[a], Ld[x]), "L")
    for x, y, a in itertools.product(range(n), range(n), range(m)):
        f = S.L_root(x) + S.L_root(y) + wt[a]
        g = G.add(G.add(Ld[x], Ld[y]), Ad[a])
        verify("4", [Ln[x], Ln[y], An[a]], P.rho.get((x, y, a), {}), f, g, "A")
    parts = {p: not any(v["part"] == p for v in violations) for p in counts}
    return Report("space_closure", not violations, {"parts": parts, "tuples_checked": counts}, violations)


def check_symmetry(S: SplitDatum) -> Report:
    Pi, Lam = set(S.roots), set(S.weights)
    pi_missing = sorted(-a for a in Pi if -a not in Pi)
    lam_missing = sorted(-w for w in Lam if -w not in Lam)
    return Report(
        "symmetry",
        not pi_missing and not lam_missing,
        {"Pi_symmetric": not pi_missing, "Lambda_symmetric": not lam_missing},
        [{"missing_root": str(a)} for a in pi_missing] + [{"missing_weight": str(w)} for w in lam_missing],
    )


def check_maximal_length(S: SplitDatum) -> Report:
    P = S.pair
    violations = []
    counts = defaultdict(int)
    for x, r in enumerate(S.root_of):
        if r is not None:
            counts[("L", r, tuple(P.L.basis.degrees[x]))] += 1
    for a, w in enumerate(S.weight_of):
        if not w.is_zero():
            counts[("A", w, tuple(P.A.basis.degrees[a]))] += 1
    for (side, f, g), c in sorted(counts.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2])):
        if c != 1:
            violations.append({"space": side, "functional": str(f), "degree": list(g), "dim": c})
    return Report("maximal_length", not violations, {"spaces_checked": len(counts)}, violations)


def _span_nonzero(P: RinehartPair, outs) -> bool:
    return any(o for o in outs)


def check_root_multiplicative(S: SplitDatum) -> Report:
    """Nonvanishing of homogeneous products whenever the summed functional is a root/weight in the summed degree."""
    P = S.pair
    G = P.group
    Ld, Ad = P.L.basis.degrees, P.A.basis.degrees
    # homogeneous root spaces: (functional, degree) -> basis indices
    Lsp = defaultdict(list)
    for x, r in enumerate(S.root_of):
        if r is not None:
            Lsp[(r, tuple(Ld[x]))].append(x)
    Asp = defaultdict(list)
    for a, w in enumerate(S.weight_of):
        if not w.is_zero():
            Asp[(w, tuple(Ad[a]))].append(a)
    Pi_g = {g: set(v) for g, v in S.Pi_g.items()}
    Lam_g = {g: set(v) for g, v in S.Lam_g.items()}
    violations = []
    checked = 0
    Lkeys, Akeys = sorted(Lsp), sorted(Asp)
    for k1, k2, k3 in itertools.product(Lkeys, repeat=3):
        f = k1[0] + k2[0] + k3[0]
        g = G.add(G.add(k1[1], k2[1]), k3[1])
        if f in Pi_g.get(g, ()):
            checked += 1
            outs = [P.L.bracket.get((x, y, z)) for x in Lsp[k1] for y in Lsp[k2] for z in Lsp[k3]]
            if not _span_nonzero(P, outs):
                violations.append({"condition": "bracket", "roots": [str(k1[0]), str(k2[0]), str(k3[0])],
                                   "degrees": [list(k1[1]), list(k2[1]), list(k3[1])], "sum": str(f)})
    for ka, kl in itertools.product(Akeys, Lkeys):
        f = ka[0] + kl[0]
        g = G.add(ka[1], kl[1])
        if f in Pi_g.get(g, ()):
            checked += 1
            outs = [P.action.get((a, x)) for a in Asp[ka] for x in Lsp[kl]]
            if not _span_nonzero(P, outs):
                violations.append({"condition": "action", "weight": str(ka[0]), "root": str(kl[0]),
                                   "degrees": [list(ka[1]), list(kl[1])], "sum": str(f)})
    for k1, k2 in itertools.product(Akeys, repeat=2):
        f = k1[0] + k2[0]
        g = G.add(k1[1], k2[1])
        if f in Lam_g.get(g, ()):
            checked += 1
            outs = [P.A.product.get((a, b)) for a in Asp[k1] for b in Asp[k2]]
            if not _span_nonzero(P, outs):
                violations.append({"condition": "product", "weights": [str(k1[0]), str(k2[0])],
                                   "degrees": [list(k1[1]), list(k2[1])], "sum": str(f)})
    return Report("root_multiplicative", not violations, {"conditions_checked": checked}, violations)


def direct_sum_exact(S: SplitDatum) -> bool:
    """dim H + sum dim L_alpha = dim L and dim A_0 + sum dim A_lambda = dim A."""
    P = S.pair
    okL = S.cartan.dim + sum(sp.dim for sp in S.roots.values()) == P.nL
    okA = S.A0.dim + sum(sp.dim for sp in S.weights.values()) == P.nA
    return okL and okA
