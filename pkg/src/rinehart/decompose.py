"""Class ideals, decompositions of L and A, radicals, tightness, pairing and simplicity probes.

Every span is computed from products of adapted basis vectors and row-reduced.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .connections import ClassPartition, root_classes, weight_classes
from .exactnum import (
    DimensionMismatch,
    Subspace,
    complement,
    from_dense,
    full_space,
    intersect,
    is_direct,
    nullspace,
    rref,
    sum_,
    sum_all,
    to_dense,
    unit_vec,
    zero_space,
)
from .report import Report, jsonable
from .split import SplitDatum, check_maximal_length, check_root_multiplicative, check_symmetry
from .structures import RinehartPair


class EscapeError(ValueError):
    """A zero part left H (or A_0): the split datum is inconsistent."""


def _u(i: int) -> dict:
    return {i: Fraction(1)}


def _span(vectors, n: int) -> Subspace:
    return rref([to_dense(v, n) for v in vectors if v], n)


def _rows(S: Subspace) -> list:
    return [from_dense(r) for r in S.basis_rows]


def _sub_names(S: Subspace, names) -> list:
    """Readable basis of a subspace: each row as {name: coefficient}."""
    return [{names[k]: str(c) for k, c in sorted(from_dense(r).items())} for r in S.basis_rows]


@dataclass
class IdealDatum:
    zero_part: Subspace
    graded_part: Subspace
    total: Subspace
    class_id: int
    members: list = field(default_factory=list)

    def to_dict(self, names=None) -> dict:
        out = {
            "class_id": self.class_id,
            "members": [m.to_list() for m in self.members],
            "dim_zero_part": self.zero_part.dim,
            "dim_graded_part": self.graded_part.dim,
            "dim_total": self.total.dim,
        }
        if names is not None:
            out["basis"] = _sub_names(self.total, names)
        return out


@dataclass
class DecompositionReport:
    target: str
    mode: str
    complement: Subspace
    ideals: list
    ideal_reports: list
    cross_checks: dict
    dimension_accounting: dict
    directness: dict
    partition: ClassPartition | None = None
    names: tuple = ()

    @property
    def passed(self) -> bool:
        return (
            all(r.passed for r in self.ideal_reports)
            and all(v["passed"] for v in self.cross_checks.values())
            and self.dimension_accounting["sum_accounting_exact"]
            and self.directness.get("verdict") != "failed"
        )

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "mode": self.mode,
            "passed": self.passed,
            "classes": self.partition.to_dict() if self.partition else None,
            "complement": {"dim": self.complement.dim, "basis": _sub_names(self.complement, self.names)},
            "ideals": [I.to_dict(self.names) for I in self.ideals],
            "ideal_checks": [r.to_dict() for r in self.ideal_reports],
            "cross_checks": jsonable(self.cross_checks),
            "dimension_accounting": jsonable(self.dimension_accounting),
            "directness": jsonable(self.directness),
        }


@dataclass
class RadicalSet:
    ann_L: Subspace
    ker_rho: Subspace
    z_rho: Subspace
    z_L_of_A: Subspace
    ann_A: Subspace

    def to_dict(self, Lnames=(), Anames=()) -> dict:
        return {
            "ann_L": _sub_names(self.ann_L, Lnames),
            "ker_rho": _sub_names(self.ker_rho, Lnames),
            "z_rho": _sub_names(self.z_rho, Lnames),
            "z_L_of_A": _sub_names(self.z_L_of_A, Anames),
            "ann_A": _sub_names(self.ann_A, Anames),
        }


# --------------------------------------------------------------------------
# Ideals of L


def _L_zero_generators(S: SplitDatum, roots) -> list:
    """Vectors spanning sum A_{-b} L_b (b, -b weight) + sum [L_b, L_c, L_m] (b + c + m = 0) over ``roots``."""
    P = S.pair
    roots = list(roots)
    out = []
    for b in roots:
        if -b in S.weights:
            for a in S.A_indices(-b):
                for x in S.L_indices(b):
                    out.append(P.action.get((a, x), {}))
    for b, c, m in itertools.product(roots, repeat=3):
        if (b + c + m).is_zero():
            for x in S.L_indices(b):
                for y in S.L_indices(c):
                    for z in S.L_indices(m):
                        out.append(P.L.bracket.get((x, y, z), {}))
    return out


def class_ideal_L(S: SplitDatum, cls, class_id: int = 0) -> IdealDatum:
    n = S.pair.nL
    zero = _span(_L_zero_generators(S, cls), n)
    if not S.cartan.contains(zero):
        raise EscapeError(f"zero part of class {class_id} is not contained in the Cartan subalgebra")
    graded = rref([unit_vec(n, i) for b in cls for i in S.L_indices(b)], n)
    return IdealDatum(zero, graded, sum_(zero, graded), class_id, list(cls))


def is_ideal_L(P: RinehartPair, I: Subspace) -> Report:
    n, m = P.nL, P.nA
    if I.ambient_dim != n:
        raise DimensionMismatch(f"subspace lives in dimension {I.ambient_dim}, L has dimension {n}")
    rows = _rows(I)
    units = [_u(i) for i in range(n)]
    Au = [_u(a) for a in range(m)]
    fails = {"bracket": [], "A_action": [], "rho_II_A_L": [], "rho_IL_A_L": []}
    for r, v in enumerate(rows):
        for j, k in itertools.product(range(n), repeat=2):
            w = P.br(v, units[j], units[k])
            if w and not I.__contains__(to_dense(w, n)):
                fails["bracket"].append({"row": r, "args": [P.L.basis.names[j], P.L.basis.names[k]]})
        for a in range(m):
            w = P.act(Au[a], v)
            if w and to_dense(w, n) not in I:
                fails["A_action"].append({"row": r, "a": P.A.basis.names[a]})
    printed = []
    for (r1, v1), (r2, v2) in itertools.product(enumerate(rows), repeat=2):
        for a in range(m):
            img = P.rh(v1, v2, Au[a])
            if not img:
                continue
            printed.append(img)
            for k in range(n):
                w = P.act(img, units[k])
                if w and to_dense(w, n) not in I:
                    fails["rho_II_A_L"].append({"rows": [r1, r2], "a": P.A.basis.names[a],
                                                "x": P.L.basis.names[k]})
    for r, v in enumerate(rows):
        for j, a in itertools.product(range(n), range(m)):
            img = P.rh(v, units[j], Au[a])
            if not img:
                continue
            for k in range(n):
                w = P.act(img, units[k])
                if w and to_dense(w, n) not in I:
                    fails["rho_IL_A_L"].append({"row": r, "y": P.L.basis.names[j], "a": P.A.basis.names[a],
                                                "x": P.L.basis.names[k]})
    printed_span = _span(printed, m)
    verdict_keys = ("bracket", "A_action", "rho_II_A_L")
    passed = not any(fails[k] for k in verdict_keys)
    details = {
        "dim": I.dim,
        "bracket_ideal": not fails["bracket"],
        "A_stable": not fails["A_action"],
        "rho_II_A_acting_on_L": not fails["rho_II_A_L"],
        "rho_IL_A_acting_on_L": not fails["rho_IL_A_L"],
        "rho_II_A_as_printed": {
            "type_mismatch": True,
            "note": "rho(I,I)(A) is a subspace of A, not of L; reported for information only",
            "dim_span_in_A": printed_span.dim,
        },
    }
    violations = [{"condition": k, **f} for k in fails for f in fails[k][:20]]
    return Report("is_ideal_L", passed, details, violations)


def radicals(P: RinehartPair) -> RadicalSet:
    n, m = P.nL, P.nA
    B = P.L.bracket
    # ann_L: x with [x, e_j, e_k] = 0 for all j, k
    ann_rows = []
    for j, k, l in itertools.product(range(n), range(n), range(n)):
        ann_rows.append([B.get((x, j, k), {}).get(l, 0) for x in range(n)])
    rho_rows = []
    for j, a, b in itertools.product(range(n), range(m), range(m)):
        rho_rows.append([P.rho.get((x, j, a), {}).get(b, 0) for x in range(n)])
    ann_L = nullspace(ann_rows, n) if ann_rows else full_space(n)
    ker_rho = nullspace(rho_rows, n) if rho_rows else full_space(n)
    z_rho = nullspace(ann_rows + rho_rows, n) if (ann_rows or rho_rows) else full_space(n)
    if z_rho != intersect(ann_L, ker_rho):
        raise AssertionError("Z_rho differs from Ann(L) meet ker rho")
    zl_rows = []
    for j, l in itertools.product(range(n), range(n)):
        zl_rows.append([P.action.get((a, j), {}).get(l, 0) for a in range(m)])
    annA_rows = []
    for b, c in itertools.product(range(m), range(m)):
        annA_rows.append([P.A.product.get((a, b), {}).get(c, 0) for a in range(m)])
    z_L_of_A = nullspace(zl_rows, m) if zl_rows else full_space(m)
    ann_A = nullspace(annA_rows, m) if annA_rows else full_space(m)
    return RadicalSet(ann_L, ker_rho, z_rho, z_L_of_A, ann_A)


def global_L_sum(S: SplitDatum) -> Subspace:
    return _span(_L_zero_generators(S, S.Pi), S.pair.nL)


def _cross_L(S: SplitDatum, ideals) -> dict:
    """Triple brackets across distinct class ideals, both patterns, all argument orders."""
    P = S.pair
    rows = [_rows(I.total) for I in ideals]
    three, two = [], []
    count3 = count2 = 0
    k = len(ideals)
    for a, b, c in itertools.product(range(k), repeat=3):
        kinds = len({a, b, c})
        if kinds == 1:
            continue
        for u in rows[a]:
            for v in rows[b]:
                for w in rows[c]:
                    val = P.br(u, v, w)
                    if kinds == 3:
                        count3 += 1
                        if val:
                            three.append([a, b, c])
                    else:
                        count2 += 1
                        if val:
                            two.append([a, b, c])
    return {
        "three_distinct_classes": {"passed": not three, "products_checked": count3, "violations": three[:20]},
        "two_plus_one": {"passed": not two, "products_checked": count2, "violations": two[:20]},
    }


def decompose_L(S: SplitDatum, mode: str = "strict") -> DecompositionReport:
    P = S.pair
    n = P.nL
    part = root_classes(S, mode)
    ideals = [class_ideal_L(S, cls, i) for i, cls in enumerate(part.classes)]
    reports = [is_ideal_L(P, I.total) for I in ideals]
    gsum = global_L_sum(S)
    U = complement(gsum, S.cartan)
    cross = _cross_L(S, ideals)
    ideal_sum = sum_all([I.total for I in ideals], n)
    accounting = {
        "dim_L": n,
        "dim_complement": U.dim,
        "dims_ideals": [I.total.dim for I in ideals],
        "dim_sum_of_ideals": ideal_sum.dim,
        "sum_accounting_exact": sum_(U, ideal_sum).dim == n,
        "direct_accounting_exact": U.dim + sum(I.total.dim for I in ideals) == n,
    }
    rad = radicals(P)
    hyp_z = rad.z_rho.is_zero()
    hyp_H = gsum == S.cartan
    directness = _directness([I.total for I in ideals], n, hyp_z and hyp_H)
    directness["hypotheses"] = {"Z_rho_zero": hyp_z, "H_equals_generated_sum": hyp_H}
    directness["with_complement_direct"] = is_direct([U] + [I.total for I in ideals], n)
    return DecompositionReport("L", mode, U, ideals, reports, cross, accounting, directness, part, P.L.basis.names)


def _directness(spaces, n, hypotheses_hold: bool) -> dict:
    pairwise = []
    ok = True
    for i, j in itertools.combinations(range(len(spaces)), 2):
        d = intersect(spaces[i], spaces[j]).dim
        pairwise.append({"pair": [i, j], "dim_intersection": d})
        ok = ok and d == 0
    direct = is_direct(spaces, n)
    measured = ok and direct
    if hypotheses_hold:
        verdict = "asserted" if measured else "failed"
    else:
        verdict = "not asserted"
    return {"pairwise": pairwise, "pairwise_zero": ok, "sum_direct": direct, "measured_direct": measured,
            "verdict": verdict}


# --------------------------------------------------------------------------
# Ideals of A


def _A_zero_generators(S: SplitDatum, weights) -> list:
    P = S.pair
    out = []
    for mu in weights:
        for a in S.A_indices(-mu):
            for b in S.A_indices(mu):
                out.append(P.A.product.get((a, b), {}))
    Pi = S.Pi
    for mu in weights:
        for al, be in itertools.product(Pi, repeat=2):
            if (al + be + mu).is_zero():
                for x in S.L_indices(al):
                    for y in S.L_indices(be):
                        for c in S.A_indices(mu):
                            out.append(P.rho.get((x, y, c), {}))
    return out


def class_ideal_A(S: SplitDatum, cls, class_id: int = 0) -> IdealDatum:
    m = S.pair.nA
    zero = _span(_A_zero_generators(S, cls), m)
    if not S.A0.contains(zero):
        raise EscapeError(f"zero part of weight class {class_id} is not contained in A_0")
    graded = rref([unit_vec(m, i) for w in cls for i in S.A_indices(w)], m)
    return IdealDatum(zero, graded, sum_(zero, graded), class_id, list(cls))


def is_ideal_A(P: RinehartPair, J: Subspace) -> Report:
    m = P.nA
    if J.ambient_dim != m:
        raise DimensionMismatch(f"subspace lives in dimension {J.ambient_dim}, A has dimension {m}")
    violations = []
    for r, v in enumerate(_rows(J)):
        for a in range(m):
            for w, side in ((P.mul(_u(a), v), "left"), (P.mul(v, _u(a)), "right")):
                if w and to_dense(w, m) not in J:
                    violations.append({"row": r, "a": P.A.basis.names[a], "side": side})
    return Report("is_ideal_A", not violations, {"dim": J.dim}, violations)


def global_A_sum(S: SplitDatum) -> Subspace:
    return _span(_A_zero_generators(S, S.Lam), S.pair.nA)


def decompose_A(S: SplitDatum) -> DecompositionReport:
    P = S.pair
    m = P.nA
    part = weight_classes(S)
    ideals = [class_ideal_A(S, cls, i) for i, cls in enumerate(part.classes)]
    reports = [is_ideal_A(P, I.total) for I in ideals]
    gsum = global_A_sum(S)
    V = complement(gsum, S.A0)
    rows = [_rows(I.total) for I in ideals]
    bad = []
    checked = 0
    for i, j in itertools.permutations(range(len(ideals)), 2):
        for u in rows[i]:
            for v in rows[j]:
                checked += 1
                if P.mul(u, v):
                    bad.append([i, j])
    cross = {"products_between_classes": {"passed": not bad, "products_checked": checked, "violations": bad[:20]}}
    ideal_sum = sum_all([I.total for I in ideals], m)
    accounting = {
        "dim_A": m,
        "dim_complement": V.dim,
        "dims_ideals": [I.total.dim for I in ideals],
        "dim_sum_of_ideals": ideal_sum.dim,
        "sum_accounting_exact": sum_(V, ideal_sum).dim == m,
        "direct_accounting_exact": V.dim + sum(I.total.dim for I in ideals) == m,
    }
    rad = radicals(P)
    hyp_ann = rad.ann_A.is_zero()
    hyp_A0 = gsum == S.A0
    directness = _directness([I.total for I in ideals], m, hyp_ann and hyp_A0)
    directness["hypotheses"] = {"Ann_A_zero": hyp_ann, "A0_equals_generated_sum": hyp_A0}
    directness["with_complement_direct"] = is_direct([V] + [I.total for I in ideals], m)
    return DecompositionReport("A", "definition", V, ideals, reports, cross, accounting, directness, part,
                               P.A.basis.names)


# --------------------------------------------------------------------------
# Tightness and pairing


def _products_span_A(P: RinehartPair) -> Subspace:
    return _span([P.A.product.get((a, b), {}) for a in range(P.nA) for b in range(P.nA)], P.nA)


def _action_span_L(P: RinehartPair) -> Subspace:
    return _span([P.action.get((a, x), {}) for a in range(P.nA) for x in range(P.nL)], P.nL)


def check_tight(S: SplitDatum) -> Report:
    P = S.pair
    rad = radicals(P)
    sub = {
        "Z_rho_zero": rad.z_rho.is_zero(),
        "Ann_A_zero": rad.ann_A.is_zero(),
        "AA_equals_A": _products_span_A(P).dim == P.nA,
        "AL_equals_L": _action_span_L(P).dim == P.nL,
        "H_equals_generated_sum": global_L_sum(S) == S.cartan,
        "A0_equals_generated_sum": global_A_sum(S) == S.A0,
    }
    failing = [k for k, v in sub.items() if not v]
    return Report("tight", not failing, {"sub_conditions": sub}, [{"failing": k} for k in failing])


def _partner_map(S: SplitDatum, L_ideals, A_ideals) -> list:
    P = S.pair
    out = []
    for i, I in enumerate(L_ideals):
        partners = []
        Irows = _rows(I.total)
        for j, J in enumerate(A_ideals):
            if any(P.act(a, x) for a in _rows(J.total) for x in Irows):
                partners.append(j)
        out.append(partners)
    return out


def pairing(S: SplitDatum, mode: str = "strict", require_tight: bool = True) -> Report:
    """For each root class, the weight classes whose ideal acts nontrivially on its ideal."""
    tight = check_tight(S)
    dL = decompose_L(S, mode)
    dA = decompose_A(S)
    partners = _partner_map(S, dL.ideals, dA.ideals)
    unique = all(len(p) == 1 for p in partners)
    mapping = {i: p[0] for i, p in enumerate(partners) if len(p) == 1}
    images = list(mapping.values())
    bijection = unique and len(set(images)) == len(images) == len(dA.ideals)
    details = {
        "mode": mode,
        "tight": tight.passed,
        "tight_sub_conditions": tight.details["sub_conditions"],
        "partners": {str(i): p for i, p in enumerate(partners)},
        "unique_partner_for_every_class": unique,
        "map": {str(k): v for k, v in mapping.items()},
        "bijection": bijection,
    }
    if require_tight and not tight.passed:
        details["precondition"] = "not tight: the pairing statement does not apply; partners shown for information"
        return Report("pairing", False, details, [{"failing": k} for k, v in tight.details["sub_conditions"].items()
                                                   if not v])
    violations = [{"root_class": i, "partners": p} for i, p in enumerate(partners) if len(p) != 1]
    return Report("pairing", not violations, details, violations)


# --------------------------------------------------------------------------
# Closures and simplicity probes


def ideal_closure(P: RinehartPair, generators) -> Subspace:
    """Least subspace containing ``generators`` closed under [S,L,L], A.S and rho(S,S)(A).L."""
    n, m = P.nL, P.nA
    current = rref([tuple(Fraction(c) for c in g) for g in generators], n)
    units = [_u(i) for i in range(n)]
    Au = [_u(a) for a in range(m)]
    while True:
        rows = _rows(current)
        new = []
        for v in rows:
            for j, k in itertools.product(range(n), repeat=2):
                new.append(P.br(v, units[j], units[k]))
            for a in range(m):
                new.append(P.act(Au[a], v))
        for v1, v2 in itertools.product(rows, repeat=2):
            for a in range(m):
                img = P.rh(v1, v2, Au[a])
                if img:
                    for k in range(n):
                        new.append(P.act(img, units[k]))
        nxt = sum_(current, _span(new, n))
        if nxt.dim == current.dim:
            return current
        current = nxt


def A_ideal_closure(P: RinehartPair, generators) -> Subspace:
    m = P.nA
    current = rref([tuple(Fraction(c) for c in g) for g in generators], m)
    while True:
        new = [P.mul(_u(a), v) for v in _rows(current) for a in range(m)]
        nxt = sum_(current, _span(new, m))
        if nxt.dim == current.dim:
            return current
        current = nxt


def _probe_space(closure_fn, total: Subspace, allowed) -> dict:
    """Single-generator closures from the rows of ``total``; classify as simple, split or neither."""
    n = total.ambient_dim
    closures = [closure_fn([r]) for r in total.basis_rows]
    inside = all(total.contains(c) for c in closures)
    simple = inside and all(c in allowed for c in closures)
    verdict = "simple (probe)" if simple else "not simple (probe)"
    if not simple and inside:
        distinct = []
        for c in closures:
            if c not in distinct:
                distinct.append(c)
        minimal = [c for c in distinct if not any(d != c and c.contains(d) for d in distinct)]
        if len(minimal) == 2 and is_direct(minimal, n) and sum_all(minimal, n) == total:
            if all(all(closure_fn([r]) == c for r in c.basis_rows) for c in minimal):
                verdict = "split into two probe-simple ideals"
    return {
        "dim": total.dim,
        "closure_dims": [c.dim for c in closures],
        "closures_inside": inside,
        "verdict": verdict,
    }


def simplicity_probe(P_or_S, split: SplitDatum | None = None, mode: str = "strict") -> Report:
    if isinstance(P_or_S, SplitDatum):
        split = P_or_S
        P = P_or_S.pair
    else:
        P = P_or_S
    n, m = P.nL, P.nA
    rad = radicals(P)
    LLL = _span([v for v in P.L.bracket.values()], n)
    nonzero = {
        "[L,L,L] != 0": not LLL.is_zero(),
        "AA != 0": not _products_span_A(P).is_zero(),
        "LA != 0": not _action_span_L(P).is_zero(),
    }
    Lfull = full_space(n)
    whole = _probe_space(lambda g: ideal_closure(P, g), Lfull, [Lfull, rad.ker_rho])
    failing = [k for k, v in nonzero.items() if not v]
    L_simple = not failing and whole["verdict"] == "simple (probe)"
    details = {
        "nonzero_conditions": nonzero,
        "whole_L": whole,
        "L_verdict": "simple (probe)" if L_simple else "not simple",
    }
    Afull = full_space(m)
    A_whole = _probe_space(lambda g: A_ideal_closure(P, g), Afull, [Afull])
    details["whole_A"] = A_whole
    details["A_verdict"] = (
        "simple (probe)" if not _products_span_A(P).is_zero() and A_whole["verdict"] == "simple (probe)"
        else "not simple"
    )
    escapes = []
    if split is not None:
        dL = decompose_L(split, mode)
        dA = decompose_A(split)
        per_L = []
        for I in dL.ideals:
            allowed = [I.total, intersect(rad.ker_rho, I.total)]
            res = _probe_space(lambda g: ideal_closure(P, g), I.total, allowed)
            per_L.append(res)
            if not res["closures_inside"]:
                escapes.append({"side": "L", "class_id": I.class_id})
        per_A = []
        for J in dA.ideals:
            res = _probe_space(lambda g: A_ideal_closure(P, g), J.total, [J.total])
            per_A.append(res)
            if not res["closures_inside"]:
                escapes.append({"side": "A", "class_id": J.class_id})
        tight = check_tight(split).passed
        bundle = {
            "tight": tight,
            "maximal_length": check_maximal_length(split).passed,
            "root_multiplicative": check_root_multiplicative(split).passed,
            "symmetric": check_symmetry(split).passed,
            "roots_all_connected": len(dL.partition.classes) <= 1,
            "weights_all_connected": len(dA.partition.classes) <= 1,
        }
        pattern = all(r["verdict"] != "not simple (probe)" for r in per_L + per_A)
        details.update({
            "mode": mode,
            "L_ideals": per_L,
            "A_ideals": per_A,
            "hypothesis_bundle": bundle,
            "hypotheses_hold": all(bundle.values()),
            "conclusion_pattern_holds": pattern,
        })
    violations = [{"failing": k} for k in failing] + [{"escape": e} for e in escapes]
    return Report("simplicity_probe", not escapes, details, violations)
