"""Exhaustive validators for the defining identities of a 3-Lie-Rinehart color pair.

Every checker walks all basis tuples of its arity in lexicographic order and
records each failing tuple with both sides of the identity.

Convention: the color Leibniz rule is taken as
    rho(x,y)(ab) = rho(x,y)(a) b + eps(|x|+|y|, |a|) a rho(x,y)(b).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import sp_axpy, sp_scale
from .grading import BiCharacter, validate_bicharacter
from .report import Report, jsonable
from .structures import ColorCommAlgebra, LieColorAlgebra, RinehartPair

LEIBNIZ_CONVENTION = "rho(x,y)(ab) = rho(x,y)(a)b + eps(|x|+|y|,|a|) a rho(x,y)(b)"


@dataclass
class AxiomReport:
    axiom_id: str
    passed: bool
    violations: list = field(default_factory=list)
    tuples_checked: int = 0
    note: str = ""

    def to_dict(self) -> dict:
        out = {
            "axiom_id": self.axiom_id,
            "passed": self.passed,
            "tuples_checked": self.tuples_checked,
            "violations": jsonable(self.violations),
        }
        if self.note:
            out["note"] = self.note
        return out

    def summary_line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        tail = f", {len(self.violations)} violations" if self.violations else ""
        return f"[{mark}] {self.axiom_id} ({self.tuples_checked} tuples{tail})"


class _Recorder:
    def __init__(self, axiom_id: str, names_fn=None):
        self.axiom_id = axiom_id
        self.violations: list = []
        self.count = 0

    def check(self, tup, lhs: dict, rhs: dict, label: str | None = None):
        self.count += 1
        if lhs != rhs:
            entry = {"tuple": list(tup), "left": dict(sorted(lhs.items())), "right": dict(sorted(rhs.items()))}
            if label:
                entry["identity"] = label
            self.violations.append(entry)

    def report(self, note: str = "") -> AxiomReport:
        self.violations.sort(key=lambda v: (v.get("identity", ""), v["tuple"]))
        return AxiomReport(self.axiom_id, not self.violations, self.violations, self.count, note)


def _u(i: int) -> dict:
    return {i: Fraction(1)}


def _named(P: RinehartPair, tup, kinds: str) -> tuple:
    out = []
    for k, i in zip(kinds, tup):
        out.append((P.L if k == "L" else P.A).basis.names[i])
    return tuple(out)


def check_bracket_grading(P: RinehartPair) -> AxiomReport:
    rec = _Recorder("grading")
    nL, nA = P.nL, P.nA
    add = P.ADD
    Ld, Ad = P.Ldeg, P.Adeg

    def bad_support(v: dict, degs, expected) -> dict:
        return {k: c for k, c in v.items() if degs[k] != expected}

    for t in itertools.product(range(nL), repeat=3):
        v = P.L.bracket.get(t, {})
        exp = add[add[Ld[t[0]]][Ld[t[1]]]][Ld[t[2]]]
        rec.check(("bracket",) + _named(P, t, "LLL"), bad_support(v, Ld, exp), {})
    for t in itertools.product(range(nA), repeat=2):
        v = P.A.product.get(t, {})
        rec.check(("product",) + _named(P, t, "AA"), bad_support(v, Ad, add[Ad[t[0]]][Ad[t[1]]]), {})
    for t in itertools.product(range(nA), range(nL)):
        v = P.action.get(t, {})
        rec.check(("action",) + _named(P, t, "AL"), bad_support(v, Ld, add[Ad[t[0]]][Ld[t[1]]]), {})
    for t in itertools.product(range(nL), range(nL), range(nA)):
        v = P.rho.get(t, {})
        exp = add[add[Ld[t[0]]][Ld[t[1]]]][Ad[t[2]]]
        rec.check(("rho",) + _named(P, t, "LLA"), bad_support(v, Ad, exp), {})
    return rec.report("left side lists output coordinates in the wrong degree")


def check_skew(P: RinehartPair) -> AxiomReport:
    rec = _Recorder("skew")
    E, d = P.E, P.Ldeg
    B = P.L.bracket
    for t in itertools.product(range(P.nL), repeat=3):
        x1, x2, x3 = t
        lhs = B.get(t, {})
        rec.check(_named(P, t, "LLL"), lhs, sp_scale(-E[d[x1]][d[x2]], B.get((x2, x1, x3), {})), "swap12")
        rec.check(_named(P, t, "LLL"), lhs, sp_scale(-E[d[x2]][d[x3]], B.get((x1, x3, x2), {})), "swap23")
    rep = rec.report()
    rep.tuples_checked //= 2
    return rep


def check_rho_skew(P: RinehartPair) -> AxiomReport:
    """rho(x,y) = -eps(x,y) rho(y,x), evaluated on every basis vector of A."""
    rec = _Recorder("rho_skew")
    E, d = P.E, P.Ldeg
    for t in itertools.product(range(P.nL), range(P.nL), range(P.nA)):
        x, y, a = t
        rec.check(_named(P, t, "LLA"), P.rho.get(t, {}), sp_scale(-E[d[x]][d[y]], P.rho.get((y, x, a), {})))
    return rec.report()


def check_fi(P: RinehartPair) -> AxiomReport:
    rec = _Recorder("fundamental_identity")
    n = P.nL
    E, d, add = P.E, P.Ldeg, P.ADD
    B = P.L.bracket
    T = {t: B.get(t, {}) for t in itertools.product(range(n), repeat=3)}
    U = [_u(i) for i in range(n)]
    for x1, x2 in itertools.product(range(n), repeat=2):
        s = add[d[x1]][d[x2]]
        Dx = [T[(x1, x2, y)] for y in range(n)]
        for y1, y2, y3 in itertools.product(range(n), repeat=3):
            lhs = P.br(U[x1], U[x2], T[(y1, y2, y3)])
            rhs: dict = {}
            sp_axpy(rhs, 1, P.br(Dx[y1], U[y2], U[y3]))
            sp_axpy(rhs, E[s][d[y1]], P.br(U[y1], Dx[y2], U[y3]))
            sp_axpy(rhs, E[s][add[d[y1]][d[y2]]], P.br(U[y1], U[y2], Dx[y3]))
            rec.check(_named(P, (x1, x2, y1, y2, y3), "LLLLL"), lhs, rhs)
    return rec.report()


def _comm_assoc(A: ColorCommAlgebra, eps: BiCharacter, axiom_id: str = "A_comm_assoc") -> AxiomReport:
    rec = _Recorder(axiom_id)
    G = eps.group
    m = A.basis.dim
    d = [G.index[tuple(g)] for g in A.basis.degrees]
    E = eps.matrix
    M = A.product
    names = A.basis.names

    def mul(u: dict, v: dict) -> dict:
        out: dict = {}
        for i, x in u.items():
            for j, y in v.items():
                val = M.get((i, j))
                if val:
                    sp_axpy(out, x * y, val)
        return out

    for a, b, c in itertools.product(range(m), repeat=3):
        rec.check((names[a], names[b], names[c]), mul(_u(a), M.get((b, c), {})), mul(M.get((a, b), {}), _u(c)),
                  "associativity")
    for a, b in itertools.product(range(m), repeat=2):
        rec.check((names[a], names[b]), M.get((a, b), {}), sp_scale(E[d[a]][d[b]], M.get((b, a), {})),
                  "color_commutativity")
    return rec.report()


def check_A_comm_assoc(P: RinehartPair) -> AxiomReport:
    return _comm_assoc(P.A, P.eps)


def check_rep(P: RinehartPair) -> AxiomReport:
    """Both representation identities, as maps on A, over all (x1..x4, a)."""
    rec = _Recorder("representation")
    n, m = P.nL, P.nA
    E, d, add = P.E, P.Ldeg, P.ADD
    U = [_u(i) for i in range(n)]
    B = P.L.bracket
    # R[x][y][a] = rho(x,y)(a)
    R = [[[P.rho.get((x, y, a), {}) for a in range(m)] for y in range(n)] for x in range(n)]

    def rho_on(x: int, y: int, v: dict) -> dict:
        out: dict = {}
        row = R[x][y]
        for k, c in v.items():
            if row[k]:
                sp_axpy(out, c, row[k])
        return out

    def rho_vec_first(u: dict, y: int, v: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            sp_axpy(out, c, rho_on(i, y, v))
        return out

    for x1, x2, x3, x4 in itertools.product(range(n), repeat=4):
        b123 = B.get((x1, x2, x3), {})
        b124 = B.get((x1, x2, x4), {})
        s12 = add[d[x1]][d[x2]]
        s34 = add[d[x3]][d[x4]]
        s23 = add[d[x2]][d[x3]]
        for a in range(m):
            ua = _u(a)
            r34a = rho_on(x3, x4, ua)
            r12a = rho_on(x1, x2, ua)
            lhs2: dict = {}
            sp_axpy(lhs2, 1, rho_on(x1, x2, r34a))
            sp_axpy(lhs2, -E[s12][s34], rho_on(x3, x4, r12a))
            rhs2: dict = {}
            sp_axpy(rhs2, 1, rho_vec_first(b123, x4, ua))
            sp_axpy(rhs2, -E[d[x3]][d[x4]], rho_vec_first(b124, x3, ua))
            rec.check(_named(P, (x1, x2, x3, x4, a), "LLLLA"), lhs2, rhs2, "rep_commutator")
            lhs3 = rho_vec_first(b123, x4, ua)
            rhs3: dict = {}
            sp_axpy(rhs3, 1, rho_on(x1, x2, r34a))
            sp_axpy(rhs3, E[d[x1]][s23], rho_on(x2, x3, rho_on(x1, x4, ua)))
            sp_axpy(rhs3, E[s12][d[x3]], rho_on(x3, x1, rho_on(x2, x4, ua)))
            rec.check(_named(P, (x1, x2, x3, x4, a), "LLLLA"), lhs3, rhs3, "rep_bracket")
    rep = rec.report()
    rep.tuples_checked //= 2
    return rep


def check_der(P: RinehartPair) -> AxiomReport:
    rec = _Recorder("derivation")
    n, m = P.nL, P.nA
    E, Ld, Ad, add = P.E, P.Ldeg, P.Adeg, P.ADD
    for x, y in itertools.product(range(n), repeat=2):
        sxy = add[Ld[x]][Ld[y]]
        for a, b in itertools.product(range(m), repeat=2):
            ux, uy = _u(x), _u(y)
            lhs = P.rh(ux, uy, P.A.product.get((a, b), {}))
            rhs: dict = {}
            sp_axpy(rhs, 1, P.mul(P.rho.get((x, y, a), {}), _u(b)))
            sp_axpy(rhs, E[sxy][Ad[a]], P.mul(_u(a), P.rho.get((x, y, b), {})))
            rec.check(_named(P, (x, y, a, b), "LLAA"), lhs, rhs)
    return rec.report(LEIBNIZ_CONVENTION)


def check_compat(P: RinehartPair) -> AxiomReport:
    """[x,y,az] = eps(a,x+y) a[x,y,z] + rho(x,y)(a) z  and  rho(ax,y) = eps(a,x) rho(x,ay) = a rho(x,y)."""
    rec = _Recorder("compatibility")
    n, m = P.nL, P.nA
    E, Ld, Ad, add = P.E, P.Ldeg, P.Adeg, P.ADD
    U = [_u(i) for i in range(n)]
    for x, y, a, z in itertools.product(range(n), range(n), range(m), range(n)):
        ua = _u(a)
        lhs = P.br(U[x], U[y], P.action.get((a, z), {}))
        rhs: dict = {}
        sp_axpy(rhs, E[Ad[a]][add[Ld[x]][Ld[y]]], P.act(ua, P.L.bracket.get((x, y, z), {})))
        sp_axpy(rhs, 1, P.act(P.rho.get((x, y, a), {}), U[z]))
        rec.check(_named(P, (x, y, a, z), "LLAL"), lhs, rhs, "bracket_linearity")
    for a, x, y in itertools.product(range(m), range(n), range(n)):
        ua = _u(a)
        ax = P.action.get((a, x), {})
        ay = P.action.get((a, y), {})
        for b in range(m):
            ub = _u(b)
            # (a rho(x,y))(b) = a . rho(x,y)(b)
            a_rho = P.mul(ua, P.rho.get((x, y, b), {}))
            tup = _named(P, (a, x, y, b), "ALLA")
            rec.check(tup, P.rh(ax, U[y], ub), a_rho, "anchor_linearity_left")
            rec.check(tup, sp_scale(E[Ad[a]][Ld[x]], P.rh(U[x], ay, ub)), a_rho, "anchor_linearity_right")
    rep = rec.report()
    rep.tuples_checked = n * n * m * n + m * n * n
    return rep


def check_module(P: RinehartPair) -> AxiomReport:
    rec = _Recorder("module")
    n, m = P.nL, P.nA
    for a, b, x in itertools.product(range(m), range(m), range(n)):
        lhs = P.act(P.A.product.get((a, b), {}), _u(x))
        rhs = P.act(_u(a), P.action.get((b, x), {}))
        rec.check(_named(P, (a, b, x), "AAL"), lhs, rhs)
    return rec.report("degree additivity of the action is covered by the grading check")


def validate_all(P: RinehartPair) -> list:
    return [
        validate_bicharacter(P.eps),
        check_bracket_grading(P),
        check_skew(P),
        check_rho_skew(P),
        check_fi(P),
        check_A_comm_assoc(P),
        check_rep(P),
        check_der(P),
        check_compat(P),
        check_module(P),
    ]


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)


def check_lie_rinehart(Lc: LieColorAlgebra, A: ColorCommAlgebra, rho1: dict, action: dict,
                       eps: BiCharacter) -> Report:
    """Lie-Rinehart color pair identities for the input of the trace construction."""
    G = eps.group
    E = eps.matrix
    n, m = Lc.basis.dim, A.basis.dim
    Ld = [G.index[tuple(g)] for g in Lc.basis.degrees]
    Ad = [G.index[tuple(g)] for g in A.basis.degrees]
    add = [[G.index[G.add(g, h)] for h in G.elements] for g in G.elements]
    LB = Lc.bracket
    violations = []

    def lin2(table, u, v):
        out: dict = {}
        for i, s in u.items():
            for j, t in v.items():
                val = table.get((i, j))
                if val:
                    sp_axpy(out, s * t, val)
        return out

    def rho(x: dict, a: dict) -> dict:
        return lin2(rho1, x, a)

    def fail(label, tup, lhs, rhs):
        if lhs != rhs:
            violations.append({"identity": label, "tuple": list(tup), "left": lhs, "right": rhs})

    base = _comm_assoc(A, eps, "lr_A_comm_assoc")
    for v in base.violations:
        violations.append(v)
    for x, y in itertools.product(range(n), repeat=2):
        fail("skew", (x, y), LB.get((x, y), {}), sp_scale(-E[Ld[x]][Ld[y]], LB.get((y, x), {})))
    for x, y, z in itertools.product(range(n), repeat=3):
        lhs = lin2(LB, _u(x), LB.get((y, z), {}))
        rhs: dict = {}
        sp_axpy(rhs, 1, lin2(LB, LB.get((x, y), {}), _u(z)))
        sp_axpy(rhs, E[Ld[x]][Ld[y]], lin2(LB, _u(y), LB.get((x, z), {})))
        fail("jacobi", (x, y, z), lhs, rhs)
    for x, y, a in itertools.product(range(n), range(n), range(m)):
        lhs = rho(LB.get((x, y), {}), _u(a))
        rhs = {}
        sp_axpy(rhs, 1, rho(_u(x), rho(_u(y), _u(a))))
        sp_axpy(rhs, -E[Ld[x]][Ld[y]], rho(_u(y), rho(_u(x), _u(a))))
        fail("anchor_representation", (x, y, a), lhs, rhs)
    for x, a, b in itertools.product(range(n), range(m), range(m)):
        lhs = rho(_u(x), A.product.get((a, b), {}))
        rhs = {}
        sp_axpy(rhs, 1, lin2(A.product, rho1.get((x, a), {}), _u(b)))
        sp_axpy(rhs, E[Ld[x]][Ad[a]], lin2(A.product, _u(a), rho1.get((x, b), {})))
        fail("anchor_derivation", (x, a, b), lhs, rhs)
    for x, a, y in itertools.product(range(n), range(m), range(n)):
        lhs = lin2(LB, _u(x), action.get((a, y), {}))
        rhs = {}
        sp_axpy(rhs, E[Ad[a]][Ld[x]], lin2(action, _u(a), LB.get((x, y), {})))
        sp_axpy(rhs, 1, lin2(action, rho1.get((x, a), {}), _u(y)))
        fail("bracket_linearity", (x, a, y), lhs, rhs)
    for a, x, b in itertools.product(range(m), range(n), range(m)):
        lhs = rho(action.get((a, x), {}), _u(b))
        rhs = lin2(A.product, _u(a), rho1.get((x, b), {}))
        fail("anchor_linearity", (a, x, b), lhs, rhs)
    for a, b, x in itertools.product(range(m), range(m), range(n)):
        fail("module", (a, b, x), lin2(action, A.product.get((a, b), {}), _u(x)),
             lin2(action, _u(a), action.get((b, x), {})))
    return Report("lie_rinehart_pair", not violations, {"dim_L": n, "dim_A": m}, violations)
