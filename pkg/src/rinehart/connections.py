"""Connection relations on roots and weights, by breadth-first search.

Root steps move s -> s + gamma + mu with gamma, mu in +-Pi u +-Lambda u {0} and
the result in +-Pi. In ``strict`` mode the intermediate s + gamma must also lie in
+-Pi u +-Lambda. Weight steps move s -> s + eta with eta in +-Pi u +-Lambda and
the result in +-Lambda.

The first chain element is always the starting functional.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .split import BilinearFunctional, SplitDatum

MODES = ("strict", "verbatim")


class ConnectionError_(ValueError):
    pass


@dataclass(frozen=True)
class RootSystem:
    Pi: frozenset
    Lam: frozenset

    @classmethod
    def of(cls, S) -> "RootSystem":
        if isinstance(S, RootSystem):
            return S
        return cls(frozenset(S.roots), frozenset(S.weights))

    @property
    def pm_Pi(self) -> frozenset:
        return self.Pi | frozenset(-a for a in self.Pi)

    @property
    def pm_Lam(self) -> frozenset:
        return self.Lam | frozenset(-w for w in self.Lam)

    def zero(self) -> BilinearFunctional:
        any_f = next(iter(self.Pi | self.Lam))
        return BilinearFunctional.zero(any_f.d)


@dataclass
class ConnectionWitness:
    kind: str  # "root" or "weight"
    mode: str
    chain: list
    partial_sums: list

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "mode": self.mode,
            "chain": [f.to_list() for f in self.chain],
            "partial_sums": [f.to_list() for f in self.partial_sums],
        }


@dataclass
class ClassPartition:
    kind: str
    mode: str
    classes: list  # list of lists of functionals, each sorted; classes ordered by first member
    witness_table: dict = field(default_factory=dict)  # (rep, member) -> ConnectionWitness
    equivalence_verified: bool = True
    notes: dict = field(default_factory=dict)

    def class_of(self, f) -> int:
        for i, c in enumerate(self.classes):
            if f in c:
                return i
        raise KeyError(str(f))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "mode": self.mode,
            "classes": [[f.to_list() for f in c] for c in self.classes],
            "equivalence_verified": self.equivalence_verified,
            "witnesses": [
                {"from": a.to_list(), "to": b.to_list(), "witness": w.to_dict()}
                for (a, b), w in sorted(self.witness_table.items())
            ],
            **{k: v for k, v in self.notes.items()},
        }


def _root_chain(start, steps):
    chain = [start]
    for g, m in steps:
        chain += [g, m]
    if len(steps) == 1:
        zero = BilinearFunctional.zero(start.d)
        chain += [zero, zero]
    return chain


def _root_partials(chain):
    """Partial sums alpha_1 + sum_{j<=i}(alpha_2j + alpha_2j+1), i = 0..k."""
    s = chain[0]
    sums = [s]
    for i in range(1, len(chain), 2):
        s = s + chain[i] + chain[i + 1]
        sums.append(s)
    return sums


def root_connected(S, alpha, beta, mode: str = "strict", max_steps: int | None = None):
    """A witness chain from alpha to beta, or None."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    R = RootSystem.of(S)
    for f in (alpha, beta):
        if f not in R.Pi:
            raise ConnectionError_(f"{f} is not a root")
    if beta == alpha or beta == -alpha:
        return ConnectionWitness("root", mode, [alpha], [alpha])
    pmPi = R.pm_Pi
    pmAll = pmPi | R.pm_Lam
    zero = R.zero()
    moves = sorted(pmAll | {zero})
    targets = {beta, -beta}
    parent = {alpha: None}
    frontier = deque([(alpha, 0)])
    while frontier:
        s, depth = frontier.popleft()
        if max_steps is not None and depth >= max_steps:
            continue
        for g in moves:
            sg = s + g
            if mode == "strict" and sg not in pmAll:
                continue
            for m in moves:
                t = sg + m
                if t not in pmPi or t in parent:
                    continue
                parent[t] = (s, g, m)
                if t in targets:
                    steps = []
                    cur = t
                    while parent[cur] is not None:
                        p, gg, mm = parent[cur]
                        steps.append((gg, mm))
                        cur = p
                    steps.reverse()
                    chain = _root_chain(alpha, steps)
                    return ConnectionWitness("root", mode, chain, _root_partials(chain))
                frontier.append((t, depth + 1))
    return None


def replay_root_witness(S, alpha, beta, w: ConnectionWitness) -> bool:
    """Re-check a root witness against the definition, independently of the search."""
    R = RootSystem.of(S)
    pmPi = R.pm_Pi
    pmAll = pmPi | R.pm_Lam
    chain = w.chain
    if not chain or chain[0] != alpha:
        return False
    if len(chain) == 1:
        return beta in (alpha, -alpha)
    if len(chain) % 2 == 0 or len(chain) < 5:
        return False
    zero = BilinearFunctional.zero(alpha.d)
    if any(f not in pmAll and f != zero for f in chain):
        return False
    sums = _root_partials(chain)
    if sums != w.partial_sums:
        return False
    for s in sums[1:-1]:
        if s not in pmPi:
            return False
    if w.mode == "strict":
        s = chain[0]
        for i in range(1, len(chain), 2):
            if s + chain[i] not in pmAll:
                return False
            s = s + chain[i] + chain[i + 1]
    return sums[-1] in (beta, -beta)


def weight_connected(S, lam, mu, max_steps: int | None = None):
    R = RootSystem.of(S)
    for f in (lam, mu):
        if f not in R.Lam:
            raise ConnectionError_(f"{f} is not a weight")
    if mu == lam or mu == -lam:
        return ConnectionWitness("weight", "definition", [lam], [lam])
    pmLam = R.pm_Lam
    moves = sorted(R.pm_Pi | pmLam)
    targets = {mu, -mu}
    parent = {lam: None}
    frontier = deque([(lam, 0)])
    while frontier:
        s, depth = frontier.popleft()
        if max_steps is not None and depth >= max_steps:
            continue
        for eta in moves:
            t = s + eta
            if t not in pmLam or t in parent:
                continue
            parent[t] = (s, eta)
            if t in targets:
                etas = []
                cur = t
                while parent[cur] is not None:
                    p, e = parent[cur]
                    etas.append(e)
                    cur = p
                chain = [lam] + etas[::-1]
                sums = [lam]
                for e in chain[1:]:
                    sums.append(sums[-1] + e)
                return ConnectionWitness("weight", "definition", chain, sums)
            frontier.append((t, depth + 1))
    return None


def replay_weight_witness(S, lam, mu, w: ConnectionWitness) -> bool:
    R = RootSystem.of(S)
    pmLam = R.pm_Lam
    pmAll = R.pm_Pi | pmLam
    chain = w.chain
    if not chain or chain[0] != lam:
        return False
    if len(chain) == 1:
        return mu in (lam, -lam)
    if any(f not in pmAll for f in chain):
        return False
    sums = [chain[0]]
    for e in chain[1:]:
        sums.append(sums[-1] + e)
    if sums != w.partial_sums:
        return False
    if any(s not in pmLam for s in sums[1:-1]):
        return False
    return sums[-1] in (mu, -mu)


def _partition(items, connected, kind, mode, replay):
    items = sorted(items)
    rel = {}
    for a in items:
        for b in items:
            rel[(a, b)] = connected(a, b)
    # equivalence check on the finite set
    ok = True
    for a in items:
        if rel[(a, a)] is None:
            ok = False
        for b in items:
            if (rel[(a, b)] is None) != (rel[(b, a)] is None):
                ok = False
            if rel[(a, b)] is not None:
                for c in items:
                    if rel[(b, c)] is not None and rel[(a, c)] is None:
                        ok = False
    classes = []
    seen = set()
    witnesses = {}
    for a in items:
        if a in seen:
            continue
        cls = [b for b in items if rel[(a, b)] is not None]
        seen.update(cls)
        classes.append(cls)
        for b in cls:
            w = rel[(a, b)]
            if not replay(a, b, w):
                ok = False
            witnesses[(a, b)] = w
    return ClassPartition(kind, mode, classes, witnesses, ok)


def root_classes(S, mode: str = "strict") -> ClassPartition:
    R = RootSystem.of(S)
    return _partition(
        R.Pi,
        lambda a, b: root_connected(R, a, b, mode),
        "root",
        mode,
        lambda a, b, w: replay_root_witness(R, a, b, w),
    )


def weight_classes(S) -> ClassPartition:
    R = RootSystem.of(S)
    part = _partition(
        R.Lam,
        lambda a, b: weight_connected(R, a, b),
        "weight",
        "definition",
        lambda a, b, w: replay_weight_witness(R, a, b, w),
    )
    part.notes["closure_under_eta_verified"] = check_weight_closure(R, part)
    return part


def check_weight_closure(S, part: ClassPartition) -> bool:
    """If lam ~ mu and mu + eta is a weight for eta in +-Pi u +-Lambda, then lam ~ mu + eta."""
    R = RootSystem.of(S)
    moves = R.pm_Pi | R.pm_Lam
    for cls in part.classes:
        members = set(cls)
        for mu in cls:
            for eta in moves:
                if mu + eta in R.Lam and mu + eta not in members:
                    return False
    return True


def check_root_shift(S, part: ClassPartition) -> bool:
    """If alpha ~ beta and alpha + gamma + mu is a root, then beta ~ alpha + gamma + mu."""
    R = RootSystem.of(S)
    moves = R.pm_Pi | R.pm_Lam
    if R.Pi or R.Lam:
        moves = moves | {R.zero()}
    for cls in part.classes:
        members = set(cls)
        for a in cls:
            for g in moves:
                for m in moves:
                    t = a + g + m
                    if t in R.Pi and t not in members:
                        return False
    return True
