"""Finite abelian grading groups and sign-valued bicharacters on them."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .report import Report


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class GradingGroup:
    """Z_{m_1} x ... x Z_{m_r}; elements are residue tuples."""

    moduli: tuple

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))
        if any(m < 1 for m in self.moduli):
            raise GradingError(f"moduli must be positive: {self.moduli}")

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        out = 1
        for m in self.moduli:
            out *= m
        return out

    @property
    def zero(self) -> tuple:
        return (0,) * self.rank

    @cached_property
    def elements(self) -> tuple:
        """All elements in lexicographic order (the table order for explicit bicharacters)."""
        return tuple(itertools.product(*(range(m) for m in self.moduli)))

    @cached_property
    def index(self) -> dict:
        return {g: i for i, g in enumerate(self.elements)}

    def contains(self, g) -> bool:
        g = tuple(g)
        return len(g) == self.rank and all(0 <= x < m for x, m in zip(g, self.moduli))

    def check(self, g) -> tuple:
        g = tuple(g)
        if not self.contains(g):
            raise GradingError(f"{g} is not an element of Z{list(self.moduli)}")
        return g

    def add(self, g, h) -> tuple:
        return tuple((a + b) % m for a, b, m in zip(g, h, self.moduli))

    def neg(self, g) -> tuple:
        return tuple((-a) % m for a, m in zip(g, self.moduli))


GroupElement = tuple


@dataclass(frozen=True)
class BiCharacter:
    """Either an exponent matrix M (eps(g,h) = (-1)^(g^T M h)) or an explicit table."""

    group: GradingGroup
    exponent_matrix: tuple | None = None
    table: tuple | None = None

    def __post_init__(self):
        if (self.exponent_matrix is None) == (self.table is None):
            raise GradingError("give exactly one of exponent_matrix or table")
        r, n = self.group.rank, self.group.order
        if self.exponent_matrix is not None:
            M = tuple(tuple(int(x) for x in row) for row in self.exponent_matrix)
            if len(M) != r or any(len(row) != r for row in M):
                raise GradingError(f"exponent matrix must be {r}x{r}")
            object.__setattr__(self, "exponent_matrix", M)
        else:
            T = tuple(tuple(Fraction(x) for x in row) for row in self.table)
            if len(T) != n or any(len(row) != n for row in T):
                raise GradingError(f"epsilon table must be {n}x{n}")
            object.__setattr__(self, "table", T)

    @cached_property
    def matrix(self) -> tuple:
        """Values on G x G, indexed by element position."""
        if self.table is not None:
            return self.table
        els = self.group.elements
        M = self.exponent_matrix
        r = self.group.rank
        out = []
        for g in els:
            row = []
            for h in els:
                e = sum(M[i][j] * g[i] * h[j] for i in range(r) for j in range(r))
                row.append(Fraction(-1) if e % 2 else Fraction(1))
            out.append(tuple(row))
        return tuple(out)

    def __call__(self, g, h) -> Fraction:
        return eps_eval(self, g, h)

    @classmethod
    def trivial(cls, group: GradingGroup) -> "BiCharacter":
        return cls(group, exponent_matrix=tuple((0,) * group.rank for _ in range(group.rank)))


def eps_eval(b: BiCharacter, g, h) -> Fraction:
    G = b.group
    return b.matrix[G.index[G.check(g)]][G.index[G.check(h)]]


def validate_bicharacter(b: BiCharacter) -> Report:
    G = b.group
    els = G.elements
    E = b.matrix
    idx = G.index
    violations = []
    for gi, g in enumerate(els):
        for hi, h in enumerate(els):
            if E[gi][hi] not in (1, -1):
                violations.append({"condition": "values in {+1,-1}", "tuple": [g, h], "value": E[gi][hi]})
            if E[gi][hi] * E[hi][gi] != 1:
                violations.append({"condition": "(i) eps(g,h)eps(h,g)=1", "tuple": [g, h]})
    for gi, g in enumerate(els):
        for hi, h in enumerate(els):
            gh = idx[G.add(g, h)]
            for fi, f in enumerate(els):
                if E[gh][fi] != E[gi][fi] * E[hi][fi]:
                    violations.append({"condition": "(ii) eps(g+h,f)=eps(g,f)eps(h,f)", "tuple": [g, h, f]})
                hf = idx[G.add(h, f)]
                if E[gi][hf] != E[gi][hi] * E[gi][fi]:
                    violations.append({"condition": "(iii) eps(g,h+f)=eps(g,h)eps(g,f)", "tuple": [g, h, f]})
    return Report(
        "bicharacter",
        not violations,
        {"group_order": G.order, "triples_checked": G.order ** 3},
        violations,
    )
