"""Exact rational vectors and a subspace lattice over Q.

Scalars are :class:`fractions.Fraction`; vectors are tuples of them. A
:class:`Subspace` keeps its basis in reduced row-echelon form, so equality of
subspaces is equality of their rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionMismatch(ValueError):
    pass


class ContainmentError(ValueError):
    pass


def parse_scalar(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"scalar must be a string or int, got {text!r}")
    return Fraction(text.strip())


def format_scalar(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero(v: Sequence) -> bool:
    return all(c == 0 for c in v)


def add(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> list[tuple]:
    m = [list(r) for r in rows]
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == len(m):
            break
        sel = next((r for r in range(pivot_row, len(m)) if m[r][col] != 0), None)
        if sel is None:
            continue
        m[pivot_row], m[sel] = m[sel], m[pivot_row]
        piv = m[pivot_row][col]
        if piv != 1:
            m[pivot_row] = [x / piv for x in m[pivot_row]]
        prow = m[pivot_row]
        for r in range(len(m)):
            if r != pivot_row:
                f = m[r][col]
                if f != 0:
                    m[r] = [a - f * b for a, b in zip(m[r], prow)]
        pivot_row += 1
    return [tuple(r) for r in m[:pivot_row]]


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis_rows: tuple  # RREF rows

    @property
    def dim(self) -> int:
        return len(self.basis_rows)

    @property
    def pivots(self) -> tuple:
        return tuple(next(i for i, c in enumerate(r) if c != 0) for r in self.basis_rows)

    def __contains__(self, v) -> bool:
        return member(v, self)

    def is_zero(self) -> bool:
        return not self.basis_rows

    def contains(self, other: "Subspace") -> bool:
        _check(self, other)
        return all(member(r, self) for r in other.basis_rows)

    def coordinates(self, v: Sequence) -> tuple | None:
        """Coefficients of ``v`` on ``basis_rows``, or None if ``v`` is outside."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient {self.ambient_dim}")
        v = list(v)
        coeffs = []
        for row, p in zip(self.basis_rows, self.pivots):
            c = v[p]
            coeffs.append(c)
            if c != 0:
                v = [a - c * b for a, b in zip(v, row)]
        return tuple(coeffs) if all(x == 0 for x in v) else None


def rref(rows: Iterable[Sequence], ambient_dim: int | None = None) -> Subspace:
    rows = [tuple(Fraction(c) for c in r) for r in rows]
    if ambient_dim is None:
        if not rows:
            raise DimensionMismatch("ambient_dim is required for an empty row list")
        ambient_dim = len(rows[0])
    for r in rows:
        if len(r) != ambient_dim:
            raise DimensionMismatch(f"row of length {len(r)} in ambient {ambient_dim}")
    return Subspace(ambient_dim, tuple(_rref_rows([list(r) for r in rows], ambient_dim)))


def zero_space(n: int) -> Subspace:
    return Subspace(n, ())


def full_space(n: int) -> Subspace:
    return Subspace(n, tuple(unit_vec(n, i) for i in range(n)))


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    return rref(list(vectors), ambient_dim)


def _check(S: Subspace, T: Subspace) -> None:
    if S.ambient_dim != T.ambient_dim:
        raise DimensionMismatch(f"ambient dims {S.ambient_dim} and {T.ambient_dim}")


def sum_(S: Subspace, T: Subspace) -> Subspace:
    _check(S, T)
    return rref(S.basis_rows + T.basis_rows, S.ambient_dim)


def sum_all(spaces: Iterable[Subspace], ambient_dim: int) -> Subspace:
    rows = []
    for S in spaces:
        if S.ambient_dim != ambient_dim:
            raise DimensionMismatch(f"ambient dims {S.ambient_dim} and {ambient_dim}")
        rows.extend(S.basis_rows)
    return rref(rows, ambient_dim)


def nullspace(matrix: Sequence[Sequence], ncols: int) -> Subspace:
    """Kernel of ``x -> matrix @ x`` as a subspace of Q^ncols."""
    reduced = _rref_rows([list(map(Fraction, r)) for r in matrix], ncols)
    pivots = [next(i for i, c in enumerate(r) if c != 0) for r in reduced]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return rref(basis, ncols)


def intersect(S: Subspace, T: Subspace) -> Subspace:
    _check(S, T)
    if S.is_zero() or T.is_zero():
        return zero_space(S.ambient_dim)
    s, t = S.basis_rows, T.basis_rows
    n = S.ambient_dim
    # columns: coefficients on S rows then T rows; sum_i a_i s_i - sum_j b_j t_j = 0
    matrix = [[r[k] for r in s] + [-r[k] for r in t] for k in range(n)]
    ker = nullspace(matrix, len(s) + len(t))
    vecs = []
    for coeffs in ker.basis_rows:
        v = [ZERO] * n
        for a, r in zip(coeffs[: len(s)], s):
            if a != 0:
                v = [x + a * y for x, y in zip(v, r)]
        vecs.append(v)
    return rref(vecs, n)


def member(v: Sequence, S: Subspace) -> bool:
    return S.coordinates(v) is not None


def complement(S: Subspace, within: Subspace) -> Subspace:
    """A complement of S inside ``within``, by greedy extension with ``within``'s rows."""
    _check(S, within)
    if not within.contains(S):
        raise ContainmentError("S is not contained in the enclosing subspace")
    current = S
    added = []
    for row in within.basis_rows:
        if not member(row, current):
            added.append(row)
            current = sum_(current, rref([row], S.ambient_dim))
    return rref(added, S.ambient_dim)


def is_direct(spaces: Sequence[Subspace], ambient_dim: int) -> bool:
    return sum_all(spaces, ambient_dim).dim == sum(S.dim for S in spaces)


# Sparse vectors: dict index -> nonzero Fraction. Used for structure-constant arithmetic.

def sp_axpy(acc: dict, c, v: dict) -> dict:
    """acc += c * v, in place, dropping zeros."""
    if c == 0:
        return acc
    for k, x in v.items():
        y = acc.get(k, ZERO) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def sp_scale(c, v: dict) -> dict:
    if c == 0:
        return {}
    return {k: c * x for k, x in v.items()}


def sp_sub(u: dict, v: dict) -> dict:
    return sp_axpy(dict(u), -1, v)


def to_dense(v: dict, n: int) -> Vector:
    out = [ZERO] * n
    for k, x in v.items():
        out[k] = Fraction(x)
    return tuple(out)


def from_dense(v: Sequence) -> dict:
    return {i: Fraction(x) for i, x in enumerate(v) if x != 0}
