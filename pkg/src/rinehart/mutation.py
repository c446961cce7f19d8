"""Single-entry mutations of a completed pair, for testing the validators."""
from __future__ import annotations

import dataclasses
from fractions import Fraction

from .structures import ColorCommAlgebra, RinehartPair, ThreeLieColorAlgebra

TABLES = ("bracket", "product", "action", "rho")


def tables(P: RinehartPair) -> dict:
    return {"bracket": P.L.bracket, "product": P.A.product, "action": P.action, "rho": P.rho}


def entries(P: RinehartPair):
    """Every nonzero structure constant as (table, key, output index, value), in a fixed order."""
    out = []
    for name, tab in tables(P).items():
        for key in sorted(tab):
            for k, c in sorted(tab[key].items()):
                out.append((name, key, k, c))
    return out


def mutate(P: RinehartPair, table: str, key: tuple, out: int, value) -> RinehartPair:
    """Copy of P with one structure constant replaced; no skew or orbit completion."""
    value = Fraction(value)

    def edit(d):
        d = {k: dict(v) for k, v in d.items()}
        v = d.setdefault(key, {})
        if value == 0:
            v.pop(out, None)
        else:
            v[out] = value
        if not v:
            del d[key]
        return d

    if table == "bracket":
        return dataclasses.replace(P, L=ThreeLieColorAlgebra(P.L.basis, edit(P.L.bracket)))
    if table == "product":
        return dataclasses.replace(P, A=ColorCommAlgebra(P.A.basis, edit(P.A.product)))
    if table in ("action", "rho"):
        return dataclasses.replace(P, **{table: edit(getattr(P, table))})
    raise ValueError(f"unknown table {table!r}")


def scalings(P: RinehartPair, factor=2):
    """All mutations that multiply one existing constant by ``factor``."""
    for table, key, k, c in entries(P):
        yield (table, key, k, c * factor), mutate(P, table, key, k, c * factor)
