"""Canonical JSON algebra files.

Scalars are strings ``"p/q"`` or ``"p"``. Emission writes keys in a fixed order
so that emit -> parse -> emit reproduces the same bytes.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .exactnum import format_scalar, parse_scalar
from .structures import PairSpec, RinehartPair, pair_to_spec


class InputError(ValueError):
    pass


def _need(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"missing key {key!r} in {where}")
    return obj[key]


def _scalar(x, where) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"scalar in {where} must be a string 'p/q' or 'p', got {x!r}")
    try:
        return parse_scalar(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad scalar {x!r} in {where}: {exc}") from None


def _basis(block, where):
    entries = _need(block, "basis", where)
    if not isinstance(entries, list):
        raise InputError(f"{where}.basis must be a list")
    names, degrees = [], []
    for k, e in enumerate(entries):
        name = _need(e, "name", f"{where}.basis[{k}]")
        deg = _need(e, "degree", f"{where}.basis[{k}]")
        if not isinstance(name, str) or not isinstance(deg, list) or not all(isinstance(d, int) for d in deg):
            raise InputError(f"{where}.basis[{k}] needs a string name and an integer degree list")
        names.append(name)
        degrees.append(tuple(deg))
    return tuple(names), tuple(degrees)


def _entries(doc, key, arity):
    raw = doc.get(key, [])
    if not isinstance(raw, list):
        raise InputError(f"{key} must be a list")
    out = []
    for k, e in enumerate(raw):
        args = _need(e, "args", f"{key}[{k}]")
        value = _need(e, "value", f"{key}[{k}]")
        if not isinstance(args, list) or len(args) != arity or not all(isinstance(a, str) for a in args):
            raise InputError(f"{key}[{k}].args must list {arity} basis names")
        if not isinstance(value, dict):
            raise InputError(f"{key}[{k}].value must map basis names to scalars")
        out.append((tuple(args), {n: _scalar(c, f"{key}[{k}]") for n, c in value.items()}))
    return out


def parse_document(doc) -> PairSpec:
    if not isinstance(doc, dict):
        raise InputError("algebra file must be a JSON object")
    moduli = _need(_need(doc, "group", "file"), "moduli", "group")
    if not isinstance(moduli, list) or not all(isinstance(m, int) and m >= 1 for m in moduli):
        raise InputError("group.moduli must be a list of positive integers")
    eps = _need(doc, "epsilon", "file")
    exp, table = None, None
    if isinstance(eps, dict) and "exponent_matrix" in eps:
        exp = eps["exponent_matrix"]
        if not isinstance(exp, list) or not all(isinstance(r, list) and all(isinstance(x, int) for x in r)
                                                for r in exp):
            raise InputError("epsilon.exponent_matrix must be an integer matrix")
        exp = tuple(tuple(r) for r in exp)
    elif isinstance(eps, dict) and "table" in eps:
        t = eps["table"]
        if not isinstance(t, list) or not all(isinstance(r, list) for r in t):
            raise InputError("epsilon.table must be a matrix")
        table = tuple(tuple(_scalar(x, "epsilon.table") for x in r) for r in t)
    else:
        raise InputError("epsilon needs 'exponent_matrix' or 'table'")
    L_names, L_deg = _basis(_need(doc, "L", "file"), "L")
    A_names, A_deg = _basis(_need(doc, "A", "file"), "A")
    cartan = doc.get("cartan")
    if cartan is not None:
        if not isinstance(cartan, list) or not all(isinstance(c, str) for c in cartan):
            raise InputError("cartan must be a list of L basis names")
        cartan = tuple(cartan)
    return PairSpec(
        moduli=tuple(moduli),
        exponent_matrix=exp,
        eps_table=table,
        L_names=L_names,
        L_degrees=L_deg,
        A_names=A_names,
        A_degrees=A_deg,
        bracket=_entries(doc, "bracket", 3),
        product=_entries(doc, "product", 2),
        action=_entries(doc, "action", 2),
        rho=_entries(doc, "rho", 3),
        cartan=cartan,
    )


def parse_text(text: str) -> PairSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from None
    return parse_document(doc)


def spec_to_document(spec: PairSpec) -> dict:
    def basis(names, degrees):
        return {"basis": [{"name": n, "degree": list(d)} for n, d in zip(names, degrees)]}

    def entries(items):
        return [{"args": list(args), "value": {n: format_scalar(c) for n, c in value.items()}}
                for args, value in items]

    if spec.exponent_matrix is not None:
        eps = {"exponent_matrix": [list(r) for r in spec.exponent_matrix]}
    else:
        eps = {"table": [[format_scalar(x) for x in r] for r in spec.eps_table]}
    doc = {
        "group": {"moduli": list(spec.moduli)},
        "epsilon": eps,
        "L": basis(spec.L_names, spec.L_degrees),
        "A": basis(spec.A_names, spec.A_degrees),
        "bracket": entries(spec.bracket),
        "product": entries(spec.product),
        "action": entries(spec.action),
        "rho": entries(spec.rho),
    }
    if spec.cartan is not None:
        doc["cartan"] = list(spec.cartan)
    return doc


def dumps_spec(spec: PairSpec) -> str:
    return json.dumps(spec_to_document(spec), indent=2, ensure_ascii=False) + "\n"


def emit_pair(P: RinehartPair) -> str:
    return dumps_spec(pair_to_spec(P))
