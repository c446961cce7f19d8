"""Command line entry point: validate, split, decompose, analyze, builtin.

Exit codes: 0 all checks pass, 1 some check fails, 2 unreadable or malformed input.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .axioms import validate_all
from .decompose import (
    check_tight,
    decompose_A,
    decompose_L,
    pairing,
    radicals,
    simplicity_probe,
)
from .fileformat import InputError, emit_pair, parse_text
from .instances import BUILTIN_NAMES, builtin
from .report import jsonable
from .split import (
    MissingCartan,
    SplitError,
    check_maximal_length,
    check_space_closure,
    check_root_multiplicative,
    check_symmetry,
    extract_split,
)
from .structures import StructureError, build_pair
from .grading import GradingError

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    path: str | None = None
    mode: str = "strict"
    target: str = "both"
    json_path: str | None = None
    emit_path: str | None = None
    name: str | None = None


@dataclass
class RunReport:
    tool_version: str
    input_digest: str | None
    flags: dict
    reports: list = field(default_factory=list)  # [(name, passed, payload)]
    exit_code: int = EXIT_OK

    def add(self, name: str, passed: bool, payload) -> None:
        self.reports.append((name, passed, payload))

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "input_digest": self.input_digest,
            "flags": self.flags,
            "verdict": {"exit_code": self.exit_code, "all_passed": all(p for _, p, _ in self.reports)},
            "reports": [{"name": n, "passed": p, "result": jsonable(payload)} for n, p, payload in self.reports],
        }


class _InputFailure(Exception):
    pass


def _load(cfg: RunConfig, run: RunReport):
    try:
        data = Path(cfg.path).read_bytes()
    except OSError as exc:
        raise _InputFailure(f"cannot read {cfg.path}: {exc}") from None
    run.input_digest = "sha256:" + hashlib.sha256(data).hexdigest()
    try:
        spec = parse_text(data.decode("utf-8"))
        return build_pair(spec)
    except (InputError, StructureError, GradingError, UnicodeDecodeError) as exc:
        raise _InputFailure(str(exc)) from None


def _split(P, run: RunReport):
    try:
        return extract_split(P)
    except MissingCartan as exc:
        raise _InputFailure(f"no usable Cartan declaration: {exc}") from None
    except SplitError as exc:
        run.add("extract_split", False, {"error": type(exc).__name__, "message": str(exc)})
        run.exit_code = EXIT_FAIL
        return None


def _validate(cfg, run):
    P = _load(cfg, run)
    reports = validate_all(P)
    for r in reports:
        run.add(getattr(r, "axiom_id", getattr(r, "name", "check")), r.passed, r.to_dict())
    if not all(r.passed for r in reports):
        run.exit_code = EXIT_FAIL


def _split_cmd(cfg, run):
    P = _load(cfg, run)
    S = _split(P, run)
    if S is None:
        return
    run.add("extract_split", True, S.to_dict())
    prop = check_space_closure(S)
    run.add(prop.name, prop.passed, prop.to_dict())
    sym = check_symmetry(S)
    run.add(sym.name, sym.passed, sym.to_dict())
    if not prop.passed:
        run.exit_code = EXIT_FAIL


def _decompose(cfg, run, S=None):
    if S is None:
        P = _load(cfg, run)
        S = _split(P, run)
        if S is None:
            return None
    out = []
    if cfg.target in ("L", "both"):
        out.append(decompose_L(S, cfg.mode))
    if cfg.target in ("A", "both"):
        out.append(decompose_A(S))
    for d in out:
        run.add(f"decompose_{d.target}", d.passed, d.to_dict())
        if not d.passed:
            run.exit_code = EXIT_FAIL
    return S


def _analyze(cfg, run):
    P = _load(cfg, run)
    S = _split(P, run)
    if S is None:
        return
    rad = radicals(P)
    run.add("radicals", True, rad.to_dict(P.L.basis.names, P.A.basis.names))
    _decompose(RunConfig("decompose", cfg.path, cfg.mode, "both"), run, S)
    tight = check_tight(S)
    run.add(tight.name, tight.passed, tight.to_dict())
    pr = pairing(S, cfg.mode)
    run.add(pr.name, pr.passed, pr.to_dict())
    if tight.passed and not pr.passed:
        run.exit_code = EXIT_FAIL
    for r in (check_maximal_length(S), check_root_multiplicative(S)):
        run.add(r.name, r.passed, r.to_dict())
    probe = simplicity_probe(S, mode=cfg.mode)
    run.add(probe.name, probe.passed, probe.to_dict())
    if not probe.passed:
        run.exit_code = EXIT_FAIL


def _builtin(cfg, run):
    if cfg.name not in BUILTIN_NAMES:
        raise _InputFailure(f"unknown builtin {cfg.name!r}; choose from {', '.join(BUILTIN_NAMES)}")
    text = emit_pair(builtin(cfg.name))
    if cfg.emit_path:
        Path(cfg.emit_path).write_text(text, encoding="utf-8")
        run.add("emit", True, {"name": cfg.name, "path": cfg.emit_path,
                               "digest": "sha256:" + hashlib.sha256(text.encode()).hexdigest()})
    else:
        sys.stdout.write(text)
        return True
    return False


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rinehart", description="Validate and decompose split 3-Lie-Rinehart color algebras.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def with_json(sp):
        sp.add_argument("--json", dest="json_path", metavar="PATH", help="also write the machine-readable report here")
        return sp

    with_json(sub.add_parser("validate", help="check every axiom")).add_argument("path")
    with_json(sub.add_parser("split", help="extract roots and weights from the declared Cartan")).add_argument("path")
    for name, help_ in (("decompose", "class ideals and decompositions"), ("analyze", "radicals, tightness, pairing, probes")):
        sp = with_json(sub.add_parser(name, help=help_))
        sp.add_argument("path")
        sp.add_argument("--mode", choices=("strict", "verbatim"), default="strict")
        if name == "decompose":
            sp.add_argument("--target", choices=("L", "A", "both"), default="both")
    sp = with_json(sub.add_parser("builtin", help="write a builtin example as an algebra file"))
    sp.add_argument("name")
    sp.add_argument("--emit", dest="emit_path", metavar="PATH")
    return p


def _print_summary(run: RunReport) -> None:
    for name, passed, payload in run.reports:
        mark = "PASS" if passed else "FAIL"
        print(f"[{mark}] {name}")
        if name == "extract_split" and passed:
            for r in payload["roots"]:
                print(f"    root {r['root']}: {', '.join(r['basis'])}")
            for w in payload["weights"]:
                print(f"    weight {w['weight']}: {', '.join(w['basis'])}")
            print(f"    Pi^g: {payload['Pi_g']}")
            print(f"    Lambda^g: {payload['Lam_g']}")
        elif name.startswith("decompose_"):
            acc = payload["dimension_accounting"]
            print(f"    mode={payload['mode']} classes={len(payload['ideals'])} "
                  f"dim complement={acc['dim_complement']} ideal dims={acc['dims_ideals']} "
                  f"directness={payload['directness']['verdict']}")
        elif isinstance(payload, dict) and payload.get("violations"):
            print(f"    {len(payload['violations'])} violations, first: {payload['violations'][0]}")
        elif name == "extract_split":
            print(f"    {payload['error']}: {payload['message']}")
    print(f"exit {run.exit_code}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        path=getattr(args, "path", None),
        mode=getattr(args, "mode", "strict"),
        target=getattr(args, "target", "both"),
        json_path=getattr(args, "json_path", None),
        emit_path=getattr(args, "emit_path", None),
        name=getattr(args, "name", None),
    )
    flags = {k: v for k, v in asdict(cfg).items() if k not in ("json_path",)}
    run = RunReport(__version__, None, flags)
    quiet = False
    try:
        if cfg.command == "validate":
            _validate(cfg, run)
        elif cfg.command == "split":
            _split_cmd(cfg, run)
        elif cfg.command == "decompose":
            _decompose(cfg, run)
        elif cfg.command == "analyze":
            _analyze(cfg, run)
        elif cfg.command == "builtin":
            quiet = _builtin(cfg, run)
    except _InputFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        run.exit_code = EXIT_INPUT
        run.add("input", False, {"error": str(exc)})
    if not quiet:
        _print_summary(run)
    if cfg.json_path:
        Path(cfg.json_path).write_text(json.dumps(run.to_dict(), indent=2) + "\n", encoding="utf-8")
    return run.exit_code


if __name__ == "__main__":
    sys.exit(main())
