"""Command-line front end: ``bianchi-acb {catalog,classify,report,verify}``.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input or
unreadable file, 3 incompatible structure or inadmissible F, 4 bracket
table failing the Jacobi identity.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .f_tensor import LeeFormMismatch, NotAdmissible, class_label_text
from .lie_algebra import (
    BianchiId,
    JacobiError,
    LieAlgebraError,
    StructureConstants,
    catalog_algebra,
    catalog_ids,
    normalize_type,
    thurston_geometry,
)
from .report import (
    Analysis,
    InternalInconsistency,
    analyze,
    classification_json,
    classification_text,
    dumps,
    render_text,
)
from .scalar import Scalar, ScalarError, parse_rational
from .structure import AcbStructure, StructureError
from .verify import Check, run_checks, summarize

__all__ = ["RunConfig", "InputError", "main", "build_parser", "load_input", "config_from_args"]

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_INADMISSIBLE = 3
EXIT_JACOBI = 4

COMMANDS = ("catalog", "classify", "report", "verify")


class InputError(ValueError):
    """Bad command line or input file."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    target: BianchiId | None = None
    h: str | None = None
    input_path: Path | None = None
    format: str = "text"
    out: Path | None = None

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.format not in ("json", "text"):
            raise InputError(f"unknown format {self.format!r}")
        if self.target is not None and self.input_path is not None:
            raise InputError("--input and --type are mutually exclusive")
        if self.h is not None and self.input_path is not None:
            raise InputError("--h applies to catalog targets only")


def _parse_h(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"--h expects a rational number such as -1/5, got {text!r}") from exc


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    target = None
    if ns.command in ("classify", "report"):
        if ns.type is None and ns.input is None:
            raise InputError(f"{ns.command} needs --type or --input")
    if getattr(ns, "type", None) is not None:
        if ns.input is not None:
            raise InputError("--input and --type are mutually exclusive")
        try:
            t = normalize_type(ns.type)
            h = None if ns.h is None else _parse_h(ns.h)
            target = BianchiId(t, ns.subtype, h)
        except LieAlgebraError as exc:
            raise InputError(str(exc)) from exc
    elif getattr(ns, "h", None) is not None and ns.input is None:
        raise InputError("--h needs --type VI_h or VII_h")
    return RunConfig(
        command=ns.command,
        target=target,
        h=getattr(ns, "h", None),
        input_path=None if getattr(ns, "input", None) is None else Path(ns.input),
        format=ns.format,
        out=None if ns.out is None else Path(ns.out),
    )


# custom input ---------------------------------------------------------------------


_BRACKET_KEYS = ("e1e2", "e2e3", "e3e1")


def _algebra_from_json(data: dict, name: str) -> StructureConstants:
    if "c" in data:
        return StructureConstants.from_json(data, name=name)
    if "brackets" in data:
        b = data["brackets"]
        if not isinstance(b, dict) or any(k not in _BRACKET_KEYS for k in b):
            raise InputError(f'"brackets" takes the keys {", ".join(_BRACKET_KEYS)}')
        vecs = []
        for key in _BRACKET_KEYS:
            v = b.get(key, [0, 0, 0])
            if not isinstance(v, list) or len(v) != 3:
                raise InputError(f'bracket "{key}" must be a list of three coefficients')
            vecs.append([Scalar.from_json(x) for x in v])
        return StructureConstants.from_brackets(*vecs, name=data.get("name", name))
    raise InputError('input needs a "c" array or a "brackets" object')


def load_input(path: Path) -> tuple[StructureConstants, AcbStructure | None]:
    """Parse a custom algebra file, optionally with its own structure."""
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    try:
        sc = _algebra_from_json(data, path.stem)
        structure = None
        if "structure" in data:
            structure = AcbStructure.from_json(data["structure"])
    except StructureError:
        raise
    except (LieAlgebraError, ScalarError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"{path}: {exc}") from exc
    return sc, structure


def load_overrides(path: Path) -> dict[str, StructureConstants]:
    """Row label -> replacement algebra, for running the checklist on a modified catalog."""
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected an object mapping row labels to algebras")
    labels = {bid.label for bid in catalog_ids()}
    out = {}
    for label, entry in data.items():
        if label not in labels:
            raise InputError(f"{path}: unknown catalog row {label!r}")
        if not isinstance(entry, dict):
            raise InputError(f"{path}: {label}: expected an object")
        try:
            out[label] = _algebra_from_json(entry, label)
        except (LieAlgebraError, ScalarError, TypeError) as exc:
            raise InputError(f"{path}: {label}: {exc}") from exc
    return out


# commands ---------------------------------------------------------------------------


def _analysis(cfg: RunConfig) -> Analysis:
    if cfg.input_path is not None:
        sc, structure = load_input(cfg.input_path)
        return analyze(sc, structure=structure)
    assert cfg.target is not None
    return analyze(cfg.target)


def cmd_catalog(cfg: RunConfig) -> tuple[str, int]:
    rows = []
    for bid in catalog_ids():
        sc = catalog_algebra(bid)
        fams = analyze(sc, domain=bid.domain).label.ordered
        rows.append(
            {
                "row": bid.label,
                "type": bid.type,
                "subtype": bid.subtype,
                "brackets": sc.bracket_lines(),
                "thurston": thurston_geometry(bid.type),
                "class": list(fams),
                "label": class_label_text(fams),
            }
        )
    if cfg.format == "json":
        return dumps({"rows": rows}), EXIT_OK
    lines = []
    for r in rows:
        geo = f"  [{r['thurston']}]" if r["thurston"] else ""
        lines.append(f"{r['row']:<14} {', '.join(r['brackets'])}  {r['label']}{geo}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_classify(cfg: RunConfig) -> tuple[str, int]:
    a = _analysis(cfg)
    if cfg.format == "json":
        doc = classification_json(a)
        if a.warnings:
            doc["warnings"] = a.warnings
        return dumps(doc), EXIT_OK
    text = classification_text(a)
    text += "".join(f"warning: {w}\n" for w in a.warnings)
    return text, EXIT_OK


def cmd_report(cfg: RunConfig) -> tuple[str, int]:
    a = _analysis(cfg)
    if cfg.format == "json":
        return dumps(a.to_json()), EXIT_OK
    return render_text(a), EXIT_OK


def _check_json(c: Check) -> dict:
    return {
        "name": c.name,
        "group": c.group,
        "passed": c.passed,
        "expected": c.expected,
        "computed": c.computed,
    }


def _patched_catalog(overrides: dict[str, StructureConstants]):
    def catalog(bid: BianchiId) -> StructureConstants:
        sc = overrides.get(BianchiId(bid.type, bid.subtype).label)
        if sc is None:
            return catalog_algebra(bid)
        return sc if bid.h is None else sc.specialize(bid.h)

    return catalog


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    catalog = catalog_algebra
    if cfg.input_path is not None:
        catalog = _patched_catalog(load_overrides(cfg.input_path))
    checks = run_checks(catalog)
    failed = [c for c in checks if not c.passed]
    code = EXIT_MISMATCH if failed else EXIT_OK
    if cfg.format == "json":
        doc = {
            "checks": [_check_json(c) for c in checks],
            "summary": summarize(checks),
            "passed": not failed,
        }
        return dumps(doc), code
    lines = [f"{'pass' if c.passed else 'FAIL'}  {c.name}" for c in checks]
    if failed:
        lines.append("")
        lines.append("mismatches (expected vs computed):")
        for c in failed:
            lines.append(f"  {c.name}")
            lines.append(f"    expected: {c.expected}")
            lines.append(f"    computed: {c.computed}")
    lines.append("")
    lines += summarize(checks)
    lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks pass")
    return "\n".join(lines) + "\n", code


HANDLERS = {
    "catalog": cmd_catalog,
    "classify": cmd_classify,
    "report": cmd_report,
    "verify": cmd_verify,
}


# entry point ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bianchi-acb",
        description="Almost contact B-metric structures on three-dimensional Lie groups.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, target: bool, input_help: str | None) -> None:
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        if target:
            sp.add_argument("--type", help="Bianchi type: I, II, ..., IX; VI_h/VII_h may be written VI/VII")
            sp.add_argument("--subtype", type=int, default=1, help="row of the catalog (default 1)")
            sp.add_argument("--h", help="rational parameter for VI_h/VII_h; symbolic when omitted")
        else:
            sp.set_defaults(type=None, subtype=1, h=None)
        if input_help:
            sp.add_argument("--input", metavar="FILE", help=input_help)
        else:
            sp.set_defaults(input=None)

    common(sub.add_parser("catalog", help="list the catalog rows"), False, None)
    custom = "custom algebra JSON (see README)"
    common(sub.add_parser("classify", help="class of the canonical structure"), True, custom)
    common(sub.add_parser("report", help="connection, F, curvature and predicates"), True, custom)
    common(
        sub.add_parser("verify", help="re-derive the published values"),
        False,
        "JSON object mapping catalog row labels to replacement algebras",
    )
    return p


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        out.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {out}: {exc}") from exc


def _glue_negative_h(argv: Sequence[str]) -> list[str]:
    # argparse reads "-1/5" as an option; "--h -1/5" is the natural spelling
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--h":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--h={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = _glue_negative_h(sys.argv[1:] if argv is None else argv)
    try:
        ns = parser.parse_args(args)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        cfg = config_from_args(ns)
        text, code = HANDLERS[cfg.command](cfg)
        if cfg.target is not None and cfg.target.h is not None and not cfg.target.in_domain():
            print(f"warning: h = {cfg.h} lies outside {cfg.target.domain}", file=sys.stderr)
        _emit(text, cfg.out)
        return code
    except JacobiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_JACOBI
    except (StructureError, NotAdmissible) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except (InputError, LieAlgebraError, ScalarError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InternalInconsistency, LeeFormMismatch) as exc:  # pragma: no cover
        print(f"internal error: {exc}", file=sys.stderr)
        return 70


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
