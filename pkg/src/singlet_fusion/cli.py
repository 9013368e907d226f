"""Batch command-line front end.

Subcommands:

``fuse``     one fusion product, closed form and/or recursion oracle;
``table``    the full fusion table over a label window, TSV or JSON;
``verify``   the invariant suites of every layer, with a JSON report;
``induce``   induction of one singlet label to the triplet side.

Labels are written ``KIND:r,s`` with ``KIND`` in ``{M, P, F, FJ}`` (Jordan
Fock labels take a third component, ``FJ:r,s,n``).  Output is JSON on
stdout unless ``--format tsv`` or ``--out`` says otherwise; diagnostics go
to stderr.  Exit codes: 0 success, 2 usage or validation failure, 3
verification failure or engine mismatch.  Runs are deterministic: row
order is lexicographic, floats are printed with 12 significant digits, and
nothing is randomized (the ``SINGLET_FUSION_SEED`` environment variable is
reserved but unused).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from . import catalog, fusion_closed, fusion_oracle, triplet, verify
from .catalog import FormalSum, Indecomposable
from .fusion_closed import UnsupportedFusion
from .labels import Params

__all__ = ["main", "entrypoint", "parse_label", "format_sum", "format_float"]

SCHEMA = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3


class LabelSyntaxError(ValueError):
    pass


def parse_label(params: Params, text: str) -> Indecomposable:
    """Parse ``KIND:r,s[,n]`` into a normalized label."""
    try:
        kind, _, rest = text.partition(":")
        parts = [int(v) for v in rest.split(",")]
    except ValueError as exc:
        raise LabelSyntaxError(f"cannot parse label {text!r}: {exc}") from None
    if kind == catalog.JORDAN_FOCK:
        if len(parts) != 3:
            raise LabelSyntaxError(f"label {text!r}: FJ takes r,s,n")
        r, s, n = parts
        if s != params.p:
            raise LabelSyntaxError(f"label {text!r}: Jordan Fock labels need s = p")
        return catalog.jordan_fock(params, r, n)
    if len(parts) != 2:
        raise LabelSyntaxError(f"label {text!r}: expected KIND:r,s")
    r, s = parts
    try:
        if kind == catalog.SIMPLE:
            return catalog.simple(params, r, s)
        if kind == catalog.PROJECTIVE:
            return catalog.projective(params, r, s)
        if kind == catalog.FOCK:
            return catalog.fock(params, r, s)
    except ValueError as exc:
        raise LabelSyntaxError(f"label {text!r}: {exc}") from None
    raise LabelSyntaxError(f"label {text!r}: unknown kind {kind!r}")


def _term_dict(label: Indecomposable, mult: int) -> Dict[str, object]:
    out: Dict[str, object] = {"kind": label.kind, "r": label.r, "s": label.s}
    if label.kind == catalog.JORDAN_FOCK:
        out["n"] = label.n
    out["mult"] = mult
    return out


def format_sum(total: FormalSum) -> str:
    """Compact deterministic rendering, e.g. ``2*M:1,1 + P:0,1``."""
    return str(total)


def format_float(value: float) -> str:
    """Fixed 12-significant-digit rendering used for any float output."""
    return format(float(value), ".12g")


def _emit(payload: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload)
            if not payload.endswith("\n"):
                fh.write("\n")
    else:
        sys.stdout.write(payload)
        if not payload.endswith("\n"):
            sys.stdout.write("\n")


def _json(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def _fuse_with_engine(
    params: Params, engine: str, left: Indecomposable, right: Indecomposable
) -> Tuple[FormalSum, Optional[FormalSum]]:
    closed = oracle = None
    if engine in ("closed", "both"):
        closed = fusion_closed.fuse(params, left, right)
    if engine in ("oracle", "both"):
        kinds = (left.kind, right.kind)
        if kinds == (catalog.SIMPLE, catalog.SIMPLE):
            oracle = fusion_oracle.oracle_fuse_mm(params, left, right)
        elif left.kind == catalog.PROJECTIVE and right.kind in (
            catalog.SIMPLE,
            catalog.PROJECTIVE,
        ):
            oracle = fusion_oracle.oracle_fuse_p(params, left, right)
        elif right.kind == catalog.PROJECTIVE and left.kind == catalog.SIMPLE:
            oracle = fusion_oracle.oracle_fuse_p(params, right, left)
        else:
            raise UnsupportedFusion(
                f"the recursion oracle covers M/P labels only, got {left} x {right}"
            )
    return closed, oracle


def _cmd_fuse(args: argparse.Namespace) -> int:
    params = Params(args.p)
    left = parse_label(params, args.left)
    right = parse_label(params, args.right)
    closed, oracle = _fuse_with_engine(params, args.engine, left, right)
    primary = closed if closed is not None else oracle
    doc = {
        "schema": SCHEMA,
        "command": "fuse",
        "p": args.p,
        "engine": args.engine,
        "left": str(left),
        "right": str(right),
        "terms": [_term_dict(lab, mult) for lab, mult in primary],
    }
    code = EXIT_OK
    if args.engine == "both":
        match = closed == oracle
        doc["oracle_terms"] = [_term_dict(lab, mult) for lab, mult in oracle]
        doc["match"] = match
        if not match:
            code = EXIT_VERIFY
    _emit(_json(doc), args.out)
    return code


def _table_labels(params: Params, rmin: int, rmax: int) -> List[Indecomposable]:
    labels = [
        catalog.simple(params, r, s)
        for r in range(rmin, rmax + 1)
        for s in range(1, params.p + 1)
    ] + [
        catalog.projective(params, r, s)
        for r in range(rmin, rmax + 1)
        for s in range(1, params.p)
    ]
    return sorted(labels)


def _cmd_table(args: argparse.Namespace) -> int:
    params = Params(args.p)
    labels = _table_labels(params, args.rmin, args.rmax)
    rows = []
    mismatches = 0

    def one(pair: Tuple[Indecomposable, Indecomposable]):
        left, right = pair
        closed, oracle = _fuse_with_engine(params, args.engine, left, right)
        return left, right, closed, oracle

    pairs = [(a, b) for a in labels for b in labels]
    if args.jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(one, pairs))
    else:
        results = [one(pair) for pair in pairs]
    for left, right, closed, oracle in results:
        primary = closed if closed is not None else oracle
        row = {
            "left": str(left),
            "right": str(right),
            "result": format_sum(primary),
        }
        if args.engine == "both":
            row["match"] = closed == oracle
            mismatches += closed != oracle
        rows.append(row)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "command": "table",
            "p": args.p,
            "engine": args.engine,
            "rows": rows,
        }
        if args.engine == "both":
            doc["mismatches"] = mismatches
        _emit(_json(doc), args.out)
    else:
        header = ["left", "right", "result"] + (
            ["match"] if args.engine == "both" else []
        )
        lines = ["\t".join(header)]
        for row in rows:
            line = [row["left"], row["right"], row["result"]]
            if args.engine == "both":
                line.append("yes" if row["match"] else "NO")
            lines.append("\t".join(line))
        _emit("\n".join(lines), args.out)
    return EXIT_VERIFY if mismatches else EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    try:
        p_values = [int(v) for v in args.p.split(",") if v]
    except ValueError:
        raise LabelSyntaxError(f"cannot parse p list {args.p!r}")
    if not p_values:
        raise LabelSyntaxError("empty p list")
    report = verify.run_suites(names, p_values, rwin=args.rwin, jobs=args.jobs)
    suites_doc = {}
    total_checks = total_failures = 0
    for name, per_p in report.items():
        suites_doc[name] = {}
        for p, (checks, failures) in per_p.items():
            suites_doc[name][str(p)] = {
                "checks": checks,
                "failures": len(failures),
                "messages": failures[:20],
            }
            total_checks += checks
            total_failures += len(failures)
    doc = {
        "schema": SCHEMA,
        "command": "verify",
        "suites": suites_doc,
        "total_checks": total_checks,
        "total_failures": total_failures,
    }
    _emit(_json(doc), args.out)
    return EXIT_VERIFY if total_failures else EXIT_OK


def _cmd_induce(args: argparse.Namespace) -> int:
    params = Params(args.p)
    label = parse_label(params, args.label)
    try:
        induced = triplet.induce(params, label)
    except catalog.UnsupportedOperation as exc:
        raise LabelSyntaxError(str(exc))
    doc = {
        "schema": SCHEMA,
        "command": "induce",
        "p": args.p,
        "input": str(label),
        "kind": induced.kind,
        "rbar": induced.rbar,
        "s": induced.s,
        "extrapolated": triplet.is_extrapolated(params, induced),
    }
    _emit(_json(doc), args.out)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singlet-fusion",
        description="Exact fusion calculator for singlet algebra module categories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fuse = sub.add_parser("fuse", help="fuse two labels")
    fuse.add_argument("--p", type=int, required=True)
    fuse.add_argument("--engine", choices=("closed", "oracle", "both"), default="closed")
    fuse.add_argument("--out", default=None)
    fuse.add_argument("left")
    fuse.add_argument("right")
    fuse.set_defaults(func=_cmd_fuse)

    table = sub.add_parser("table", help="full fusion table over a label window")
    table.add_argument("--p", type=int, required=True)
    table.add_argument("--rmin", type=int, default=-1)
    table.add_argument("--rmax", type=int, default=1)
    table.add_argument("--engine", choices=("closed", "oracle", "both"), default="closed")
    table.add_argument("--format", choices=("tsv", "json"), default="tsv")
    table.add_argument("--jobs", type=int, default=1)
    table.add_argument("--out", default=None)
    table.set_defaults(func=_cmd_table)

    ver = sub.add_parser("verify", help="run invariant suites")
    ver.add_argument(
        "--suite",
        choices=tuple(verify.SUITES) + ("all",),
        default="all",
    )
    ver.add_argument("--p", default="2,3", help="comma-separated p values")
    ver.add_argument("--rwin", type=int, default=3)
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--out", default=None)
    ver.set_defaults(func=_cmd_verify)

    ind = sub.add_parser("induce", help="induce a singlet label to the triplet side")
    ind.add_argument("--p", type=int, required=True)
    ind.add_argument("--out", default=None)
    ind.add_argument("label")
    ind.set_defaults(func=_cmd_induce)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the exit code instead of calling ``sys.exit``."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LabelSyntaxError, UnsupportedFusion, ValueError) as exc:
        print(f"singlet-fusion: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
