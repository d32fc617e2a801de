"""Command-line entry point: ``porder <command> [options]``.

Commands: order, order-rep, minimize, rootsets, verify, bench. Domain errors
exit with status 3 and print ``error: <Code>: <message>`` on stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from ._validation import check_elements
from .arith import PAdicContext
from .checks import bench, run_suites
from .errors import LengthError, PAdicError, ParseError
from .fast import fast_p_ordering
from .formats import (
    WP_BITS,
    format_ordering,
    format_roots,
    parse_inline,
    parse_reproot_file,
    parse_root,
    parse_set_file,
)
from .ordering import TieBreak, naive_p_ordering
from .rep import rep_p_ordering
from .reproots import expand_cap, minimal_representation, normalize_root_list
from .rootsets import brute_force_root_sets, classify_root_sets, count_root_sets, residue_slices, total_root_sets

COMMANDS = ("order", "order-rep", "minimize", "rootsets", "verify", "bench")
ERROR_STATUS = 3


@dataclass
class JobSpec:
    command: str
    p: Optional[int] = None
    k: Optional[int] = None
    input: Optional[Path] = None
    inline: Optional[str] = None
    length: Optional[int] = None
    engine: str = "fast"
    tie: str = "min"
    format: str = "text"
    seed: int = 0
    cap: int = WP_BITS
    wp: bool = False
    j: Optional[int] = None
    oracle: bool = False
    trials: int = 50
    sizes: List[int] = field(default_factory=list)
    repeat: int = 3

    def context(self) -> PAdicContext:
        if self.p is None or self.k is None:
            raise ParseError("--p and --k are required with --inline")
        return PAdicContext(self.p, self.k)

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ParseError(f"unknown command {self.command!r}")
        if self.length is not None and self.length < 1:
            raise LengthError("--length must be at least 1")
        TieBreak.coerce(self.tie)
        if self.format not in ("text", "json"):
            raise ParseError(f"unknown format {self.format!r}")


def _load_set(job: JobSpec):
    if job.input is not None:
        ctx, elements = parse_set_file(job.input)
        if (job.p, job.k) != (None, None) and (job.p, job.k) != (ctx.p, ctx.k):
            raise ParseError(f"--p/--k disagree with the file header p={ctx.p} k={ctx.k}")
        return ctx, elements
    if job.inline is None:
        raise ParseError("give --input FILE or --inline LIST")
    ctx = job.context()
    elements = parse_inline(job.inline)
    return ctx, list(check_elements(elements, ctx))


def _load_roots(job: JobSpec):
    if job.input is not None:
        return parse_reproot_file(job.input)
    if job.inline is None:
        raise ParseError("give --input FILE or --inline LIST")
    ctx = job.context()
    roots = [parse_root(t.strip(), ctx) for t in job.inline.split(",") if t.strip()]
    return ctx, normalize_root_list(roots, ctx)


def _order(job: JobSpec) -> str:
    ctx, elements = _load_set(job)
    if job.engine == "naive":
        result = naive_p_ordering(elements, ctx, job.tie)
    else:
        result = fast_p_ordering(elements, ctx)
    if job.length is not None:
        if job.length > len(result):
            raise LengthError(f"--length {job.length} exceeds the set size {len(result)}")
        result = type(result)(result.elements[: job.length], result.pseq[: job.length], ctx)
    return format_ordering(result, job.format, job.wp, job.cap)


def _order_rep(job: JobSpec) -> str:
    ctx, roots = _load_roots(job)
    n = job.length
    if n is None:
        n = sum(r.cardinality for r in roots)
        if n > expand_cap():
            raise LengthError(f"the set has {n} elements; pass --length")
    return format_ordering(rep_p_ordering(roots, n, ctx), job.format, job.wp, job.cap)


def _minimize(job: JobSpec) -> str:
    ctx, elements = _load_set(job)
    rep = minimal_representation(elements, ctx)
    if job.format == "json":
        lines = [json.dumps({"p": ctx.p, "k": ctx.k})]
        lines += [json.dumps({"beta": str(r.beta), "e": r.e}) for r in rep]
        return "\n".join(lines) + "\n"
    return format_roots(ctx, rep)


def _rootsets(job: JobSpec) -> str:
    ctx = job.context()
    residues = range(ctx.p) if job.j is None else [job.j]
    lines = []
    for j in residues:
        for c in classify_root_sets(ctx, j):
            members = sorted(c.materialize())
            if job.format == "json":
                lines.append(json.dumps({
                    "shape": c.shape, "j": j, "params": list(c.params),
                    "set": [str(x) for x in members],
                }))
            else:
                params = ",".join(map(str, c.params))
                body = ",".join(map(str, members))
                lines.append(f"shape={c.shape} j={j} params=({params}) set={{{body}}}")
    count, total = count_root_sets(ctx.p, ctx.k), total_root_sets(ctx.p, ctx.k)
    summary = {"count": count, "total": total}
    if job.oracle:
        family = brute_force_root_sets(ctx)
        slices = residue_slices(family, ctx)
        summary["oracle_count"] = len(slices[residues[0]])
        summary["oracle_total"] = len(family)
    for key, value in summary.items():
        lines.append(json.dumps({key: value}) if job.format == "json" else f"{key} {value}")
    return "\n".join(lines) + "\n"


def _verify(job: JobSpec) -> Tuple[int, str]:
    results = run_suites(job.seed, job.trials)
    lines = []
    for name, failures in results.items():
        if failures:
            lines.append(f"FAIL {name} ({len(failures)} failing cases; first: {failures[0]})")
        else:
            lines.append(f"PASS {name}")
    status = 0 if all(not f for f in results.values()) else 1
    return status, "\n".join(lines) + "\n"


def _bench(job: JobSpec) -> str:
    p = job.p if job.p is not None else 2
    k = job.k if job.k is not None else 16
    sizes = job.sizes or [job.length or 2000]
    rows = bench(sizes, p, k, job.seed, repeat=job.repeat)
    lines = ["engine,n,p,k,millis"]
    lines += [f"{e},{n},{pp},{kk},{ms:.3f}" for e, n, pp, kk, ms in rows]
    return "\n".join(lines) + "\n"


def run(job: JobSpec) -> Tuple[int, str]:
    """Execute one job; returns ``(exit_status, report)``. Raises PAdicError."""
    job.validate()
    if job.command == "verify":
        return _verify(job)
    handler = {
        "order": _order,
        "order-rep": _order_rep,
        "minimize": _minimize,
        "rootsets": _rootsets,
        "bench": _bench,
    }[job.command]
    return 0, handler(job)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="porder", description="p-orderings, representative roots and root sets modulo p^k.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--input", type=Path, metavar="FILE")
    common.add_argument("--inline", metavar="LIST", help="comma-separated elements or roots")
    common.add_argument("--length", type=int, metavar="N")
    common.add_argument("--tie", choices=[t.value for t in TieBreak], default="min")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap", type=int, default=WP_BITS, metavar="BITS",
                        help="largest p**pseq printed by --wp, in bits")
    common.add_argument("--wp", action="store_true", help="also print p**pseq")

    sub = parser.add_subparsers(dest="command", required=True)
    order = sub.add_parser("order", parents=[common], help="p-ordering of an explicit set")
    order.add_argument("--engine", choices=("fast", "naive"), default="fast")
    sub.add_parser("order-rep", parents=[common], help="p-ordering from representative roots")
    sub.add_parser("minimize", parents=[common], help="minimal representative-root form of a set")
    rs = sub.add_parser("rootsets", parents=[common], help="root-set classes for k in 2..4")
    rs.add_argument("--j", type=int, help="only this residue class")
    rs.add_argument("--oracle", action="store_true", help="also count with the brute-force oracle")
    ver = sub.add_parser("verify", parents=[common], help="run the oracle-equivalence suites")
    ver.add_argument("--trials", type=int, default=50)
    b = sub.add_parser("bench", parents=[common], help="naive vs fast timing as CSV")
    b.add_argument("--sizes", help="comma-separated n values (default: --length or 2000)")
    b.add_argument("--repeat", type=int, default=3, help="runs per engine; the best is reported")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    opts = vars(args)
    if opts.get("sizes"):
        opts["sizes"] = [int(s) for s in opts["sizes"].split(",")]
    job = JobSpec(**{k: v for k, v in opts.items() if v is not None})
    try:
        status, report = run(job)
    except PAdicError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return ERROR_STATUS
    sys.stdout.write(report)
    return status


if __name__ == "__main__":
    sys.exit(main())
