"""Text formats for sets, representative-root lists and orderings.

Set file::

    p 2 k 3
    0
    5        # comment

Root file: same header, one ``beta+p^e*`` per line (``1+2^1*``); a bare
``beta`` is the singleton with ``e = k``.
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Iterable, List, Tuple, Union

from .arith import PAdicContext
from .errors import DuplicateError, OutOfRangeError, ParseError
from .ordering import POrdering
from .reproots import MinimalRep, RepRoot, canonicalize, normalize_root_list

_HEADER = re.compile(r"^p\s+(\d+)\s+k\s+(\d+)$")
_ROOT = re.compile(r"^(\d+)(?:\+(\d+)\^(\d+)\*)?$")

Source = Union[str, Path]


def _lines(source: Source) -> List[Tuple[int, str]]:
    if isinstance(source, Path):
        text = source.read_text()
    else:
        text = source
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def parse_header(line: str) -> PAdicContext:
    m = _HEADER.match(line)
    if not m:
        raise ParseError(f"malformed header {line!r}, expected 'p <p> k <k>'")
    return PAdicContext(int(m.group(1)), int(m.group(2)))


def _split_header(source: Source):
    lines = _lines(source)
    if not lines:
        raise ParseError("missing header line")
    return parse_header(lines[0][1]), lines[1:]


def parse_set_file(source: Source) -> Tuple[PAdicContext, List[int]]:
    """Read a set file. ``source`` is a Path or the text itself."""
    ctx, body = _split_header(source)
    elements = []
    seen = set()
    for lineno, line in body:
        if not line.isdigit():
            raise ParseError(f"line {lineno}: {line!r} is not a decimal element")
        a = int(line)
        if a >= ctx.modulus:
            raise OutOfRangeError(f"line {lineno}: {a} >= {ctx.p}^{ctx.k}")
        if a in seen:
            raise DuplicateError(f"line {lineno}: duplicate element {a}")
        seen.add(a)
        elements.append(a)
    return ctx, elements


def parse_root(text: str, ctx: PAdicContext) -> RepRoot:
    m = _ROOT.match(text.replace(" ", ""))
    if not m:
        raise ParseError(f"malformed representative root {text!r}")
    beta = int(m.group(1))
    if beta >= ctx.modulus:
        raise OutOfRangeError(f"beta {beta} >= {ctx.p}^{ctx.k}")
    if m.group(2) is None:
        return canonicalize(beta, ctx.k, ctx)
    if int(m.group(2)) != ctx.p:
        raise ParseError(f"{text!r} uses base {m.group(2)}, header says p={ctx.p}")
    e = int(m.group(3))
    if e > ctx.k:
        raise OutOfRangeError(f"exponent {e} > k={ctx.k}")
    return canonicalize(beta, e, ctx)


def parse_reproot_file(source: Source, normalize: bool = True) -> Tuple[PAdicContext, List[RepRoot]]:
    ctx, body = _split_header(source)
    roots = []
    for lineno, line in body:
        try:
            roots.append(parse_root(line, ctx))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if normalize:
        roots = normalize_root_list(roots, ctx)
    return ctx, roots


def parse_inline(text: str) -> List[int]:
    """``"1,2,3"`` to ``[1, 2, 3]``."""
    items = [t.strip() for t in text.split(",") if t.strip()]
    for t in items:
        if not t.isdigit():
            raise ParseError(f"{t!r} is not a decimal element")
    return [int(t) for t in items]


def header(ctx: PAdicContext) -> str:
    return f"p {ctx.p} k {ctx.k}"


def format_set(ctx: PAdicContext, elements: Iterable[int]) -> str:
    return "\n".join([header(ctx), *map(str, elements)]) + "\n"


def format_roots(ctx: PAdicContext, roots: Iterable[RepRoot]) -> str:
    if isinstance(roots, MinimalRep):
        roots = roots.roots
    return "\n".join([header(ctx), *map(str, roots)]) + "\n"


WP_BITS = 4096


def _wp(ctx: PAdicContext, exponent: int, cap_bits: int):
    # p**exponent has more than exponent*(bits(p)-1) bits; skip hopeless powers
    if exponent * (ctx.p.bit_length() - 1) >= cap_bits:
        return None
    value = ctx.p ** exponent
    return value if value.bit_length() <= cap_bits else None


def format_ordering(ordering: POrdering, fmt: str = "text", wp: bool = False, cap_bits: int = WP_BITS) -> str:
    """``index value pseq_exponent`` lines, or the same fields as JSON lines.

    With ``wp`` a fourth column holds ``p**pseq`` when it fits ``cap_bits``
    bits, and ``-`` otherwise.
    """
    ctx = ordering.ctx
    lines = []
    for i, (x, v) in enumerate(ordering):
        if fmt == "json":
            rec = {"index": i, "value": str(x), "pseq": v}
            if wp:
                w = _wp(ctx, v, cap_bits)
                rec["wp"] = None if w is None else str(w)
            lines.append(json.dumps(rec))
        else:
            row = f"{i} {x} {v}"
            if wp:
                w = _wp(ctx, v, cap_bits)
                row += f" {'-' if w is None else w}"
            lines.append(row)
    return "\n".join(lines) + "\n"
