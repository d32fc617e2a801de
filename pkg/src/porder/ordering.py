"""p-orderings: the result type and the definitional (naive) engine."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ._validation import check_elements
from .arith import INFINITY, PAdicContext, Valuation, valuation
from .errors import DuplicateError, ParseError


class TieBreak(enum.Enum):
    SMALLEST = "min"
    LARGEST = "max"
    FIRST_SEEN = "first"

    @classmethod
    def coerce(cls, tie) -> "TieBreak":
        if isinstance(tie, cls):
            return tie
        try:
            return cls(tie)
        except ValueError:
            raise ParseError(f"unknown tie-break policy {tie!r}") from None


@dataclass(frozen=True)
class POrdering:
    """Ordered elements with their p-sequence stored as exponents.

    ``pseq[i]`` is v_p of the product of ``elements[i] - elements[j]`` over
    ``j < i``; the multiplicative value is ``p ** pseq[i]``.
    """

    elements: Tuple[int, ...]
    pseq: Tuple[int, ...]
    ctx: PAdicContext

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(zip(self.elements, self.pseq))

    def __getitem__(self, i):
        return self.elements[i], self.pseq[i]


def p_value(x: int, prefix: Sequence[int], p: int) -> Valuation:
    """v_p of the product of ``x - a`` over the prefix, summed as exponents."""
    total = 0
    for a in prefix:
        if a == x:
            raise DuplicateError(f"{x} already occurs in the prefix")
        total += valuation(x - a, p)
    return total


def _updater(p: int):
    # specialised inner loops; this is where the naive engine spends its time
    if p == 2:
        def update(pv, rest, chosen):
            for i, x in enumerate(rest):
                d = x - chosen
                pv[i] += ((d & -d).bit_length() - 1)
    else:
        def update(pv, rest, chosen):
            for i, x in enumerate(rest):
                d = x - chosen
                if d % p:
                    continue
                v = 0
                while d % p == 0:
                    d //= p
                    v += 1
                pv[i] += v
    return update


def naive_p_ordering(elements: Iterable[int], ctx: PAdicContext, tie="min") -> POrdering:
    """p-ordering straight from the definition.

    Every step scans all remaining candidates and takes one with the smallest
    p-value. Candidate p-values are accumulated as the prefix grows, so each
    step costs one valuation per candidate. ``tie`` picks among minimisers:
    ``"min"``/``"max"`` by value, ``"first"`` by input position.
    """
    tie = TieBreak.coerce(tie)
    S = check_elements(elements, ctx)
    if tie is TieBreak.SMALLEST:
        rest = sorted(S)
    elif tie is TieBreak.LARGEST:
        rest = sorted(S, reverse=True)
    else:
        rest = list(S)
    update = _updater(ctx.p)
    pv = [0] * len(rest)
    out: List[int] = []
    seq: List[int] = []
    while rest:
        i = min(range(len(rest)), key=pv.__getitem__)
        chosen = rest.pop(i)
        seq.append(pv.pop(i))
        out.append(chosen)
        update(pv, rest, chosen)
    return POrdering(tuple(out), tuple(seq), ctx)


def pseq_of(elements: Sequence[int], p: int) -> List[int]:
    """Recompute the p-sequence of a given order by direct products."""
    seq = []
    for i, x in enumerate(elements):
        prod = 1
        for a in elements[:i]:
            prod *= x - a
        v = valuation(prod, p)
        if v == INFINITY:
            raise DuplicateError(f"{x} repeats")
        seq.append(v)
    return seq


def is_p_ordering(elements: Sequence[int], p: int) -> bool:
    """True when every term minimises the p-value among the terms after it."""
    elements = list(elements)
    if len(set(elements)) != len(elements):
        return False
    rest = elements[:]
    pv = [0] * len(rest)
    update = _updater(p)
    while rest:
        if pv[0] != min(pv):
            return False
        chosen = rest.pop(0)
        pv.pop(0)
        update(pv, rest, chosen)
    return True
