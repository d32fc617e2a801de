"""Recursive residue-class p-ordering with a min-heap merge.

Elements congruent to different residues mod p never contribute to each
other's p-values, so the ordering of a set is an interleaving of the
orderings of its residue classes. A class ``S_j`` is ordered like
``(S_j - j) / p`` one level down, and the i-th term's p-value grows by
exactly ``i`` on the way back up. The recursion never materialises the
reduced values; it reads the next base-p digit instead.
"""
from __future__ import annotations

import heapq
import sys
from contextlib import contextmanager
from typing import Iterable, List, Sequence, Tuple

from ._validation import check_elements
from .arith import PAdicContext, residue_split
from .errors import DuplicateError, EmptyInputError, ResidueError
from .ordering import POrdering

Part = Tuple[List[int], List[int]]


def heap_merge(
    parts: Sequence[Tuple[int, List[int], List[int]]], translate: bool = False
) -> Tuple[List[int], List[int], int]:
    """Interleave per-residue orderings by repeated extract-min on p-value.

    ``parts`` holds ``(residue, elements, pvalues)`` triples. A heap node is
    ``(p_value, residue, slot)`` with at most one live node per class, so
    ties go to the smaller residue. With ``translate`` the i-th p-value of
    every class is raised by ``i`` as it is read (the one-level-down shift).
    Returns the merged elements and p-values, plus the largest heap size.
    """
    seen = set()
    elems_of = []
    pvals_of = []
    heap = []
    for residue, elems, pvals in parts:
        if residue in seen:
            raise DuplicateError(f"two inputs for residue class {residue}")
        seen.add(residue)
        if elems:
            heap.append((pvals[0], residue, len(elems_of)))
            elems_of.append(elems)
            pvals_of.append(pvals)
    heapq.heapify(heap)
    peak = len(heap)
    cursor = [0] * len(elems_of)
    step = 1 if translate else 0
    out: List[int] = []
    seq: List[int] = []
    replace, pop = heapq.heapreplace, heapq.heappop
    while len(heap) > 1:
        pv, residue, slot = heap[0]
        pos = cursor[slot]
        elems = elems_of[slot]
        out.append(elems[pos])
        seq.append(pv)
        pos += 1
        cursor[slot] = pos
        if pos < len(elems):
            replace(heap, (pvals_of[slot][pos] + step * pos, residue, slot))
        else:
            pop(heap)
    if heap:
        # a lone class drains in its own order
        slot = heap[0][2]
        pos = cursor[slot]
        out.extend(elems_of[slot][pos:])
        if translate:
            seq.extend(v + i for i, v in enumerate(pvals_of[slot][pos:], pos))
        else:
            seq.extend(pvals_of[slot][pos:])
    return out, seq, peak


def _split(values: List[int], p: int, scale: int):
    if p != 2:
        return residue_split(values, p, scale)
    # binary digit test; scale is a power of two
    one = [a for a in values if a & scale]
    if not one:
        return {0: values}
    if len(one) == len(values):
        return {1: values}
    return {0: [a for a in values if not a & scale], 1: one}


def _order(values: List[int], p: int, scale: int) -> Part:
    # values agree on all digits below position log_p(scale); they are never
    # rewritten, the recursion just looks one digit higher
    if len(values) == 1:
        return values, [0]
    levels = 0
    classes = _split(values, p, scale)
    while len(classes) == 1:
        # shared digit: one more level of scaling, each adds i to p-values
        scale *= p
        levels += 1
        classes = _split(values, p, scale)
    scale *= p
    if len(classes) == len(values):
        # all singletons: residue order, every translated p-value is 0
        elems = [m[0] for m in classes.values()]
        pvals = [levels * i for i in range(len(elems))]
        return elems, pvals
    parts = []
    for j, members in classes.items():
        if len(members) == 1:
            parts.append((j, members, [0]))
        else:
            parts.append((j, *_order(members, p, scale)))
    elems, pvals, _ = heap_merge(parts, translate=True)
    if levels:
        pvals = [v + levels * i for i, v in enumerate(pvals)]
    return elems, pvals


@contextmanager
def _recursion_room(depth: int):
    old = sys.getrecursionlimit()
    need = depth + 200
    if need > old:
        sys.setrecursionlimit(need)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def fast_p_ordering(elements: Iterable[int], ctx: PAdicContext) -> POrdering:
    """Full p-ordering and p-sequence in O(n k log p) digit work."""
    S = check_elements(elements, ctx)
    with _recursion_room(ctx.k):
        elems, pvals = _order(list(S), ctx.p, 1)
    return POrdering(tuple(elems), tuple(pvals), ctx)


def recurse_translate(members: Iterable[int], ctx: PAdicContext) -> POrdering:
    """Order one residue class through the level below.

    ``members`` must share a residue ``j`` mod p. The class is reduced to
    ``(a - j) / p``, ordered at level ``k - 1``, mapped back through
    ``a -> p*a + j`` and the i-th p-value is raised by ``i``.
    """
    S = check_elements(members, ctx)
    p = ctx.p
    residues = {a % p for a in S}
    if len(residues) != 1:
        raise ResidueError(f"elements fall in residues {sorted(residues)}")
    j = residues.pop()
    if len(S) == 1:
        return POrdering(S, (0,), ctx)
    lower = PAdicContext(p, ctx.k - 1)
    sub = fast_p_ordering([(a - j) // p for a in S], lower)
    return POrdering(
        tuple(p * a + j for a in sub.elements),
        tuple(v + i for i, v in enumerate(sub.pseq)),
        ctx,
    )


def merge_orderings(per_residue: Sequence[POrdering], ctx: PAdicContext) -> POrdering:
    """Merge orderings of distinct residue classes of one set."""
    if not per_residue:
        raise EmptyInputError("nothing to merge")
    parts = []
    for o in per_residue:
        if not o.elements:
            continue
        residues = {a % ctx.p for a in o.elements}
        if len(residues) != 1:
            raise ResidueError(f"input mixes residues {sorted(residues)}")
        parts.append((residues.pop(), list(o.elements), list(o.pseq)))
    parts.sort(key=lambda t: t[0])
    elems, pvals, _ = heap_merge(parts)
    return POrdering(tuple(elems), tuple(pvals), ctx)
