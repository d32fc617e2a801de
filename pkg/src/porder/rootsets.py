"""Root sets modulo p^k for small k.

A subset R of Z/p^k is a root set when some polynomial over Z/p^k vanishes
exactly on R. R is a root set iff each residue slice R_j = {r in R : r = j
mod p} is, so it is enough to describe the possible slices. For k <= 4 they
are unions of a few subtrees of the digit trie under j; :func:`classify_root_sets`
walks those case lists and :func:`brute_force_root_sets` recovers the true
family by enumerating every polynomial function on the ring.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Set, Tuple

from .arith import PAdicContext, factorial_valuation
from .errors import ExpansionCapError, OutOfRangeError, UnsupportedLevelError
from .reproots import RepRoot, canonicalize, expand

DEFAULT_FUNCTION_CAP = 1 << 24

# case order for each level; classes are emitted in this order
SHAPES = {
    2: ("FullSubtree", "Singleton", "Empty"),
    3: ("FullSubtree", "TwoSubtreesLevel1", "SubtreeLevel1", "Singleton", "Empty"),
    4: (
        "FullSubtree",
        "ThreeSubtreesLevel1",
        "TwoSubtreesLevel1",
        "SubtreeLevel1",
        "TwoSubtreesLevel2",
        "SubtreeLevel2",
        "Singleton",
        "Empty",
    ),
}


@dataclass(frozen=True)
class RootSetClass:
    """One symbolic residue slice ``R_j``.

    ``params`` are the free base-p digits of the shape. For the multi-subtree
    shapes the level-1 digits are strictly increasing; ``TwoSubtreesLevel2``
    carries ``(a1, a2, b1, b2)`` with ``a1 < a2`` and each ``b`` the level-2
    digit under the matching ``a``.
    """

    shape: str
    params: Tuple[int, ...]
    j: int
    ctx: PAdicContext

    def roots(self) -> List[RepRoot]:
        p, j = self.ctx.p, self.j
        s, a = self.shape, self.params
        if s == "Empty":
            return []
        if s == "FullSubtree":
            return [canonicalize(j, 1, self.ctx)]
        if s in ("SubtreeLevel1", "TwoSubtreesLevel1", "ThreeSubtreesLevel1"):
            return [canonicalize(j + p * x, 2, self.ctx) for x in a]
        if s == "SubtreeLevel2":
            return [canonicalize(j + p * a[0] + p * p * a[1], 3, self.ctx)]
        if s == "TwoSubtreesLevel2":
            a1, a2, b1, b2 = a
            return [
                canonicalize(j + p * a1 + p * p * b1, 3, self.ctx),
                canonicalize(j + p * a2 + p * p * b2, 3, self.ctx),
            ]
        if s == "Singleton":
            beta = j + sum(d * p ** (i + 1) for i, d in enumerate(a))
            return [canonicalize(beta, self.ctx.k, self.ctx)]
        raise ValueError(f"unknown shape {s}")

    def materialize(self) -> FrozenSet[int]:
        return frozenset(x for r in self.roots() for x in expand(r))


def _check_level(k: int) -> None:
    if k not in SHAPES:
        raise UnsupportedLevelError(f"root sets are classified only for k in 2..4, got {k}")


def _shape_params(shape: str, p: int, k: int) -> Iterator[Tuple[int, ...]]:
    digits = range(p)
    if shape in ("FullSubtree", "Empty"):
        yield ()
    elif shape == "SubtreeLevel1":
        yield from ((a,) for a in digits)
    elif shape == "TwoSubtreesLevel1":
        yield from itertools.combinations(digits, 2)
    elif shape == "ThreeSubtreesLevel1":
        yield from itertools.combinations(digits, 3)
    elif shape == "SubtreeLevel2":
        yield from itertools.product(digits, repeat=2)
    elif shape == "TwoSubtreesLevel2":
        for a1, a2 in itertools.combinations(digits, 2):
            for b1, b2 in itertools.product(digits, repeat=2):
                yield (a1, a2, b1, b2)
    elif shape == "Singleton":
        yield from itertools.product(digits, repeat=k - 1)


def classify_root_sets(ctx: PAdicContext, j: int) -> Iterator[RootSetClass]:
    """Every symbolic class of slice ``R_j``, following the case lists.

    For small p two classes can denote the same set: with p = 2 the union of
    two distinct level-1 subtrees is the whole subtree under j, and with p = 3
    the same holds for three. See :func:`distinct_root_sets`.
    """
    _check_level(ctx.k)
    if not 0 <= j < ctx.p:
        raise OutOfRangeError(f"residue {j} not in [0, {ctx.p})")
    for shape in SHAPES[ctx.k]:
        for params in _shape_params(shape, ctx.p, ctx.k):
            yield RootSetClass(shape, params, j, ctx)


def distinct_root_sets(ctx: PAdicContext, j: int) -> Set[FrozenSet[int]]:
    return {c.materialize() for c in classify_root_sets(ctx, j)}


def count_root_sets(p: int, k: int) -> int:
    """Closed-form number of classes per residue slice."""
    _check_level(k)
    if k == 2:
        return p + 2
    if k == 3:
        num, den = 3 * p * p + p + 4, 2
    else:
        num, den = 3 * p ** 4 + 4 * p ** 3 + 6 * p * p + 5 * p + 12, 6
    q, r = divmod(num, den)
    assert r == 0, f"count formula not integral at p={p}, k={k}"
    return q


def total_root_sets(p: int, k: int) -> int:
    return count_root_sets(p, k) ** p


# ---------------------------------------------------------------------------
# brute-force oracle


def _basis_ranges(ctx: PAdicContext) -> List[int]:
    # coefficient of the j-th falling factorial is free mod p^(k - v_p(j!));
    # once v_p(j!) >= k the term vanishes as a function
    p, k = ctx.p, ctx.k
    ranges = []
    j = 0
    while factorial_valuation(j, p) < k:
        ranges.append(p ** (k - factorial_valuation(j, p)))
        j += 1
    return ranges


def poly_function_count(ctx: PAdicContext) -> int:
    total = 1
    for r in _basis_ranges(ctx):
        total *= r
    return total


def enumerate_poly_functions(ctx: PAdicContext, cap: int = DEFAULT_FUNCTION_CAP) -> Iterator[Tuple[int, ...]]:
    """Value tables ``(f(0), ..., f(p^k - 1))`` of every polynomial function.

    Uses f = sum c_j x(x-1)...(x-j+1) with each c_j over its full range, which
    hits every function exactly once.
    """
    total = poly_function_count(ctx)
    if total > cap:
        raise ExpansionCapError(f"{total} polynomial functions exceed the cap {cap}")
    m = ctx.modulus
    ranges = _basis_ranges(ctx)
    basis = []
    for j in range(len(ranges)):
        col = []
        for x in range(m):
            v = 1
            for t in range(j):
                v *= x - t
            col.append(v % m)
        basis.append(col)

    def walk(level: int, table: List[int]) -> Iterator[Tuple[int, ...]]:
        if level == len(ranges):
            yield tuple(table)
            return
        col = basis[level]
        for c in range(ranges[level]):
            yield from walk(level + 1, [(t + c * b) % m for t, b in zip(table, col)])

    yield from walk(0, [0] * m)


def root_set_of(table) -> FrozenSet[int]:
    """Zeros of a function given by its value table."""
    return frozenset(x for x, v in enumerate(table) if v == 0)


def brute_force_root_sets(ctx: PAdicContext, cap: int = DEFAULT_FUNCTION_CAP) -> Set[FrozenSet[int]]:
    """Every root set of Z/p^k, by exhaustive polynomial-function enumeration."""
    return {root_set_of(t) for t in enumerate_poly_functions(ctx, cap)}


def residue_slices(family, ctx: PAdicContext) -> Dict[int, Set[FrozenSet[int]]]:
    """Project a family of subsets onto each residue class mod p."""
    p = ctx.p
    out: Dict[int, Set[FrozenSet[int]]] = {j: set() for j in range(p)}
    for R in family:
        for j in range(p):
            out[j].add(frozenset(x for x in R if x % p == j))
    return out
