"""Representative roots ``beta + p^e*`` and minimal root-set representations.

A representative root with exponent ``e`` is the coset ``beta + p^e Z`` inside
Z/p^k, so it holds ``p**(k - e)`` elements. ``e == k`` is a singleton.
"""
from __future__ import annotations

import enum
import os
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from ._validation import check_elements
from .arith import PAdicContext, Valuation, valuation
from .errors import ContextMismatchError, ExpansionCapError, OutOfRangeError, OverlapError

DEFAULT_EXPAND_CAP = 1 << 20


def expand_cap() -> int:
    """Expansion cap, overridable through ``PADIC_EXPAND_CAP``."""
    raw = os.environ.get("PADIC_EXPAND_CAP")
    return int(raw) if raw else DEFAULT_EXPAND_CAP


class Relation(enum.Enum):
    EQUAL = "Equal"
    FIRST_CONTAINS_SECOND = "FirstContainsSecond"
    SECOND_CONTAINS_FIRST = "SecondContainsFirst"
    DISJOINT = "Disjoint"


@dataclass(frozen=True)
class RepRoot:
    beta: int
    e: int
    ctx: PAdicContext

    @property
    def modulus(self) -> int:
        """``p**e``; elements of the root are exactly the residues ``beta`` mod this."""
        return self.ctx.p ** self.e

    @property
    def cardinality(self) -> int:
        return self.ctx.p ** (self.ctx.k - self.e)

    @property
    def is_singleton(self) -> bool:
        return self.e == self.ctx.k

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.ctx.modulus and x % self.modulus == self.beta

    def sort_key(self) -> Tuple[int, int]:
        return (self.beta, self.e)

    def __str__(self) -> str:
        if self.is_singleton:
            return str(self.beta)
        return f"{self.beta}+{self.ctx.p}^{self.e}*"


def canonicalize(beta: int, e: int, ctx: PAdicContext) -> RepRoot:
    if not 0 <= e <= ctx.k:
        raise OutOfRangeError(f"exponent {e} outside [0, {ctx.k}]")
    return RepRoot(beta % ctx.p ** e, e, ctx)


def _same_ctx(r1: RepRoot, r2: RepRoot) -> None:
    if r1.ctx != r2.ctx:
        raise ContextMismatchError(f"{r1.ctx} vs {r2.ctx}")


def compare(r1: RepRoot, r2: RepRoot) -> Relation:
    _same_ctx(r1, r2)
    if r1.e <= r2.e:
        if r2.beta % r1.modulus != r1.beta:
            return Relation.DISJOINT
        return Relation.EQUAL if r1.e == r2.e else Relation.FIRST_CONTAINS_SECOND
    if r1.beta % r2.modulus != r2.beta:
        return Relation.DISJOINT
    return Relation.SECOND_CONTAINS_FIRST


def interaction_valuation(r1: RepRoot, r2: RepRoot) -> Valuation:
    """v_p(a1 - a2), which is the same for every a1 in r1 and a2 in r2."""
    if compare(r1, r2) is not Relation.DISJOINT:
        raise OverlapError(f"{r1} and {r2} intersect")
    return valuation(r1.beta - r2.beta, r1.ctx.p)


def expand(r: RepRoot, cap: int = None) -> List[int]:
    """Elements ``beta + p^e*y`` for increasing ``y``.

    That order is itself a p-ordering of the root.
    """
    cap = expand_cap() if cap is None else cap
    size = r.cardinality
    if size > cap:
        raise ExpansionCapError(f"{r} has {size} elements, cap is {cap}")
    step = r.modulus
    return list(range(r.beta, r.ctx.modulus, step))


@dataclass(frozen=True)
class MinimalRep:
    roots: Tuple[RepRoot, ...]
    ctx: PAdicContext

    def __iter__(self) -> Iterator[RepRoot]:
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def cardinality(self) -> int:
        return sum(r.cardinality for r in self.roots)

    def __contains__(self, x: int) -> bool:
        return any(x in r for r in self.roots)

    def elements(self, cap: int = None) -> List[int]:
        cap = expand_cap() if cap is None else cap
        if self.cardinality > cap:
            raise ExpansionCapError(f"representation has {self.cardinality} elements, cap is {cap}")
        return sorted(x for r in self.roots for x in expand(r, cap))

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.roots)


def minimal_representation(elements: Iterable[int], ctx: PAdicContext) -> MinimalRep:
    """The unique minimal cover of a set by representative roots.

    Works on the base-p digit trie of the set (least significant digit first):
    a depth-d node is the residue class mod p^d, and it is full when the set
    holds all ``p**(k-d)`` of its elements. Each element is covered by its
    shallowest full ancestor, and those nodes are the roots.
    """
    S = check_elements(elements, ctx, allow_empty=True)
    p, k = ctx.p, ctx.k
    if not S:
        return MinimalRep((), ctx)
    # counts[d][r] = |{x in S : x mod p^d == r}|
    counts: List[Dict[int, int]] = []
    mod = 1
    for d in range(k + 1):
        level: Dict[int, int] = defaultdict(int)
        for x in S:
            level[x % mod] += 1
        counts.append(level)
        mod *= p
    roots = set()
    for x in S:
        mod = 1
        for d in range(k + 1):
            r = x % mod
            if counts[d][r] == p ** (k - d):
                roots.add((r, d))
                break
            mod *= p
    return MinimalRep(tuple(RepRoot(b, e, ctx) for b, e in sorted(roots)), ctx)


def normalize_root_list(roots: Sequence[RepRoot], ctx: PAdicContext = None) -> List[RepRoot]:
    """Minimal representation of the union of ``roots`` without expanding them.

    Drops every root contained in another (pairwise, O(d^2)), then merges
    complete sibling families into their parent, deepest exponent first.
    """
    roots = list(roots)
    if not roots:
        return []
    ctx = ctx or roots[0].ctx
    for r in roots:
        if r.ctx != ctx:
            raise ContextMismatchError(f"{r} belongs to {r.ctx}, expected {ctx}")
    kept: List[RepRoot] = []
    for i, r in enumerate(roots):
        covered = False
        for j, other in enumerate(roots):
            if i == j:
                continue
            rel = compare(r, other)
            if rel is Relation.SECOND_CONTAINS_FIRST or (rel is Relation.EQUAL and j < i):
                covered = True
                break
        if not covered:
            kept.append(r)

    p = ctx.p
    by_exp: Dict[int, set] = defaultdict(set)
    for r in kept:
        by_exp[r.e].add(r.beta)
    for e in range(ctx.k, 0, -1):
        betas = by_exp.get(e)
        if not betas:
            continue
        parent_mod = p ** (e - 1)
        siblings: Dict[int, List[int]] = defaultdict(list)
        for b in betas:
            siblings[b % parent_mod].append(b)
        for parent, group in siblings.items():
            if len(group) == p:
                betas.difference_update(group)
                by_exp[e - 1].add(parent)
    out = [RepRoot(b, e, ctx) for e, betas in by_exp.items() for b in betas]
    out.sort(key=RepRoot.sort_key)
    return out


def check_disjoint(roots: Sequence[RepRoot]) -> None:
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if compare(roots[i], roots[j]) is not Relation.DISJOINT:
                raise OverlapError(f"{roots[i]} and {roots[j]} intersect")
