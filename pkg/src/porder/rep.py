"""p-ordering of a set given as disjoint representative roots.

Only the ``d`` roots are ever touched. The next p-value of root ``j`` is

    sum_{t != j} i_t * v_p(beta_t - beta_j) + e_j * i_j + v_p(i_j!)

where ``i_t`` counts the terms already taken from root ``t``: elements of
distinct roots interact through their betas alone, and inside a root the
natural order ``beta + p^e * y`` for y = 0, 1, ... is a p-ordering whose own
product ``prod_{t<i} p^e (i - t)`` has valuation ``e*i + v_p(i!)``.
"""
from __future__ import annotations

import random
from typing import Callable, List, Optional, Sequence

from .arith import PAdicContext, factorial_valuation, valuation
from .errors import ContextMismatchError, EmptyInputError, LengthError, OverlapError
from .ordering import POrdering
from .reproots import Relation, RepRoot, compare


def correlate(roots: Sequence[RepRoot]) -> List[List[int]]:
    """Symmetric matrix of v_p(beta_i - beta_j); the diagonal is left at 0."""
    d = len(roots)
    corr = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            if compare(roots[i], roots[j]) is not Relation.DISJOINT:
                raise OverlapError(f"{roots[i]} and {roots[j]} intersect")
            v = valuation(roots[i].beta - roots[j].beta, roots[i].ctx.p)
            corr[i][j] = corr[j][i] = v
    return corr


def p_exp_increase(n: int, p: int) -> List[int]:
    """``increase[j] = v_p((j+1)!) - v_p(j!) = v_p(j+1)`` for j = 0..n-1."""
    if n < 1:
        raise LengthError("n must be at least 1")
    return [valuation(j + 1, p) for j in range(n)]


class RepOrderingState:
    """Incremental state of the succinct engine.

    ``valuations[j]`` is the p-value the next term of root ``j`` would get;
    ``counts[j]`` is how many terms root ``j`` has supplied.
    """

    def __init__(self, roots: Sequence[RepRoot], n: int):
        if not roots:
            raise EmptyInputError("no representative roots given")
        ctx = roots[0].ctx
        for r in roots:
            if r.ctx != ctx:
                raise ContextMismatchError(f"{r.ctx} vs {ctx}")
        self.roots = list(roots)
        self.ctx = ctx
        self.corr = correlate(self.roots)
        total = sum(r.cardinality for r in self.roots)
        if not 1 <= n <= total:
            raise LengthError(f"requested length {n} but the set has {total} elements")
        self.n = n
        self.increase = p_exp_increase(n, ctx.p)
        self.valuations = [0] * len(self.roots)
        self.counts = [0] * len(self.roots)
        self._sizes = [r.cardinality for r in self.roots]

    def expected_valuation(self, j: int) -> int:
        """Recompute ``valuations[j]`` from the closed form."""
        own = self.roots[j].e * self.counts[j] + factorial_valuation(self.counts[j], self.ctx.p)
        return own + sum(
            self.counts[t] * self.corr[t][j] for t in range(len(self.roots)) if t != j
        )

    def candidates(self) -> List[int]:
        live = [j for j in range(len(self.roots)) if self.counts[j] < self._sizes[j]]
        best = min(self.valuations[j] for j in live)
        return [j for j in live if self.valuations[j] == best]

    def step(self, choose: Optional[Callable[[List[int]], int]] = None):
        """Take one term; returns ``(element, p_value, root_index)``."""
        vals = self.valuations
        if choose is None:
            # first minimum wins
            best = None
            for j, v in enumerate(vals):
                if self.counts[j] < self._sizes[j] and (best is None or v < vals[best]):
                    best = j
        else:
            best = choose(self.candidates())
        root = self.roots[best]
        i = self.counts[best]
        element = root.beta + root.modulus * i
        pv = vals[best]
        row = self.corr[best]
        for t in range(len(vals)):
            if t != best:
                vals[t] += row[t]
        vals[best] += root.e + self.increase[i]
        self.counts[best] = i + 1
        return element, pv, best


def rep_p_ordering(
    roots: Sequence[RepRoot],
    n: int,
    ctx: PAdicContext = None,
    rng: random.Random = None,
) -> POrdering:
    """First ``n`` terms of a p-ordering of the union of disjoint ``roots``.

    Ties go to the lowest root index unless ``rng`` is given, in which case a
    random minimiser is taken (the p-sequence does not depend on the choice).
    """
    state = RepOrderingState(roots, n)
    if ctx is not None and ctx != state.ctx:
        raise ContextMismatchError(f"roots live in {state.ctx}, not {ctx}")
    choose = rng.choice if rng is not None else None
    elems = []
    seq = []
    for _ in range(n):
        x, pv, _ = state.step(choose)
        elems.append(x)
        seq.append(pv)
    return POrdering(tuple(elems), tuple(seq), state.ctx)
