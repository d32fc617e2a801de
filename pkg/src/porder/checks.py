"""Seeded input generators, property suites and the naive-vs-fast benchmark.

All randomness comes from ``random.Random(seed)``, so a report is fully
determined by its seed and sizes.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from .arith import PAdicContext, valuation
from .fast import fast_p_ordering
from .ordering import naive_p_ordering
from .rep import rep_p_ordering
from .reproots import Relation, RepRoot, canonicalize, compare, expand, minimal_representation, normalize_root_list
from .rootsets import brute_force_root_sets, classify_root_sets, count_root_sets, residue_slices

FAST_PRIMES = (2, 3, 5, 7, 13)
REP_PRIMES = (2, 3, 5)


def random_set(rng: random.Random, p: int, k: int, n: int) -> List[int]:
    """``n`` distinct elements of Z/p^k, uniformly without replacement."""
    m = p ** k
    n = min(n, m)
    if m < 1 << 62:
        return rng.sample(range(m), n)
    out: dict = {}
    while len(out) < n:
        out.setdefault(rng.randrange(m), None)
    return list(out)


def random_context(rng: random.Random, primes: Sequence[int], max_k: int) -> PAdicContext:
    return PAdicContext(rng.choice(primes), rng.randint(1, max_k))


def random_root_family(
    rng: random.Random, ctx: PAdicContext, max_d: int, max_card: int, tries: int = 64
) -> List[RepRoot]:
    """Pairwise disjoint roots, at most ``max_d`` of them, total size <= ``max_card``.

    Exponents are drawn uniformly from those whose root still fits the budget,
    so families mix large cosets with singletons.
    """
    p, k = ctx.p, ctx.k
    want = rng.randint(1, max_d)
    roots: List[RepRoot] = []
    budget = max_card
    for _ in range(tries):
        if len(roots) == want:
            break
        feasible = [e for e in range(k + 1) if p ** (k - e) <= budget]
        if not feasible:
            break
        e = rng.choice(feasible)
        r = canonicalize(rng.randrange(p ** e), e, ctx)
        if all(compare(r, s) is Relation.DISJOINT for s in roots):
            roots.append(r)
            budget -= r.cardinality
    return roots


def random_cover(rng: random.Random, roots: Sequence[RepRoot], extra: int = 3) -> List[RepRoot]:
    """A redundant cover of the same set: roots split into random children,
    plus some sub-roots that are already covered."""
    out = []
    for r in roots:
        stack = [r]
        while stack:
            cur = stack.pop()
            if cur.e < cur.ctx.k and rng.random() < 0.5:
                p = cur.ctx.p
                stack.extend(canonicalize(cur.beta + b * cur.modulus, cur.e + 1, cur.ctx) for b in range(p))
            else:
                out.append(cur)
    for _ in range(extra):
        if not out:
            break
        host = rng.choice(out)
        if host.e < host.ctx.k:
            e = rng.randint(host.e + 1, host.ctx.k)
            y = rng.randrange(host.ctx.p ** (e - host.e))
            out.append(canonicalize(host.beta + host.modulus * y, e, host.ctx))
    rng.shuffle(out)
    return out


# ---------------------------------------------------------------------------
# property suites; each returns a list of failure descriptions


def check_fast_vs_naive(rng: random.Random, trials: int, max_k: int = 10, max_n: int = 256) -> List[str]:
    bad = []
    for _ in range(trials):
        ctx = random_context(rng, FAST_PRIMES, max_k)
        S = random_set(rng, ctx.p, ctx.k, rng.randint(1, max_n))
        fast = fast_p_ordering(S, ctx)
        if fast.pseq != naive_p_ordering(S, ctx).pseq or sorted(fast.elements) != sorted(S):
            bad.append(f"p={ctx.p} k={ctx.k} S={S}")
    return bad


def check_rep_vs_naive(rng: random.Random, trials: int, max_k: int = 8, max_d: int = 8, max_card: int = 4096) -> List[str]:
    bad = []
    for _ in range(trials):
        ctx = random_context(rng, REP_PRIMES, max_k)
        roots = random_root_family(rng, ctx, max_d, max_card)
        total = sum(r.cardinality for r in roots)
        rep = rep_p_ordering(roots, total)
        expanded = [x for r in roots for x in expand(r)]
        if rep.pseq != naive_p_ordering(expanded, ctx).pseq or sorted(rep.elements) != sorted(expanded):
            bad.append(f"p={ctx.p} k={ctx.k} roots={[str(r) for r in roots]}")
    return bad


def check_tie_invariance(rng: random.Random, trials: int, max_k: int = 10, max_n: int = 128) -> List[str]:
    bad = []
    for _ in range(trials):
        ctx = random_context(rng, FAST_PRIMES, max_k)
        S = random_set(rng, ctx.p, ctx.k, rng.randint(1, max_n))
        rng.shuffle(S)
        seqs = {naive_p_ordering(S, ctx, tie).pseq for tie in ("min", "max", "first")}
        if len(seqs) != 1:
            bad.append(f"p={ctx.p} k={ctx.k} S={S}")
    return bad


def check_translation_scaling(rng: random.Random, trials: int, max_k: int = 8, max_n: int = 64) -> List[str]:
    bad = []
    for _ in range(trials):
        ctx = random_context(rng, FAST_PRIMES, max_k)
        p = ctx.p
        S = random_set(rng, p, ctx.k, rng.randint(1, max_n))
        c = rng.randrange(p ** (ctx.k + 2))
        m = rng.randint(1, p ** 3) * p ** rng.randint(0, 3)
        base = naive_p_ordering(S, ctx).pseq
        shifted = [x + c for x in S]
        scaled = [x * m for x in S]
        got_shift = naive_p_ordering(shifted, PAdicContext.covering(p, shifted)).pseq
        got_scale = naive_p_ordering(scaled, PAdicContext.covering(p, scaled)).pseq
        vm = valuation(m, p)
        if got_shift != base or list(got_scale) != [v + i * vm for i, v in enumerate(base)]:
            bad.append(f"p={p} S={S} c={c} m={m}")
    return bad


def check_minimal_rep(rng: random.Random, trials: int, max_k: int = 6) -> List[str]:
    bad = []
    for _ in range(trials):
        ctx = random_context(rng, REP_PRIMES, max_k)
        S = random_set(rng, ctx.p, ctx.k, rng.randint(0, min(ctx.modulus, 400)))
        if rng.random() < 0.5 and S:
            # bias towards sets with large full subtrees
            M = minimal_representation(S, ctx)
            r = rng.choice(M.roots)
            e = rng.randint(0, r.e)
            S = sorted(set(S) | set(expand(canonicalize(r.beta, e, ctx))))
        M = minimal_representation(S, ctx)
        round_trip = minimal_representation(M.elements(), ctx)
        cover = normalize_root_list(random_cover(rng, M.roots), ctx)
        if round_trip != M or tuple(cover) != M.roots or set(M.elements()) != set(S):
            bad.append(f"p={ctx.p} k={ctx.k} S={S}")
    return bad


ORACLE_CASES = ((2, 2), (2, 3), (2, 4), (3, 2))


def check_rootset_counts(primes=(2, 3, 5, 7, 11), levels=(2, 3, 4)) -> List[str]:
    bad = []
    for p in primes:
        for k in levels:
            n = sum(1 for _ in classify_root_sets(PAdicContext(p, k), 0))
            if n != count_root_sets(p, k):
                bad.append(f"p={p} k={k}: {n} classes vs formula {count_root_sets(p, k)}")
    return bad


def check_rootset_oracle(cases=ORACLE_CASES) -> List[str]:
    bad = []
    for p, k in cases:
        ctx = PAdicContext(p, k)
        slices = residue_slices(brute_force_root_sets(ctx), ctx)
        for j in range(p):
            family = {c.materialize() for c in classify_root_sets(ctx, j)}
            if family != slices[j]:
                bad.append(f"p={p} k={k} j={j}")
    return bad


@dataclass
class Suite:
    name: str
    run: Callable[[random.Random, int], List[str]]


SUITES = (
    Suite("fast-vs-naive", lambda rng, n: check_fast_vs_naive(rng, n)),
    Suite("rep-vs-naive", lambda rng, n: check_rep_vs_naive(rng, n, max_card=512)),
    Suite("tie-invariance", lambda rng, n: check_tie_invariance(rng, n)),
    Suite("translation-scaling", lambda rng, n: check_translation_scaling(rng, n)),
    Suite("minimal-representation", lambda rng, n: check_minimal_rep(rng, n)),
    Suite("rootset-counts", lambda rng, n: check_rootset_counts()),
    Suite("rootset-oracle", lambda rng, n: check_rootset_oracle()),
)


def run_suites(seed: int, trials: int) -> Dict[str, List[str]]:
    return {s.name: s.run(random.Random(f"{seed}:{s.name}"), trials) for s in SUITES}


# ---------------------------------------------------------------------------
# benchmark

ENGINES = {"naive": naive_p_ordering, "fast": fast_p_ordering}


def bench(
    sizes: Sequence[int], p: int, k: int, seed: int, engines=("naive", "fast"), repeat: int = 3
) -> List[Tuple[str, int, int, int, float]]:
    """Time each engine on one shared random set per size.

    Rows are ``(engine, n, p, k, millis)`` with the best of ``repeat``
    sequential runs; engines never run concurrently.
    """
    rng = random.Random(seed)
    ctx = PAdicContext(p, k)
    rows = []
    for n in sizes:
        S = random_set(rng, p, k, n)
        for name in engines:
            best = None
            for _ in range(repeat):
                t0 = time.perf_counter()
                ENGINES[name](S, ctx)
                ms = (time.perf_counter() - t0) * 1000.0
                best = ms if best is None else min(best, ms)
            rows.append((name, len(S), p, k, best))
    return rows
