import random

import pytest

from porder import PAdicContext, fast_p_ordering, is_p_ordering, merge_orderings, naive_p_ordering, recurse_translate
from porder.errors import DuplicateError, ResidueError
from porder.fast import heap_merge


def test_first_ten_integers(z16):
    assert fast_p_ordering(range(10), z16).pseq == (0, 0, 1, 1, 3, 3, 4, 4, 7, 7)


def test_output_is_a_p_ordering():
    ctx = PAdicContext(5, 4)
    S = random.Random(3).sample(range(ctx.modulus), 120)
    o = fast_p_ordering(S, ctx)
    assert sorted(o.elements) == sorted(S)
    assert is_p_ordering(list(o.elements), 5)


def test_singleton_and_shared_digits():
    ctx = PAdicContext(2, 10)
    assert fast_p_ordering([37], ctx).pseq == (0,)
    # agree on the low 6 bits; only the 7th separates them
    assert fast_p_ordering([5, 5 + 64], ctx).pseq == (0, 6)


def test_recurse_translate_matches_naive():
    ctx = PAdicContext(3, 4)
    members = [1, 4, 10, 28, 55]
    assert recurse_translate(members, ctx).pseq == naive_p_ordering(members, ctx).pseq
    with pytest.raises(ResidueError):
        recurse_translate([1, 2], ctx)


def test_merge_orderings_rebuilds_the_whole_ordering():
    ctx = PAdicContext(3, 3)
    S = [0, 3, 1, 4, 7, 2, 20]
    per = [recurse_translate([x for x in S if x % 3 == j], ctx) for j in range(3)]
    assert merge_orderings(per, ctx).pseq == naive_p_ordering(S, ctx).pseq


def test_heap_merge_prefers_small_residue_on_ties():
    out, seq, _ = heap_merge([(1, [11, 13], [0, 2]), (0, [10, 12], [0, 1])])
    assert out == [10, 11, 12, 13]
    assert seq == [0, 0, 1, 2]


def test_heap_merge_rejects_repeated_residue():
    with pytest.raises(DuplicateError):
        heap_merge([(0, [1], [0]), (0, [2], [0])])


def test_heap_never_outgrows_residue_count():
    rng = random.Random(11)
    for p in (2, 3, 7):
        residues = rng.sample(range(p), rng.randint(1, p))
        parts = [(r, list(range(rng.randint(1, 5))), sorted(rng.choices(range(9), k=5))) for r in residues]
        parts = [(r, e, v[: len(e)]) for r, e, v in parts]
        _, _, peak = heap_merge(parts)
        assert peak <= min(len(residues), p)


def test_deep_ring_does_not_hit_recursion_limit():
    ctx = PAdicContext(2, 3000)
    S = [0, 1 << 2999, 1]
    assert fast_p_ordering(S, ctx).pseq == naive_p_ordering(S, ctx).pseq
