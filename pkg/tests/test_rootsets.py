import pytest

from porder import (
    PAdicContext,
    brute_force_root_sets,
    classify_root_sets,
    count_root_sets,
    enumerate_poly_functions,
    root_set_of,
    total_root_sets,
)
from porder.errors import ExpansionCapError, OutOfRangeError, UnsupportedLevelError
from porder.rootsets import distinct_root_sets, poly_function_count, residue_slices


@pytest.mark.parametrize("p, k, n", [(2, 2, 64), (2, 3, 1024), (3, 2, 19683), (2, 4, 65536)])
def test_polynomial_function_counts(p, k, n):
    # independent of the coefficient walk: product of basis coefficient ranges
    ctx = PAdicContext(p, k)
    assert poly_function_count(ctx) == n
    if n <= 1024:
        assert sum(1 for _ in enumerate_poly_functions(ctx)) == n


def test_function_tables_are_distinct():
    ctx = PAdicContext(2, 3)
    tables = list(enumerate_poly_functions(ctx))
    assert len(set(tables)) == len(tables)


def test_function_cap():
    with pytest.raises(ExpansionCapError):
        list(enumerate_poly_functions(PAdicContext(2, 4), cap=1000))


def test_root_set_of_table():
    assert root_set_of((0, 3, 0, 1)) == frozenset({0, 2})


def test_small_ring_families():
    ctx = PAdicContext(2, 2)
    family = brute_force_root_sets(ctx)
    assert len(family) == 16
    slices = residue_slices(family, ctx)
    assert slices[0] == {frozenset(), frozenset({0}), frozenset({2}), frozenset({0, 2})}


def test_classes_come_in_case_order():
    shapes = [c.shape for c in classify_root_sets(PAdicContext(3, 2), 1)]
    assert shapes == ["FullSubtree", "Singleton", "Singleton", "Singleton", "Empty"]
    assert [sorted(c.materialize()) for c in classify_root_sets(PAdicContext(3, 2), 1)] == [
        [1, 4, 7], [1], [4], [7], [],
    ]


def test_two_subtrees_at_p2_coincide_with_the_full_subtree():
    # two distinct level-1 subtrees under j fill the j-subtree when p = 2
    ctx = PAdicContext(2, 3)
    classes = list(classify_root_sets(ctx, 0))
    full = next(c for c in classes if c.shape == "FullSubtree").materialize()
    pair = next(c for c in classes if c.shape == "TwoSubtreesLevel1").materialize()
    assert pair == full
    assert len(classes) == 9 and len(distinct_root_sets(ctx, 0)) == 8


@pytest.mark.parametrize("p, k, count", [(2, 2, 4), (2, 3, 9), (2, 4, 21), (3, 2, 5), (5, 3, 42), (3, 4, 72)])
def test_count_formula_values(p, k, count):
    assert count_root_sets(p, k) == count
    assert total_root_sets(p, k) == count ** p


def test_level_and_residue_checks():
    with pytest.raises(UnsupportedLevelError):
        count_root_sets(2, 5)
    with pytest.raises(UnsupportedLevelError):
        list(classify_root_sets(PAdicContext(2, 1), 0))
    with pytest.raises(OutOfRangeError):
        list(classify_root_sets(PAdicContext(3, 2), 3))
