import math

import pytest

from porder import PAdicContext, factorial_valuation, factorial_valuation_table, is_prime, residue_split, valuation
from porder.errors import NonPrimeError, OutOfRangeError


def test_small_primes_match_trial_division():
    def slow(n):
        return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))

    assert [n for n in range(500) if is_prime(n)] == [n for n in range(500) if slow(n)]


@pytest.mark.parametrize("n", [2**61 - 1, 2**89 - 1, 18446744073709551557])
def test_large_primes(n):
    assert is_prime(n)


@pytest.mark.parametrize("n", [561, 3215031751, 2**64 + 1, 3825123056546413051])
def test_composites_and_pseudoprimes(n):
    assert not is_prime(n)


def test_context_rejects_composite_and_zero_level():
    with pytest.raises(NonPrimeError):
        PAdicContext(4, 2)
    with pytest.raises(ValueError):
        PAdicContext(2, 0)


def test_context_modulus_and_covering():
    assert PAdicContext(3, 4).modulus == 81
    assert PAdicContext.covering(2, [0, 7]).k == 3
    assert PAdicContext.covering(2, [8]).k == 4
    with pytest.raises(OutOfRangeError):
        PAdicContext(2, 3).check_element(8)


def test_valuation_basics():
    assert valuation(0, 2) == math.inf
    assert valuation(12, 2) == 2
    assert valuation(-12, 2) == 2
    assert valuation(2**200 * 3, 2) == 200
    assert valuation(250, 5) == 3
    assert valuation(7, 3) == 0


def test_factorial_valuation_against_product():
    for p in (2, 3, 5, 7):
        fact = 1
        for i in range(0, 60):
            if i:
                fact *= i
            assert factorial_valuation(i, p) == valuation(fact, p)


def test_factorial_table():
    assert factorial_valuation_table(9, 2) == [factorial_valuation(i, 2) for i in range(10)]


def test_residue_split_orders_keys_and_keeps_input_order():
    assert residue_split([5, 3, 4, 9, 0], 3) == {0: [3, 9, 0], 1: [4], 2: [5]}
    assert list(residue_split([5, 3, 4, 9, 0], 3)) == [0, 1, 2]


def test_residue_split_by_digit():
    # second base-2 digit
    assert residue_split([0, 1, 2, 3, 6], PAdicContext(2, 3), scale=2) == {0: [0, 1], 1: [2, 3, 6]}
