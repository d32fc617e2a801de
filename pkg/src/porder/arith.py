"""p-adic primitives on arbitrary-precision integers.

Valuations are always kept as exponents; the multiplicative form ``p**v`` is
never stored.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Union

from .errors import NonPrimeError, OutOfRangeError

INFINITY = math.inf

Valuation = Union[int, float]

# Deterministic for n < 3.3e24 with these bases; above that the same bases
# plus the extra rounds below make it a fixed-round probabilistic test.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXTRA_BASES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Exact for every ``n < 2**64``. Larger inputs get 25 fixed-base rounds.
    """
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < 1 << 64 else _MR_BASES + _MR_EXTRA_BASES
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PAdicContext:
    """The ring Z/p^k: a prime ``p`` and a level ``k >= 1``."""

    p: int
    k: int
    modulus: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise NonPrimeError(f"p={self.p} is not prime")
        if not isinstance(self.k, int) or self.k < 1:
            raise OutOfRangeError(f"level k={self.k} must be a positive integer")
        object.__setattr__(self, "modulus", self.p ** self.k)

    def check_element(self, a: int) -> int:
        if not 0 <= a < self.modulus:
            raise OutOfRangeError(f"{a} is not in [0, {self.p}^{self.k})")
        return a

    @classmethod
    def covering(cls, p: int, values: Iterable[int]) -> "PAdicContext":
        """Smallest-level context whose modulus exceeds every value."""
        top = max(values, default=0)
        k = 1
        m = p
        while m <= top:
            m *= p
            k += 1
        return cls(p, k)


def valuation(a: int, p: int) -> Valuation:
    """Exponent of the largest power of ``p`` dividing ``a``; infinite for 0."""
    if a == 0:
        return INFINITY
    if a < 0:
        a = -a
    if p == 2:
        return (a & -a).bit_length() - 1
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def factorial_valuation(i: int, p: int) -> int:
    """v_p(i!) by Legendre's formula."""
    if i < 0:
        raise OutOfRangeError("factorial of a negative number")
    v = 0
    q = i // p
    while q:
        v += q
        q //= p
    return v


def factorial_valuation_table(n: int, p: int) -> List[int]:
    """``[v_p(0!), v_p(1!), ..., v_p(n!)]`` built with one valuation per step."""
    table = [0] * (n + 1)
    for j in range(1, n + 1):
        table[j] = table[j - 1] + valuation(j, p)
    return table


def residue_split(elements: Iterable[int], p, scale: int = 1) -> Dict[int, List[int]]:
    """Partition by residue mod ``p`` (an int or a :class:`PAdicContext`).

    With ``scale = p**d`` the key is the base-p digit at position d instead,
    i.e. ``(a // scale) % p``. Only non-empty classes appear, and keys iterate
    in increasing order. Element order inside a class follows the input.
    """
    if isinstance(p, PAdicContext):
        p = p.p
    classes: Dict[int, List[int]] = {}
    if scale == 1:
        for a in elements:
            classes.setdefault(a % p, []).append(a)
    else:
        for a in elements:
            classes.setdefault(a // scale % p, []).append(a)
    if len(classes) > 1:
        classes = {r: classes[r] for r in sorted(classes)}
    return classes
