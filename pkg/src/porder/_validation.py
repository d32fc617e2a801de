"""Input checking shared by the engines and the estimator wrappers."""
from __future__ import annotations

import numbers
from typing import Iterable, Tuple

import numpy as np

from .arith import PAdicContext
from .errors import DuplicateError, EmptyInputError, OutOfRangeError, ParseError


def as_int(x) -> int:
    if isinstance(x, bool):
        raise ParseError(f"boolean {x!r} is not an element")
    if isinstance(x, numbers.Integral):
        return int(x)
    if isinstance(x, float) and x.is_integer():
        return int(x)
    raise ParseError(f"{x!r} is not an integer")


def column_or_1d_ints(X) -> list:
    """Flatten array-likes of shape (n,) or (n, 1) to a list of Python ints.

    Object arrays are allowed so that elements beyond 64 bits survive.
    """
    if isinstance(X, np.ndarray):
        arr = X
    else:
        # object dtype keeps wide ints; nested rows become a 2-D array
        arr = np.array(list(X), dtype=object)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D array or a single column, got shape {arr.shape}")
    return [as_int(x) for x in arr.tolist()]


def check_elements(
    elements: Iterable[int], ctx: PAdicContext, *, allow_empty: bool = False
) -> Tuple[int, ...]:
    """Return the elements as a tuple after range and duplicate checks."""
    out = tuple(as_int(a) for a in elements)
    if not out and not allow_empty:
        raise EmptyInputError("the input set is empty")
    m = ctx.modulus
    for a in out:
        if not 0 <= a < m:
            raise OutOfRangeError(f"element {a} is not in [0, {ctx.p}^{ctx.k})")
    if len(set(out)) != len(out):
        seen = set()
        dup = next(a for a in out if a in seen or seen.add(a))
        raise DuplicateError(f"element {dup} occurs more than once")
    return out
