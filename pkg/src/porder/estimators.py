"""scikit-learn style wrappers.

``POrderingTransformer`` learns a p-ordering of the values seen in ``fit`` and
encodes values as their position in it. ``MinimalRepresentation`` learns the
representative-root cover of a set and encodes values by the root holding
them. Both take 1-D arrays (or a single column) of non-negative integers;
object arrays keep elements wider than 64 bits exact.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import column_or_1d_ints
from .arith import PAdicContext
from .fast import fast_p_ordering
from .ordering import TieBreak, naive_p_ordering
from .rep import rep_p_ordering
from .reproots import minimal_representation

ENGINES = ("fast", "naive", "rep")


def _context(p, k, values) -> PAdicContext:
    if k is None:
        return PAdicContext.covering(p, values)
    return PAdicContext(p, k)


def _lookup(index: dict, values, what: str) -> np.ndarray:
    out = np.empty(len(values), dtype=np.int64)
    for i, x in enumerate(values):
        try:
            out[i] = index[x]
        except KeyError:
            raise ValueError(f"{x} was not {what} during fit") from None
    return out


class POrderingTransformer(TransformerMixin, BaseEstimator):
    """Fit a p-ordering of a set of residues.

    Parameters
    ----------
    p : int
        The prime.
    k : int or None
        Level of the ring Z/p^k; ``None`` takes the smallest level that holds
        every fitted value.
    engine : {"fast", "naive", "rep"}
        ``"rep"`` first compresses the set into representative roots.
    tie : {"min", "max", "first"}
        Tie-break among minimisers; only the naive engine uses it.

    Attributes
    ----------
    ordering_ : ndarray of object
        The fitted elements in p-ordering order.
    p_sequence_ : ndarray of int64
        p-adic exponents of the p-sequence.
    context_ : PAdicContext
    """

    def __init__(self, p=2, k=None, engine="fast", tie="min"):
        self.p = p
        self.k = k
        self.engine = engine
        self.tie = tie

    def fit(self, X, y=None):
        values = column_or_1d_ints(X)
        if self.engine not in ENGINES:
            raise ValueError(f"engine must be one of {ENGINES}, got {self.engine!r}")
        TieBreak.coerce(self.tie)
        ctx = _context(self.p, self.k, values)
        if self.engine == "naive":
            result = naive_p_ordering(values, ctx, self.tie)
        elif self.engine == "rep":
            rep = minimal_representation(values, ctx)
            result = rep_p_ordering(rep.roots, len(values), ctx)
        else:
            result = fast_p_ordering(values, ctx)
        self.context_ = ctx
        self.ordering_ = np.empty(len(result), dtype=object)
        self.ordering_[:] = result.elements
        self.p_sequence_ = np.asarray(result.pseq, dtype=np.int64)
        self._position = {x: i for i, x in enumerate(result.elements)}
        return self

    def transform(self, X):
        """Position of each value in the fitted ordering."""
        check_is_fitted(self, "ordering_")
        return _lookup(self._position, column_or_1d_ints(X), "seen")

    def inverse_transform(self, X):
        check_is_fitted(self, "ordering_")
        idx = np.asarray(X, dtype=np.int64).ravel()
        return self.ordering_[idx]


class MinimalRepresentation(TransformerMixin, BaseEstimator):
    """Fit the minimal representative-root cover of a set.

    Attributes
    ----------
    roots_ : list of RepRoot
    context_ : PAdicContext
    """

    def __init__(self, p=2, k=None):
        self.p = p
        self.k = k

    def fit(self, X, y=None):
        values = column_or_1d_ints(X)
        ctx = _context(self.p, self.k, values)
        self.context_ = ctx
        self.roots_ = list(minimal_representation(values, ctx).roots)
        return self

    def transform(self, X):
        """Index into ``roots_`` of the root containing each value."""
        check_is_fitted(self, "roots_")
        values = column_or_1d_ints(X)
        out = np.empty(len(values), dtype=np.int64)
        for i, x in enumerate(values):
            for r_idx, r in enumerate(self.roots_):
                if x in r:
                    out[i] = r_idx
                    break
            else:
                raise ValueError(f"{x} is not covered by the fitted set")
        return out

    def p_ordering(self, n):
        """First ``n`` terms of a p-ordering of the fitted set, computed from
        the roots alone."""
        check_is_fitted(self, "roots_")
        return rep_p_ordering(self.roots_, n, self.context_)
