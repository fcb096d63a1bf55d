"""
Multi-index enumeration and the cached index tables that drive jet arithmetic.

Coefficients of a jet of order K in ``dim`` variables are stored densely in
graded order: all multi-indices of degree 0, then degree 1, and so on; inside a
degree the exponent tuples are in descending lexicographic order. The table of
order K-1 is therefore a prefix of the table of order K, and truncation is a
slice.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, factorial
from typing import Dict, Tuple

import numpy as np

from config import ERROR_MESSAGES, JET_CONFIG
from exceptions import JetShapeError

MultiIndex = Tuple[int, ...]


def coeff_count(dim: int, order: int) -> int:
    """Number of coefficients of a jet: C(dim + order, order)."""
    return comb(dim + order, order)


def _check_limits(dim: int, order: int) -> None:
    if dim < 1 or order < 0 or dim > JET_CONFIG["max_dim"] or order > JET_CONFIG["max_order"]:
        raise JetShapeError(ERROR_MESSAGES["jet_limits"].format(
            dim=dim, order=order, max_dim=JET_CONFIG["max_dim"], max_order=JET_CONFIG["max_order"]))


def _degree_block(dim: int, degree: int) -> np.ndarray:
    rows = []
    for combo in combinations_with_replacement(range(dim), degree):
        exps = [0] * dim
        for i in combo:
            exps[i] += 1
        rows.append(exps)
    block = np.array(rows, dtype=np.int64).reshape(-1, dim)
    # descending lexicographic inside the degree
    order = np.lexsort(tuple(-block[:, i] for i in reversed(range(dim))))
    return block[order]


@dataclass(frozen=True)
class IndexTable:
    """Enumeration of all multi-indices of degree <= order."""
    dim: int
    order: int
    exponents: np.ndarray     # (N, dim)
    degrees: np.ndarray       # (N,)
    keys: np.ndarray          # (N,) mixed-radix keys, base order + 1
    degree_starts: np.ndarray  # (order + 2,) offsets of each degree block
    factorials: np.ndarray    # (N,) alpha!

    @property
    def size(self) -> int:
        return len(self.degrees)

    def position(self, alpha: MultiIndex) -> int:
        """Position of a multi-index in the dense coefficient vector."""
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != self.dim or any(a < 0 for a in alpha) or sum(alpha) > self.order:
            raise JetShapeError(f"multi-index {alpha} invalid for dim {self.dim}, order {self.order}")
        return self._lookup()[self._key(alpha)]

    def positions_of_keys(self, keys: np.ndarray) -> np.ndarray:
        lookup = self._lookup()
        return np.array([lookup[int(k)] for k in np.ravel(keys)], dtype=np.int64).reshape(np.shape(keys))

    def _key(self, alpha: MultiIndex) -> int:
        base = self.order + 1
        return sum(a * base ** i for i, a in enumerate(alpha))

    def _lookup(self) -> Dict[int, int]:
        return _key_lookup(self.dim, self.order)


@lru_cache(maxsize=None)
def index_table(dim: int, order: int) -> IndexTable:
    """Cached multi-index table for (dim, order)."""
    _check_limits(dim, order)
    blocks = [_degree_block(dim, d) for d in range(order + 1)]
    exponents = np.vstack(blocks)
    degrees = exponents.sum(axis=1)
    radix = (order + 1) ** np.arange(dim, dtype=np.int64)
    keys = exponents @ radix
    starts = np.concatenate([[0], np.cumsum([len(b) for b in blocks])])
    facts = np.array([np.prod([factorial(int(a)) for a in row]) for row in exponents], dtype=float)
    for arr in (exponents, degrees, keys, starts, facts):
        arr.setflags(write=False)
    return IndexTable(dim, order, exponents, degrees, keys, starts, facts)


@lru_cache(maxsize=None)
def _key_lookup(dim: int, order: int) -> Dict[int, int]:
    table = index_table(dim, order)
    return {int(k): i for i, k in enumerate(table.keys)}


@dataclass(frozen=True)
class ProductTable:
    """Pairs (left, right) whose exponents add to ``target``, sorted by target.

    ``starts`` are the reduceat offsets: summing ``a[left] * b[right]`` over
    each run gives the truncated Cauchy product in dense order.
    """
    left: np.ndarray
    right: np.ndarray
    target: np.ndarray
    starts: np.ndarray


@lru_cache(maxsize=None)
def product_table(dim: int, order: int) -> ProductTable:
    table = index_table(dim, order)
    lookup = _key_lookup(dim, order)
    s = table.degree_starts
    lefts, rights, targets = [], [], []
    for dl in range(order + 1):
        left_pos = np.arange(s[dl], s[dl + 1])
        for dr in range(order + 1 - dl):
            right_pos = np.arange(s[dr], s[dr + 1])
            lp, rp = np.meshgrid(left_pos, right_pos, indexing="ij")
            summed = table.keys[lp] + table.keys[rp]
            lefts.append(lp.ravel())
            rights.append(rp.ravel())
            targets.append(np.array([lookup[int(k)] for k in summed.ravel()], dtype=np.int64))
    left = np.concatenate(lefts)
    right = np.concatenate(rights)
    target = np.concatenate(targets)
    perm = np.argsort(target, kind="stable")
    left, right, target = left[perm], right[perm], target[perm]
    starts = np.flatnonzero(np.r_[True, target[1:] != target[:-1]])
    for arr in (left, right, target, starts):
        arr.setflags(write=False)
    return ProductTable(left, right, target, starts)


@dataclass(frozen=True)
class PartialTable:
    """Transport of coefficients for d/dx^i: new[p] = factor[p] * old[source[p]]."""
    source: np.ndarray
    factor: np.ndarray


@lru_cache(maxsize=None)
def partial_table(dim: int, order: int, i: int) -> PartialTable:
    """Table mapping an order-K jet to the order-(K-1) jet of its i-th partial."""
    if not 0 <= i < dim:
        raise JetShapeError(ERROR_MESSAGES["jet_index"].format(index=i, dim=dim))
    if order < 1:
        raise JetShapeError("partial derivative of an order-0 jet")
    lower = index_table(dim, order - 1)
    upper = index_table(dim, order)
    shifted = lower.exponents.copy()
    shifted[:, i] += 1
    radix = (order + 1) ** np.arange(dim, dtype=np.int64)
    source = upper.positions_of_keys(shifted @ radix)
    factor = lower.exponents[:, i].astype(float) + 1.0
    source.setflags(write=False)
    factor.setflags(write=False)
    return PartialTable(source, factor)
