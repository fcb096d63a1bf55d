"""
Jet-valued tensors.

A :class:`TensorJet` stores all component jets of a tensor germ as one dense
array of shape ``(dim,) * rank + (N,)``: the leading axes are tensor indices,
the trailing axis holds the jet coefficients. Contractions go through
:func:`jet_einsum`, which fuses numpy's einsum with the truncated Cauchy
product.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from exceptions import JetBudgetError, JetShapeError, TensorSymmetryError
from config import ERROR_MESSAGES
from jets.jet import Jet
from jets.multi_index import coeff_count, partial_table, product_table

UP = "u"
DOWN = "d"


@dataclass(frozen=True, eq=False)
class TensorJet:
    data: np.ndarray
    valence: Tuple[str, ...]
    dim: int
    order: int

    def __post_init__(self):
        data = np.array(self.data, dtype=float)
        valence = tuple(self.valence)
        expected = (self.dim,) * len(valence) + (coeff_count(self.dim, self.order),)
        if data.shape != expected:
            raise JetShapeError(f"tensor data shape {data.shape} does not match {expected}")
        if any(v not in (UP, DOWN) for v in valence):
            raise JetShapeError(f"valence must use '{UP}'/'{DOWN}', got {valence}")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "valence", valence)

    @classmethod
    def zeros(cls, dim: int, order: int, valence: Sequence[str]) -> "TensorJet":
        return cls(np.zeros((dim,) * len(valence) + (coeff_count(dim, order),)), tuple(valence), dim, order)

    @classmethod
    def from_jets(cls, grid, valence: Sequence[str]) -> "TensorJet":
        """Build from a nested list grid of Jets."""
        array = np.array(grid, dtype=object)
        first = array.flat[0]
        data = np.empty(array.shape + (len(first.coeffs),))
        for idx in np.ndindex(array.shape):
            jet = array[idx]
            if jet.dim != first.dim or jet.order != first.order:
                raise JetShapeError("component jets must share dim and order")
            data[idx] = jet.coeffs
        return cls(data, tuple(valence), first.dim, first.order)

    @property
    def rank(self) -> int:
        return len(self.valence)

    def component(self, *index: int) -> Jet:
        return Jet(self.dim, self.order, self.data[tuple(index)])

    def values(self) -> np.ndarray:
        """Component values at the base point."""
        return self.data[..., 0]

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values()))) if self.data.size else 0.0

    def truncate(self, order: int) -> "TensorJet":
        if order > self.order or order < 0:
            raise JetBudgetError(f"cannot truncate order-{self.order} tensor to order {order}")
        return TensorJet(self.data[..., :coeff_count(self.dim, order)], self.valence, self.dim, order)

    def partial(self) -> "TensorJet":
        """Coordinate derivative; the new index comes first and is a down index."""
        if self.order < 1:
            raise JetBudgetError(f"no derivative order left in rank-{self.rank} tensor")
        parts = []
        for i in range(self.dim):
            table = partial_table(self.dim, self.order, i)
            parts.append(self.data[..., table.source] * table.factor)
        return TensorJet(np.stack(parts), (DOWN,) + self.valence, self.dim, self.order - 1)

    def permute(self, axes: Sequence[int]) -> "TensorJet":
        axes = tuple(axes)
        data = np.transpose(self.data, axes + (self.rank,))
        return TensorJet(data, tuple(self.valence[a] for a in axes), self.dim, self.order)

    def __add__(self, other: "TensorJet") -> "TensorJet":
        self._check_compatible(other)
        return TensorJet(self.data + other.data, self.valence, self.dim, self.order)

    def __sub__(self, other: "TensorJet") -> "TensorJet":
        self._check_compatible(other)
        return TensorJet(self.data - other.data, self.valence, self.dim, self.order)

    def scaled(self, factor: float) -> "TensorJet":
        return TensorJet(self.data * factor, self.valence, self.dim, self.order)

    def _check_compatible(self, other: "TensorJet") -> None:
        if (self.dim, self.order, self.valence) != (other.dim, other.order, other.valence):
            raise JetShapeError(ERROR_MESSAGES["jet_shape"].format(
                dim_a=self.dim, order_a=self.order, dim_b=other.dim, order_b=other.order)
                + f"; valence {self.valence} vs {other.valence}")


def jet_einsum(subscripts: str, a: np.ndarray, b: np.ndarray, dim: int, order: int) -> np.ndarray:
    """Einstein summation over tensor axes with jet multiplication of the entries.

    ``a`` and ``b`` carry a trailing coefficient axis of order >= ``order``;
    the subscripts name tensor axes only and must not use ``Z``.
    """
    size = coeff_count(dim, order)
    table = product_table(dim, order)
    xa = a[..., :size][..., table.left]
    xb = b[..., :size][..., table.right]
    inputs, output = subscripts.replace(" ", "").split("->")
    left, right = inputs.split(",")
    prod = np.einsum(f"{left}Z,{right}Z->{output}Z", xa, xb, optimize=True)
    return np.add.reduceat(prod, table.starts, axis=-1)


def contract(subscripts: str, a: TensorJet, b: TensorJet, valence: Sequence[str], order: int = None) -> TensorJet:
    """Jet-valued contraction of two tensors at the lower of their orders (or ``order``)."""
    if a.dim != b.dim:
        raise JetShapeError(f"tensor dims differ: {a.dim} vs {b.dim}")
    available = min(a.order, b.order)
    if order is None:
        order = available
    elif order > available:
        raise JetBudgetError(f"contraction needs order {order}, operands have {available}")
    data = jet_einsum(subscripts, a.data, b.data, a.dim, order)
    return TensorJet(data, tuple(valence), a.dim, order)


def check_symmetry(tensor: TensorJet, axes: Sequence[int], sign: float, what: str, tol_rel: float = 1e-9) -> float:
    """Verify ``tensor`` equals ``sign`` times its permutation ``axes``.

    Returns the max deviation; raises :class:`TensorSymmetryError` when it
    exceeds ``tol_rel`` times the largest coefficient.
    """
    permuted = np.transpose(tensor.data, tuple(axes) + (tensor.rank,))
    deviation = float(np.max(np.abs(tensor.data - sign * permuted))) if tensor.data.size else 0.0
    scale = float(np.max(np.abs(tensor.data))) if tensor.data.size else 0.0
    if deviation > tol_rel * scale:
        raise TensorSymmetryError(ERROR_MESSAGES["tensor_symmetry"].format(detail=what, deviation=deviation))
    return deviation
