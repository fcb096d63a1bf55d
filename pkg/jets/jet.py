"""
Truncated multivariate Taylor jets.

A :class:`Jet` holds the coefficients ``(d^alpha f)(p) / alpha!`` of a scalar
field at a point ``p`` for every multi-index of degree <= order. Jets are
immutable; all operations return new jets.
"""

from dataclasses import dataclass
from math import ceil, log2
from numbers import Real
from typing import Sequence, Union

import numpy as np

from config import ERROR_MESSAGES, JET_CONFIG
from exceptions import DegenerateGermError, JetBudgetError, JetShapeError
from jets.multi_index import MultiIndex, coeff_count, index_table, partial_table, product_table


@dataclass(frozen=True, eq=False)
class Jet:
    dim: int
    order: int
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=float)
        expected = coeff_count(self.dim, self.order)
        if coeffs.shape != (expected,):
            raise JetShapeError(
                f"jet of dim {self.dim}, order {self.order} needs {expected} coefficients, got {coeffs.shape}")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    # accessors

    def value(self) -> float:
        return float(self.coeffs[0])

    def coeff(self, alpha: MultiIndex) -> float:
        return float(self.coeffs[index_table(self.dim, self.order).position(alpha)])

    def derivative(self, alpha: MultiIndex) -> float:
        """Partial derivative d^alpha f at the base point."""
        table = index_table(self.dim, self.order)
        pos = table.position(alpha)
        return float(self.coeffs[pos] * table.factorials[pos])

    def truncate(self, order: int) -> "Jet":
        return jet_truncate(self, order)

    def partial(self, i: int) -> "Jet":
        return jet_partial(self, i)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    # arithmetic

    def __add__(self, other):
        return jet_add(self, other)

    def __radd__(self, other):
        return jet_add(self, other)

    def __sub__(self, other):
        return jet_sub(self, other)

    def __rsub__(self, other):
        return jet_add(jet_scale(self, -1.0), other)

    def __neg__(self):
        return jet_scale(self, -1.0)

    def __mul__(self, other):
        if isinstance(other, Jet):
            return jet_mul(self, other)
        return jet_scale(self, other)

    def __rmul__(self, other):
        return jet_scale(self, other)

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return jet_mul(self, jet_recip(other))
        return jet_scale(self, 1.0 / float(other))

    def __rtruediv__(self, other):
        return jet_scale(jet_recip(self), other)

    def __pow__(self, exponent: int):
        return jet_pow(self, exponent)

    def __repr__(self):
        return f"Jet(dim={self.dim}, order={self.order}, value={self.value():.6g})"


JetLike = Union[Jet, Real]


def _check_same_shape(a: Jet, b: Jet) -> None:
    if a.dim != b.dim or a.order != b.order:
        raise JetShapeError(ERROR_MESSAGES["jet_shape"].format(
            dim_a=a.dim, order_a=a.order, dim_b=b.dim, order_b=b.order))


def _lift(value: Real, like: Jet) -> Jet:
    return jet_constant(float(value), like.dim, like.order)


def jet_constant(value: float, dim: int, order: int) -> Jet:
    coeffs = np.zeros(coeff_count(dim, order))
    coeffs[0] = value
    return Jet(dim, order, coeffs)


def jet_zero(dim: int, order: int) -> Jet:
    return jet_constant(0.0, dim, order)


def jet_variable(i: int, value: float, dim: int, order: int) -> Jet:
    """Jet of the i-th coordinate function at a point where x^i = value."""
    if not 0 <= i < dim:
        raise JetShapeError(ERROR_MESSAGES["jet_index"].format(index=i, dim=dim))
    table = index_table(dim, order)
    coeffs = np.zeros(table.size)
    coeffs[0] = value
    if order >= 1:
        # degree-1 block is e_0, e_1, ... in that order
        coeffs[1 + i] = 1.0
    return Jet(dim, order, coeffs)


def jet_variables(point: Sequence[float], order: int):
    """Coordinate jets for every coordinate of ``point``."""
    dim = len(point)
    return [jet_variable(i, float(x), dim, order) for i, x in enumerate(point)]


def jet_add(a: Jet, b: JetLike) -> Jet:
    if not isinstance(b, Jet):
        b = _lift(b, a)
    _check_same_shape(a, b)
    return Jet(a.dim, a.order, a.coeffs + b.coeffs)


def jet_sub(a: Jet, b: JetLike) -> Jet:
    if not isinstance(b, Jet):
        b = _lift(b, a)
    _check_same_shape(a, b)
    return Jet(a.dim, a.order, a.coeffs - b.coeffs)


def jet_scale(a: Jet, b: JetLike) -> Jet:
    if isinstance(b, Jet):
        return jet_mul(a, b)
    return Jet(a.dim, a.order, a.coeffs * float(b))


def series_mul(a: np.ndarray, b: np.ndarray, dim: int, order: int) -> np.ndarray:
    """Truncated Cauchy product of coefficient arrays along their last axis."""
    table = product_table(dim, order)
    prod = a[..., table.left] * b[..., table.right]
    return np.add.reduceat(prod, table.starts, axis=-1)


def jet_mul(a: Jet, b: Jet) -> Jet:
    _check_same_shape(a, b)
    return Jet(a.dim, a.order, series_mul(a.coeffs, b.coeffs, a.dim, a.order))


def newton_iterations(order: int) -> int:
    """Iterations of the quadratically convergent series inverse for a given order."""
    return int(ceil(log2(order + 1))) + 1


def jet_recip(a: Jet) -> Jet:
    """Reciprocal jet by Newton iteration r <- r (2 - a r)."""
    a0 = a.value()
    if abs(a0) < JET_CONFIG["invertibility_threshold"]:
        raise DegenerateGermError(ERROR_MESSAGES["near_zero_germ"].format(value=a0))
    r = np.zeros_like(a.coeffs)
    r[0] = 1.0 / a0
    two = np.zeros_like(a.coeffs)
    two[0] = 2.0
    for _ in range(newton_iterations(a.order) if a.order > 0 else 0):
        ar = series_mul(a.coeffs, r, a.dim, a.order)
        r = series_mul(r, two - ar, a.dim, a.order)
    return Jet(a.dim, a.order, r)


def jet_pow(a: Jet, exponent: int) -> Jet:
    """Integer power by binary exponentiation; negative powers use the reciprocal."""
    if int(exponent) != exponent:
        raise JetShapeError(ERROR_MESSAGES["non_integer_exponent"])
    exponent = int(exponent)
    base = jet_recip(a) if exponent < 0 else a
    n = abs(exponent)
    result = jet_constant(1.0, a.dim, a.order)
    while n:
        if n & 1:
            result = jet_mul(result, base)
        n >>= 1
        if n:
            base = jet_mul(base, base)
    return result


def jet_truncate(a: Jet, order: int) -> Jet:
    if order > a.order:
        raise JetBudgetError(f"cannot raise jet order {a.order} to {order}")
    if order < 0:
        raise JetBudgetError(f"negative order {order}")
    return Jet(a.dim, order, a.coeffs[:coeff_count(a.dim, order)])


def jet_partial(a: Jet, i: int) -> Jet:
    """Jet of df/dx^i, one order lower."""
    if a.order < 1:
        raise JetBudgetError(f"partial derivative of order-0 jet along x^{i}")
    table = partial_table(a.dim, a.order, i)
    return Jet(a.dim, a.order - 1, a.coeffs[table.source] * table.factor)
