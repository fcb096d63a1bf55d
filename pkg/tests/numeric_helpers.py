"""
Finite-difference helpers shared by the numeric tests.
"""

import math
from itertools import product
from typing import Callable, Iterator, Sequence, Tuple

from jets import jet_apply_univariate


def fd_derivative(f: Callable[..., float], point: Sequence[float], alpha: Sequence[int], h: float = 4e-3) -> float:
    """Nested central differences with one Richardson step per level."""
    alpha = list(alpha)
    if not any(alpha):
        return f(*point)
    i = next(k for k, a in enumerate(alpha) if a > 0)
    lower = alpha.copy()
    lower[i] -= 1

    def central(step: float) -> float:
        plus = list(point)
        minus = list(point)
        plus[i] += step
        minus[i] -= step
        return (fd_derivative(f, plus, lower, h) - fd_derivative(f, minus, lower, h)) / (2 * step)

    return (4 * central(h / 2) - central(h)) / 3


def multi_indices(dim: int, max_degree: int) -> Iterator[Tuple[int, ...]]:
    for alpha in product(range(max_degree + 1), repeat=dim):
        if sum(alpha) <= max_degree:
            yield alpha


def close(a: float, b: float, rel: float) -> bool:
    return abs(a - b) <= rel * max(1.0, abs(b))


class FloatOps:
    """Library functions on floats."""
    sin = staticmethod(math.sin)
    cos = staticmethod(math.cos)
    tan = staticmethod(math.tan)
    exp = staticmethod(math.exp)
    log = staticmethod(math.log)
    sqrt = staticmethod(math.sqrt)
    sinh = staticmethod(math.sinh)
    cosh = staticmethod(math.cosh)
    tanh = staticmethod(math.tanh)


class JetOps:
    """Library functions on jets."""
    sin = staticmethod(lambda a: jet_apply_univariate("sin", a))
    cos = staticmethod(lambda a: jet_apply_univariate("cos", a))
    tan = staticmethod(lambda a: jet_apply_univariate("tan", a))
    exp = staticmethod(lambda a: jet_apply_univariate("exp", a))
    log = staticmethod(lambda a: jet_apply_univariate("log", a))
    sqrt = staticmethod(lambda a: jet_apply_univariate("sqrt", a))
    sinh = staticmethod(lambda a: jet_apply_univariate("sinh", a))
    cosh = staticmethod(lambda a: jet_apply_univariate("cosh", a))
    tanh = staticmethod(lambda a: jet_apply_univariate("tanh", a))


# composite expressions in two variables, written once for floats and jets
EXPRESSION_CORPUS = [
    lambda ops, x, y: x * y + x ** 2,
    lambda ops, x, y: ops.sin(x) * ops.cos(y),
    lambda ops, x, y: ops.exp(x * y),
    lambda ops, x, y: ops.log(1 + x ** 2 + y ** 2),
    lambda ops, x, y: ops.sqrt(2 + x * y),
    lambda ops, x, y: ops.tan(x - y),
    lambda ops, x, y: ops.tanh(x + 2 * y),
    lambda ops, x, y: ops.sinh(x) * ops.cosh(y),
    lambda ops, x, y: 1 / (2 + x + y ** 2),
    lambda ops, x, y: (x - y) ** 3 / (1 + x ** 2),
    lambda ops, x, y: ops.exp(ops.sin(x)) * y,
    lambda ops, x, y: ops.log(ops.cosh(x * y) + 1),
    lambda ops, x, y: ops.sqrt(x ** 2 + y ** 2 + 1) ** -1,
    lambda ops, x, y: ops.sin(x * y ** 2) + ops.cos(x ** 2 * y),
    lambda ops, x, y: x ** 4 * y - 3 * x * y ** 3,
    lambda ops, x, y: ops.exp(-x ** 2 - y ** 2),
    lambda ops, x, y: ops.tan(0.3 * x) * ops.exp(y),
    lambda ops, x, y: (x + 2) ** -2 * ops.sin(y),
    lambda ops, x, y: ops.log(2 + ops.sin(x) * ops.cos(y)),
    lambda ops, x, y: ops.tanh(x) / (1 + ops.sinh(y) ** 2),
]
