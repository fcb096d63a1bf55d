"""
Composition of jets with the univariate library functions.

Each function supplies its Taylor coefficients c_k = f^(k)(x0)/k! at the base
value x0; the composite is evaluated by Horner's rule on h = a - x0, which is
nilpotent of degree order + 1.
"""

import math
from typing import Callable, Dict

import numpy as np

from config import ERROR_MESSAGES
from exceptions import FunctionDomainError
from jets.jet import Jet, series_mul

SeriesFn = Callable[[float, int], np.ndarray]


def _domain_error(name: str, x0: float) -> FunctionDomainError:
    return FunctionDomainError(ERROR_MESSAGES["function_domain"].format(function=name, value=x0), function=name)


def _inv_factorials(order: int) -> np.ndarray:
    return np.array([1.0 / math.factorial(k) for k in range(order + 1)])


def _exp_series(x0: float, order: int) -> np.ndarray:
    return math.exp(x0) * _inv_factorials(order)


def _log_series(x0: float, order: int) -> np.ndarray:
    if x0 <= 0.0:
        raise _domain_error("log", x0)
    c = np.empty(order + 1)
    c[0] = math.log(x0)
    for k in range(1, order + 1):
        c[k] = (-1.0) ** (k + 1) / (k * x0 ** k)
    return c


def _sqrt_series(x0: float, order: int) -> np.ndarray:
    if x0 <= 0.0:
        raise _domain_error("sqrt", x0)
    c = np.empty(order + 1)
    binom = 1.0
    for k in range(order + 1):
        c[k] = binom * x0 ** (0.5 - k)
        binom *= (0.5 - k) / (k + 1)
    return c


def _sin_series(x0: float, order: int) -> np.ndarray:
    return np.array([math.sin(x0 + k * math.pi / 2) for k in range(order + 1)]) * _inv_factorials(order)


def _cos_series(x0: float, order: int) -> np.ndarray:
    return np.array([math.cos(x0 + k * math.pi / 2) for k in range(order + 1)]) * _inv_factorials(order)


def _sinh_series(x0: float, order: int) -> np.ndarray:
    sh, ch = math.sinh(x0), math.cosh(x0)
    return np.array([sh if k % 2 == 0 else ch for k in range(order + 1)]) * _inv_factorials(order)


def _cosh_series(x0: float, order: int) -> np.ndarray:
    sh, ch = math.sinh(x0), math.cosh(x0)
    return np.array([ch if k % 2 == 0 else sh for k in range(order + 1)]) * _inv_factorials(order)


def series_divide(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    """Quotient of two univariate power series."""
    q = np.zeros_like(num)
    for k in range(len(num)):
        q[k] = (num[k] - np.dot(den[1:k + 1], q[k - 1::-1][:k])) / den[0]
    return q


def _tan_series(x0: float, order: int) -> np.ndarray:
    cos_part = _cos_series(x0, order)
    if abs(cos_part[0]) < 1e-12:
        raise _domain_error("tan", x0)
    return series_divide(_sin_series(x0, order), cos_part)


def _tanh_series(x0: float, order: int) -> np.ndarray:
    return series_divide(_sinh_series(x0, order), _cosh_series(x0, order))


UNIVARIATE_SERIES: Dict[str, SeriesFn] = {
    "exp": _exp_series,
    "log": _log_series,
    "sqrt": _sqrt_series,
    "sin": _sin_series,
    "cos": _cos_series,
    "tan": _tan_series,
    "sinh": _sinh_series,
    "cosh": _cosh_series,
    "tanh": _tanh_series,
}


def taylor_coefficients(name: str, x0: float, order: int) -> np.ndarray:
    """Coefficients f^(k)(x0)/k! for k = 0..order."""
    try:
        series = UNIVARIATE_SERIES[name]
    except KeyError:
        raise FunctionDomainError(ERROR_MESSAGES["unknown_function"].format(function=name), function=name)
    if not math.isfinite(x0):
        raise _domain_error(name, x0)
    return series(x0, order)


def jet_apply_univariate(name: str, a: Jet) -> Jet:
    """Compose the named library function with a jet."""
    x0 = a.value()
    c = taylor_coefficients(name, x0, a.order)
    h = a.coeffs.copy()
    h[0] = 0.0
    result = np.zeros_like(a.coeffs)
    result[0] = c[-1]
    for k in range(a.order - 1, -1, -1):
        result = series_mul(result, h, a.dim, a.order)
        result[0] += c[k]
    return Jet(a.dim, a.order, result)
