"""
Scale-aware zero tests.
"""

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from config import TOLERANCE_CONFIG


def zero_test(value, scale: float, tol_abs: float = TOLERANCE_CONFIG["tol_abs"],
              tol_rel: float = TOLERANCE_CONFIG["tol_rel"]) -> bool:
    """True iff |value| <= tol_abs + tol_rel * scale; arrays are judged by their largest entry."""
    magnitude = max_abs(value)
    return magnitude <= tol_abs + tol_rel * max(float(scale), 0.0)


def max_abs(value) -> float:
    array = np.asarray(value, dtype=float)
    return float(np.max(np.abs(array))) if array.size else 0.0


def factor_scale(factors: Iterable) -> float:
    """Product of the largest magnitudes of the factors entering a contraction."""
    scale = 1.0
    for factor in factors:
        scale *= max_abs(factor)
    return scale


@dataclass(frozen=True)
class Tolerance:
    tol_abs: float = TOLERANCE_CONFIG["tol_abs"]
    tol_rel: float = TOLERANCE_CONFIG["tol_rel"]

    def is_zero(self, value, scale: float) -> bool:
        return zero_test(value, scale, self.tol_abs, self.tol_rel)

    def threshold(self, scale: float) -> float:
        return self.tol_abs + self.tol_rel * max(float(scale), 0.0)

    @classmethod
    def from_run_config(cls, run_config) -> "Tolerance":
        return cls(tol_abs=run_config.tol_abs, tol_rel=run_config.tol_rel)
