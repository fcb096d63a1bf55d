"""
Riemann tensor as an endomorphism of 2-forms.

Basis 2-forms are the pairs (a, b) with a < b in lexicographic order. The
matrix entry for row (a, b) and column (c, d) is R^{ab}_{cd}; acting with the
weight 1/2 on F_{cd} summed over all c, d equals summing over c < d only, so
constant curvature K gives exactly K times the identity.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple

import numpy as np

from config import TOLERANCE_CONFIG


@dataclass(frozen=True)
class CurvatureOperator:
    matrix: np.ndarray
    pairs: Tuple[Tuple[int, int], ...]
    sigma_min: float
    sigma_max: float
    generic: bool

    @property
    def size(self) -> int:
        return len(self.pairs)


def two_form_pairs(dim: int) -> List[Tuple[int, int]]:
    return list(combinations(range(dim), 2))


def curvature_operator(data, ratio: float = TOLERANCE_CONFIG["generic_ratio"],
                       floor: float = TOLERANCE_CONFIG["generic_floor"]) -> CurvatureOperator:
    """Operator matrix and genericity verdict from a point's Riemann values."""
    r_ud = data.riemann_ud.values()
    g_inv = data.frame.g_inv.values()
    mixed = np.einsum("bs,ascd->abcd", g_inv, r_ud)  # R^{ab}_{cd}
    pairs = two_form_pairs(data.dim)
    rows = np.array([p[0] for p in pairs]), np.array([p[1] for p in pairs])
    matrix = mixed[rows[0], rows[1]][:, rows[0], rows[1]]

    singular = np.linalg.svd(matrix, compute_uv=False)
    sigma_max = float(singular[0])
    sigma_min = float(singular[-1])
    generic = sigma_min > ratio * sigma_max and sigma_max > floor * data.frame.scale
    return CurvatureOperator(matrix, tuple(pairs), sigma_min, sigma_max, bool(generic))
