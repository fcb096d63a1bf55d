"""
Riemann, Ricci, scalar and Weyl curvature from a metric frame.

Conventions: R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb}
+ Gamma^a_{cr} Gamma^r_{db} - Gamma^a_{dr} Gamma^r_{cb}, Ricci R_{bd} = R^r_{brd},
signature (-, +, ..., +). The unit 2-sphere has scalar curvature +2.
"""

from typing import Sequence, Tuple

import numpy as np

from exceptions import CurvkitError, JetBudgetError
from curvature.frame import MetricFrame
from jets import DOWN, UP, TensorJet, check_symmetry, contract, jet_einsum


def riemann(frame: MetricFrame) -> TensorJet:
    """R^a_{bcd} at order K - 2; antisymmetric in cd by construction."""
    gamma = frame.christoffel
    if gamma.order < 1:
        raise JetBudgetError("Riemann tensor needs Christoffel order >= 1")
    n = frame.dim
    order = gamma.order - 1
    d_gamma = gamma.partial().data  # [c, a, b, d] = d_c Gamma^a_{bd}
    linear = np.einsum("gadbZ->abgdZ", d_gamma)
    quadratic = jet_einsum("agr,rdb->abgd", gamma.data, gamma.data, n, order)
    data = (linear - np.swapaxes(linear, 2, 3)) + (quadratic - np.swapaxes(quadratic, 2, 3))
    return TensorJet(data, (UP, DOWN, DOWN, DOWN), n, order)


def lower_first(frame: MetricFrame, tensor: TensorJet) -> TensorJet:
    """Lower the first index of a tensor whose first index is up."""
    letters = "bcdefghijk"[:tensor.rank - 1]
    return contract(f"ar,r{letters}->a{letters}", frame.g, tensor, (DOWN,) + tensor.valence[1:])


def move_indices(values: np.ndarray, metric: np.ndarray, axes: Sequence[int]) -> np.ndarray:
    """Raise (with g_inv) or lower (with g) the given axes of a value array."""
    for axis in axes:
        values = np.moveaxis(np.tensordot(metric, values, axes=([1], [axis])), 0, axis)
    return values


def riemann_down(frame: MetricFrame, riemann_ud: TensorJet) -> TensorJet:
    """R_{abcd}, with its pair symmetries verified."""
    down = lower_first(frame, riemann_ud)
    check_symmetry(down, (1, 0, 2, 3), -1.0, "R_abcd antisymmetric in ab", tol_rel=1e-8)
    check_symmetry(down, (2, 3, 0, 1), 1.0, "R_abcd pair exchange", tol_rel=1e-8)
    return down


def ricci_and_scalar(frame: MetricFrame, riemann_ud: TensorJet) -> Tuple[TensorJet, TensorJet]:
    """Ricci R_{bd} = R^r_{brd} and scalar R = g^{bd} R_{bd} (a rank-0 tensor)."""
    ricci = TensorJet(np.einsum("rbrdZ->bdZ", riemann_ud.data), (DOWN, DOWN), riemann_ud.dim, riemann_ud.order)
    scalar = contract("bd,bd->", frame.g_inv, ricci, ())
    return ricci, scalar


def _outer(a: TensorJet, b: TensorJet, order: int) -> np.ndarray:
    return jet_einsum("al,bm->ablm", a.data, b.data, a.dim, order)


def weyl(frame: MetricFrame, riemann_ud: TensorJet, ricci: TensorJet, scalar: TensorJet) -> TensorJet:
    """Weyl tensor C_{abcd}; identically zero for n = 2, 3."""
    n = frame.dim
    if n < 2:
        raise CurvkitError(f"Weyl tensor undefined for dim {n}")
    order = riemann_ud.order
    if n <= 3:
        return TensorJet.zeros(n, order, (DOWN,) * 4)
    r_down = lower_first(frame, riemann_ud).data
    ric_g = _outer(ricci, frame.g, order)  # R_al g_bm
    ricci_part = (
        ric_g
        - np.swapaxes(ric_g, 2, 3)
        + np.transpose(ric_g, (1, 0, 3, 2, 4))
        - np.swapaxes(ric_g, 0, 1)
    )
    g_g = _outer(frame.g, frame.g, order)
    metric_part = g_g - np.swapaxes(g_g, 2, 3)
    scalar_part = jet_einsum(",ablm->ablm", scalar.data, metric_part, n, order)
    data = r_down - ricci_part / (n - 2) + scalar_part / ((n - 1) * (n - 2))
    return TensorJet(data, (DOWN,) * 4, n, order)


def recompose_riemann(frame: MetricFrame, weyl_down: TensorJet, ricci: TensorJet, scalar: TensorJet) -> np.ndarray:
    """Riemann R_{abcd} values rebuilt from Weyl, Ricci and R by the decomposition."""
    n = frame.dim
    g = frame.g.values()
    ric = ricci.values()
    r = float(scalar.values())
    if n <= 2:
        # in two dimensions R_abcd = (R/2)(g_ac g_bd - g_ad g_bc)
        gg = np.einsum("al,bm->ablm", g, g)
        return 0.5 * r * (gg - np.swapaxes(gg, 2, 3))
    ric_g = np.einsum("al,bm->ablm", ric, g)
    ricci_part = ric_g - np.swapaxes(ric_g, 2, 3) + np.transpose(ric_g, (1, 0, 3, 2)) - np.swapaxes(ric_g, 0, 1)
    gg = np.einsum("al,bm->ablm", g, g)
    metric_part = gg - np.swapaxes(gg, 2, 3)
    return weyl_down.values() + ricci_part / (n - 2) - r * metric_part / ((n - 1) * (n - 2))
