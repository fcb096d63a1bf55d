"""
Metric frame: metric, inverse metric and Levi-Civita connection as jets.
"""

from dataclasses import dataclass, replace

import numpy as np

from config import TOLERANCE_CONFIG
from exceptions import DegenerateMetricError, JetBudgetError
from jets import DOWN, UP, TensorJet, contract, newton_iterations


@dataclass(frozen=True)
class MetricFrame:
    """g at order K, g_inv at order K, christoffel at order K - 1.

    ``scale`` is the largest magnitude among metric and Riemann components and
    feeds tolerance scaling; until Riemann is known it is the metric's.
    """
    g: TensorJet
    g_inv: TensorJet
    christoffel: TensorJet
    scale: float

    @property
    def dim(self) -> int:
        return self.g.dim

    @property
    def order(self) -> int:
        return self.g.order

    def with_scale(self, scale: float) -> "MetricFrame":
        return replace(self, scale=float(scale))


def inverse_metric_jets(g: TensorJet) -> TensorJet:
    """Jet-valued matrix inverse of g by Newton iteration X <- 2X - X g X."""
    n = g.dim
    values = g.values()
    scale = float(np.max(np.abs(values)))
    det = float(np.linalg.det(values))
    if scale == 0.0 or abs(det) < TOLERANCE_CONFIG["degenerate_metric"] * scale ** n:
        raise DegenerateMetricError((), det)
    x = TensorJet.zeros(n, g.order, (UP, UP))
    data = np.array(x.data)
    data[..., 0] = np.linalg.inv(values)
    x = TensorJet(data, (UP, UP), n, g.order)
    if g.order == 0:
        return x
    for _ in range(newton_iterations(g.order)):
        xg = contract("ij,jk->ik", x, g, (UP, DOWN))
        xgx = contract("ij,jk->ik", xg, x, (UP, UP))
        x = x.scaled(2.0) - xgx
    return x


def christoffel(g: TensorJet, g_inv: TensorJet) -> TensorJet:
    """Gamma^a_{bc} = 1/2 g^{ar} (d_b g_rc + d_c g_rb - d_r g_bc), symmetrized in bc."""
    if g.order < 1:
        raise JetBudgetError("Christoffel symbols need metric order >= 1")
    dg = g.partial().data  # [c, a, b] = d_c g_ab
    first_kind = 0.5 * (
        np.einsum("brgZ->rbgZ", dg)
        + np.einsum("grbZ->rbgZ", dg)
        - dg
    )
    lowered = TensorJet(first_kind, (DOWN, DOWN, DOWN), g.dim, g.order - 1)
    gamma = contract("ar,rbg->abg", g_inv, lowered, (UP, DOWN, DOWN))
    return TensorJet(0.5 * (gamma.data + np.swapaxes(gamma.data, 1, 2)), gamma.valence, g.dim, gamma.order)


def build_frame(g: TensorJet) -> MetricFrame:
    g_inv = inverse_metric_jets(g)
    gamma = christoffel(g, g_inv)
    return MetricFrame(g=g, g_inv=g_inv, christoffel=gamma, scale=g.max_abs())
