"""
Everything the classifier needs about the curvature at one sample point.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from config import RUN_DEFAULTS
from exceptions import JetBudgetError
from curvature.covariant import cov_derivative, derivative_tower
from curvature.frame import MetricFrame, build_frame
from curvature.tensors import move_indices, ricci_and_scalar, riemann, riemann_down, weyl
from jets import DOWN, TensorJet
from logger import get_logger
from metric_dsl import evaluate_metric

logger = get_logger()


@dataclass(frozen=True)
class PointData:
    point: Tuple[float, ...]
    signature: Tuple[int, int]
    frame: MetricFrame
    riemann_ud: TensorJet
    riemann_down: TensorJet
    ricci: TensorJet
    scalar: TensorJet
    weyl_down: TensorJet
    tower: Tuple[TensorJet, ...]
    grad_weyl: Optional[TensorJet]
    grad_scalar: Optional[TensorJet]
    hessian_scalar: Optional[TensorJet]

    @property
    def dim(self) -> int:
        return self.frame.dim

    @property
    def order(self) -> int:
        """Jet order K of the metric."""
        return self.frame.order

    @property
    def depth(self) -> int:
        return len(self.tower) - 1

    @property
    def lorentzian(self) -> bool:
        return self.signature == (1, self.dim - 1)

    def has_derivative(self, m: int) -> bool:
        return m <= self.depth

    def derivative(self, m: int) -> TensorJet:
        """nabla^m R^a_{bcd}, derivative indices first."""
        if not self.has_derivative(m):
            raise JetBudgetError(f"nabla^{m} Riemann not computed (depth {self.depth}, order {self.order})")
        return self.tower[m]

    def lowered_values(self, m: int) -> np.ndarray:
        """Values of nabla^m R_{abcd} with the Riemann up index lowered."""
        return move_indices(self.derivative(m).values(), self.frame.g.values(), (m,))

    def grad_ricci(self) -> TensorJet:
        """nabla_a R_{bd}, a contraction of nabla R."""
        d_riemann = self.derivative(1)
        data = np.einsum("arbrdZ->abdZ", d_riemann.data)
        return TensorJet(data, (DOWN, DOWN, DOWN), self.dim, d_riemann.order)


def tower_depth(order: int, k_depth: int = RUN_DEFAULTS["k_depth"]) -> int:
    """Depth of the nabla^m R tower computed for a metric of jet order ``order``."""
    return max(0, min(order - 2, max(2, k_depth)))


def point_data_from_metric(g: TensorJet, point: Sequence[float] = (), signature: Tuple[int, int] = None,
                           depth: int = None) -> PointData:
    """Curvature bundle from the metric jets ``g`` at one point."""
    if signature is None:
        eigenvalues = np.linalg.eigvalsh(g.values())
        negative = int(np.sum(eigenvalues < 0))
        signature = (negative, g.dim - negative)
    if depth is None:
        depth = tower_depth(g.order)

    frame = build_frame(g)
    riemann_ud = riemann(frame)
    r_down = riemann_down(frame, riemann_ud)
    ricci, scalar = ricci_and_scalar(frame, riemann_ud)
    weyl_down = weyl(frame, riemann_ud, ricci, scalar)
    frame = frame.with_scale(max(frame.scale, riemann_ud.max_abs()))

    tower = derivative_tower(riemann_ud, frame, depth)
    grad_weyl = cov_derivative(weyl_down, frame) if weyl_down.order >= 1 else None
    grad_scalar = scalar.partial() if scalar.order >= 1 else None
    hessian = None
    if grad_scalar is not None and grad_scalar.order >= 1:
        hessian = cov_derivative(grad_scalar, frame)

    return PointData(
        point=tuple(float(x) for x in point),
        signature=tuple(signature),
        frame=frame,
        riemann_ud=riemann_ud,
        riemann_down=r_down,
        ricci=ricci,
        scalar=scalar,
        weyl_down=weyl_down,
        tower=tuple(tower),
        grad_weyl=grad_weyl,
        grad_scalar=grad_scalar,
        hessian_scalar=hessian,
    )


def build_point_data(spec, point: Sequence[float], order: int, k_depth: int = RUN_DEFAULTS["k_depth"]) -> PointData:
    """Evaluate ``spec`` at ``point`` to order ``order`` and compute its curvature."""
    germ = evaluate_metric(spec, point, order)
    depth = tower_depth(order, k_depth)
    data = point_data_from_metric(germ.g, germ.point, germ.signature, depth)
    logger.debug(f"'{spec.name}' at {germ.point}: tower depth {depth}, scale {data.frame.scale:.3e}")
    return data
