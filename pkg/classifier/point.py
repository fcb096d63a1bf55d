"""
Point-wise classification in the hierarchy
constant curvature => symmetric => 2-symmetric => semisymmetric.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from classifier.identities import curvature_action
from config import TOLERANCE_CONFIG
from exceptions import JetBudgetError
from invariants import Tolerance, curvature_operator, max_abs
from logger import get_logger

logger = get_logger()

HIERARCHY = ("constant_curvature", "symmetric", "two_symmetric", "semisymmetric")
VERDICT_NAMES = ("flat",) + HIERARCHY + ("ricci_flat", "generic")


@dataclass(frozen=True)
class PointClassification:
    """Residuals, scales and verdicts at one sample point.

    ``verdicts`` maps every name in VERDICT_NAMES to True/False, or None when
    the jet order does not reach the needed derivative. ``k_symmetric[k]`` is
    the verdict for nabla^k R = 0.
    """
    point: Tuple[float, ...]
    signature: Tuple[int, int]
    residuals: Dict[str, float]
    scales: Dict[str, float]
    verdicts: Dict[str, Optional[bool]]
    k_symmetric: Dict[int, bool] = field(default_factory=dict)
    scalar_curvature: float = 0.0
    grad_scalar: Optional[Tuple[float, ...]] = None
    grad_scalar_norm: Optional[float] = None
    hessian_residual: Optional[float] = None
    operator_ratio: float = 0.0
    hierarchy_consistent: bool = True

    @property
    def lorentzian(self) -> bool:
        return self.signature[0] == 1 and self.signature[1] >= 1

    def verdict(self, name: str) -> Optional[bool]:
        return self.verdicts.get(name)

    def hierarchy_violations(self) -> List[str]:
        """Implications a => b of the hierarchy that fail at this point."""
        return _hierarchy_violations(self.verdicts, self.k_symmetric)


def _hierarchy_violations(verdicts: Dict[str, Optional[bool]], k_symmetric: Dict[int, bool]) -> List[str]:
    broken = []
    chain = [(name, verdicts.get(name)) for name in HIERARCHY]
    for (stronger, a), (weaker, b) in zip(chain, chain[1:]):
        if a is True and b is False:
            broken.append(f"{stronger} => {weaker}")
    depths = sorted(k_symmetric)
    for k, k_next in zip(depths, depths[1:]):
        if k_symmetric[k] and not k_symmetric[k_next]:
            broken.append(f"{k}-symmetric => {k_next}-symmetric")
    return broken


def constant_curvature_residual(data) -> Tuple[np.ndarray, float]:
    """R_abcd - K (g_ac g_bd - g_ad g_bc) with K = R / (n (n - 1)), and its scale."""
    n = data.dim
    g = data.frame.g.values()
    r_dn = data.riemann_down.values()
    k = float(data.scalar.values()) / (n * (n - 1))
    model = k * (np.einsum("ac,bd->abcd", g, g) - np.einsum("ad,bc->abcd", g, g))
    return r_dn - model, max(max_abs(r_dn), abs(k) * max_abs(g) ** 2)


def semisymmetric_residual(data) -> Tuple[np.ndarray, float]:
    """Curvature acting on itself as a derivation; zero iff the space is semisymmetric."""
    r_ud = data.riemann_ud.values()
    r_dn = data.riemann_down.values()
    return curvature_action(r_ud, r_dn), 4 * max_abs(r_ud) * max_abs(r_dn)


def classify_point(data, tolerance: Tolerance = Tolerance(), k_depth: Optional[int] = None) -> PointClassification:
    """Independent zero tests of every hierarchy condition at one point.

    Raises:
        JetBudgetError: ``k_depth`` exceeds the computed derivative tower
    """
    if k_depth is not None and k_depth > data.depth:
        raise JetBudgetError(f"nabla^{k_depth} Riemann needs metric order {k_depth + 2}, have {data.order}")

    residuals: Dict[str, float] = {}
    scales: Dict[str, float] = {}
    verdicts: Dict[str, Optional[bool]] = {}

    def judge(name: str, value, scale: float) -> bool:
        residuals[name] = max_abs(value)
        scales[name] = float(scale)
        verdicts[name] = tolerance.is_zero(value, scale)
        return verdicts[name]

    frame_scale = data.frame.scale
    scalar = float(data.scalar.values())
    judge("flat", data.riemann_ud.values(), frame_scale)
    judge("constant_curvature", *constant_curvature_residual(data))
    if data.grad_scalar is not None:
        # pointwise isotropy alone holds in every 2D metric; K must also be stationary
        residuals["constant_curvature_gradient"] = max_abs(data.grad_scalar.values())
        scales["constant_curvature_gradient"] = max(frame_scale, abs(scalar))
        verdicts["constant_curvature"] = verdicts["constant_curvature"] and tolerance.is_zero(
            data.grad_scalar.values(), scales["constant_curvature_gradient"])
    judge("semisymmetric", *semisymmetric_residual(data))
    judge("ricci_flat", data.ricci.values(), frame_scale)

    k_symmetric: Dict[int, bool] = {}
    for k in range(1, data.depth + 1):
        residuals[f"k_symmetric_{k}"] = max_abs(data.derivative(k).values())
        scales[f"k_symmetric_{k}"] = frame_scale
        k_symmetric[k] = tolerance.is_zero(data.derivative(k).values(), frame_scale)
    for name, k in (("symmetric", 1), ("two_symmetric", 2)):
        if k in k_symmetric:
            residuals[name] = residuals[f"k_symmetric_{k}"]
            scales[name] = frame_scale
        verdicts[name] = k_symmetric.get(k)

    operator = curvature_operator(data, TOLERANCE_CONFIG["generic_ratio"], TOLERANCE_CONFIG["generic_floor"])
    verdicts["generic"] = operator.generic
    ratio = operator.sigma_min / operator.sigma_max if operator.sigma_max > 0 else 0.0

    grad = norm = hessian = None
    if data.grad_scalar is not None:
        grad_values = data.grad_scalar.values()
        grad = tuple(float(x) for x in grad_values)
        norm = float(grad_values @ data.frame.g_inv.values() @ grad_values)
        scales["grad_scalar"] = max(frame_scale, abs(scalar))
    if data.hessian_scalar is not None:
        hessian = max_abs(data.hessian_scalar.values())

    violations = _hierarchy_violations(verdicts, k_symmetric)
    if violations:
        logger.warning(f"hierarchy violated at {data.point}: {', '.join(violations)}")

    return PointClassification(
        point=tuple(data.point),
        signature=tuple(data.signature),
        residuals=residuals,
        scales=scales,
        verdicts={name: verdicts.get(name) for name in VERDICT_NAMES},
        k_symmetric=k_symmetric,
        scalar_curvature=scalar,
        grad_scalar=grad,
        grad_scalar_norm=norm,
        hessian_residual=hessian,
        operator_ratio=float(ratio),
        hierarchy_consistent=not violations,
    )
