"""
Evaluation of component expressions and of whole metrics as jets at a point.
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from config import ERROR_MESSAGES, RUN_DEFAULTS, TOLERANCE_CONFIG
from exceptions import DegenerateGermError, DegenerateMetricError, FunctionDomainError, JetBudgetError
from jets import Jet, TensorJet, jet_apply_univariate, jet_constant, jet_pow, jet_recip, jet_variables
from jets.tensor_jet import DOWN
from logger import get_logger
from metric_dsl.ast_nodes import BinOp, Call, CoordRef, Expr, Neg, Number, ParamRef, Power

logger = get_logger()


def _evaluate(node: Expr, variables: List[Jet], params: Dict[str, float], dim: int, order: int) -> Jet:
    if isinstance(node, Number):
        return jet_constant(node.value, dim, order)
    if isinstance(node, CoordRef):
        return variables[node.index]
    if isinstance(node, ParamRef):
        return jet_constant(params[node.name], dim, order)
    if isinstance(node, Neg):
        return -_evaluate(node.operand, variables, params, dim, order)
    if isinstance(node, Power):
        return jet_pow(_evaluate(node.base, variables, params, dim, order), node.exponent)
    if isinstance(node, Call):
        return jet_apply_univariate(node.function, _evaluate(node.argument, variables, params, dim, order))
    if isinstance(node, BinOp):
        left = _evaluate(node.left, variables, params, dim, order)
        right = _evaluate(node.right, variables, params, dim, order)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        try:
            return left * jet_recip(right)
        except DegenerateGermError as exc:
            raise FunctionDomainError(f"division by zero ({exc})", function="/")
    raise TypeError(f"not an expression node: {node!r}")


def eval_expression(ast: Expr, spec, point: Sequence[float], order: int) -> Jet:
    """Jet of an expression at ``point``, each coordinate seeded as a jet variable."""
    point = spec.check_point(point)
    return _evaluate(ast, jet_variables(point, order), spec.param_values(), spec.dim, order)


def constant_value(ast: Expr) -> float:
    """Value of an expression without coordinates or parameters."""
    return _evaluate(ast, [], {}, 1, 0).value()


@dataclass(frozen=True)
class MetricGerm:
    """Metric components as jets at one point, with the signature of the value matrix."""
    point: Tuple[float, ...]
    g: TensorJet
    negative: int
    positive: int

    @property
    def lorentzian(self) -> bool:
        return self.negative == 1 and self.positive == self.g.dim - 1

    @property
    def signature(self) -> Tuple[int, int]:
        return self.negative, self.positive


def _metric_germ(spec, point: Sequence[float], order: int) -> MetricGerm:
    """Every component of ``spec`` at ``point`` as a symmetric grid of jets."""
    point = spec.check_point(point)
    variables = jet_variables(point, order)
    params = spec.param_values()
    n = spec.dim
    zero = jet_constant(0.0, n, order)
    grid = [[zero] * n for _ in range(n)]
    for (i, j), expr in spec.components:
        try:
            jet = _evaluate(expr, variables, params, n, order)
        except (FunctionDomainError, DegenerateGermError) as exc:
            raise FunctionDomainError(
                ERROR_MESSAGES["component_domain"].format(i=i, j=j, error=exc.message),
                function=getattr(exc, "function", None))
        grid[i][j] = jet
        grid[j][i] = jet
    g = TensorJet.from_jets(grid, (DOWN, DOWN))

    values = g.values()
    scale = float(np.max(np.abs(values)))
    det = float(np.linalg.det(values))
    if scale == 0.0 or abs(det) < TOLERANCE_CONFIG["degenerate_metric"] * scale ** n:
        raise DegenerateMetricError(point, det)
    eigenvalues = np.linalg.eigvalsh(values)
    negative = int(np.sum(eigenvalues < 0))
    germ = MetricGerm(point, g, negative, n - negative)
    if not germ.lorentzian:
        logger.debug(f"'{spec.name}' has signature ({germ.negative}, {germ.positive}) at {point}")
    return germ


def evaluate_metric(spec, point: Sequence[float], order: int) -> MetricGerm:
    """Metric germ to jet order ``order``; curvature needs at least second derivatives.

    Raises:
        JetBudgetError: ``order`` is below 2
        DegenerateMetricError: the value matrix is singular at ``point``
    """
    if order < RUN_DEFAULTS["min_order"]:
        raise JetBudgetError(f"metric germ of order {order}; curvature needs order >= {RUN_DEFAULTS['min_order']}")
    return _metric_germ(spec, point, order)


def metric_value(spec, point: Sequence[float]) -> MetricGerm:
    """Order-0 germ: the value matrix and its signature only."""
    return _metric_germ(spec, point, 0)
