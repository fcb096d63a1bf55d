"""
Levi-Civita connection, curvature tensors and covariant derivatives as jets.
"""

from curvature.covariant import cov_derivative, derivative_tower
from curvature.frame import MetricFrame, build_frame, christoffel, inverse_metric_jets
from curvature.point_data import PointData, build_point_data, point_data_from_metric, tower_depth
from curvature.tensors import lower_first, move_indices, recompose_riemann, ricci_and_scalar, riemann, riemann_down, weyl

__all__ = [
    'cov_derivative',
    'derivative_tower',
    'MetricFrame',
    'build_frame',
    'christoffel',
    'inverse_metric_jets',
    'PointData',
    'build_point_data',
    'point_data_from_metric',
    'tower_depth',
    'lower_first',
    'move_indices',
    'recompose_riemann',
    'ricci_and_scalar',
    'riemann',
    'riemann_down',
    'weyl',
]
