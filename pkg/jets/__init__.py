"""
Truncated multivariate Taylor-jet arithmetic.
"""

from jets.jet import (
    Jet,
    jet_add,
    jet_constant,
    jet_mul,
    jet_partial,
    jet_pow,
    jet_recip,
    jet_scale,
    jet_sub,
    jet_truncate,
    jet_variable,
    jet_variables,
    jet_zero,
    newton_iterations,
    series_mul,
)
from jets.multi_index import coeff_count, index_table, partial_table, product_table
from jets.tensor_jet import DOWN, UP, TensorJet, check_symmetry, contract, jet_einsum
from jets.univariate import UNIVARIATE_SERIES, jet_apply_univariate, taylor_coefficients

__all__ = [
    'Jet',
    'jet_add',
    'jet_apply_univariate',
    'jet_constant',
    'jet_mul',
    'jet_partial',
    'jet_pow',
    'jet_recip',
    'jet_scale',
    'jet_sub',
    'jet_truncate',
    'jet_variable',
    'jet_variables',
    'jet_zero',
    'newton_iterations',
    'series_mul',
    'coeff_count',
    'index_table',
    'partial_table',
    'product_table',
    'taylor_coefficients',
    'UNIVARIATE_SERIES',
    'TensorJet',
    'UP',
    'DOWN',
    'check_symmetry',
    'contract',
    'jet_einsum',
]
