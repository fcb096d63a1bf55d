"""
Curvature invariants, the curvature operator on 2-forms and zero tests.
"""

from invariants.operator import CurvatureOperator, curvature_operator, two_form_pairs
from invariants.scalars import ORDER_ONE_ONE_FORMS, ORDER_ONE_TWO_TENSORS, InvariantReport, scalar_invariants
from invariants.tolerance import Tolerance, factor_scale, max_abs, zero_test

__all__ = [
    'CurvatureOperator',
    'curvature_operator',
    'two_form_pairs',
    'ORDER_ONE_ONE_FORMS',
    'ORDER_ONE_TWO_TENSORS',
    'InvariantReport',
    'scalar_invariants',
    'Tolerance',
    'factor_scale',
    'max_abs',
    'zero_test',
]
