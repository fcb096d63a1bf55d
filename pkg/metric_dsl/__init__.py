"""
Metric definition language: parsing, emitting and jet evaluation.
"""

from metric_dsl.ast_nodes import BinOp, Call, CoordRef, Expr, Neg, Number, ParamRef, Power, emit_expression, free_names
from metric_dsl.evaluator import MetricGerm, constant_value, eval_expression, evaluate_metric, metric_value
from metric_dsl.parser import emit_metric_file, parse_expression, parse_metric_file
from metric_dsl.spec import MetricSpec, Point, default_domain

__all__ = [
    'BinOp',
    'Call',
    'CoordRef',
    'Expr',
    'Neg',
    'Number',
    'ParamRef',
    'Power',
    'emit_expression',
    'free_names',
    'MetricGerm',
    'constant_value',
    'eval_expression',
    'evaluate_metric',
    'metric_value',
    'emit_metric_file',
    'parse_expression',
    'parse_metric_file',
    'MetricSpec',
    'Point',
    'default_domain',
]
