"""
Point-wise and sampled classification, identity suite, holonomy kernel and
theorem consistency findings.
"""

from classifier.aggregate import (ClassificationReport, PointResult, SkippedPoint, aggregate, conjoin,
                                  evaluate_point, sample_points)
from classifier.consistency import FAIL, FINDING_NAMES, NOT_APPLICABLE, PASS, Finding, theorem_consistency
from classifier.holonomy import HolonomyReport, KernelVector, causal_character, holonomy_kernel
from classifier.identities import IDENTITY_NAMES, IdentityResult, curvature_action, identity_suite
from classifier.point import HIERARCHY, VERDICT_NAMES, PointClassification, classify_point

__all__ = [
    'ClassificationReport',
    'PointResult',
    'SkippedPoint',
    'aggregate',
    'conjoin',
    'evaluate_point',
    'sample_points',
    'FAIL',
    'FINDING_NAMES',
    'NOT_APPLICABLE',
    'PASS',
    'Finding',
    'theorem_consistency',
    'HolonomyReport',
    'KernelVector',
    'causal_character',
    'holonomy_kernel',
    'IDENTITY_NAMES',
    'IdentityResult',
    'curvature_action',
    'identity_suite',
    'HIERARCHY',
    'VERDICT_NAMES',
    'PointClassification',
    'classify_point',
]
