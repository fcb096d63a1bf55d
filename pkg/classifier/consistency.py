"""
Theorem consistency findings.

Each finding is an implication between computed quantities that must hold
whenever its premise does. A point where the premise is false does not count;
a point where the premise holds and the conclusion fails is the witness.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from invariants import Tolerance, zero_test

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"

# (status, detail) for one point; status None means the premise does not hold
PointCheck = Tuple[Optional[str], str]


@dataclass(frozen=True)
class Finding:
    name: str
    status: str
    applicable_points: int
    witness_index: Optional[int] = None
    witness: Optional[Tuple[float, ...]] = None
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == FAIL


def _null_kernel_for_proper_two_symmetric(result, tolerance) -> PointCheck:
    c = result.classification
    if not (c.lorentzian and c.verdict("two_symmetric") is True and c.verdict("symmetric") is False):
        return None, ""
    if result.holonomy is None:
        return None, "holonomy not computed"
    if result.holonomy.contains_null:
        return PASS, ""
    return FAIL, f"tangent kernel {result.holonomy.characters or 'is zero'} has no null vector"


def _generic_semisymmetric_constant_curvature(result, tolerance) -> PointCheck:
    c = result.classification
    if not (c.verdict("semisymmetric") is True and c.verdict("generic") is True):
        return None, ""
    if c.verdict("constant_curvature") is True:
        return PASS, ""
    return FAIL, f"constant-curvature residual {c.residuals['constant_curvature']:.3e}"


def _invariants_vanish_without_null_kernel(result, tolerance) -> PointCheck:
    c = result.classification
    if c.verdict("two_symmetric") is not True or result.holonomy is None or result.holonomy.contains_null:
        return None, ""
    if result.invariants is None or not result.invariants.order_one:
        return None, "order-1 invariants not computed"
    survivors = result.invariants.nonvanishing_listed(tolerance)
    if not survivors:
        return PASS, ""
    return FAIL, f"nonzero invariants: {', '.join(survivors)}"


def _scalar_gradient_null_parallel(result, tolerance) -> PointCheck:
    c = result.classification
    if c.verdict("two_symmetric") is not True or c.grad_scalar is None:
        return None, ""
    scale = c.scales["grad_scalar"]
    if zero_test(c.grad_scalar, scale, tolerance.tol_abs, tolerance.tol_rel):
        return None, ""
    gradient = max(abs(x) for x in c.grad_scalar)
    problems = []
    if not tolerance.is_zero(c.grad_scalar_norm, gradient * gradient * scale):
        problems.append(f"g(dR, dR) = {c.grad_scalar_norm:.3e}")
    if c.hessian_residual is not None and not tolerance.is_zero(c.hessian_residual, scale):
        problems.append(f"|nabla nabla R| = {c.hessian_residual:.3e}")
    return (FAIL, "; ".join(problems)) if problems else (PASS, "")


def _hierarchy_ordering(result, tolerance) -> PointCheck:
    broken = result.classification.hierarchy_violations()
    return (FAIL, "; ".join(broken)) if broken else (PASS, "")


def _ricci_flat_or_symmetric(result, tolerance) -> PointCheck:
    c = result.classification
    if not (c.lorentzian and c.verdict("two_symmetric") is True):
        return None, ""
    if result.holonomy is None or result.holonomy.contains_null:
        return None, ""
    if c.verdict("ricci_flat") or c.verdict("symmetric"):
        return PASS, ""
    return FAIL, f"Ricci residual {c.residuals['ricci_flat']:.3e} with nabla R residual {c.residuals['symmetric']:.3e}"


CHECKS: Tuple[Tuple[str, Callable[..., PointCheck]], ...] = (
    ("null_kernel_for_proper_two_symmetric", _null_kernel_for_proper_two_symmetric),
    ("generic_semisymmetric_constant_curvature", _generic_semisymmetric_constant_curvature),
    ("invariants_vanish_without_null_kernel", _invariants_vanish_without_null_kernel),
    ("scalar_gradient_null_parallel", _scalar_gradient_null_parallel),
    ("hierarchy_ordering", _hierarchy_ordering),
    ("ricci_flat_or_symmetric", _ricci_flat_or_symmetric),
)

FINDING_NAMES = tuple(name for name, _ in CHECKS)


def theorem_consistency(results: Sequence, tolerance: Tolerance = Tolerance()) -> List[Finding]:
    """One finding per check over all point results, failing with the first witness."""
    findings = []
    for name, check in CHECKS:
        applicable = 0
        failure = None
        for result in results:
            status, detail = check(result, tolerance)
            if status is None:
                continue
            applicable += 1
            if status == FAIL and failure is None:
                failure = (result, detail)
        if failure is not None:
            result, detail = failure
            findings.append(Finding(name, FAIL, applicable, result.index, tuple(result.classification.point), detail))
        elif applicable:
            findings.append(Finding(name, PASS, applicable))
        else:
            findings.append(Finding(name, NOT_APPLICABLE, 0))
    return findings