"""
Sampling driver: classify a metric at seeded random points of its domain and
conjoin the point verdicts into one report.
"""

import sys
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from tqdm import tqdm

from classifier.consistency import Finding, theorem_consistency
from classifier.holonomy import HolonomyReport, holonomy_kernel
from classifier.identities import IdentityResult, identity_suite
from classifier.point import PointClassification, VERDICT_NAMES, classify_point
from config import ERROR_MESSAGES, SUCCESS_MESSAGES, RunConfig, get_worker_count
from curvature import build_point_data
from exceptions import DegenerateGermError, DegenerateMetricError, FunctionDomainError, SamplingError
from invariants import InvariantReport, Tolerance, scalar_invariants
from logger import get_logger
from metric_dsl import MetricSpec
from performance_monitor import get_performance_monitor

logger = get_logger()
performance_monitor = get_performance_monitor()

SKIPPABLE = (DegenerateMetricError, FunctionDomainError, DegenerateGermError)

PARALLEL_NOTE = "parallel candidates from infinitesimal holonomy at sampled points; no parallel field is proven"


@dataclass(frozen=True)
class PointResult:
    index: int
    classification: PointClassification
    invariants: Optional[InvariantReport] = None
    holonomy: Optional[HolonomyReport] = None
    identities: Optional[Tuple[IdentityResult, ...]] = None
    identities_skipped: Optional[str] = None

    @property
    def point(self) -> Tuple[float, ...]:
        return self.classification.point


@dataclass(frozen=True)
class SkippedPoint:
    index: int
    point: Tuple[float, ...]
    reason: str


@dataclass(frozen=True)
class ClassificationReport:
    spec: MetricSpec
    config: RunConfig
    points: Tuple[PointResult, ...]
    skipped: Tuple[SkippedPoint, ...]
    aggregate: Dict[str, Optional[bool]]
    k_symmetric: Dict[int, Optional[bool]]
    holonomy: Optional[Dict]
    consistency: Tuple[Finding, ...]
    invariants: Dict[str, Dict]
    identities: Optional[Dict[str, Dict]] = None
    signatures: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    def verdict(self, name: str) -> Optional[bool]:
        return self.aggregate.get(name)

    def finding(self, name: str) -> Finding:
        for f in self.consistency:
            if f.name == name:
                return f
        raise KeyError(name)

    @property
    def failed_findings(self) -> List[Finding]:
        return [f for f in self.consistency if f.failed]

    @property
    def failed_identities(self) -> List[str]:
        if not self.identities:
            return []
        return [name for name, summary in self.identities.items() if summary["passed"] is False]

    @property
    def failed(self) -> bool:
        return bool(self.failed_findings or self.failed_identities)


def sample_points(spec: MetricSpec, count: int, seed: int) -> np.ndarray:
    """``count`` points drawn uniformly from the domain box, reproducible from ``seed``."""
    lows = np.array([lo for lo, _ in spec.domain])
    highs = np.array([hi for _, hi in spec.domain])
    rng = np.random.default_rng(seed)
    return rng.uniform(lows, highs, size=(count, spec.dim))


def conjoin(values: Sequence[Optional[bool]]) -> Optional[bool]:
    """True iff every value is True; False if any is False; None otherwise."""
    values = list(values)
    if any(v is False for v in values):
        return False
    if not values or any(v is None for v in values):
        return None
    return True


def evaluate_point(spec: MetricSpec, index: int, point: Sequence[float], run_config: RunConfig,
                   tolerance: Tolerance, with_identities: bool = False) -> PointResult:
    """Full per-point pipeline: curvature, verdicts, invariants, holonomy and optional identities."""
    with performance_monitor.time_operation("point_pipeline", metric=spec.name):
        data = build_point_data(spec, point, run_config.order, run_config.k_depth)
        classification = classify_point(data, tolerance, run_config.k_depth)
        invariants = scalar_invariants(data, strict=False)
        holonomy = holonomy_kernel(data) if data.has_derivative(2) else None

        identities = skipped = None
        if with_identities:
            if run_config.force or classification.verdict("two_symmetric"):
                identities = tuple(identity_suite(data, tolerance))
            else:
                skipped = "point not classified 2-symmetric (use --force)"
    return PointResult(index, classification, invariants, holonomy, identities, skipped)


def _run_point(spec, index, point, run_config, tolerance, with_identities) -> Union[PointResult, SkippedPoint]:
    try:
        return evaluate_point(spec, index, point, run_config, tolerance, with_identities)
    except SKIPPABLE as exc:
        logger.warning(f"skipping point {index} of '{spec.name}': {exc.message}")
        return SkippedPoint(index, tuple(float(x) for x in point), exc.message)


def _holonomy_summary(results: Sequence[PointResult]) -> Optional[Dict]:
    reports = [r.holonomy for r in results if r.holonomy is not None]
    if not reports:
        return None

    def span(values):
        return {"min": min(values), "max": max(values)}

    return {
        "points": len(reports),
        "algebra_dimension": span([h.algebra_dimension for h in reports]),
        "kernel_dimension": span([h.kernel_dimension for h in reports]),
        "sym2_kernel_dimension": span([h.sym2_kernel_dimension for h in reports]),
        "characters": sorted({c for h in reports for c in h.characters}),
        "null_kernel_at_all_points": all(h.contains_null for h in reports),
        "max_kernel_residual": max(h.kernel_residual for h in reports),
        "note": PARALLEL_NOTE,
    }


def _invariant_summary(results: Sequence[PointResult], tolerance: Tolerance) -> Dict[str, Dict]:
    reports = [r.invariants for r in results if r.invariants is not None]
    names = sorted({name for rep in reports for name in rep.names()})
    summary = {}
    for name in names:
        having = [rep for rep in reports if name in rep.names()]
        summary[name] = {
            "points": len(having),
            "max_magnitude": max(rep.magnitude(name) for rep in having),
            "vanishes_everywhere": all(rep.vanishes(name, tolerance) for rep in having),
        }
    return summary


def _identity_summary(results: Sequence[PointResult]) -> Optional[Dict[str, Dict]]:
    evaluated = [r for r in results if r.identities is not None]
    if not any(r.identities_skipped or r.identities is not None for r in results):
        return None
    summary: Dict[str, Dict] = {}
    for result in evaluated:
        for item in result.identities:
            entry = summary.setdefault(item.name, {
                "holds_in": item.holds_in, "points": 0, "max_residual": 0.0,
                "max_scale": 0.0, "passed": True, "witness_index": None,
            })
            entry["points"] += 1
            entry["max_residual"] = max(entry["max_residual"], item.residual)
            entry["max_scale"] = max(entry["max_scale"], item.scale)
            if not item.passed and entry["passed"]:
                entry["passed"] = False
                entry["witness_index"] = result.index
    return summary


def aggregate(spec: MetricSpec, run_config: RunConfig = RunConfig(), with_identities: bool = False) -> ClassificationReport:
    """Classify ``spec`` at ``run_config.points`` seeded sample points.

    Raises:
        SamplingError: no points requested, or every sampled point was degenerate
        JetBudgetError: the jet order cannot reach the requested derivatives
    """
    if run_config.points < 1:
        raise SamplingError(ERROR_MESSAGES["zero_points"])
    tolerance = Tolerance.from_run_config(run_config)
    points = sample_points(spec, run_config.points, run_config.seed)
    workers = run_config.workers or get_worker_count()
    logger.info(f"{run_config.command} '{spec.name}': {len(points)} points, order {run_config.order}, "
                f"{workers} workers")

    start = time.perf_counter()
    outcomes: List[Union[PointResult, SkippedPoint]] = []
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(_run_point, spec, i, p, run_config, tolerance, with_identities)
                   for i, p in enumerate(points)]
        with tqdm(total=len(futures), desc=spec.name, file=sys.stderr, disable=not run_config.progress) as bar:
            for future in as_completed(futures):
                outcomes.append(future.result())
                bar.update(1)
    outcomes.sort(key=lambda o: o.index)

    results = [o for o in outcomes if isinstance(o, PointResult)]
    skipped = [o for o in outcomes if isinstance(o, SkippedPoint)]
    if not results:
        raise SamplingError(ERROR_MESSAGES["no_valid_points"].format(skipped=len(skipped)))

    verdicts = {name: conjoin([r.classification.verdict(name) for r in results]) for name in VERDICT_NAMES}
    depths = sorted({k for r in results for k in r.classification.k_symmetric})
    k_symmetric = {k: conjoin([r.classification.k_symmetric.get(k) for r in results]) for k in depths}

    report = ClassificationReport(
        spec=spec,
        config=run_config,
        points=tuple(results),
        skipped=tuple(skipped),
        aggregate=verdicts,
        k_symmetric=k_symmetric,
        holonomy=_holonomy_summary(results),
        consistency=tuple(theorem_consistency(results, tolerance)),
        invariants=_invariant_summary(results, tolerance),
        identities=_identity_summary(results),
        signatures=tuple(sorted({r.classification.signature for r in results})),
    )

    duration = time.perf_counter() - start
    performance_monitor.record_run_metrics(run_config.command, len(results), len(skipped), duration)
    logger.info(SUCCESS_MESSAGES["run_complete"].format(
        command=run_config.command, name=spec.name, valid=len(results), skipped=len(skipped)))
    for finding in report.failed_findings:
        logger.warning(f"finding '{finding.name}' failed at point {finding.witness_index}: {finding.detail}")
    return report
