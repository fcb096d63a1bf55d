"""
Deterministic JSON rendering of classification reports.
"""

import json
import math
from typing import Any, Dict, List, Optional

import numpy as np

from classifier import ClassificationReport, HolonomyReport, PointResult
from invariants import InvariantReport


def to_plain(value: Any) -> Any:
    """Recursively convert to JSON-native types; non-finite floats become None, dict keys become str."""
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_plain(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def format_float(value: float) -> str:
    """17 significant digits; integral values keep a trailing .0."""
    text = format(value, ".17g")
    return text if ("." in text or "e" in text) else text + ".0"


def _encode(value: Any, level: int) -> str:
    pad, close = "  " * (level + 1), "  " * level
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(key)}: {_encode(value[key], level + 1)}" for key in sorted(value)]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        return "[\n" + ",\n".join(pad + _encode(item, level + 1) for item in value) + "\n" + close + "]"
    if isinstance(value, float):
        return format_float(value)
    return json.dumps(value)


def render_json(payload: Dict[str, Any]) -> str:
    """Keys sorted, two-space indent, floats with 17 significant digits, non-finite floats as null."""
    return _encode(to_plain(payload), 0) + "\n"


def _invariants_payload(report: Optional[InvariantReport]) -> Optional[Dict[str, Any]]:
    if report is None:
        return None
    return {
        "order_one": report.order_one,
        "scalars": report.scalars,
        "one_forms": report.one_forms,
        "two_tensors": report.two_tensors,
        "scales": report.scales,
    }


def _holonomy_payload(report: Optional[HolonomyReport]) -> Optional[Dict[str, Any]]:
    if report is None:
        return None
    return {
        "generator_count": report.generator_count,
        "algebra_dimension": report.algebra_dimension,
        "kernel_dimension": report.kernel_dimension,
        "kernel": [{"vector": v.vector, "norm": v.norm, "character": v.character} for v in report.kernel],
        "kernel_residual": report.kernel_residual,
        "sym2_kernel_dimension": report.sym2_kernel_dimension,
        "contains_null": report.contains_null,
    }


def point_payload(result: PointResult) -> Dict[str, Any]:
    c = result.classification
    payload = {
        "index": result.index,
        "point": c.point,
        "signature": c.signature,
        "verdicts": c.verdicts,
        "k_symmetric": c.k_symmetric,
        "residuals": c.residuals,
        "scales": c.scales,
        "scalar_curvature": c.scalar_curvature,
        "grad_scalar": c.grad_scalar,
        "operator_ratio": c.operator_ratio,
        "hierarchy_consistent": c.hierarchy_consistent,
        "holonomy": _holonomy_payload(result.holonomy),
        "invariants": _invariants_payload(result.invariants),
    }
    if result.identities is not None:
        payload["identities"] = [
            {"name": i.name, "holds_in": i.holds_in, "residual": i.residual, "scale": i.scale, "passed": i.passed}
            for i in result.identities
        ]
    if result.identities_skipped:
        payload["identities_skipped"] = result.identities_skipped
    return payload


def spec_payload(spec) -> Dict[str, Any]:
    payload = {
        "name": spec.name,
        "dim": spec.dim,
        "coords": spec.coords,
        "params": dict(spec.params),
        "domain": spec.domain,
    }
    for key in ("expected", "verified", "description"):
        if key in spec.metadata:
            payload[key] = spec.metadata[key]
    return payload


def report_payload(report: ClassificationReport) -> Dict[str, Any]:
    """Schema: spec, config, points, aggregate, holonomy, consistency, invariants, plus extras."""
    aggregate = dict(report.aggregate)
    aggregate["k_symmetric"] = report.k_symmetric
    payload = {
        "spec": spec_payload(report.spec),
        "config": report.config.public_dict(),
        "points": [point_payload(p) for p in report.points],
        "skipped": [{"index": s.index, "point": s.point, "reason": s.reason} for s in report.skipped],
        "aggregate": aggregate,
        "holonomy": report.holonomy,
        "consistency": [
            {"name": f.name, "status": f.status, "applicable_points": f.applicable_points,
             "witness_index": f.witness_index, "witness": f.witness, "detail": f.detail}
            for f in report.consistency
        ],
        "invariants": report.invariants,
        "signatures": report.signatures,
    }
    if report.identities is not None:
        payload["identities"] = report.identities
    return payload


def catalog_payload(names: List[str], entries: Dict[str, Any]) -> Dict[str, Any]:
    return {"catalog": [spec_payload(entries[name]) for name in names]}
