"""
Parsed metric definition.
"""

from dataclasses import dataclass, field, replace
from typing import Any, Dict, Mapping, Sequence, Tuple

from config import ERROR_MESSAGES, METRIC_FILE_CONFIG, SAMPLING_CONFIG, TOLERANCE_CONFIG
from exceptions import MetricSpecError, PointOutsideDomainError
from metric_dsl.ast_nodes import Expr, Number

Point = Tuple[float, ...]
ComponentKey = Tuple[int, int]

RESERVED_NAMES = frozenset(METRIC_FILE_CONFIG["functions"]) | frozenset(METRIC_FILE_CONFIG["constants"])


@dataclass(frozen=True)
class MetricSpec:
    """Metric definition: coordinates, parameters, components i <= j, sampling box.

    Unspecified components are zero. ``metadata`` is not part of the metric
    and takes no part in comparisons or in the emitted file.
    """
    name: str
    dim: int
    coords: Tuple[str, ...]
    params: Tuple[Tuple[str, float], ...]
    components: Tuple[Tuple[ComponentKey, Expr], ...]
    domain: Tuple[Tuple[float, float], ...]
    metadata: Mapping[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        coords = tuple(self.coords)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "params", tuple((str(k), float(v)) for k, v in self.params))
        object.__setattr__(self, "domain", tuple((float(lo), float(hi)) for lo, hi in self.domain))
        components = tuple(sorted(((tuple(k), e) for k, e in self.components), key=lambda kv: kv[0]))
        object.__setattr__(self, "components", components)

        if self.dim < 2:
            raise MetricSpecError(f"dim must be >= 2, got {self.dim}")
        if len(coords) != self.dim:
            raise MetricSpecError(ERROR_MESSAGES["dim_mismatch"].format(dim=self.dim, count=len(coords)))
        if len(set(coords)) != len(coords):
            raise MetricSpecError(f"coordinate names must be distinct: {' '.join(coords)}")
        param_names = [name for name, _ in self.params]
        if len(set(param_names)) != len(param_names):
            raise MetricSpecError("parameter names must be distinct")
        clashes = (set(coords) & set(param_names)) | ((set(coords) | set(param_names)) & RESERVED_NAMES)
        if clashes:
            raise MetricSpecError(f"reserved or clashing identifiers: {', '.join(sorted(clashes))}")
        if len(self.domain) != self.dim:
            raise MetricSpecError(f"domain needs {self.dim} intervals, got {len(self.domain)}")
        for name, (lo, hi) in zip(coords, self.domain):
            if not lo < hi:
                raise MetricSpecError(f"empty domain for '{name}': [{lo}, {hi}]")
        seen = set()
        for (i, j), _ in components:
            if not (0 <= i <= j < self.dim):
                raise MetricSpecError(f"component index ({i}, {j}) invalid for dim {self.dim}")
            if (i, j) in seen:
                raise MetricSpecError(ERROR_MESSAGES["duplicate_entry"].format(i=i, j=j))
            seen.add((i, j))

    def param_values(self) -> Dict[str, float]:
        return dict(self.params)

    def component_map(self) -> Dict[ComponentKey, Expr]:
        return dict(self.components)

    def component(self, i: int, j: int) -> Expr:
        key = (min(i, j), max(i, j))
        return self.component_map().get(key, Number(0.0))

    def contains(self, point: Sequence[float]) -> bool:
        slack = TOLERANCE_CONFIG["domain_slack"]
        return len(point) == self.dim and all(
            lo - slack * max(1.0, abs(lo)) <= x <= hi + slack * max(1.0, abs(hi))
            for x, (lo, hi) in zip(point, self.domain))

    def check_point(self, point: Sequence[float]) -> Point:
        if not self.contains(point):
            raise PointOutsideDomainError(ERROR_MESSAGES["point_outside_domain"].format(
                point=tuple(point), name=self.name))
        return tuple(float(x) for x in point)

    def renamed(self, name: str) -> "MetricSpec":
        return replace(self, name=name)

    def with_metadata(self, **metadata: Any) -> "MetricSpec":
        merged = dict(self.metadata)
        merged.update(metadata)
        return replace(self, metadata=merged)


def default_domain(dim: int) -> Tuple[Tuple[float, float], ...]:
    return (tuple(SAMPLING_CONFIG["default_domain"]),) * dim
