"""
Spec constructions: orthogonal direct products, flat extensions and linear
coordinate rescalings. Expected classifications in the metadata are carried
through each construction.
"""

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from config import ERROR_MESSAGES
from exceptions import CatalogError
from logger import get_logger
from metric_dsl import BinOp, Call, CoordRef, MetricSpec, Neg, Number, ParamRef, Power, metric_value

logger = get_logger()

HIERARCHY_KEYS = ("flat", "symmetric", "two_symmetric", "semisymmetric", "ricci_flat")

FLAT_EXPECTED = {
    "flat": True,
    "constant_curvature": True,
    "symmetric": True,
    "two_symmetric": True,
    "semisymmetric": True,
    "ricci_flat": True,
    "generic": False,
    "k_symmetric": {1: True, 2: True, 3: True},
}


def _relabel(node, coords: Mapping[str, object], params: Mapping[str, str]):
    """Copy of ``node`` with coordinate refs replaced by ``coords[name]`` and params renamed."""
    if isinstance(node, CoordRef):
        return coords[node.name]
    if isinstance(node, ParamRef):
        return ParamRef(params.get(node.name, node.name))
    if isinstance(node, Neg):
        return Neg(_relabel(node.operand, coords, params))
    if isinstance(node, Power):
        return Power(_relabel(node.base, coords, params), node.exponent)
    if isinstance(node, Call):
        return Call(node.function, _relabel(node.argument, coords, params))
    if isinstance(node, BinOp):
        return BinOp(node.op, _relabel(node.left, coords, params), _relabel(node.right, coords, params))
    return node


def _fresh(name: str, block: int, used: set) -> str:
    while name in used:
        name = f"{name}_b{block}"
    used.add(name)
    return name


def _compose_expected(blocks: Sequence[Mapping]) -> Dict:
    """Expected verdicts of an orthogonal product from those of its factors."""
    def conjunction(values):
        values = list(values)
        if any(v is False for v in values):
            return False
        if any(v is None for v in values):
            return None
        return True

    expected = {key: conjunction(b.get(key) for b in blocks) for key in HIERARCHY_KEYS}
    expected["constant_curvature"] = expected["flat"]
    expected["generic"] = False if len(blocks) > 1 else blocks[0].get("generic")
    depths = set.intersection(*(set(b.get("k_symmetric", {})) for b in blocks))
    expected["k_symmetric"] = {k: conjunction(b["k_symmetric"][k] for b in blocks) for k in sorted(depths)}
    if any(b.get("parallel_null") for b in blocks):
        expected["parallel_null"] = True
    return expected


def _combine(name: str, parts: Sequence[Tuple[MetricSpec, Mapping]]) -> MetricSpec:
    used: set = set()
    coords: List[str] = []
    params: List[Tuple[str, float]] = []
    components = []
    domain = []
    for block, (part, _) in enumerate(parts, start=1):
        offset = len(coords)
        param_map = {}
        for pname, pvalue in part.params:
            param_map[pname] = _fresh(pname, block, used)
            params.append((param_map[pname], pvalue))
        coord_map = {}
        for i, cname in enumerate(part.coords):
            new_name = _fresh(cname, block, used)
            coord_map[cname] = CoordRef(new_name, offset + i)
            coords.append(new_name)
        for (i, j), expr in part.components:
            components.append(((offset + i, offset + j), _relabel(expr, coord_map, param_map)))
        domain.extend(part.domain)

    spec = MetricSpec(name=name, dim=len(coords), coords=tuple(coords), params=tuple(params),
                      components=tuple(components), domain=tuple(domain))
    expected = _compose_expected([meta.get("expected", {}) for _, meta in parts])
    verified = all(meta.get("verified", False) for _, meta in parts)
    return spec.with_metadata(expected=expected, verified=verified)


def direct_product(blocks: Sequence[MetricSpec], name: Optional[str] = None) -> MetricSpec:
    """Block-diagonal metric of the factors; clashing names get the suffix ``_b<k>``."""
    if not blocks:
        raise CatalogError("direct product needs at least one block")
    if len(blocks) == 1:
        return blocks[0] if name is None else blocks[0].renamed(name)
    name = name or "-x-".join(b.name for b in blocks)
    logger.debug(f"direct product '{name}' of {len(blocks)} blocks")
    return _combine(name, [(b, b.metadata) for b in blocks])


class _FlatBlock:
    """Constant diagonal block; may have a single dimension, unlike a MetricSpec."""

    def __init__(self, signs: Sequence[int]):
        self.coords = tuple(f"w{k + 1}" for k in range(len(signs)))
        self.params = ()
        self.components = tuple(((k, k), Number(float(s))) for k, s in enumerate(signs))
        self.domain = ((-1.0, 1.0),) * len(signs)


def flat_extension(spec: MetricSpec, signs: Sequence[int], name: Optional[str] = None) -> MetricSpec:
    """Product of ``spec`` with a flat block sum_k signs[k] dw_k^2; keeps at most one timelike direction."""
    signs = [int(s) for s in signs]
    if any(s not in (-1, 1) for s in signs):
        raise CatalogError(f"flat extension signs must be +1 or -1, got {signs}")
    if not signs:
        return spec if name is None else spec.renamed(name)
    center = tuple(0.5 * (lo + hi) for lo, hi in spec.domain)
    negatives = metric_value(spec, center).negative + sum(1 for s in signs if s < 0)
    if negatives > 1:
        raise CatalogError(ERROR_MESSAGES["signature_violation"].format(negatives=negatives))
    name = name or f"{spec.name}+flat{len(signs)}"
    return _combine(name, [(spec, spec.metadata), (_FlatBlock(signs), {"expected": FLAT_EXPECTED, "verified": True})])


def rescale_coordinates(spec: MetricSpec, factors: Sequence[float], name: Optional[str] = None) -> MetricSpec:
    """Same metric in coordinates y with x^i = c_i y^i: g'_ij = c_i c_j g_ij(c y)."""
    factors = [float(c) for c in factors]
    if len(factors) != spec.dim or any(c == 0.0 for c in factors):
        raise CatalogError(f"need {spec.dim} nonzero rescaling factors, got {factors}")
    coord_map = {
        cname: CoordRef(cname, i) if c == 1.0 else BinOp("*", Number(c), CoordRef(cname, i))
        for i, (cname, c) in enumerate(zip(spec.coords, factors))
    }
    components = []
    for (i, j), expr in spec.components:
        scaled = _relabel(expr, coord_map, {})
        weight = factors[i] * factors[j]
        if weight != 1.0:
            scaled = BinOp("*", Number(weight), scaled)
        components.append(((i, j), scaled))
    domain = []
    for (lo, hi), c in zip(spec.domain, factors):
        a, b = lo / c, hi / c
        domain.append((min(a, b), max(a, b)))
    rescaled = MetricSpec(name=name or f"{spec.name}-rescaled", dim=spec.dim, coords=spec.coords,
                          params=spec.params, components=tuple(components), domain=tuple(domain))
    metadata = dict(spec.metadata)
    metadata["rescaled_by"] = tuple(factors)
    return rescaled.with_metadata(**metadata)
