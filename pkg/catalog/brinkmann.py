"""
Brinkmann metrics ds^2 = -2 du (dv + H du + W_i dx^i) + g_ij dx^i dx^j and
plane waves H = 1/2 A_ij(u) x^i x^j with flat transverse part.
"""

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Sequence, Tuple

from config import ERROR_MESSAGES, RUN_DEFAULTS
from exceptions import CatalogError
from metric_dsl import BinOp, MetricSpec, Neg, Number, default_domain, free_names, parse_expression
from metric_dsl.ast_nodes import format_number

NULL_COORDS = ("u", "v")


@dataclass(frozen=True)
class BrinkmannParams:
    """Transverse coordinates and the expressions H, W_i, g_ij as source text.

    Empty ``W`` means W_i = 0; empty ``g_transverse`` means g_ij = delta_ij.
    ``g_transverse`` keys index the transverse coordinates from 0.
    """
    transverse: Tuple[str, ...] = ("x", "y")
    H: str = "0"
    W: Tuple[str, ...] = ()
    g_transverse: Tuple[Tuple[Tuple[int, int], str], ...] = ()
    params: Tuple[Tuple[str, float], ...] = ()
    domain: Optional[Tuple[Tuple[float, float], ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "transverse", tuple(self.transverse))
        object.__setattr__(self, "W", tuple(self.W))
        if self.W and len(self.W) != len(self.transverse):
            raise CatalogError(f"need {len(self.transverse)} W components, got {len(self.W)}")
        if set(NULL_COORDS) & set(self.transverse):
            raise CatalogError("transverse coordinates may not be named 'u' or 'v'")

    @property
    def dim(self) -> int:
        return len(self.transverse) + 2

    @property
    def coords(self) -> Tuple[str, ...]:
        return NULL_COORDS + self.transverse


def _parse_field(field_name: str, text: str, coords: Sequence[str], params: Sequence[str]):
    ast = parse_expression(text, coords, params)
    if "v" in free_names(ast):
        raise CatalogError(ERROR_MESSAGES["v_dependence"].format(field=field_name))
    return ast


def _is_zero(ast) -> bool:
    return isinstance(ast, Number) and ast.value == 0.0


def _negate(ast):
    return Number(-ast.value) if isinstance(ast, Number) else Neg(ast)


def brinkmann_build(p: BrinkmannParams, name: str = "brinkmann",
                    metadata: Optional[Mapping] = None) -> MetricSpec:
    """Spec with g_uv = -1, g_uu = -2H, g_ui = -W_i and the transverse block g_ij."""
    coords = p.coords
    param_names = [pname for pname, _ in p.params]
    components = {(0, 1): Number(-1.0)}

    h = _parse_field("H", p.H, coords, param_names)
    if not _is_zero(h):
        components[(0, 0)] = Neg(BinOp("*", Number(2.0), h))
    for i, text in enumerate(p.W):
        w = _parse_field(f"W_{i}", text, coords, param_names)
        if not _is_zero(w):
            components[(0, 2 + i)] = _negate(w)

    transverse = dict(p.g_transverse) if p.g_transverse else {
        (i, i): "1" for i in range(len(p.transverse))}
    for (i, j), text in transverse.items():
        key = (2 + min(i, j), 2 + max(i, j))
        if key in components:
            raise CatalogError(ERROR_MESSAGES["duplicate_entry"].format(i=i, j=j))
        g_ij = _parse_field(f"g_{i}{j}", text, coords, param_names)
        if not _is_zero(g_ij):
            components[key] = g_ij

    spec = MetricSpec(
        name=name,
        dim=p.dim,
        coords=coords,
        params=p.params,
        components=tuple(components.items()),
        domain=p.domain if p.domain is not None else default_domain(p.dim),
    )
    base = {"expected": {"parallel_null": True}, "verified": True}
    base.update(metadata or {})
    return spec.with_metadata(**base)


@dataclass(frozen=True)
class PlaneWaveProfile:
    """Symmetric matrix A_ij(u) of polynomials; entry (i, j) lists coefficients of u^0, u^1, ..."""
    matrix: Tuple[Tuple[Tuple[float, ...], ...], ...]

    def __post_init__(self):
        matrix = tuple(tuple(tuple(float(c) for c in entry) for entry in row) for row in self.matrix)
        size = len(matrix)
        if size < 1 or any(len(row) != size for row in matrix):
            raise CatalogError("profile must be a non-empty square matrix")
        for i in range(size):
            for j in range(i):
                if _trim(matrix[i][j]) != _trim(matrix[j][i]):
                    raise CatalogError(f"profile is not symmetric at ({i}, {j})")
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def diagonal(cls, *entries: Sequence[float]) -> "PlaneWaveProfile":
        size = len(entries)
        return cls(tuple(
            tuple(tuple(entries[i]) if i == j else (0.0,) for j in range(size)) for i in range(size)))

    @property
    def size(self) -> int:
        return len(self.matrix)

    @property
    def degree(self) -> int:
        """Highest power of u present; -1 for the zero profile."""
        return max(len(_trim(entry)) - 1 for row in self.matrix for entry in row)

    def trace_vanishes(self) -> bool:
        longest = max(len(self.matrix[i][i]) for i in range(self.size))
        trace = [sum(_coeff(self.matrix[i][i], k) for i in range(self.size)) for k in range(longest)]
        return all(abs(c) == 0.0 for c in trace)


def _trim(coeffs: Sequence[float]) -> Tuple[float, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0.0:
        coeffs.pop()
    return tuple(coeffs)


def _coeff(coeffs: Sequence[float], k: int) -> float:
    return coeffs[k] if k < len(coeffs) else 0.0


def _polynomial_text(coeffs: Sequence[float]) -> str:
    terms = []
    for k, c in enumerate(_trim(coeffs)):
        if c == 0.0:
            continue
        power = "" if k == 0 else ("*u" if k == 1 else f"*u^{k}")
        terms.append(f"{format_number(c)}{power}")
    return " + ".join(terms) if terms else "0"


def plane_wave_expected(profile: PlaneWaveProfile, max_k: int = 3) -> Dict:
    """Ground-truth verdicts: nabla^k R is proportional to the k-th u-derivative of A."""
    degree = profile.degree
    return {
        "flat": degree < 0,
        "constant_curvature": degree < 0,
        "symmetric": degree <= 0,
        "two_symmetric": degree <= 1,
        "semisymmetric": True,
        "ricci_flat": profile.trace_vanishes(),
        "generic": False,
        "parallel_null": True,
        "k_symmetric": {k: degree <= k - 1 for k in range(1, max_k + 1)},
    }


def plane_wave(profile: PlaneWaveProfile, name: str = "plane-wave",
               order: int = RUN_DEFAULTS["order"], transverse: Sequence[str] = None,
               domain: Optional[Tuple[Tuple[float, float], ...]] = None) -> MetricSpec:
    """Brinkmann spec with H = 1/2 A_ij(u) x^i x^j, W = 0 and flat transverse part."""
    max_degree = order - 2
    if profile.degree > max_degree:
        raise CatalogError(ERROR_MESSAGES["degree_over_budget"].format(
            degree=profile.degree, max_degree=max_degree))
    names = tuple(transverse) if transverse else tuple(f"x{i + 1}" for i in range(profile.size))
    if len(names) != profile.size:
        raise CatalogError(f"profile of size {profile.size} needs {profile.size} transverse names")

    terms = []
    for i in range(profile.size):
        for j in range(i, profile.size):
            poly = _polynomial_text(profile.matrix[i][j])
            if poly == "0":
                continue
            weight = "0.5*" if i == j else ""
            monomial = f"{names[i]}^2" if i == j else f"{names[i]}*{names[j]}"
            terms.append(f"{weight}({poly})*{monomial}")
    h_text = " + ".join(terms) if terms else "0"

    params = BrinkmannParams(transverse=names, H=h_text, domain=domain)
    spec = brinkmann_build(params, name=name, metadata={
        "expected": plane_wave_expected(profile),
        "verified": True,
        "profile_degree": profile.degree,
    })
    return spec
