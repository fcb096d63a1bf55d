"""
Built-in reference metrics with their expected classifications.

Each entry is a MetricSpec whose metadata carries ``expected`` (verdict name
to bool, or None where no claim is made), ``verified`` and ``description``.
"""

from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from config import ERROR_MESSAGES
from exceptions import CatalogError
from catalog.brinkmann import BrinkmannParams, PlaneWaveProfile, brinkmann_build, plane_wave
from catalog.transforms import direct_product, flat_extension
from metric_dsl import MetricSpec, parse_metric_file

CONSTANT_CURVATURE = {
    "flat": False,
    "constant_curvature": True,
    "symmetric": True,
    "two_symmetric": True,
    "semisymmetric": True,
    "ricci_flat": False,
    "generic": True,
    "k_symmetric": {1: True, 2: True, 3: True},
}

FLAT = dict(CONSTANT_CURVATURE, flat=True, ricci_flat=True, generic=False)

SCHWARZSCHILD = {
    "flat": False,
    "constant_curvature": False,
    "symmetric": False,
    "two_symmetric": False,
    "semisymmetric": False,
    "ricci_flat": True,
    "generic": True,
    "k_symmetric": {1: False, 2: False},
}


def _from_text(text: str, expected: Dict, description: str, verified: bool = True) -> MetricSpec:
    return parse_metric_file(text).with_metadata(expected=expected, verified=verified, description=description)


def minkowski(dim: int) -> MetricSpec:
    coords = ["t", "x", "y", "z", "w", "p", "q", "s"][:dim]
    lines = [
        "version = 1",
        f"name = minkowski-{dim}",
        f"dim = {dim}",
        f"coords = {' '.join(coords)}",
        'g 0 0 = "-1"',
    ]
    lines += [f'g {i} {i} = "1"' for i in range(1, dim)]
    return _from_text("\n".join(lines) + "\n", FLAT, f"flat Minkowski space, dimension {dim}")


def sphere(radius: float = 1.0, name: str = "sphere-unit") -> MetricSpec:
    r2 = radius * radius
    text = (
        f"version = 1\nname = {name}\ndim = 2\ncoords = th ph\n"
        'domain th = 0.2 "pi - 0.2"\ndomain ph = 0 6\n'
        f'g 0 0 = "{r2!r}"\ng 1 1 = "{r2!r}*sin(th)^2"\n'
    )
    return _from_text(text, CONSTANT_CURVATURE, f"round 2-sphere of radius {radius:g}")


def hyperbolic_plane() -> MetricSpec:
    text = (
        "version = 1\nname = hyperbolic-plane\ndim = 2\ncoords = x y\n"
        "domain y = 0.5 2\n"
        'g 0 0 = "1/y^2"\ng 1 1 = "1/y^2"\n'
    )
    return _from_text(text, CONSTANT_CURVATURE, "upper half-plane model, curvature -1")


def de_sitter() -> MetricSpec:
    text = (
        "version = 1\nname = de-sitter\ndim = 4\ncoords = t x y z\n"
        'g 0 0 = "-1"\ng 1 1 = "exp(2*t)"\ng 2 2 = "exp(2*t)"\ng 3 3 = "exp(2*t)"\n'
    )
    return _from_text(text, CONSTANT_CURVATURE, "de Sitter space in flat slicing, constant curvature 1")


def schwarzschild() -> MetricSpec:
    text = (
        "version = 1\nname = schwarzschild\ndim = 4\ncoords = t r th ph\nparam m = 1\n"
        "domain r = 3 10\ndomain th = 0.2 2.9\n"
        'g 0 0 = "-(1 - 2*m/r)"\ng 1 1 = "1/(1 - 2*m/r)"\ng 2 2 = "r^2"\ng 3 3 = "r^2*sin(th)^2"\n'
    )
    return _from_text(text, SCHWARZSCHILD, "Schwarzschild exterior, m = 1, outside r = 3")


def _plane_wave(name: str, a_xx, a_yy, description: str) -> MetricSpec:
    spec = plane_wave(PlaneWaveProfile.diagonal(a_xx, a_yy), name=name, transverse=("x", "y"))
    return spec.with_metadata(description=description)


def curved_transverse() -> MetricSpec:
    params = BrinkmannParams(
        transverse=("x", "y"),
        H="0.5*u*cos(x)",
        g_transverse=(((0, 0), "1"), ((1, 1), "sin(x)^2")),
        domain=((-1.0, 1.0), (-1.0, 1.0), (0.3, 2.8), (0.0, 6.0)),
    )
    return brinkmann_build(params, name="brinkmann-curved-transverse", metadata={
        "expected": {"parallel_null": True},
        "verified": False,
        "description": "Brinkmann metric over a round 2-sphere; expected classification: unverified",
    })


def _builders() -> List[Tuple[str, Callable[[], MetricSpec]]]:
    return [
        ("minkowski-2", lambda: minkowski(2)),
        ("minkowski-3", lambda: minkowski(3)),
        ("minkowski-4", lambda: minkowski(4)),
        ("minkowski-5", lambda: minkowski(5)),
        ("sphere-unit", lambda: sphere(1.0, "sphere-unit")),
        ("sphere-radius-2", lambda: sphere(2.0, "sphere-radius-2")),
        ("hyperbolic-plane", hyperbolic_plane),
        ("de-sitter", de_sitter),
        ("schwarzschild", schwarzschild),
        ("plane-wave-constant", lambda: _plane_wave(
            "plane-wave-constant", (1.0,), (-1.0,), "vacuum plane wave A = diag(1, -1), locally symmetric")),
        ("plane-wave-isotropic", lambda: _plane_wave(
            "plane-wave-isotropic", (1.0,), (1.0,), "non-vacuum plane wave A = diag(1, 1), locally symmetric")),
        ("plane-wave-linear", lambda: _plane_wave(
            "plane-wave-linear", (0.0, 1.0), (0.0, -1.0), "plane wave A = diag(u, -u), 2-symmetric")),
        ("plane-wave-quadratic", lambda: _plane_wave(
            "plane-wave-quadratic", (0.0, 0.0, 1.0), (0.0, 0.0, -1.0), "plane wave A = diag(u^2, -u^2), 3-symmetric")),
        ("minkowski-2-x-sphere", lambda: direct_product(
            [minkowski(2), sphere(1.0, "sphere-unit")], name="minkowski-2-x-sphere").with_metadata(
            description="product of 2D Minkowski with the unit sphere")),
        ("static-sphere", lambda: flat_extension(
            sphere(1.0, "sphere-unit"), [-1], name="static-sphere").with_metadata(
            description="unit sphere extended by -dw^2")),
        ("plane-wave-linear-x-sphere", lambda: direct_product(
            [_plane_wave("plane-wave-linear", (0.0, 1.0), (0.0, -1.0), ""), sphere(1.0, "sphere-unit")],
            name="plane-wave-linear-x-sphere").with_metadata(
            description="linear-profile plane wave times the unit sphere, 2-symmetric")),
        ("brinkmann-curved-transverse", curved_transverse),
    ]


@lru_cache(maxsize=1)
def builtin_metrics() -> Dict[str, MetricSpec]:
    """All catalog entries by name, in listing order."""
    return {name: build() for name, build in _builders()}


def catalog_names() -> List[str]:
    return list(builtin_metrics())


def get_entry(name: str) -> MetricSpec:
    try:
        return builtin_metrics()[name]
    except KeyError:
        raise CatalogError(ERROR_MESSAGES["unknown_catalog_entry"].format(name=name))
