"""
Tests for zero tests, the curvature operator and the invariant list.
"""

import numpy as np
import pytest

from catalog import get_entry, rescale_coordinates
from classifier import sample_points
from curvature import build_point_data
from exceptions import JetBudgetError
from invariants import (
    ORDER_ONE_ONE_FORMS,
    ORDER_ONE_TWO_TENSORS,
    Tolerance,
    curvature_operator,
    factor_scale,
    scalar_invariants,
    zero_test,
)
from tests.conftest import entry_data, interior_point

PLANE_WAVES = ["plane-wave-constant", "plane-wave-isotropic", "plane-wave-linear", "plane-wave-quadratic"]


@pytest.mark.parametrize("value,scale,expected", [
    (1e-12, 1.0, True),
    (1e-3, 1.0, False),
    (0.5, 1e9, True),
    (np.array([0.0, -2e-7, 1e-11]), 1.0, False),
    (np.zeros((2, 2)), 0.0, True),
])
def test_zero_test(value, scale, expected):
    assert zero_test(value, scale) is expected


def test_tolerance_threshold():
    tol = Tolerance(tol_abs=1e-6, tol_rel=1e-3)
    assert tol.threshold(100.0) == pytest.approx(1e-6 + 0.1)
    assert tol.is_zero(0.05, 100.0)
    assert not tol.is_zero(0.2, 100.0)


def test_factor_scale():
    assert factor_scale([np.array([1.0, -3.0]), 2.0, np.array([[0.5]])]) == pytest.approx(3.0)


@pytest.mark.parametrize("seed", [42, 7])
def test_schwarzschild_kretschmann(seed):
    spec = get_entry("schwarzschild")
    points = sample_points(spec, 10, seed)
    for point in points:
        report = scalar_invariants(build_point_data(spec, point, 4))
        r = point[1]
        assert report.scalars["kretschmann"] == pytest.approx(48.0 / r ** 6, rel=1e-9), r


def test_schwarzschild_kretschmann_gradient():
    data = entry_data("schwarzschild", (0.3, 4.0, 1.1, 0.2))
    report = scalar_invariants(data)
    grad = report.one_forms["grad_kretschmann"]
    assert grad[1] == pytest.approx(-6 * 48.0 / 4.0 ** 7, rel=1e-8)
    assert abs(grad[0]) < 1e-12 and abs(grad[2]) < 1e-12 and abs(grad[3]) < 1e-12
    tol = Tolerance()
    assert not report.vanishes("grad_kretschmann", tol)
    assert not report.vanishes("grad_kretschmann_squared", tol)
    assert not report.vanishes("kretschmann", tol)


def test_schwarzschild_is_vacuum_invariantly():
    report = scalar_invariants(entry_data("schwarzschild"))
    tol = Tolerance()
    assert report.vanishes("R", tol)
    assert report.vanishes("ricci_squared", tol)
    assert report.scalars["weyl_squared"] == pytest.approx(report.scalars["kretschmann"], rel=1e-9)


def test_minkowski_invariants_vanish():
    report = scalar_invariants(entry_data("minkowski-4"))
    assert report.order_one
    for name in report.names():
        assert report.magnitude(name) <= 1e-14, name


@pytest.mark.parametrize("name", PLANE_WAVES)
def test_plane_wave_listed_invariants_vanish(name):
    report = scalar_invariants(entry_data(name))
    tol = Tolerance()
    assert report.order_one
    checked = ["R", "ricci_squared", "kretschmann", "weyl_squared", "grad_kretschmann_squared"]
    checked += list(ORDER_ONE_ONE_FORMS) + [f"{n}_trace" for n in ORDER_ONE_TWO_TENSORS]
    for invariant in checked:
        assert report.vanishes(invariant, tol), invariant
    assert report.nonvanishing_listed(tol) == [
        n for n in ORDER_ONE_TWO_TENSORS if not report.vanishes(n, tol)]


@pytest.mark.parametrize("name,k,n", [
    ("sphere-unit", 1.0, 2),
    ("sphere-radius-2", 0.25, 2),
    ("hyperbolic-plane", -1.0, 2),
    ("de-sitter", 1.0, 4),
])
def test_constant_curvature_kretschmann(name, k, n):
    report = scalar_invariants(entry_data(name))
    assert report.scalars["kretschmann"] == pytest.approx(2 * k * k * n * (n - 1), rel=1e-9)
    assert report.scalars["R"] == pytest.approx(k * n * (n - 1), rel=1e-9)


@pytest.mark.parametrize("name,k", [
    ("sphere-unit", 1.0),
    ("sphere-radius-2", 0.25),
    ("hyperbolic-plane", -1.0),
    ("de-sitter", 1.0),
])
def test_constant_curvature_operator_is_multiple_of_identity(name, k):
    op = curvature_operator(entry_data(name))
    np.testing.assert_allclose(op.matrix, k * np.eye(op.size), atol=1e-10)
    assert op.generic


def test_operator_pairs_are_lexicographic():
    op = curvature_operator(entry_data("de-sitter"))
    assert op.pairs == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@pytest.mark.parametrize("name,generic", [
    ("schwarzschild", True),
    ("plane-wave-constant", False),
    ("plane-wave-linear", False),
    ("minkowski-4", False),
    ("minkowski-2-x-sphere", False),
    ("static-sphere", False),
])
def test_operator_genericity(name, generic):
    assert curvature_operator(entry_data(name)).generic is generic


@pytest.mark.parametrize("name,factors", [
    ("schwarzschild", (1.0, 2.0, 1.0, 1.0)),
    ("schwarzschild", (3.0, 0.5, 1.5, 2.0)),
    ("de-sitter", (0.5, 2.0, 2.0, 4.0)),
    ("plane-wave-constant", (2.0, 0.5, 1.0, 3.0)),
])
def test_genericity_survives_coordinate_rescaling(name, factors):
    spec = get_entry(name)
    rescaled = rescale_coordinates(spec, factors)
    original = curvature_operator(build_point_data(spec, interior_point(spec), 4))
    scaled = curvature_operator(build_point_data(rescaled, interior_point(rescaled), 4))
    assert scaled.generic is original.generic


def test_rescaling_preserves_kretschmann():
    spec = get_entry("schwarzschild")
    factors = (1.0, 2.0, 1.0, 1.0)
    rescaled = rescale_coordinates(spec, factors)
    point = (0.3, 4.0, 1.1, 0.2)
    moved = tuple(x / c for x, c in zip(point, factors))
    k0 = scalar_invariants(build_point_data(spec, point, 4)).scalars["kretschmann"]
    k1 = scalar_invariants(build_point_data(rescaled, moved, 4)).scalars["kretschmann"]
    assert k1 == pytest.approx(k0, rel=1e-9)


def test_order_one_needs_third_order_metric():
    data = entry_data("schwarzschild", order=2)
    with pytest.raises(JetBudgetError):
        scalar_invariants(data)
    report = scalar_invariants(data, strict=False)
    assert not report.order_one
    assert report.listed_names() == []
    assert "kretschmann" in report.scalars


def test_max_magnitude_names_a_nonzero_entry():
    report = scalar_invariants(entry_data("schwarzschild"))
    name, ratio = report.max_magnitude()
    assert name in report.names()
    assert ratio > 0.0
