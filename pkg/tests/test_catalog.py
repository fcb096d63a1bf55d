"""
Tests for the catalog generators, constructions and built-in entries.
"""

import numpy as np
import pytest

from catalog import (
    BrinkmannParams,
    PlaneWaveProfile,
    brinkmann_build,
    builtin_metrics,
    catalog_names,
    direct_product,
    flat_extension,
    get_entry,
    plane_wave,
    plane_wave_expected,
    rescale_coordinates,
)
from classifier import sample_points
from exceptions import CatalogError
from metric_dsl import BinOp, Number, emit_metric_file, evaluate_metric, metric_value, parse_metric_file


def test_catalog_has_reference_entries():
    names = catalog_names()
    assert len(names) >= 12
    assert len(set(names)) == len(names)
    for required in ("minkowski-4", "sphere-unit", "de-sitter", "schwarzschild", "plane-wave-linear"):
        assert required in names


@pytest.mark.parametrize("name", catalog_names())
def test_entry_metadata(name):
    spec = get_entry(name)
    assert spec.name == name
    assert "expected" in spec.metadata
    assert isinstance(spec.metadata["verified"], bool)
    assert spec.metadata.get("description")


@pytest.mark.parametrize("name", catalog_names())
def test_entry_round_trips_through_metric_file(name):
    spec = get_entry(name)
    text = emit_metric_file(spec)
    assert parse_metric_file(text) == spec
    assert emit_metric_file(parse_metric_file(text)) == text


def test_unknown_entry():
    with pytest.raises(CatalogError, match="unknown catalog entry 'nosuch'"):
        get_entry("nosuch")


def test_builtin_metrics_is_cached():
    assert builtin_metrics() is builtin_metrics()


def test_brinkmann_components():
    spec = brinkmann_build(BrinkmannParams(H="x*y + u", W=("x", "0")))
    components = spec.component_map()
    assert spec.coords == ("u", "v", "x", "y")
    assert components[(0, 1)] == Number(-1.0)
    assert (0, 3) not in components
    germ = metric_value(spec, (0.5, 0.1, 0.2, -0.4))
    g = germ.g.values()
    assert g[0, 0] == pytest.approx(-2 * (0.2 * -0.4 + 0.5))
    assert g[0, 2] == pytest.approx(-0.2)
    assert g[2, 2] == 1.0 and g[3, 3] == 1.0
    assert germ.lorentzian


@pytest.mark.parametrize("params,field", [
    (BrinkmannParams(H="v*x"), "H"),
    (BrinkmannParams(W=("sin(v)", "0")), "W_0"),
    (BrinkmannParams(g_transverse=(((0, 0), "1 + v^2"), ((1, 1), "1"))), "g_00"),
])
def test_brinkmann_rejects_v_dependence(params, field):
    with pytest.raises(CatalogError, match=f"v-dependence detected in {field}"):
        brinkmann_build(params)


def test_brinkmann_rejects_null_coordinate_names():
    with pytest.raises(CatalogError):
        BrinkmannParams(transverse=("u", "y"))


def test_profile_must_be_symmetric():
    with pytest.raises(CatalogError):
        PlaneWaveProfile((((1.0,), (2.0,)), ((0.0,), (1.0,))))


@pytest.mark.parametrize("entries,degree", [
    (((0.0,), (0.0,)), -1),
    (((1.0,), (-1.0,)), 0),
    (((0.0, 1.0), (0.0, -1.0)), 1),
    (((0.0, 0.0, 1.0), (0.0,)), 2),
])
def test_profile_degree(entries, degree):
    assert PlaneWaveProfile.diagonal(*entries).degree == degree


def test_profile_over_budget():
    profile = PlaneWaveProfile.diagonal((0.0, 0.0, 0.0, 1.0), (0.0,))
    with pytest.raises(CatalogError, match="profile degree 3 exceeds jet budget"):
        plane_wave(profile, order=4)
    assert plane_wave(profile, order=5).dim == 4


@pytest.mark.parametrize("entries,symmetric,two_symmetric,ricci_flat,k3", [
    (((1.0,), (-1.0,)), True, True, True, True),
    (((1.0,), (1.0,)), True, True, False, True),
    (((0.0, 1.0), (0.0, -1.0)), False, True, True, True),
    (((0.0, 0.0, 1.0), (0.0, 0.0, -1.0)), False, False, True, True),
    (((0.0, 0.0, 0.0, 1.0), (0.0,)), False, False, False, False),
])
def test_plane_wave_expectations(entries, symmetric, two_symmetric, ricci_flat, k3):
    expected = plane_wave_expected(PlaneWaveProfile.diagonal(*entries))
    assert expected["symmetric"] is symmetric
    assert expected["two_symmetric"] is two_symmetric
    assert expected["ricci_flat"] is ricci_flat
    assert expected["k_symmetric"][3] is k3
    assert expected["semisymmetric"] and expected["parallel_null"]
    assert expected["generic"] is False


def test_plane_wave_off_diagonal_profile():
    profile = PlaneWaveProfile((((1.0,), (0.0, 2.0)), ((0.0, 2.0), (-1.0,))))
    spec = plane_wave(profile, name="pw-off")
    assert spec.coords == ("u", "v", "x1", "x2")
    g = metric_value(spec, (0.5, 0.0, 0.3, -0.2)).g.values()
    h = 0.5 * (0.3 ** 2) - 0.5 * (0.2 ** 2) + 2 * 0.5 * 0.3 * -0.2
    assert g[0, 0] == pytest.approx(-2 * h)


def test_direct_product_renames_clashes():
    a = get_entry("minkowski-2")
    spec = direct_product([a, a])
    assert spec.name == "minkowski-2-x-minkowski-2"
    assert spec.coords == ("t", "x", "t_b2", "x_b2")
    assert spec.dim == 4
    assert metric_value(spec, (0.1, 0.2, 0.3, 0.4)).signature == (2, 2)


def test_direct_product_shifts_indices():
    spec = get_entry("minkowski-2-x-sphere")
    components = spec.component_map()
    assert set(components) == {(0, 0), (1, 1), (2, 2), (3, 3)}
    assert spec.coords == ("t", "x", "th", "ph")
    assert spec.metadata["expected"]["symmetric"] is True
    assert spec.metadata["expected"]["generic"] is False


def test_direct_product_renames_parameters():
    s = get_entry("schwarzschild")
    spec = direct_product([s, s])
    assert [name for name, _ in spec.params] == ["m", "m_b2"]
    assert "r_b2" in spec.coords


def test_direct_product_single_block():
    spec = get_entry("sphere-unit")
    assert direct_product([spec]) is spec
    assert direct_product([spec], name="s2").name == "s2"
    with pytest.raises(CatalogError):
        direct_product([])


def test_flat_extension_zero_dims_is_identity():
    spec = get_entry("de-sitter")
    assert flat_extension(spec, []) is spec


def test_flat_extension_adds_flat_block():
    spec = flat_extension(get_entry("sphere-unit"), [1, 1])
    assert spec.name == "sphere-unit+flat2"
    assert spec.coords == ("th", "ph", "w1", "w2")
    assert spec.component(2, 2) == Number(1.0)
    assert spec.metadata["expected"]["symmetric"] is True
    assert spec.metadata["expected"]["flat"] is False


def test_flat_extension_keeps_single_timelike_direction():
    with pytest.raises(CatalogError, match="2 timelike directions"):
        flat_extension(get_entry("de-sitter"), [-1])
    assert flat_extension(get_entry("de-sitter"), [1]).dim == 5


def test_flat_extension_rejects_bad_signs():
    with pytest.raises(CatalogError):
        flat_extension(get_entry("sphere-unit"), [2])


def test_rescale_coordinates():
    spec = rescale_coordinates(get_entry("sphere-unit"), (2.0, 1.0))
    assert spec.domain[0] == pytest.approx((0.1, (3.141592653589793 - 0.2) / 2))
    assert spec.component(0, 0) == BinOp("*", Number(4.0), Number(1.0))
    assert spec.metadata["rescaled_by"] == (2.0, 1.0)
    g = metric_value(spec, (0.6, 1.0)).g.values()
    assert g[0, 0] == pytest.approx(4.0)
    assert g[1, 1] == pytest.approx(np.sin(1.2) ** 2)


def test_rescale_coordinates_rejects_bad_factors():
    with pytest.raises(CatalogError):
        rescale_coordinates(get_entry("sphere-unit"), (1.0,))
    with pytest.raises(CatalogError):
        rescale_coordinates(get_entry("sphere-unit"), (1.0, 0.0))


def test_negative_rescaling_orders_domain():
    spec = rescale_coordinates(get_entry("minkowski-2"), (-2.0, 1.0))
    lo, hi = spec.domain[0]
    assert lo == pytest.approx(-0.5) and hi == pytest.approx(0.5)


def test_schwarzschild_nondegenerate_on_domain():
    spec = get_entry("schwarzschild")
    for point in sample_points(spec, 100, 42):
        germ = evaluate_metric(spec, point, 2)
        assert germ.lorentzian


def test_curved_transverse_entry_is_unverified():
    spec = get_entry("brinkmann-curved-transverse")
    assert spec.metadata["verified"] is False
    assert "unverified" in spec.metadata["description"]
