"""
Tests for point classification, the identity suite, holonomy kernels,
consistency findings and the sampling aggregate.
"""

from dataclasses import replace

import numpy as np
import pytest

from catalog import PlaneWaveProfile, catalog_names, get_entry, plane_wave
from classifier import (
    FAIL,
    IDENTITY_NAMES,
    NOT_APPLICABLE,
    PASS,
    VERDICT_NAMES,
    aggregate,
    causal_character,
    classify_point,
    conjoin,
    evaluate_point,
    holonomy_kernel,
    identity_suite,
    sample_points,
    theorem_consistency,
)
from classifier.holonomy import close_under_commutators, common_kernel, sym2_kernel_dimension
from classifier.identities import identity_residuals, weyl_quadratic_terms
from config import RunConfig
from curvature import build_point_data
from exceptions import JetBudgetError, SamplingError
from invariants import Tolerance
from metric_dsl import parse_metric_file
from tests.conftest import entry_data, interior_point

VERIFIED = [name for name in catalog_names() if get_entry(name).metadata["verified"]]


def _result(name, run_config=RunConfig(workers=1), with_identities=False):
    spec = get_entry(name)
    return evaluate_point(spec, 0, interior_point(spec), run_config, Tolerance(), with_identities)


# point classification

def test_minkowski_point():
    c = classify_point(entry_data("minkowski-4"))
    assert c.verdict("flat") is True
    for name in ("constant_curvature", "symmetric", "two_symmetric", "semisymmetric", "ricci_flat"):
        assert c.verdict(name) is True, name
    assert c.verdict("generic") is False
    assert c.k_symmetric == {1: True, 2: True}
    assert c.lorentzian
    assert c.hierarchy_consistent


def test_linear_plane_wave_point():
    c = classify_point(entry_data("plane-wave-linear"))
    assert c.verdict("flat") is False
    assert c.verdict("constant_curvature") is False
    assert c.verdict("symmetric") is False
    assert c.verdict("two_symmetric") is True
    assert c.verdict("semisymmetric") is True
    assert c.verdict("ricci_flat") is True
    assert c.verdict("generic") is False
    assert c.scalar_curvature == pytest.approx(0.0, abs=1e-12)


def test_schwarzschild_point():
    c = classify_point(entry_data("schwarzschild"))
    assert c.verdict("ricci_flat") is True
    assert c.verdict("semisymmetric") is False
    assert c.verdict("symmetric") is False
    assert c.verdict("constant_curvature") is False
    assert c.verdict("generic") is True
    assert c.residuals["semisymmetric"] > Tolerance().threshold(c.scales["semisymmetric"])


def test_sphere_is_not_lorentzian():
    c = classify_point(entry_data("sphere-unit"))
    assert c.signature == (0, 2)
    assert not c.lorentzian
    assert c.verdict("constant_curvature") is True
    assert c.scalar_curvature == pytest.approx(2.0, rel=1e-9)


def test_variable_curvature_surface_is_not_constant_curvature():
    spec = parse_metric_file(
        "version = 1\nname = bump\ndim = 2\ncoords = x y\n"
        'g 0 0 = "1"\ng 1 1 = "exp(2*x^3)"\n'
    )
    c = classify_point(build_point_data(spec, (0.4, 0.1), 4))
    assert c.verdict("constant_curvature") is False
    assert c.verdict("symmetric") is False
    assert c.hierarchy_consistent


def test_low_order_leaves_derivative_verdicts_open():
    c = classify_point(entry_data("schwarzschild", order=2, k_depth=1))
    assert c.verdict("symmetric") is None
    assert c.verdict("two_symmetric") is None
    assert c.k_symmetric == {}
    assert c.verdict("ricci_flat") is True


def test_k_depth_beyond_tower():
    with pytest.raises(JetBudgetError):
        classify_point(entry_data("minkowski-4"), k_depth=3)


@pytest.mark.parametrize("m", [0, 1, 2])
def test_plane_wave_k_symmetry_escalation(m):
    coeffs = tuple([0.0] * m + [1.0])
    spec = plane_wave(PlaneWaveProfile.diagonal(coeffs, tuple(-c for c in coeffs)), name=f"pw-{m}", order=5)
    data = build_point_data(spec, interior_point(spec), 5, 3)
    c = classify_point(data, k_depth=3)
    assert c.k_symmetric == {k: k >= m + 1 for k in (1, 2, 3)}
    assert c.hierarchy_consistent


# identities

def test_linear_plane_wave_satisfies_every_identity():
    results = identity_suite(entry_data("plane-wave-linear"))
    assert [r.name for r in results] == list(IDENTITY_NAMES)
    failing = [r.name for r in results if not r.passed]
    assert failing == []


def test_identity_names_are_distinct():
    assert len(set(IDENTITY_NAMES)) == len(IDENTITY_NAMES)
    assert "symmetrized_gradient_annihilates" not in IDENTITY_NAMES
    residuals = identity_residuals(entry_data("schwarzschild"))
    assert list(residuals) == list(IDENTITY_NAMES)


@pytest.mark.parametrize("name", ["plane-wave-constant", "minkowski-2-x-sphere", "de-sitter"])
def test_symmetric_spaces_satisfy_every_identity(name):
    results = identity_suite(entry_data(name))
    assert all(r.passed for r in results), [r.name for r in results if not r.passed]


def test_product_space_exercises_weyl_quadratic():
    results = {r.name: r for r in identity_suite(entry_data("minkowski-2-x-sphere"))}
    weyl = results["weyl_quadratic"]
    assert weyl.passed
    assert weyl.scale > 0.0


@pytest.mark.parametrize("sign,vanishes", [(2.0, True), (-2.0, False)])
def test_weyl_quadratic_ricci_delta_sign(sign, vanishes):
    data = entry_data("minkowski-2-x-sphere")
    n = data.dim
    scalar = float(data.scalar.values())
    terms = weyl_quadratic_terms(data.weyl_down.values(), data.ricci.values(), data.frame.g_inv.values())
    total = ((n - 2) * terms["weyl_weyl"] - 2.0 * terms["ricci_weyl"]
             + sign * terms["ricci_delta_weyl"] + (2.0 * scalar / (n - 1)) * terms["delta_weyl"])
    assert (np.max(np.abs(total)) < 1e-8) is vanishes


def test_schwarzschild_breaks_semisymmetric_identities():
    results = {r.name: r for r in identity_suite(entry_data("schwarzschild"))}
    assert not results["curvature_commutator"].passed
    assert results["curvature_commutator"].holds_in == "semisymmetric"


def test_two_dimensional_suite_omits_weyl_quadratic():
    names = [r.name for r in identity_suite(entry_data("sphere-unit"))]
    assert "weyl_quadratic" not in names
    assert len(names) == len(IDENTITY_NAMES) - 1


def test_identities_need_first_derivative():
    with pytest.raises(JetBudgetError):
        identity_suite(entry_data("plane-wave-linear", order=2, k_depth=1))


# holonomy

@pytest.mark.parametrize("norm,character", [
    (0.0, "null"),
    (5e-8, "null"),
    (-0.5, "timelike"),
    (2.0, "spacelike"),
])
def test_causal_character(norm, character):
    assert causal_character(norm) == character


def test_commutator_closure_reaches_rotation_algebra():
    a = np.zeros((3, 3))
    a[0, 1], a[1, 0] = 1.0, -1.0
    b = np.zeros((3, 3))
    b[1, 2], b[2, 1] = 1.0, -1.0
    assert len(close_under_commutators([a, b], 3)) == 3
    assert common_kernel(close_under_commutators([a, b], 3), 3).shape == (0, 3)


def test_empty_algebra_kernels():
    np.testing.assert_array_equal(common_kernel([], 3), np.eye(3))
    assert sym2_kernel_dimension([], 2) == 3


def test_minkowski_holonomy():
    report = holonomy_kernel(entry_data("minkowski-4"))
    assert report.algebra_dimension == 0
    assert report.kernel_dimension == 4
    assert sorted(report.characters) == ["spacelike", "spacelike", "spacelike", "timelike"]
    assert report.sym2_kernel_dimension == 9
    assert report.contains_null


@pytest.mark.parametrize("name", ["plane-wave-constant", "plane-wave-linear"])
def test_plane_wave_kernel_is_null_direction(name):
    report = holonomy_kernel(entry_data(name))
    assert report.kernel_dimension == 1
    assert report.characters == ["null"]
    np.testing.assert_allclose(report.kernel[0].vector, (0.0, 1.0, 0.0, 0.0), atol=1e-8)
    assert report.contains_null


def test_sphere_holonomy():
    report = holonomy_kernel(entry_data("sphere-unit"))
    assert report.algebra_dimension == 1
    assert report.kernel_dimension == 0
    assert report.sym2_kernel_dimension == 0
    assert not report.contains_null


def test_schwarzschild_holonomy_is_full_lorentz_algebra():
    report = holonomy_kernel(entry_data("schwarzschild"))
    assert report.algebra_dimension == 6
    assert report.kernel_dimension == 0
    assert report.sym2_kernel_dimension == 0


def test_holonomy_needs_second_derivative():
    with pytest.raises(JetBudgetError):
        holonomy_kernel(entry_data("plane-wave-linear", order=3, k_depth=1))


# consistency findings

def test_corrupted_two_symmetric_verdict_yields_witness():
    result = _result("schwarzschild")
    c = result.classification
    corrupted = replace(result, classification=replace(
        c, verdicts={**c.verdicts, "two_symmetric": True, "symmetric": False}))
    findings = {f.name: f for f in theorem_consistency([corrupted])}

    null_kernel = findings["null_kernel_for_proper_two_symmetric"]
    assert null_kernel.status == FAIL
    assert null_kernel.witness_index == 0
    assert null_kernel.witness == c.point
    assert findings["hierarchy_ordering"].status == FAIL
    assert findings["invariants_vanish_without_null_kernel"].status == FAIL


def test_schwarzschild_findings_are_not_applicable():
    findings = {f.name: f for f in theorem_consistency([_result("schwarzschild")])}
    assert findings["null_kernel_for_proper_two_symmetric"].status == NOT_APPLICABLE
    assert findings["generic_semisymmetric_constant_curvature"].status == NOT_APPLICABLE
    assert findings["hierarchy_ordering"].status == PASS


def test_de_sitter_generic_semisymmetric_is_constant_curvature():
    findings = {f.name: f for f in theorem_consistency([_result("de-sitter")])}
    assert findings["generic_semisymmetric_constant_curvature"].status == PASS
    assert findings["generic_semisymmetric_constant_curvature"].applicable_points == 1


def test_scalar_gradient_finding_checks_null_norm():
    result = _result("plane-wave-linear")
    c = result.classification

    def with_gradient(norm):
        return replace(result, classification=replace(
            c, grad_scalar=(1.0, 0.0, 0.0, 0.0), grad_scalar_norm=norm, hessian_residual=0.0))

    passing = {f.name: f for f in theorem_consistency([with_gradient(0.0)])}
    failing = {f.name: f for f in theorem_consistency([with_gradient(1.0)])}
    assert passing["scalar_gradient_null_parallel"].status == PASS
    assert failing["scalar_gradient_null_parallel"].status == FAIL
    assert "g(dR, dR)" in failing["scalar_gradient_null_parallel"].detail


def test_ricci_flat_or_symmetric_passes_for_vacuum_wave():
    findings = {f.name: f for f in theorem_consistency([_result("plane-wave-linear")])}
    # the null kernel excludes the premise
    assert findings["ricci_flat_or_symmetric"].status == NOT_APPLICABLE
    assert findings["null_kernel_for_proper_two_symmetric"].status == PASS


# aggregate

@pytest.mark.parametrize("values,expected", [
    ([True, True], True),
    ([True, False, None], False),
    ([True, None], None),
    ([], None),
])
def test_conjoin(values, expected):
    assert conjoin(values) is expected


def test_sample_points_reproducible_and_inside_domain():
    spec = get_entry("schwarzschild")
    a = sample_points(spec, 10, 3)
    np.testing.assert_array_equal(a, sample_points(spec, 10, 3))
    assert not np.array_equal(a, sample_points(spec, 10, 4))
    assert all(spec.contains(p) for p in a)


def test_linear_plane_wave_aggregate():
    report = aggregate(get_entry("plane-wave-linear"), RunConfig(points=20, seed=42, workers=2))
    assert len(report.points) == 20
    assert [p.index for p in report.points] == list(range(20))
    assert report.verdict("two_symmetric") is True
    assert report.verdict("symmetric") is False
    assert report.holonomy["null_kernel_at_all_points"] is True
    assert report.signatures == ((1, 3),)
    assert not report.failed


def test_schwarzschild_aggregate(small_run):
    report = aggregate(get_entry("schwarzschild"), small_run)
    assert report.verdict("ricci_flat") is True
    assert report.verdict("symmetric") is False
    assert report.k_symmetric == {1: False, 2: False}
    assert report.invariants["kretschmann"]["vanishes_everywhere"] is False
    assert report.identities is None
    assert not report.failed


def test_identities_are_skipped_without_force(small_run):
    report = aggregate(get_entry("schwarzschild"), small_run, with_identities=True)
    assert report.identities == {}
    assert all(p.identities_skipped for p in report.points)
    assert not report.failed


def test_forced_identities_fail_for_schwarzschild(small_run):
    report = aggregate(get_entry("schwarzschild"), small_run.with_overrides(force=True), with_identities=True)
    assert "curvature_commutator" in report.failed_identities
    assert report.identities["curvature_commutator"]["witness_index"] == 0
    assert report.failed


def test_zero_points():
    with pytest.raises(SamplingError):
        aggregate(get_entry("minkowski-2"), RunConfig(points=0, workers=1))


def test_degenerate_metric_everywhere():
    spec = parse_metric_file(
        "version = 1\nname = degenerate\ndim = 2\ncoords = x y\n"
        'g 0 0 = "1"\ng 0 1 = "1"\ng 1 1 = "1"\n'
    )
    with pytest.raises(SamplingError, match="no valid sample points"):
        aggregate(spec, RunConfig(points=3, workers=1))


def test_points_outside_function_domain_are_skipped():
    spec = parse_metric_file(
        "version = 1\nname = half-defined\ndim = 2\ncoords = x y\n"
        'g 0 0 = "1"\ng 1 1 = "1 + sqrt(x)"\n'
    )
    report = aggregate(spec, RunConfig(points=20, workers=1))
    assert report.points and report.skipped
    indices = sorted([p.index for p in report.points] + [s.index for s in report.skipped])
    assert indices == list(range(20))
    assert all(s.point[0] <= 0.0 for s in report.skipped)
    assert all("sqrt" in s.reason for s in report.skipped)


SEEDED_RUN = RunConfig(points=20, seed=42, workers=2)


def _assert_matches_expectations(report, expected):
    for verdict in VERDICT_NAMES:
        if expected.get(verdict) is not None:
            assert report.verdict(verdict) is expected[verdict], verdict
    for k, value in report.k_symmetric.items():
        if expected.get("k_symmetric", {}).get(k) is not None:
            assert value is expected["k_symmetric"][k], f"k={k}"
    if expected.get("parallel_null"):
        assert report.holonomy["null_kernel_at_all_points"] is True
    assert all(p.classification.hierarchy_consistent for p in report.points)

    statuses = {f.name: f.status for f in report.consistency}
    for finding in ("null_kernel_for_proper_two_symmetric", "generic_semisymmetric_constant_curvature",
                    "hierarchy_ordering"):
        assert statuses[finding] != FAIL, finding


@pytest.mark.parametrize("name", VERIFIED)
def test_catalog_expectations(name):
    spec = get_entry(name)
    report = aggregate(spec, SEEDED_RUN)
    assert len(report.points) + len(report.skipped) == 20
    _assert_matches_expectations(report, spec.metadata["expected"])


@pytest.mark.parametrize("name,order,k_depth,k_symmetric", [
    ("plane-wave-constant", 4, 2, {1: True, 2: True}),
    ("plane-wave-quadratic", 5, 3, {1: False, 2: False, 3: True}),
])
def test_plane_wave_profiles_over_seeded_points(name, order, k_depth, k_symmetric):
    spec = get_entry(name)
    report = aggregate(spec, SEEDED_RUN.with_overrides(order=order, k_depth=k_depth))
    assert len(report.points) == 20
    assert report.k_symmetric == k_symmetric
    assert report.verdict("symmetric") is k_symmetric[1]
    assert report.verdict("two_symmetric") is k_symmetric[2]
    assert report.verdict("semisymmetric") is True
    assert report.verdict("flat") is False
    assert report.signatures == ((1, 3),)
    assert report.holonomy["null_kernel_at_all_points"] is True
    _assert_matches_expectations(report, spec.metadata["expected"])
    assert not report.failed
