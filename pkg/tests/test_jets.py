"""
Tests for the jet engine.
"""

import math

import numpy as np
import pytest

from exceptions import DegenerateGermError, FunctionDomainError, JetBudgetError, JetShapeError
from jets import (
    Jet,
    coeff_count,
    index_table,
    jet_apply_univariate,
    jet_constant,
    jet_mul,
    jet_partial,
    jet_pow,
    jet_recip,
    jet_truncate,
    jet_variable,
    jet_variables,
)
from tests.numeric_helpers import EXPRESSION_CORPUS, FloatOps, JetOps, close, fd_derivative, multi_indices


def random_jet(rng, dim=2, order=4, scale=1.0):
    return Jet(dim, order, scale * rng.uniform(-1, 1, coeff_count(dim, order)))


def jet_from_poly(poly, dim, order):
    table = index_table(dim, order)
    coeffs = np.zeros(table.size)
    for alpha, c in poly.items():
        if sum(alpha) <= order:
            coeffs[table.position(alpha)] += c
    return Jet(dim, order, coeffs)


# enumeration


def test_coefficient_count_and_prefix_property():
    """Lower-order tables are prefixes of higher-order ones."""
    assert coeff_count(2, 3) == 10
    assert index_table(8, 5).size == 1287
    low = index_table(3, 2).exponents
    high = index_table(3, 4).exponents
    assert np.array_equal(high[:len(low)], low)


def test_graded_descending_lex_order():
    exps = [tuple(e) for e in index_table(2, 2).exponents]
    assert exps == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


# construction


def test_variable_one_dimensional():
    assert list(jet_variable(0, 2.0, 1, 2).coeffs) == [2.0, 1.0, 0.0]


def test_variable_second_coordinate():
    v = jet_variable(1, 0.0, 2, 1)
    assert v.value() == 0.0
    assert v.coeff((0, 1)) == 1.0
    assert v.coeff((1, 0)) == 0.0


def test_variable_index_out_of_range():
    with pytest.raises(JetShapeError):
        jet_variable(2, 0.0, 2, 3)


def test_square_of_variable():
    x = jet_variable(0, 2.0, 1, 2)
    sq = x * x
    assert sq.value() == 4.0
    assert sq.coeffs[1] == 4.0
    assert sq.coeffs[2] == 1.0


def test_constant_has_no_derivatives():
    c = jet_constant(3.5, 3, 4)
    assert c.value() == 3.5
    assert np.all(c.coeffs[1:] == 0.0)


# linear operations


def test_linear_operations():
    x, _ = jet_variables([0.0, 0.0], 2)
    total = (1 + x) + (1 - x)
    assert total.value() == 2.0
    assert np.all(total.coeffs[1:] == 0.0)
    a = 1 + x * x
    assert np.all((a - a).coeffs == 0.0)
    assert (3 * x).coeff((1, 0)) == 3.0


def test_shape_mismatch_raises():
    with pytest.raises(JetShapeError):
        jet_variable(0, 1.0, 2, 2) + jet_variable(0, 1.0, 2, 3)
    with pytest.raises(JetShapeError):
        jet_mul(jet_variable(0, 1.0, 2, 2), jet_variable(0, 1.0, 3, 2))


# multiplication


@pytest.mark.parametrize("order,expected_x2", [(2, -1.0), (1, None)])
def test_product_truncation(order, expected_x2):
    x = jet_variable(0, 0.0, 1, order)
    prod = (1 + x) * (1 - x)
    assert prod.value() == 1.0
    assert prod.coeffs[1] == 0.0
    if expected_x2 is not None:
        assert prod.coeffs[2] == expected_x2
    else:
        assert len(prod.coeffs) == 2


def test_product_matches_naive_polynomial_multiplication():
    """Cauchy product against brute-force multiplication followed by truncation."""
    rng = np.random.default_rng(7)
    order = 4
    polys = []
    for _ in range(2):
        polys.append({alpha: rng.uniform(-2, 2) for alpha in multi_indices(2, 3)})
    expected = {}
    for a, ca in polys[0].items():
        for b, cb in polys[1].items():
            key = (a[0] + b[0], a[1] + b[1])
            expected[key] = expected.get(key, 0.0) + ca * cb
    prod = jet_mul(jet_from_poly(polys[0], 2, order), jet_from_poly(polys[1], 2, order))
    reference = jet_from_poly(expected, 2, order)
    assert np.max(np.abs(prod.coeffs - reference.coeffs)) <= 1e-12 * np.max(np.abs(reference.coeffs))


def test_ring_axioms():
    rng = np.random.default_rng(11)
    a, b, c = (random_jet(rng, dim=3, order=4) for _ in range(3))
    magnitude = max(j.max_abs() for j in (a, b, c))
    tol = 1e-12 * max(1.0, magnitude) ** 3 * 50
    assert np.max(np.abs((a * b).coeffs - (b * a).coeffs)) <= tol
    assert np.max(np.abs(((a * b) * c).coeffs - (a * (b * c)).coeffs)) <= tol
    assert np.max(np.abs((a * (b + c)).coeffs - (a * b + a * c).coeffs)) <= tol


# reciprocal and powers


def test_reciprocal_geometric_series():
    x = jet_variable(0, 0.0, 1, 3)
    r = jet_recip(1 - x)
    assert np.allclose(r.coeffs, [1.0, 1.0, 1.0, 1.0], atol=1e-15)


def test_reciprocal_involution():
    rng = np.random.default_rng(3)
    a = random_jet(rng, dim=2, order=5) + 3.0
    back = jet_recip(jet_recip(a))
    assert np.max(np.abs(back.coeffs - a.coeffs)) <= 1e-12 * a.max_abs()


def test_reciprocal_against_finite_differences():
    point = (0.4, -0.3)
    x, y = jet_variables(point, 3)
    r = jet_recip(2 + x + y * y)
    f = lambda u, v: 1.0 / (2 + u + v * v)
    for alpha in multi_indices(2, 3):
        fd = fd_derivative(f, point, alpha, h=1e-2)
        assert close(r.derivative(alpha), fd, 1e-6)


def test_reciprocal_of_near_zero_raises():
    with pytest.raises(DegenerateGermError, match="division by near-zero germ"):
        jet_recip(jet_variable(0, 1e-14, 1, 3))


def test_integer_powers():
    x = jet_variable(0, 2.0, 1, 3)
    cube = jet_pow(x, 3)
    assert cube.value() == pytest.approx(8.0)
    assert cube.derivative((1,)) == pytest.approx(12.0)
    inv_sq = jet_pow(x, -2)
    assert inv_sq.value() == pytest.approx(0.25)
    assert inv_sq.derivative((1,)) == pytest.approx(-0.25)
    assert jet_pow(x, 0).value() == 1.0


# univariate functions


def test_exp_series():
    e = jet_apply_univariate("exp", jet_variable(0, 0.0, 1, 3))
    assert np.allclose(e.coeffs, [1.0, 1.0, 0.5, 1.0 / 6.0], atol=1e-15)


def test_log_series():
    x = jet_variable(0, 0.0, 1, 3)
    lg = jet_apply_univariate("log", 1 + x)
    assert np.allclose(lg.coeffs, [0.0, 1.0, -0.5, 1.0 / 3.0], atol=1e-15)


def test_pythagorean_identity():
    x, y = jet_variables([0.7, -0.2], 3)
    arg = x + 0.5 * y
    s = jet_apply_univariate("sin", arg)
    c = jet_apply_univariate("cos", arg)
    total = s * s + c * c
    assert total.value() == pytest.approx(1.0, abs=1e-14)
    assert np.max(np.abs(total.coeffs[1:])) <= 1e-14


@pytest.mark.parametrize("name,value", [("log", -1.0), ("log", 0.0), ("sqrt", -0.5), ("tan", math.pi / 2)])
def test_function_domain_errors(name, value):
    with pytest.raises(FunctionDomainError, match="function domain error"):
        jet_apply_univariate(name, jet_variable(0, value, 1, 2))


def test_unknown_function():
    with pytest.raises(FunctionDomainError):
        jet_apply_univariate("arcsin", jet_variable(0, 0.1, 1, 2))


@pytest.mark.parametrize("index", range(len(EXPRESSION_CORPUS)))
def test_corpus_against_finite_differences(index):
    """Every coefficient up to order 3 agrees with central differences."""
    expr = EXPRESSION_CORPUS[index]
    point = (0.3, 0.7)
    x, y = jet_variables(point, 3)
    jet = expr(JetOps, x, y)
    f = lambda u, v: expr(FloatOps, u, v)
    for alpha in multi_indices(2, 3):
        fd = fd_derivative(f, point, alpha)
        assert close(jet.derivative(alpha), fd, 1e-5), (index, alpha)


# partial derivatives


def test_partial_of_square():
    x = jet_variable(0, 1.5, 1, 2)
    d = jet_partial(x * x, 0)
    assert d.order == 1
    assert d.value() == pytest.approx(3.0)
    assert d.coeffs[1] == pytest.approx(2.0)


def test_partials_commute():
    rng = np.random.default_rng(5)
    a = random_jet(rng, dim=3, order=4)
    uv = jet_partial(jet_partial(a, 0), 1)
    vu = jet_partial(jet_partial(a, 1), 0)
    assert np.array_equal(uv.coeffs, vu.coeffs)


def test_partial_against_finite_differences():
    point = (1.0, 1.0)
    x, y = jet_variables(point, 3)
    d = jet_partial(jet_apply_univariate("exp", x * y), 0)
    f = lambda u, v: v * math.exp(u * v)
    for alpha in multi_indices(2, 2):
        assert close(d.derivative(alpha), fd_derivative(f, point, alpha, h=1e-2), 1e-6)


def test_leibniz_rule():
    rng = np.random.default_rng(13)
    a = random_jet(rng, dim=3, order=4)
    b = random_jet(rng, dim=3, order=4)
    for i in range(3):
        lhs = jet_partial(a * b, i)
        rhs = jet_partial(a, i) * jet_truncate(b, 3) + jet_truncate(a, 3) * jet_partial(b, i)
        scale = max(1.0, lhs.max_abs())
        assert np.max(np.abs(lhs.coeffs - rhs.coeffs)) <= 1e-12 * scale * 10


def test_chain_rule():
    x, y = jet_variables([0.2, 0.5], 4)
    a = x * y + jet_apply_univariate("sin", y)
    composite = jet_apply_univariate("exp", a)
    for i in range(2):
        lhs = jet_partial(composite, i)
        rhs = jet_truncate(composite, 3) * jet_partial(a, i)
        assert np.max(np.abs(lhs.coeffs - rhs.coeffs)) <= 1e-12 * max(1.0, lhs.max_abs()) * 10


def test_partial_of_order_zero_jet_raises():
    with pytest.raises(JetBudgetError):
        jet_partial(jet_constant(1.0, 2, 0), 0)
