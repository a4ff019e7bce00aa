import json
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from monappell.algebra import AlgebraContext
from monappell.errors import ContextMismatchError
from monappell.polynomials import (
    CliffordPolynomial,
    first_difference,
    radius_squared,
    unit_exps,
    vector_power,
    vector_variable,
)
from strategies import polynomials, rational_points, rationals

CTX3 = AlgebraContext(3)


@pytest.mark.parametrize("m", [2, 3, 5])
def test_vector_variable_squares_to_minus_radius(m):
    ctx = AlgebraContext(m)
    xv = vector_variable(ctx)
    assert xv * xv == -radius_squared(ctx)


def test_unit_multiplication():
    p = CliffordPolynomial.variable(CTX3, 0) + vector_variable(CTX3)
    assert p * CliffordPolynomial.one(CTX3) == p
    assert CliffordPolynomial.one(CTX3) * p == p


@pytest.mark.parametrize("n", range(6))
def test_vector_power_matches_repeated_product(n):
    xv = vector_variable(CTX3)
    assert vector_power(CTX3, n) == xv**n


def test_partial_derivative_examples():
    p = CliffordPolynomial.monomial(CTX3, (0, 2, 0, 0), CTX3.e(2))  # x1^2 e2
    expected = CliffordPolynomial.monomial(CTX3, (0, 1, 0, 0), 2 * CTX3.e(2))
    assert p.partial_derivative(1) == expected
    assert vector_variable(CTX3).partial_derivative(0).is_zero()
    with pytest.raises(IndexError):
        p.partial_derivative(4)


@pytest.mark.parametrize("m", [2, 3])
@given(data=st.data())
def test_mixed_partials_commute(m, data):
    ctx = AlgebraContext(m)
    p = data.draw(polynomials(ctx))
    i = data.draw(st.integers(0, m))
    j = data.draw(st.integers(0, m))
    assert p.partial_derivative(i).partial_derivative(j) == p.partial_derivative(
        j
    ).partial_derivative(i)


@pytest.mark.parametrize("m", [2, 3])
@settings(max_examples=40)
@given(data=st.data())
def test_ring_axioms(m, data):
    ctx = AlgebraContext(m)
    p = data.draw(polynomials(ctx))
    q = data.draw(polynomials(ctx))
    r = data.draw(polynomials(ctx))
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)


def test_restrict_x0():
    x0 = CliffordPolynomial.variable(CTX3, 0)
    xv = vector_variable(CTX3)
    p = x0 + Fraction(1, 5) * xv
    assert p.restrict_x0() == Fraction(1, 5) * xv
    assert xv.restrict_x0() == xv
    assert not xv.depends_on_x0()
    assert p.depends_on_x0()


def test_is_homogeneous():
    x1e1 = CliffordPolynomial.monomial(CTX3, (0, 1, 0, 0), CTX3.e(1))
    x2e2 = CliffordPolynomial.monomial(CTX3, (0, 0, 1, 0), CTX3.e(2))
    assert (x1e1 - x2e2).is_homogeneous(1)
    one_plus = CliffordPolynomial.one(CTX3) + CliffordPolynomial.variable(CTX3, 1)
    assert not one_plus.is_homogeneous(1)
    zero = CliffordPolynomial.zero(CTX3)
    assert zero.is_homogeneous(0) and zero.is_homogeneous(7)


def test_evaluate_examples():
    xv = vector_variable(CTX3)
    assert xv.evaluate((0, 1, 0, 0)) == CTX3.e(1)
    p = CliffordPolynomial.variable(CTX3, 0) + xv
    assert p.evaluate((1, 1, 0, 0)) == CTX3.one() + CTX3.e(1)
    with pytest.raises(ValueError):
        p.evaluate((1, 2))


@pytest.mark.parametrize("m", [2, 3])
@settings(max_examples=40)
@given(data=st.data())
def test_evaluate_is_ring_homomorphism(m, data):
    ctx = AlgebraContext(m)
    p = data.draw(polynomials(ctx))
    q = data.draw(polynomials(ctx))
    point = data.draw(rational_points(ctx))
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
    assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)


def test_context_mismatch():
    with pytest.raises(ContextMismatchError):
        vector_variable(AlgebraContext(2)) * vector_variable(AlgebraContext(3))


def test_scalar_product_rule_for_scalar_left_factor():
    # derivative is a derivation when the left factor commutes with everything
    phi = CliffordPolynomial.variable(CTX3, 1) ** 2
    g = vector_variable(CTX3) * CTX3.blade((1, 2))
    for i in range(4):
        lhs = (phi * g).partial_derivative(i)
        rhs = phi.partial_derivative(i) * g + phi * g.partial_derivative(i)
        assert lhs == rhs


def test_json_schema_round_trip():
    p = (
        CliffordPolynomial.variable(CTX3, 0)
        + Fraction(1, 3) * vector_variable(CTX3)
        + CliffordPolynomial.monomial(CTX3, (0, 1, 1, 0), CTX3.blade((1, 2)))
    )
    payload = p.to_json_dict()
    text = json.dumps(payload)
    assert CliffordPolynomial.from_json_dict(json.loads(text)) == p
    # serialization is deterministic: terms in graded-lex order
    assert payload["terms"] == sorted(
        payload["terms"], key=lambda t: (sum(t["exps"]), tuple(-a for a in t["exps"]))
    )
    assert json.dumps(CliffordPolynomial.from_json_dict(json.loads(text)).to_json_dict()) == text


@pytest.mark.parametrize("m", [2, 3])
@given(data=st.data())
def test_json_round_trip_random(m, data):
    ctx = AlgebraContext(m)
    p = data.draw(polynomials(ctx))
    assert CliffordPolynomial.from_json_dict(p.to_json_dict()) == p


def test_first_difference():
    p = vector_variable(CTX3)
    assert first_difference(p, p) is None
    q = p + CliffordPolynomial.monomial(CTX3, unit_exps(3, 1), CTX3.scalar(Fraction(1, 2)))
    witness = first_difference(q, p)
    assert witness is not None and "1/2" in witness


def test_invalid_constructions():
    with pytest.raises(ValueError):
        CliffordPolynomial(CTX3, {(0, 1): CTX3.one()})
    with pytest.raises(ValueError):
        CliffordPolynomial(CTX3, {(0, -1, 0, 0): CTX3.one()})
    with pytest.raises(ContextMismatchError):
        CliffordPolynomial(CTX3, {(0, 0, 0, 0): AlgebraContext(2).one()})
    with pytest.raises(ValueError):
        vector_power(CTX3, -1)
