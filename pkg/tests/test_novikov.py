import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orbiqh.novikov import (NotHomogeneous, NovikovPolynomial, degree, from_json, is_homogeneous,
                            render, to_json, valuation_T)

NV = 3
fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 6))
nonzero = fractions.filter(bool)
terms = st.tuples(st.tuples(*[st.integers(0, 3)] * NV), fractions, fractions)
polys = st.dictionaries(terms, nonzero, max_size=5).map(lambda d: NovikovPolynomial(NV, d))


def X(k, n=4):
    return NovikovPolynomial.variable(k - 1, n)


def test_valuation_examples():
    p = X(1).shift(2, 3) + (X(2) ** 2).shift(0, 1)
    assert valuation_T(p) == 1
    assert valuation_T(NovikovPolynomial.zero(4)) == math.inf
    assert valuation_T(X(4)) == 0


def test_degree_examples():
    ages = (1, 1, 1, 1)
    p = X(1) * X(2) * X(3) - X(4).shift(2, 3)
    assert degree(p, ages) == 3
    with pytest.raises(NotHomogeneous):
        degree(X(1) + X(1) ** 2, ages)
    q = X(1, 2) * X(2, 2) - NovikovPolynomial.monomial(2, 1, None, Fraction(3, 2), 2)
    assert degree(q, (1, Fraction(1, 2))) == Fraction(3, 2)
    assert is_homogeneous(NovikovPolynomial.zero(2), (1, 1))
    with pytest.raises(NotHomogeneous):
        degree(NovikovPolynomial.zero(2), (1, 1))


def test_render():
    p = X(1) * X(2) * X(3) - X(4).shift(2, 3)
    assert render(p) == "X1*X2*X3 - q^2*T^3*X4"
    assert render(NovikovPolynomial.monomial(2, 1, None, Fraction(3, 2), 2)) == "q^(3/2)*T^2"
    assert render(NovikovPolynomial.zero(2)) == "0"
    assert render(NovikovPolynomial.constant(2, Fraction(-1, 2))) == "-(1/2)"
    assert render(X(1, 1).shift(-1, Fraction(-1, 3))) == "q^(-1)*T^(-1/3)*X1"
    assert render(2 * X(2, 2) ** 2 - X(1, 2), (1, Fraction(1, 2))) == "2*X2^2 - X1"


def test_constructors_and_access():
    p = NovikovPolynomial.from_exponents(3, {0: 2, 2: 1}, coeff=5, q=1, t=2)
    assert p.terms() == {((2, 0, 1), 1, 2): 5}
    assert p.variables() == {0, 2}
    assert NovikovPolynomial(3, {((0, 0, 0), 0, 0): 0}).is_zero()
    with pytest.raises(ValueError):
        NovikovPolynomial(2, {((1,), 0, 0): 1})
    with pytest.raises(ValueError):
        X(1, 2) + X(1, 3)
    assert (X(1) + 1).classical_part() == X(1) + 1
    assert X(1).shift(1, 1).classical_part().is_zero()
    assert X(1) - X(1) == 0
    assert hash(X(1) + X(2)) == hash(X(2) + X(1))


@settings(max_examples=300, deadline=None)
@given(polys, polys)
def test_valuation_property(p, r):
    if not p.is_zero() and not r.is_zero():
        assert valuation_T(p * r) == valuation_T(p) + valuation_T(r)
    assert valuation_T(p + r) >= min(valuation_T(p), valuation_T(r))


@settings(max_examples=200, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == NovikovPolynomial.zero(NV)
    assert a ** 2 == a * a


@settings(max_examples=300, deadline=None)
@given(polys)
def test_json_roundtrip(p):
    assert from_json(to_json(p), NV) == p
