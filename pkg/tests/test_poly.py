from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from symmetrizer.poly import (
    MPoly,
    directional_derivative,
    homogeneous_degree,
    monomials_of_degree,
    partials_of_order,
)

NV = 3
X = sympy.symbols("x0:3")

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def polys(max_deg=3):
    monos = [m for d in range(max_deg + 1) for m in monomials_of_degree(NV, d)]
    return st.dictionaries(st.sampled_from(monos), coeffs, max_size=6).map(lambda t: MPoly(NV, t))


def forms(d):
    return st.dictionaries(st.sampled_from(monomials_of_degree(NV, d)), coeffs, min_size=1, max_size=6).map(
        lambda t: MPoly(NV, t))


def to_sympy(p: MPoly):
    return sympy.expand(sum((sympy.Rational(c.numerator, c.denominator)
                             * sympy.prod([x**e for x, e in zip(X, m)]) for m, c in p.items()),
                            sympy.Integer(0)))


@given(polys(), polys())
@settings(max_examples=80, deadline=None)
def test_arithmetic_matches_sympy(a, b):
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(a - b) == sympy.expand(to_sympy(a) - to_sympy(b))


@given(polys(), st.integers(0, 2))
@settings(max_examples=60, deadline=None)
def test_diff_matches_sympy(a, i):
    assert to_sympy(a.diff(i)) == sympy.expand(sympy.diff(to_sympy(a), X[i]))


@given(polys(), st.lists(st.lists(st.integers(-2, 2), min_size=NV, max_size=NV), min_size=2, max_size=3))
@settings(max_examples=60, deadline=None)
def test_substitute_linear_matches_sympy(a, M):
    ys = sympy.symbols(f"y0:{len(M)}")
    subs = {X[j]: sum(M[r][j] * ys[r] for r in range(len(M))) for j in range(NV)}
    got = a.substitute_linear(M)
    want = sympy.expand(to_sympy(a).subs(subs, simultaneous=True))
    mine = sympy.expand(sum((sympy.Rational(c.numerator, c.denominator)
                             * sympy.prod([y**e for y, e in zip(ys, m)]) for m, c in got.items()), sympy.Integer(0)))
    assert mine == want


@given(polys(), polys(), polys())
@settings(max_examples=40, deadline=None)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


@given(forms(3), st.lists(st.integers(-3, 3), min_size=NV, max_size=NV))
@settings(max_examples=40, deadline=None)
def test_euler_identity_and_evaluation(p, pt):
    euler = sum((MPoly.variable(NV, i) * p.diff(i) for i in range(NV)), MPoly.zero(NV))
    assert euler == p.scale(3)
    assert directional_derivative(p, pt).evaluate(pt) == 3 * p.evaluate(pt)


def test_degree_and_homogeneity():
    p = MPoly(3, {(2, 1, 0): 1, (0, 0, 3): -2})
    assert p.degree == 3 and p.is_homogeneous(3)
    assert homogeneous_degree(p) == 3
    assert MPoly.zero(3).degree == -1
    with pytest.raises(ValueError):
        homogeneous_degree(MPoly(3, {(1, 0, 0): 1, (2, 0, 0): 1}))


def test_glex_order_and_partials():
    assert monomials_of_degree(3, 2)[:3] == [(2, 0, 0), (1, 1, 0), (1, 0, 1)]
    p = MPoly(3, {(1, 1, 1): 6})
    second = partials_of_order(p, 2)
    assert second[(0, 1)] == MPoly(3, {(0, 0, 1): 6})
    assert len(second) == 6


def test_rejects_floats():
    with pytest.raises(TypeError):
        MPoly(2, {(1, 0): 0.5})
    assert MPoly(2, {(1, 0): Fraction(1, 2)}).coefficient((1, 0)) == Fraction(1, 2)
