from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symmetrizer.parser import (
    NO_LINE_HYPOTHESIS,
    ParseError,
    PolySource,
    parse,
    parse_fixture,
    parse_polynomial,
    render_polynomial,
)
from symmetrizer.poly import MPoly, monomials_of_degree

from conftest import fixture_paths

V4 = ("x0", "x1", "x2", "x3")


def test_documented_examples():
    e6 = parse("x0*x2^2 + x1^2*x2 + x3^3", V4)
    assert e6 == MPoly(4, {(1, 0, 2, 0): 1, (0, 2, 1, 0): 1, (0, 0, 0, 3): 1})
    es = parse_polynomial(PolySource(V4, "x0*x2^2 + 2*x1^2*x2 + x3^3", 3))
    assert es.coefficient((0, 2, 1, 0)) == 2
    ek = parse("x0*x2^2 + x1^2*x2 + x2*x3^2 + x4^3", "x0 x1 x2 x3 x4", 3)
    assert len(ek) == 4


def test_render_examples():
    assert render_polynomial(MPoly.zero(4), V4) == "0"
    assert render_polynomial(MPoly(4, {(0, 2, 1, 0): 2}), V4) == "2*x1^2*x2"
    p = parse("-x3^3 + 1/2*x0*x1*x2 - x0^3", V4)
    assert render_polynomial(p, V4) == "-x0^3 + 1/2*x0*x1*x2 - x3^3"


def test_arithmetic_forms():
    assert parse("(x0 + x1)^2 - 2*x0*x1", "x0 x1") == parse("x0^2 + x1^2", "x0 x1")
    assert parse("-(x0 - 3/4*x1)", "x0 x1") == parse("3/4*x1 - x0", "x0 x1")
    assert parse("2^3*x0", "x0") == parse("8*x0", "x0")


@pytest.mark.parametrize("text, fragment, col", [
    ("x0 x1", "implicit", 4),
    ("2x0", "implicit", 2),
    ("x0 + y", "undeclared", 6),
    ("x0^2^2", "chained", 5),
    ("x0^1001", "exponent", 4),
    ("x0 +", "end", 5),
    ("(x0 + x1", ")", 9),
    ("x0/x1", "/", 3),
])
def test_errors_carry_positions(text, fragment, col):
    with pytest.raises(ParseError) as exc:
        parse(text, "x0 x1")
    assert fragment in exc.value.message.lower()
    assert exc.value.line == 1 and exc.value.column == col


def test_homogeneity_enforced():
    with pytest.raises(ParseError, match="homogeneous"):
        parse("x0^3 + x1^2", "x0 x1", degree=3)


def test_multiline_position():
    text = "vars: x0 x1\ndegree: 2\nx0^2 +\n  x1 * $"
    with pytest.raises(ParseError) as exc:
        parse_fixture(text, path="f.poly")
    assert (exc.value.line, exc.value.column, exc.value.source) == (4, 8, "f.poly")


def test_fixture_metadata():
    fx = parse_fixture(
        "name: demo\nvars: x0 x1 x2\ndegree: 3\n"
        "candidate_points: (1:0:0), (0:1/2:-1)\n"
        "singular_lines: (1:0:0)-(0:1:0)\n"
        f"hypothesis: {NO_LINE_HYPOTHESIS}\n"
        "expect: g_F=2 is_cone=false quasi_vertices=(1:0:0)\n"
        "x0*x1*x2  # a comment\n")
    assert fx.name == "demo" and fx.nvars == 3
    assert fx.candidate_points[1] == (0, Fraction(1, 2), -1)
    assert fx.singular_lines == (((1, 0, 0), (0, 1, 0)),)
    assert fx.has(NO_LINE_HYPOTHESIS)
    assert fx.expect == {"g_F": 2, "is_cone": False, "quasi_vertices": ((1, 0, 0),)}
    assert parse_fixture(fx.render()) == fx


@pytest.mark.parametrize("text", [
    "vars: x0\nvars: x1\nx0",
    "colour: red\nvars: x0\nx0",
    "vars: x0 x1\ncandidate_points: (1:0:0)\nx0",
    "vars: x0 x1\nhypothesis: smooth\nx0",
    "vars: x0 x1\nexpect: g_F=two\nx0",
    "vars: x0 x1\n",
    "x0 + x1",
])
def test_bad_fixtures(text):
    with pytest.raises(ParseError):
        parse_fixture(text)


@pytest.mark.parametrize("path", fixture_paths(), ids=lambda p: p.stem)
def test_corpus_round_trip(path):
    from symmetrizer import load_fixture

    fx = load_fixture(path)
    again = parse_fixture(fx.render(), path=fx.path)
    assert again == fx
    assert parse(render_polynomial(fx.polynomial, fx.variables), fx.variables) == fx.polynomial


@given(st.dictionaries(st.sampled_from(monomials_of_degree(4, 3) + monomials_of_degree(4, 1)),
                       st.fractions(min_value=-9, max_value=9, max_denominator=7), max_size=8))
@settings(max_examples=100, deadline=None)
def test_render_parse_round_trip(terms):
    p = MPoly(4, terms)
    assert parse(render_polynomial(p, V4), V4) == p
