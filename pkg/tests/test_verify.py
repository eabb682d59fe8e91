"""The theorem checks must be able to fail: feed them false metadata."""

from symmetrizer import analyze_fixture, parse_fixture
from symmetrizer.parser import FINITE_HYPOTHESIS, NO_LINE_HYPOTHESIS
from symmetrizer.verify import FAIL, PASS, SKIPPED, build_context, check_quasi_vertex_correspondence

from conftest import FIXTURES

EK = (FIXTURES / "three_radical_split.poly").read_text()


def test_false_no_line_hypothesis_is_caught():
    text = EK.replace("name: three_radical_split", f"name: lying\nhypothesis: {NO_LINE_HYPOTHESIS}")
    r = analyze_fixture(parse_fixture(text))
    assert r.theorem_checks["main_bound_nilpotent"].status == FAIL
    # the declared singular lines have multiplicity d-1, contradicting the claim
    assert r.theorem_checks["declared_singular_lines"].status == FAIL
    assert not r.ok


def test_unasserted_hypotheses_skip():
    r = analyze_fixture(parse_fixture(EK))
    for name in ("main_bound_nilpotent", "main_bound_group", "cube_zero", "quasi_vertex_uniqueness"):
        assert r.theorem_checks[name].status == SKIPPED
        assert r.theorem_checks[name].reason.startswith("hypothesis")


def test_nonsingular_declared_line_fails():
    text = (FIXTURES / "e6_cubic_surface.poly").read_text().replace(
        "candidate_points:", "singular_lines: (1:0:0:0)-(0:0:0:1)\ncandidate_points:")
    r = analyze_fixture(parse_fixture(text))
    assert r.theorem_checks["declared_singular_lines"].status == FAIL


def test_correspondence_detects_a_missing_quasi_vertex():
    fx = parse_fixture((FIXTURES / "e6_cubic_surface.poly").read_text())
    ctx = build_context(fx)
    assert check_quasi_vertex_correspondence(ctx).status == PASS
    ctx.locus = type(ctx.locus)((), "complete", ())
    assert check_quasi_vertex_correspondence(ctx).status == FAIL


def test_finite_hypothesis_runs_cube_check():
    fx = parse_fixture((FIXTURES / "sharp_bound_d3_n3.poly").read_text())
    assert fx.has(FINITE_HYPOTHESIS)
    assert analyze_fixture(fx).theorem_checks["cube_zero"].status == PASS
