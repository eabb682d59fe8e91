import pytest

from symmetrizer import QMatrix, analyze_point, is_symmetrizer_oracle, multiplicity_at, parse, solve_symmetrizer_algebra
from symmetrizer.singularity import (
    ProjPoint,
    construct_rank_one_symmetrizer,
    hessian_kernel,
    hessian_rank_at,
    hyperplane_of_lines,
    line_in_hypersurface,
    quasi_vertices_on_line,
    rank_at_most_one_points_on_line,
    subspace_multiplicity_at_least,
    verify_power_image_line,
)

V4 = "x0 x1 x2 x3"
V5 = "x0 x1 x2 x3 x4"
E6 = parse("x0*x2^2 + x1^2*x2 + x3^3", V4)
ESHARP = parse("x0*x2^2 + 2*x1^2*x2 + x3^3", V4)
FERMAT = parse("x0^3 + x1^3 + x2^3 + x3^3", V4)
EK = parse("x0*x2^2 + x1^2*x2 + x2*x3^2 + x4^3", V5)
EK_SPLIT = parse("x0*x2^2 + x1^2*x2 - x2*x3^2 + x4^3", V5)
CONIC = parse("x0*x3^2 + x1*x4^2 + x2*(x3 + x4)^2", V5)
CONE = parse("x1^3 + x2^3 + x3^3", V4)


def test_multiplicity_examples():
    assert multiplicity_at(E6, (1, 0, 0, 0)) == 2
    assert multiplicity_at(FERMAT, (1, 0, 0, 1)) == 0
    assert multiplicity_at(FERMAT, (1, 0, 0, -1)) == 1  # 1 + (-1)^3 = 0: on the surface
    assert multiplicity_at(FERMAT, (1, -1, 0, 0)) == 1
    assert multiplicity_at(EK, (1, 0, 0, 0, 0)) == 2
    with pytest.raises(ValueError):
        multiplicity_at(E6, (0, 0, 0, 0))


def test_multiplicity_is_projective():
    assert multiplicity_at(CONIC, (2, 2, -1, 0, 0)) == multiplicity_at(CONIC, (-6, -6, 3, 0, 0)) == 2


def test_hessian_rank_examples():
    assert hessian_rank_at(E6, (1, 0, 0, 0)) == 1
    assert hessian_rank_at(CONIC, (2, 2, -1, 0, 0)) == 1
    nodal = parse("x0*(x1^2 + x2^2 + x3^2) + x1^3 + x2^3 + x3^3", V4)
    assert hessian_rank_at(nodal, (1, 0, 0, 0)) == 3


def test_analyze_point_examples():
    a = analyze_point(E6, (1, 0, 0, 0))
    assert (a.multiplicity, a.hessian_rank, a.corank, a.is_quasi_vertex) == (2, 1, 2, True)
    c = analyze_point(CONE, (1, 0, 0, 0))
    assert (c.multiplicity, c.hessian_rank, c.is_cone_vertex) == (3, 0, True)
    f = analyze_point(FERMAT, (1, -1, 0, 0))
    assert (f.multiplicity, f.is_quasi_vertex, f.is_cone_vertex) == (1, False, False)
    assert f.as_dict()["point"] == ["1", "-1", "0", "0"]


def test_subspace_multiplicity_examples():
    for q in [(0, 1, 0, 1, 0), (0, 1, 0, -1, 0)]:
        assert subspace_multiplicity_at_least(EK_SPLIT, [(1, 0, 0, 0, 0), q], 2)
    assert not subspace_multiplicity_at_least(EK_SPLIT, [(1, 0, 0, 0, 0), (0, 1, 0, 0, 0)], 2)
    assert subspace_multiplicity_at_least(ESHARP, [(1, 0, 0, 0)], 2)
    assert not subspace_multiplicity_at_least(FERMAT, [(1, -1, 0, 0), (0, 0, 1, -1)], 2)
    with pytest.raises(ValueError):
        subspace_multiplicity_at_least(E6, [], 2)


def test_construct_rank_one():
    g = construct_rank_one_symmetrizer(E6, (1, 0, 0, 0))
    assert g.rank() == 1 and (g @ g).is_zero()
    assert solve_symmetrizer_algebra(E6).radical_contains(g)
    x = ProjPoint((2, 2, -1, 0, 0))
    h = construct_rank_one_symmetrizer(CONIC, x)
    assert h.rank() == 1 and ProjPoint(h.col(next(j for j in range(5) if any(h.col(j))))) == x
    assert is_symmetrizer_oracle(CONIC, h)
    v = construct_rank_one_symmetrizer(CONE, (1, 0, 0, 0))
    assert v.rank() == 1 and is_symmetrizer_oracle(CONE, v)
    with pytest.raises(ValueError):
        construct_rank_one_symmetrizer(E6, (0, 1, 0, 0))  # rank 2
    with pytest.raises(ValueError):
        construct_rank_one_symmetrizer(E6, (0, 0, 0, 1))  # off Z(P)


def test_hyperplane_of_lines():
    x2 = parse("x2", V4)
    assert hyperplane_of_lines(E6, (1, 0, 0, 0)) == x2
    assert hyperplane_of_lines(ESHARP, (1, 0, 0, 0)) == x2
    assert hessian_kernel(E6, (1, 0, 0, 0)).dim == 3
    # eta in x2 = 0 on Z(P): the line lies in the surface; off the hyperplane it does not
    assert line_in_hypersurface(E6, (1, 0, 0, 0), (5, 7, 0, 0))
    assert not line_in_hypersurface(E6, (1, 0, 0, 0), (1, -1, 1, 0))
    with pytest.raises(ValueError):
        hyperplane_of_lines(FERMAT, (1, -1, 0, 0))


def test_power_image_line():
    f = QMatrix.unit(4, 0, 1) + QMatrix.unit(4, 1, 2)
    assert verify_power_image_line(E6, f)
    with pytest.raises(ValueError):
        verify_power_image_line(E6, f @ f)  # f^2 squares to zero
    d4 = parse("x0*x2^3 + 3*x1^2*x2^2 + x3^4", V4)
    g = [B for B in solve_symmetrizer_algebra(d4).radical_basis if not (B @ B).is_zero()][0]
    assert verify_power_image_line(d4, g)


def test_quasi_vertices_on_lines():
    assert quasi_vertices_on_line(CONIC, (1, 0, 0, 0, 0), (0, 1, 0, 0, 0)) == 2
    pts, irr = rank_at_most_one_points_on_line(FERMAT, (1, 2, 3, 4), (0, 1, -1, 5))
    assert pts == [] and irr == 0
    assert quasi_vertices_on_line(E6, (1, 0, 0, 0), (0, 1, 0, 0)) == 1
    with pytest.raises(ValueError):
        quasi_vertices_on_line(E6, (1, 0, 0, 0), (2, 0, 0, 0))


def test_irrational_quasi_vertices_are_counted():
    # on (1+u : 1-u : 1 : 0 : 0) the conic equation reads 3 - u^2 = 0
    pts, irr = rank_at_most_one_points_on_line(CONIC, (1, 1, 1, 0, 0), (1, -1, 0, 0, 0))
    assert pts == [] and irr == 2
    assert quasi_vertices_on_line(CONIC, (1, 1, 1, 0, 0), (1, -1, 0, 0, 0)) == 0
