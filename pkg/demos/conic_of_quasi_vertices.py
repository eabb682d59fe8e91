"""A cubic threefold whose quasi-vertices fill a plane conic.

For X = x0*x3^2 + x1*x4^2 + x2*(x3 + x4)^2 every rational point
(a(a+b) : b(a+b) : -ab : 0 : 0) of the conic x0*x1 + x1*x2 + x2*x0 = 0
is a quasi-vertex, and each one carries its own rank-one nilpotent
symmetrizer.  Lines meet the conic at most twice.
"""

from itertools import combinations

from symmetrizer import analyze_point, jacobian_span, parse, solve_symmetrizer_algebra
from symmetrizer.singularity import ProjPoint, construct_rank_one_symmetrizer, rank_at_most_one_points_on_line

P = parse("x0*x3^2 + x1*x4^2 + x2*(x3 + x4)^2", "x0 x1 x2 x3 x4")
alg = solve_symmetrizer_algebra(P)
print("Jacobian rank:", jacobian_span(P)[0], " dims:", alg.dims())

pts = [ProjPoint((a * (a + b), b * (a + b), -a * b, 0, 0))
       for a, b in [(1, 1), (1, 2), (2, 1), (1, -2), (1, 3), (3, 1)]]
for p in pts:
    g = construct_rank_one_symmetrizer(P, p)
    print(f"{str(p):22} quasi-vertex={analyze_point(P, p).is_quasi_vertex}  "
          f"rank-one element in g_F_plus: {alg.radical_contains(g)}")

worst = max(len(r) + i for r, i in (rank_at_most_one_points_on_line(P, p, q) for p, q in combinations(pts, 2)))
print("most quasi-vertices on one secant line:", worst)
