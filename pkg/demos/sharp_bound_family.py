"""Walk through the cubic surface x0*x2^2 + 2*x1^2*x2 + x3^3.

Its symmetrizer algebra has dimension N = 4, and the nilpotent part is
two-dimensional, so both upper bounds are attained.  Run from the repo root:

    python demos/sharp_bound_family.py
"""

from symmetrizer import analyze_point, max_rank, parse, rank_one_locus, solve_symmetrizer_algebra

P = parse("x0*x2^2 + 2*x1^2*x2 + x3^3", "x0 x1 x2 x3", degree=3)
alg = solve_symmetrizer_algebra(P)

print("g_F basis:")
for B in alg.basis:
    print("  ", B)
print("nilpotent part:")
for R in alg.radical_basis:
    print("  ", R)
print("dims:", alg.dims(), " Sebastiani-Thom type:", alg.sebastiani_thom)
print("max rank in g_F_plus:", max_rank(list(alg.radical_basis)))

# each rank-one nilpotent symmetrizer is xi * phi^T; its image is a quasi-vertex
locus = rank_one_locus(alg)
for c in locus.classes:
    a = analyze_point(P, c.image)
    print(f"rank-one class with image {a.point}: mult {a.multiplicity}, Hessian rank {a.hessian_rank}")
print("locus is", locus.exactness)

# the same shape in degree 4 and in one more variable
for text, names in [("x0*x2^3 + 3*x1^2*x2^2 + x3^4", "x0 x1 x2 x3"),
                    ("x0*x2^2 + 2*x1^2*x2 + x3^3 + x4^3", "x0 x1 x2 x3 x4")]:
    Q = parse(text, names)
    print(f"{text:40} N = {Q.nvars}  dims = {solve_symmetrizer_algebra(Q).dims()}")
