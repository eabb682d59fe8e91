"""dim g_F_plus along a pencil of cubic surfaces.

Moving from a surface with a two-dimensional nilpotent part towards a random
dense cubic, the dimension drops to zero at once and stays there.
"""

from fractions import Fraction
from pathlib import Path

from symmetrizer import load_fixture, run_pencil

a = load_fixture(Path("fixtures") / "sharp_bound_d3_n3.poly")
b = load_fixture(Path("fixtures") / "random_dense_cubic.poly")
samples = [Fraction(1, 1000), Fraction(1, 3), Fraction(2, 5), Fraction(7, 11)]
exp = run_pencil(a, b, samples)
for t, dim in exp.dims_along_pencil:
    print(f"t = {str(t):>6}   dim g_F_plus = {dim}")
print("special fiber dominates:", exp.semicontinuous)
