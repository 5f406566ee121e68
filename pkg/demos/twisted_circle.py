"""
Twisted homology of the circle, specializations, covering comparisons
=====================================================================
"""

from fractions import Fraction

from braidhom import (
    Integers,
    IntegersModP,
    LaurentRing,
    Rationals,
    SpecializationPoint,
    circle_cohomology,
    circle_complex,
    homology_ranks_at,
    shapiro_circle_check,
    shapiro_double_cover_check,
)

ring = LaurentRing(1, Integers(), ("x",))
x = ring.var("x")

# The circle with a rank-1 local system is the two-term complex
# R --(1 - monodromy)--> R; its cohomology is a kernel and a cokernel.
for monodromy in (ring.one, ring.scalar(-1), x):
    h0, h1 = circle_cohomology(monodromy)
    print(f"monodromy {monodromy}:  H^0 = {h0.describe()},  "
          f"H^1 = {h1.describe()}")
print()

# Specializing x to a number turns the presentations into ranks.
cpx = circle_complex(x)
for value in (Fraction(2), Fraction(1)):
    point = SpecializationPoint({"x": value}, Rationals())
    print(f"ranks at x = {value}: {homology_ranks_at(cpx, point)}")
print()

# Twisted homology of the base against untwisted homology of the cover:
# the universal cover (a line) and the connected double cover (a circle).
for k in (Integers(), Rationals(), IntegersModP(5)):
    line = shapiro_circle_check(k)
    double = shapiro_double_cover_check(k)
    name = type(k).__name__
    print(f"{name:>12}: universal cover {line.twisted} == {line.untwisted}; "
          f"double cover {double.twisted} == {double.untwisted}")
