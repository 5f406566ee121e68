"""
Embedding diagonals, injectivity, and where they fail
=====================================================

The relative module embeds into the locally finite one on the other side;
in the composition bases the map is diagonal with entries prod [e_i]_u!.
Whether those entries are units decides irreducibility questions, and
specializing u to a root of unity collapses them.
"""

from fractions import Fraction

from braidhom import (
    IntegersModP,
    LaurentRing,
    LocalSystem,
    Rationals,
    SpecializationPoint,
    SurfaceTriad,
    certify_injective,
    embedding_matrix,
    genericity_check,
    reducibility_witness,
    standard_local_system,
)

triad = SurfaceTriad(0, 3, 0, 2)
system = standard_local_system(2)
embedding = embedding_matrix(triad, "in", system)
print("diagonal entries (m = 2):",
      [str(entry) for entry in embedding.diagonal])
print("injective over Z[x,d]:", bool(certify_injective(embedding)))

witness = reducibility_witness(triad, system)
print(f"proper submodule witness: {witness.witness} "
      f"(entry {witness.entry} is not a unit)")
print()

# At u = -1, a primitive square root of unity, [2]_u = 1 + u = 0 and the
# classes with a doubled point die.
ring = LaurentRing(0, Rationals())
collapsed = LocalSystem(ring, ring.scalar(Fraction(-1)))
certificate = certify_injective(embedding_matrix(triad, "in", collapsed))
print("injective at u = -1:", certificate.injective)
for comp, entry in certificate.vanishing:
    print(f"   vanishing entry at {comp}: {entry}")
print()

# Same story mod 7 with a cube root of unity, one more point.
mod7 = LaurentRing(0, IntegersModP(7))
cube = LocalSystem(mod7, mod7.scalar(2))  # 2^3 = 1 mod 7
certificate = certify_injective(
    embedding_matrix(SurfaceTriad(0, 3, 0, 3), "in", cube)
)
print("injective at a cube root of unity over F_7:", certificate.injective)
print("compositions that vanish:", [comp for comp, _ in certificate.vanishing])
print()

# Genericity of a specialized system: every variable away from {0, 1}.
point = SpecializationPoint({"x": Fraction(3), "d": Fraction(-2)}, Rationals())
print("theta(x)=3, theta(d)=-2 generic:",
      genericity_check(triad, system, point))
degenerate = SpecializationPoint({"x": Fraction(1), "d": Fraction(-2)}, Rationals())
print("theta(x)=1, theta(d)=-2 generic:",
      genericity_check(triad, system, degenerate))
