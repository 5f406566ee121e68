"""
Completed group rings and the helix class of an embedded torus
==============================================================

The locally finite homology of an infinite covering lands in the completed
group ring k[[G]]: formal sums with infinite but structured support.  The
preimage of an embedded torus winds around the cover in a helix whose
class genuinely lives outside k[G].
"""

from braidhom import (
    Integers,
    LaurentRing,
    SurfaceTriad,
    helix_class,
    include_group_ring,
    is_in_group_ring,
    left_circle_helix,
    module_action,
    to_group_ring,
)

triad = SurfaceTriad(0, 3, 0, 1)
deck = LaurentRing(2, Integers(), ("y", "z"))

# deck transformations y (around the circle) and z (the other torus factor)
vector = helix_class(triad, (1, 0), y=(1, 0), z=(0, 1), ring=deck)
coordinate = vector.entries[0]

print("helix coefficients on a small window (rows: y exponent, cols: z):")
for a in range(-2, 4):
    row = [coordinate.coefficient_at((a, b)) for b in range(-2, 4)]
    print("   ", " ".join(f"{value:+d}" if value else " ." for value in row))
print()
print("lies in the group ring:", is_in_group_ring(coordinate))

# the (1 - y) factor shifts one spiral arm against the other; multiplying
# by the annihilator of the arm pattern does not make it finite
ring = coordinate.ring
y = ring.var("y")
moved = module_action(ring.one + y, coordinate)
print("still infinite after (1 + y) .", not is_in_group_ring(moved))
print()

# ordinary group-ring elements embed and come back unchanged
a = ring.one - y ** 3
print("include/recover round trip:",
      to_group_ring(include_group_ring(a)) == a)

# a circle bounding on one side only: its helix class collapses to zero
zero_vector = left_circle_helix(triad, deck)
print("left-circle helix is zero:",
      all(is_in_group_ring(c) for c in zero_vector.entries))
