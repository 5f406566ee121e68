"""
Bases of the configuration-space modules and their pairings
===========================================================

A surface triad (genus g, n inner circles, k outer intervals) with m
moving points carries four module bases, all indexed by the weak
compositions of m into l = n-1+k+2g parts.  This script lists them and
evaluates the two pairings between them.
"""

from braidhom import (
    SurfaceTriad,
    basis,
    delta_pairing,
    dimension,
    geometric_pairing_matrix,
    standard_local_system,
)

triad = SurfaceTriad(genus=0, inner_circles=3, outer_intervals=0, points=2)
print(f"disc with {triad.inner_circles} circles, {triad.points} points")
print(f"arcs: {triad.arc_count}, dimension: {dimension(triad)}")
print()

for flavour in ("relative", "locally_finite", "lf_image"):
    classes = basis(triad, "in", flavour)
    print(f"{flavour:>14}: " + "  ".join(str(c) for c in classes))
print()

# The locally finite basis pairs against the relative one as a Kronecker
# delta: the matrix is the identity, which is what makes both of them
# bases in the first place.
delta = delta_pairing(triad, "in")
print("delta pairing rows:")
for row in delta.entries:
    print("   ", [str(entry) for entry in row])
print()

# Pairing the embedded images against the relative basis instead counts
# actual intersection configurations, weighted by the local system; the
# diagonal picks up quantum factorials.
system = standard_local_system(triad.points)
geometric = geometric_pairing_matrix(triad, "in", system)
print("geometric pairing rows (u = d):")
for row in geometric.entries:
    print("   ", [str(entry) for entry in row])
