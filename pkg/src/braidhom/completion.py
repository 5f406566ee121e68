"""The completed group ring k[[G]] and the helix classes living in it.

An element of the completion is a function G -> k with no support
restriction, which is not finitely describable in general.  Everything the
covering-space computations produce, however, is a finite sum plus finitely
many periodic rays, so that is the representation: a group-ring element for
the finite part and a list of Ray families, each contributing a repeating
coefficient pattern along an arithmetic progression of lattice points.
This subclass is closed under the k[G]-module action and large enough for
every inclusion image and helix class; in exchange, membership in the image
of k[G] -> k[[G]] stays decidable.

The decision procedure groups ray families by the affine line they sweep.
On one line, each family is an eventually periodic function of the integer
position, so the total is periodic beyond the last ray basepoint in each
direction.  The support is finite exactly when one full period of each tail
sums to zero, and in that case the leftover middle is an honest group-ring
element again.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .compositions import compositions
from .ring import GroupRingElement, Integers, LaurentRing
from .surfaces import SIDES, SurfaceTriad, dimension

RAY_DIRECTIONS = ("fwd", "bi")


@dataclass(frozen=True)
class Ray:
    """A repeating coefficient pattern along an arithmetic progression.

    The ray places pattern[i mod len(pattern)] at base + i*step, for i >= 0
    when the direction is "fwd" and for all integers i when it is "bi".
    The step must be a nonzero lattice vector; the pattern coefficients live
    in the coefficient ring of the ambient element.
    """

    base: tuple[int, ...]
    step: tuple[int, ...]
    pattern: tuple
    direction: str = "bi"

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(int(v) for v in self.base))
        object.__setattr__(self, "step", tuple(int(v) for v in self.step))
        object.__setattr__(self, "pattern", tuple(self.pattern))
        if len(self.base) != len(self.step):
            raise ValueError("base and step have different lattice ranks")
        if not any(self.step):
            raise ValueError("ray step must be nonzero")
        if not self.pattern:
            raise ValueError("ray pattern must be nonempty")
        if self.direction not in RAY_DIRECTIONS:
            raise ValueError(f"direction must be one of {RAY_DIRECTIONS}")


@dataclass(frozen=True, eq=False)
class CompletedElement:
    """An element of k[[G]] with finite-plus-rays support.

    finite is a plain group-ring element; rays is a tuple of Ray families
    over the same lattice.  Overlaps are allowed and sum: coefficient_at
    adds every contribution.  Equality is semantic (same coefficient
    function), decided through the difference's support analysis.
    """

    ring: LaurentRing
    finite: GroupRingElement
    rays: tuple[Ray, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(self.rays))
        if self.finite.ring != self.ring:
            raise ValueError("finite part lives in a different ring")
        k = self.ring.coefficients
        for ray in self.rays:
            if len(ray.base) != self.ring.rank:
                raise ValueError("ray lattice rank mismatch")
            for value in ray.pattern:
                k.coerce(value)

    def coefficient_at(self, exponents) -> object:
        g = tuple(int(v) for v in exponents)
        if len(g) != self.ring.rank:
            raise ValueError("wrong lattice rank")
        k = self.ring.coefficients
        total = self.finite.coefficient(g)
        for ray in self.rays:
            i = _progression_index(g, ray.base, ray.step)
            if i is None:
                continue
            if ray.direction == "fwd" and i < 0:
                continue
            total = k.add(total, k.coerce(ray.pattern[i % len(ray.pattern)]))
        return total

    # -- k[G]-module structure ------------------------------------------------

    def __add__(self, other: CompletedElement) -> CompletedElement:
        if not isinstance(other, CompletedElement):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError("elements from different completions")
        return CompletedElement(self.ring, self.finite + other.finite, self.rays + other.rays)

    def __neg__(self) -> CompletedElement:
        k = self.ring.coefficients
        rays = tuple(
            Ray(r.base, r.step, tuple(k.neg(k.coerce(p)) for p in r.pattern), r.direction)
            for r in self.rays
        )
        return CompletedElement(self.ring, -self.finite, rays)

    def __sub__(self, other: CompletedElement) -> CompletedElement:
        if not isinstance(other, CompletedElement):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar) -> CompletedElement:
        if isinstance(scalar, GroupRingElement):
            return module_action(scalar, self)
        return NotImplemented

    def __repr__(self):
        return f"CompletedElement(finite={self.finite!r}, rays={len(self.rays)})"


def include_group_ring(a: GroupRingElement) -> CompletedElement:
    """The natural inclusion k[G] -> k[[G]]: finite support, no rays."""
    return CompletedElement(a.ring, a, ())


def module_action(r: GroupRingElement, c: CompletedElement) -> CompletedElement:
    """Multiply a completed element by a group-ring element.

    Each term h of r translates the support by h and scales by the
    coefficient, so the finite part multiplies as usual and every ray is
    translated and rescaled once per term.  The sum over terms is finite
    because r is.
    """
    if r.ring != c.ring:
        raise ValueError("scalar from a different ring")
    k = c.ring.coefficients
    rays = []
    for exps, coeff in sorted(r.terms.items()):
        for ray in c.rays:
            pattern = tuple(k.mul(coeff, k.coerce(p)) for p in ray.pattern)
            if all(k.is_zero(p) for p in pattern):
                continue
            base = tuple(b + e for b, e in zip(ray.base, exps))
            rays.append(Ray(base, ray.step, pattern, ray.direction))
    return CompletedElement(c.ring, r * c.finite, tuple(rays))


# ---------------------------------------------------------------------------
# support analysis along affine lines
# ---------------------------------------------------------------------------


def _progression_index(g, base, step):
    """The integer i with g = base + i*step, or None."""
    diff = tuple(a - b for a, b in zip(g, base))
    pivot = next(j for j, s in enumerate(step) if s != 0)
    if diff[pivot] % step[pivot] != 0:
        return None
    i = diff[pivot] // step[pivot]
    if any(d != i * s for d, s in zip(diff, step)):
        return None
    return i


def _primitive(step):
    """step = multiplier * unit with unit primitive and lex-positive."""
    g = gcd(*(abs(v) for v in step))
    unit = tuple(v // g for v in step)
    lead = next(v for v in unit if v != 0)
    if lead < 0:
        unit = tuple(-v for v in unit)
        g = -g
    return unit, g


@dataclass(frozen=True)
class _Line:
    """All rays of one element sweeping a common affine line.

    Positions are measured along the primitive direction from a canonical
    anchor point, so each ray becomes (offset, stride, pattern, direction)
    with stride the signed number of positions per pattern entry.
    """

    anchor: tuple[int, ...]
    unit: tuple[int, ...]
    rays: tuple[tuple[int, int, tuple, str], ...]

    def value(self, k, position: int):
        total = k.zero
        for offset, stride, pattern, direction in self.rays:
            if (position - offset) % stride != 0:
                continue
            i = (position - offset) // stride
            if direction == "fwd" and i < 0:
                continue
            total = k.add(total, k.coerce(pattern[i % len(pattern)]))
        return total

    def period(self) -> int:
        return lcm(*(abs(stride) * len(pattern) for _, stride, pattern, _ in self.rays))

    def offsets(self) -> tuple[int, int]:
        values = [offset for offset, _, _, _ in self.rays]
        return min(values), max(values)


def _lines(c: CompletedElement) -> list[_Line]:
    grouped: dict[tuple, list] = {}
    for ray in c.rays:
        unit, multiplier = _primitive(ray.step)
        pivot = next(j for j, v in enumerate(unit) if v != 0)
        shift = ray.base[pivot] // unit[pivot]
        anchor = tuple(b - shift * u for b, u in zip(ray.base, unit))
        key = (unit, anchor)
        grouped.setdefault(key, []).append((shift, multiplier, ray.pattern, ray.direction))
    return [
        _Line(anchor, unit, tuple(rays))
        for (unit, anchor), rays in sorted(grouped.items())
    ]


def is_in_group_ring(c: CompletedElement) -> bool:
    """Whether the element is an image point of k[G] -> k[[G]].

    True exactly when the total support is finite.  The finite part always
    is; on each swept line the ray sum is periodic beyond the extreme
    basepoints, so the tails vanish identically exactly when one full
    period of each evaluates to zero.
    """
    k = c.ring.coefficients
    for line in _lines(c):
        period = line.period()
        low, high = line.offsets()
        for position in range(high + 1, high + 1 + period):
            if not k.is_zero(line.value(k, position)):
                return False
        for position in range(low - period, low):
            if not k.is_zero(line.value(k, position)):
                return False
    return True


def to_group_ring(c: CompletedElement) -> GroupRingElement:
    """Recover the group-ring element an inclusion image came from.

    Raises if the support is infinite.  Otherwise the rays contribute only
    between their extreme basepoints, and those finitely many values merge
    into the finite part.
    """
    if not is_in_group_ring(c):
        raise ValueError("support is infinite; not in the group ring")
    k = c.ring.coefficients
    terms = dict(c.finite.terms)
    for line in _lines(c):
        low, high = line.offsets()
        for position in range(low, high + 1):
            value = line.value(k, position)
            if k.is_zero(value):
                continue
            point = tuple(a + position * u for a, u in zip(line.anchor, line.unit))
            total = k.add(terms.get(point, k.zero), value)
            if k.is_zero(total):
                terms.pop(point, None)
            else:
                terms[point] = total
    return c.ring.element(terms)


def is_zero(c: CompletedElement) -> bool:
    return is_in_group_ring(c) and to_group_ring(c).is_zero()


def equal(a: CompletedElement, b: CompletedElement) -> bool:
    """Semantic equality: the same coefficient function on all of G."""
    return is_zero(a - b)


# ---------------------------------------------------------------------------
# vectors over a basis and the helix classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CompletedVector:
    """A vector of completed elements indexed by the basis of one side."""

    triad: SurfaceTriad
    side: str
    entries: tuple[CompletedElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}")
        if len(self.entries) != dimension(self.triad):
            raise ValueError(
                f"expected {dimension(self.triad)} coordinates, got {len(self.entries)}"
            )
        rings = {entry.ring for entry in self.entries}
        if len(rings) > 1:
            raise ValueError("coordinates live in different completions")


def helix_class(
    triad: SurfaceTriad,
    e: tuple[int, ...],
    y: tuple[int, ...],
    z: tuple[int, ...],
    ring: LaurentRing | None = None,
) -> CompletedVector:
    """The locally-finite class of the helix over an embedded torus.

    For one point circling two boundary components with covering
    monodromies y and z, the class is supported on the single basis
    coordinate e and equals the two-sided sum of (1-y)(yz)^i over all
    integers i: coefficient +1 at every multiple of y+z and -1 at y plus
    every multiple.  The no-lift condition of the construction needs the
    circle's own monodromy to have infinite order, so y = 0 is rejected,
    and y + z = 0 would pile infinitely many terms on one lattice point,
    so it is rejected too.
    """
    y = tuple(int(v) for v in y)
    z = tuple(int(v) for v in z)
    if len(y) != len(z):
        raise ValueError("y and z have different lattice ranks")
    if not any(y):
        raise ValueError("the circle lifts to a loop: y must be nonzero")
    step = tuple(a + b for a, b in zip(y, z))
    if not any(step):
        raise ValueError("y + z = 0 gives no completed element: torus monodromy has finite order")
    if ring is None:
        ring = LaurentRing(len(y), Integers())
    if ring.rank != len(y):
        raise ValueError("ring lattice rank does not match the vectors")
    origin = (0,) * len(y)
    k = ring.coefficients
    spiral = CompletedElement(
        ring,
        ring.zero,
        (
            Ray(origin, step, (k.one,), "bi"),
            Ray(y, step, (k.neg(k.one),), "bi"),
        ),
    )
    zero = include_group_ring(ring.zero)
    entries = [
        spiral if composition == tuple(e) else zero
        for composition in compositions(triad.arc_count, triad.points)
    ]
    if spiral not in entries:
        raise ValueError(f"no basis coordinate {e} for this triad")
    return CompletedVector(triad, "in", tuple(entries))


def left_circle_helix(triad: SurfaceTriad, ring: LaurentRing | None = None) -> CompletedVector:
    """The helix over a circle around a single boundary component.

    Such a circle can be pushed toward the non-compact end it encircles,
    so its preimage is nullhomologous as a locally-finite cycle: the class
    is the zero vector.
    """
    if ring is None:
        ring = LaurentRing(2, Integers())
    zero = include_group_ring(ring.zero)
    return CompletedVector(triad, "in", tuple(zero for _ in range(dimension(triad))))


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def completed_to_json(c: CompletedElement) -> dict:
    k = c.ring.coefficients
    return {
        "schema": 1,
        "finite": c.finite.to_json_terms(),
        "rays": [
            {
                "base": list(ray.base),
                "step": list(ray.step),
                "pattern": [k.to_str(k.coerce(p)) for p in ray.pattern],
                "direction": ray.direction,
            }
            for ray in c.rays
        ],
    }


def completed_from_json(ring: LaurentRing, data: dict) -> CompletedElement:
    if data.get("schema") != 1:
        raise ValueError("unsupported schema version")
    k = ring.coefficients
    finite = ring.from_json_terms(data["finite"])
    rays = tuple(
        Ray(
            tuple(entry["base"]),
            tuple(entry["step"]),
            tuple(k.from_str(p) for p in entry["pattern"]),
            entry.get("direction", "bi"),
        )
        for entry in data["rays"]
    )
    return CompletedElement(ring, finite, rays)
