"""Tests for the completed group ring and helix classes."""

import random

import pytest

from braidhom.braid import disc_triad
from braidhom.completion import (
    CompletedElement,
    CompletedVector,
    Ray,
    completed_from_json,
    completed_to_json,
    equal,
    helix_class,
    include_group_ring,
    is_in_group_ring,
    is_zero,
    left_circle_helix,
    module_action,
    to_group_ring,
)
from braidhom.compositions import compositions
from braidhom.ring import Integers, IntegersModP, LaurentRing, Rationals

RING = LaurentRing(2, Integers(), ("y", "z"))
Y = RING.var("y")
Z = RING.var("z")


def _full_spiral():
    # the two bi-infinite ray families of a helix coordinate: +1 along
    # i*(y+z), -1 along y + i*(y+z)
    one = RING.coefficients.one
    return CompletedElement(
        RING,
        RING.zero,
        (
            Ray(base=(0, 0), step=(1, 1), pattern=(one,), direction="bi"),
            Ray(base=(1, 0), step=(1, 1), pattern=(-one,), direction="bi"),
        ),
    )


def test_include_finite_support():
    a = RING.one + Y
    c = include_group_ring(a)
    assert c.rays == ()
    assert c.coefficient_at((0, 0)) == 1
    assert c.coefficient_at((1, 0)) == 1
    assert c.coefficient_at((0, 1)) == 0
    zero = include_group_ring(RING.zero)
    assert zero.coefficient_at((5, -3)) == 0
    assert is_in_group_ring(zero)


def test_include_round_trips_through_recovery():
    rng = random.Random(21)
    for _ in range(50):
        terms = {}
        for _ in range(rng.randint(0, 5)):
            exps = (rng.randint(-4, 4), rng.randint(-4, 4))
            terms[exps] = rng.randint(-5, 5)
        a = RING.element(terms)
        c = include_group_ring(a)
        assert is_in_group_ring(c)
        assert to_group_ring(c) == a


def test_include_is_a_module_map():
    rng = random.Random(22)
    for _ in range(200):
        def rand():
            terms = {}
            for _ in range(rng.randint(1, 4)):
                exps = (rng.randint(-3, 3), rng.randint(-3, 3))
                terms[exps] = rng.randint(-4, 4)
            return RING.element(terms)

        r, a = rand(), rand()
        assert equal(include_group_ring(r * a),
                     module_action(r, include_group_ring(a)))


def test_module_action_identity_and_translation():
    c = _full_spiral()
    assert equal(module_action(RING.one, c), c)
    assert equal(module_action(Y, include_group_ring(RING.one)),
                 include_group_ring(Y))


def test_module_action_matches_convolution_coefficients():
    # coefficient_at(g) of r*c is sum_h r_h * c(g - h)
    rng = random.Random(23)
    c = _full_spiral()
    for _ in range(30):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            exps = (rng.randint(-2, 2), rng.randint(-2, 2))
            terms[exps] = rng.randint(-3, 3)
        r = RING.element(terms)
        moved = module_action(r, c)
        for _ in range(10):
            g = (rng.randint(-6, 6), rng.randint(-6, 6))
            expected = sum(
                coeff * c.coefficient_at((g[0] - h[0], g[1] - h[1]))
                for h, coeff in r.terms.items()
            )
            assert moved.coefficient_at(g) == expected


def test_one_minus_y_times_full_ray_is_the_spiral():
    # (1 - y) . sum_i (yz)^i has +1 on the diagonal lattice line and -1 on
    # its y-translate; it does not vanish
    one = RING.coefficients.one
    diagonal = CompletedElement(
        RING, RING.zero, (Ray((0, 0), (1, 1), (one,), "bi"),)
    )
    moved = module_action(RING.one - Y, diagonal)
    for i in range(-10, 11):
        assert moved.coefficient_at((i, i)) == 1
        assert moved.coefficient_at((i + 1, i)) == -1
    assert moved.coefficient_at((2, 0)) == 0
    assert not is_in_group_ring(moved)
    assert equal(moved, _full_spiral())


def test_helix_coefficients():
    triad = disc_triad(3, 1)
    e = compositions(triad.arc_count, 1)[0]
    vector = helix_class(triad, e, (1, 0), (0, 1))
    coordinate = vector.entries[0]
    for i in range(-20, 21):
        assert coordinate.coefficient_at((i, i)) == 1
        assert coordinate.coefficient_at((1 + i, i)) == -1
    assert coordinate.coefficient_at((0, 1)) == 0
    assert coordinate.coefficient_at((-1, 1)) == 0


def test_helix_matches_brute_force_window():
    # truncated expansion sum_{|i| <= N} (1-y)(yz)^i agrees on the box
    # ||g||_inf <= N-1
    n = 20
    truncated = RING.zero
    for i in range(-n, n + 1):
        monomial = RING.element({(i, i): 1})
        truncated = truncated + (RING.one - Y) * monomial
    triad = disc_triad(3, 1)
    e = compositions(triad.arc_count, 1)[0]
    coordinate = helix_class(triad, e, (1, 0), (0, 1)).entries[0]
    for a in range(-(n - 1), n):
        for b in range(-(n - 1), n):
            assert coordinate.coefficient_at((a, b)) == \
                truncated.terms.get((a, b), 0)


def test_helix_is_not_in_the_group_ring():
    triad = disc_triad(3, 1)
    for e in compositions(triad.arc_count, 1):
        vector = helix_class(triad, e, (1, 0), (0, 1))
        for idx, coordinate in enumerate(vector.entries):
            expected = compositions(triad.arc_count, 1)[idx] != e
            assert is_in_group_ring(coordinate) == expected


def test_helix_rejects_degenerate_monodromies():
    triad = disc_triad(3, 1)
    e = compositions(triad.arc_count, 1)[0]
    with pytest.raises(ValueError):
        helix_class(triad, e, (0, 0), (0, 1))
    with pytest.raises(ValueError):
        helix_class(triad, e, (1, 0), (-1, 0))
    with pytest.raises(ValueError):
        helix_class(triad, (5, 5), (1, 0), (0, 1))


def test_left_circle_helix_is_zero():
    triad = disc_triad(3, 1)
    vector = left_circle_helix(triad)
    assert len(vector.entries) == 2
    for coordinate in vector.entries:
        assert is_in_group_ring(coordinate)
        assert is_zero(coordinate)


def test_ray_cancellation_reaches_the_group_ring():
    one = RING.coefficients.one
    ray = Ray((0, 0), (2, 1), (one, -one), "bi")
    c = CompletedElement(RING, RING.one + Y, (ray,))
    d = CompletedElement(RING, RING.zero, (ray,))
    difference = c - d
    assert is_in_group_ring(difference)
    assert to_group_ring(difference) == RING.one + Y


def test_forward_rays_glue_to_a_two_sided_one():
    # a fwd ray from 0 plus a fwd ray running backwards from -step together
    # equal the bi ray: their difference has empty support
    one = RING.coefficients.one
    fwd = Ray((0, 0), (1, 1), (one,), "fwd")
    backward = Ray((-1, -1), (-1, -1), (one,), "fwd")
    bi = Ray((0, 0), (1, 1), (one,), "bi")
    glued = CompletedElement(RING, RING.zero, (fwd, backward))
    whole = CompletedElement(RING, RING.zero, (bi,))
    assert equal(glued, whole)
    assert is_zero(glued - whole)
    assert not is_in_group_ring(glued)


def test_forward_ray_contributes_only_forward():
    one = RING.coefficients.one
    c = CompletedElement(RING, RING.zero, (Ray((0, 0), (1, 0), (one,), "fwd"),))
    assert c.coefficient_at((0, 0)) == 1
    assert c.coefficient_at((3, 0)) == 1
    assert c.coefficient_at((-1, 0)) == 0


def test_overlapping_rays_sum():
    one = RING.coefficients.one
    c = CompletedElement(
        RING,
        RING.one,
        (
            Ray((0, 0), (1, 0), (one,), "bi"),
            Ray((0, 0), (2, 0), (one,), "bi"),
        ),
    )
    # at the origin: finite 1 + both rays
    assert c.coefficient_at((0, 0)) == 3
    assert c.coefficient_at((1, 0)) == 1
    assert c.coefficient_at((2, 0)) == 2


def test_to_group_ring_refuses_infinite_support():
    with pytest.raises(ValueError):
        to_group_ring(_full_spiral())


def test_ray_validation():
    one = RING.coefficients.one
    with pytest.raises(ValueError):
        Ray((0, 0), (0, 0), (one,), "bi")
    with pytest.raises(ValueError):
        Ray((0, 0), (1, 0), (), "bi")
    with pytest.raises(ValueError):
        Ray((0, 0), (1, 0), (one,), "sideways")
    with pytest.raises(ValueError):
        Ray((0,), (1, 0), (one,), "bi")


def test_completed_element_validation():
    other = LaurentRing(1, Integers(), ("x",))
    with pytest.raises(ValueError):
        CompletedElement(RING, other.one, ())
    one = RING.coefficients.one
    with pytest.raises(ValueError):
        CompletedElement(RING, RING.zero, (Ray((0,), (1,), (one,), "bi"),))


def test_completed_vector_validation():
    triad = disc_triad(3, 1)
    entries = (include_group_ring(RING.one), include_group_ring(RING.zero))
    vector = CompletedVector(triad, "in", entries)
    assert vector.side == "in"
    with pytest.raises(ValueError):
        CompletedVector(triad, "middle", entries)
    with pytest.raises(ValueError):
        CompletedVector(triad, "in", entries[:1])
    other = LaurentRing(1, Integers(), ("x",))
    mixed = (include_group_ring(RING.one), include_group_ring(other.one))
    with pytest.raises(ValueError):
        CompletedVector(triad, "in", mixed)


def test_completion_works_over_other_coefficients():
    ring = LaurentRing(2, IntegersModP(3), ("y", "z"))
    one = ring.coefficients.one
    c = CompletedElement(ring, ring.zero, (Ray((0, 0), (1, 1), (one, one, one), "bi"),))
    tripled = module_action(ring.scalar(2), c)
    assert tripled.coefficient_at((4, 4)) == 2
    doubled = c + c
    total = doubled + c
    assert is_in_group_ring(total)  # 3 = 0 mod 3
    assert is_zero(total)


def test_json_round_trip():
    for element in (_full_spiral(), include_group_ring(RING.one + Y * Z)):
        data = completed_to_json(element)
        assert data["schema"] == 1
        assert set(data) >= {"finite", "rays"}
        back = completed_from_json(RING, data)
        assert equal(back, element)
        assert back.rays == element.rays


def test_json_round_trip_rationals():
    ring = LaurentRing(2, Rationals(), ("y", "z"))
    from fractions import Fraction

    c = CompletedElement(
        ring,
        ring.scalar(Fraction(1, 2)),
        (Ray((0, 0), (1, 1), (Fraction(2, 3),), "fwd"),),
    )
    back = completed_from_json(ring, completed_to_json(c))
    assert equal(back, c)
