"""Tests for the braid-group matrices: relations, duality, integrality."""

import json
import random
from pathlib import Path

import pytest

from braidhom import linalg
from braidhom.braid import (
    BraidWord,
    braid_relations_hold,
    diagonal_conjugation_integrality,
    disc_triad,
    dual_representation,
    evaluate_word,
    generator_matrix,
)
from braidhom.linalg import identity, mat_eq, mat_mul, specialize_matrix
from braidhom.pairing import delta_pairing
from braidhom.ring import ComplexApprox
from braidhom.surfaces import dimension

GOLDEN = Path(__file__).parent / "golden" / "generator_matrices.json"


def test_generator_matrices_match_golden_file():
    data = json.loads(GOLDEN.read_text())
    assert data["schema"] == 1
    seen = 0
    for record in data["matrices"]:
        matrix = generator_matrix(record["n"], record["i"], record["m"])
        assert matrix.convention == record["convention"]
        ring = matrix.ring
        expected = [[ring.parse(cell) for cell in row] for row in record["rows"]]
        assert mat_eq(matrix.rows(), expected)
        seen += 1
    assert seen == 12


def test_braid_relations_hold():
    for m in (1, 2):
        for n in (2, 3, 4):
            assert braid_relations_hold(n, m)


def test_matrix_sizes():
    for n in range(2, 7):
        assert generator_matrix(n, 1, 1).size == n - 1
        assert generator_matrix(n, 1, 2).size == n * (n - 1) // 2
        assert generator_matrix(n, 1, 2).size == dimension(disc_triad(n, 2))


def test_generator_validation():
    with pytest.raises(ValueError):
        generator_matrix(3, 0, 1)
    with pytest.raises(ValueError):
        generator_matrix(3, 3, 1)
    with pytest.raises(ValueError):
        generator_matrix(1, 1, 1)
    with pytest.raises(ValueError):
        generator_matrix(3, 1, 3)


def test_braid_word_validation_and_ops():
    word = BraidWord(3, (1, 2, -1))
    assert len(word) == 3
    assert word.inverse().letters == (1, -2, -1)
    assert (word * BraidWord(3, (2,))).letters == (1, 2, -1, 2)
    with pytest.raises(ValueError):
        BraidWord(1, ())
    with pytest.raises(ValueError):
        BraidWord(3, (0,))
    with pytest.raises(ValueError):
        BraidWord(3, (3,))
    with pytest.raises(ValueError):
        word * BraidWord(4, (1,))


def test_word_times_inverse_is_the_identity():
    rng = random.Random(5)
    for m in (1, 2):
        for _ in range(50):
            n = rng.randint(2, 5)
            length = rng.randint(1, 8)
            letters = []
            for _ in range(length):
                i = rng.randint(1, n - 1)
                letters.append(i if rng.random() < 0.5 else -i)
            word = BraidWord(n, tuple(letters))
            product = evaluate_word(word * word.inverse(), m)
            assert mat_eq(product.rows(), identity(product.ring, product.size))


def test_braid_equal_words_evaluate_equally():
    for m in (1, 2):
        left = evaluate_word(BraidWord(3, (1, 2, 1)), m)
        right = evaluate_word(BraidWord(3, (2, 1, 2)), m)
        assert mat_eq(left.rows(), right.rows())


def test_full_twist_is_central():
    for m in (1, 2):
        for n in (3, 4):
            twist = BraidWord(n, tuple(range(1, n)) * n)
            center = evaluate_word(twist, m)
            for i in range(1, n):
                gen = generator_matrix(n, i, m)
                assert mat_eq(
                    mat_mul(center.rows(), gen.rows()),
                    mat_mul(gen.rows(), center.rows()),
                )


def test_dual_representation_preserves_the_pairing():
    # <rho'(b) v, rho(b) w> = <v, w> with the identity pairing matrix:
    # alpha(rho'(b))^T rho(b) = 1.
    words = [
        BraidWord(3, (1, 2)),
        BraidWord(3, (2, -1, 1)),
        BraidWord(3, (-2, -2, 1)),
        BraidWord(4, (1, 3, -2)),
    ]
    for m in (1, 2):
        for word in words:
            rho = evaluate_word(word, m)
            dual = dual_representation(word, m)
            lhs = mat_mul(
                linalg.transpose(linalg.mat_alpha(dual.rows())), rho.rows()
            )
            assert mat_eq(lhs, identity(rho.ring, rho.size))


def test_dual_representation_pairing_invariance_via_evaluate():
    word = BraidWord(3, (1, -2, 1))
    m = 2
    rho = evaluate_word(word, m)
    dual = dual_representation(word, m)
    matrix = delta_pairing(disc_triad(3, m), "in", rho.ring)
    ring = rho.ring
    rng = random.Random(6)

    def rand_vector(size):
        entries = []
        for _ in range(size):
            terms = {}
            for _ in range(2):
                exps = tuple(rng.randint(-1, 1) for _ in range(ring.rank))
                terms[exps] = rng.randint(-2, 2)
            entries.append(ring.element(terms))
        return tuple(entries)

    for _ in range(10):
        v = rand_vector(rho.size)
        w = rand_vector(rho.size)
        moved_v = tuple(
            sum((dual.entries[a][b] * v[b] for b in range(rho.size)), ring.zero)
            for a in range(rho.size)
        )
        moved_w = tuple(
            sum((rho.entries[a][b] * w[b] for b in range(rho.size)), ring.zero)
            for a in range(rho.size)
        )
        assert matrix.evaluate(moved_v, moved_w) == matrix.evaluate(v, w)


def test_dual_representation_is_antihomomorphic_on_products():
    m = 1
    a = BraidWord(3, (1,))
    b = BraidWord(3, (2,))
    ab = dual_representation(a * b, m)
    separate = mat_mul(
        dual_representation(a, m).rows(), dual_representation(b, m).rows()
    )
    assert mat_eq(ab.rows(), separate)


def test_dual_side_tag_and_validation():
    word = BraidWord(3, (1,))
    assert dual_representation(word, 2, "out").convention.endswith("dual-out")
    assert dual_representation(word, 1).convention.endswith("dual-in")
    with pytest.raises(ValueError):
        dual_representation(word, 2, "middle")


def test_convention_tags():
    assert generator_matrix(3, 1, 1).convention == "burau/t=x/arc-basis"
    assert generator_matrix(3, 1, 2).convention == "lkb/q=x,t=-d/arc-basis"


def test_relations_survive_generic_specialization():
    # spot-check the braid relation numerically at a generic complex point
    field = ComplexApprox()
    point = {"x": 0.31 + 0.77j, "d": -1.2 + 0.45j}
    tolerance = 1e-9
    for m in (1, 2):
        assignments = {"x": point["x"]} if m == 1 else point
        s1 = specialize_matrix(generator_matrix(3, 1, m).rows(), assignments, field)
        s2 = specialize_matrix(generator_matrix(3, 2, m).rows(), assignments, field)

        def numeric_mul(a, b):
            size = len(a)
            return [
                [sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size)]
                for i in range(size)
            ]

        lhs = numeric_mul(s1, numeric_mul(s2, s1))
        rhs = numeric_mul(s2, numeric_mul(s1, s2))
        for row_l, row_r in zip(lhs, rhs):
            for a, b in zip(row_l, row_r):
                assert abs(a - b) <= tolerance


def test_diagonal_conjugation_is_integral():
    for n in range(2, 6):
        certificate = diagonal_conjugation_integrality(n, 2)
        assert certificate.integral
        assert bool(certificate)
        assert certificate.generator is None
    assert diagonal_conjugation_integrality(4, 1).integral
    with pytest.raises(ValueError):
        diagonal_conjugation_integrality(3, 3)
