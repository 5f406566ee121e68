"""Braid-group actions on the punctured-disc modules.

The disc with n marked circles is the triad with g = 0, k = 0, so the
modules are indexed by compositions of m into n-1 parts, one part per
consecutive arc.  This module realises the braid action on those modules
for m = 1 (reduced Burau, over Z[x^{+-1}]) and m = 2 (Lawrence-Krammer-
Bigelow, over Z[x^{+-1}, d^{+-1}]), together with word evaluation, the
dual action forced by pairing invariance, and the integrality check for
conjugation by the quantum-factorial diagonal.

Matrix convention.  For m = 2 the entries are produced from the classical
two-parameter table, which acts on an auxiliary basis v_{j,k} indexed by
pairs 1 <= j < k <= n of marked circles (one segment running into each),
by the corner-sum change of basis

    F_{a,a} = v_{a,a+1}
    F_{a,b} = sum over s in {a,a+1}, r in {b,b+1}, s != r of
              (-1)^{(s-a)+(r-b)} v_{min(s,r),max(s,r)}        (a < b),

where F_e is the basis vector of the composition with points on arcs a
and b.  The classical variables are read as q = x and t = -d: with that
sign the diagonal D_e = prod [e_i]_d! conjugates every generator into an
integral matrix, while for t = +d no change of basis achieves this (the
reduction mod 1+d has no invariant line already at n = 3).  The m = 1
blocks come from the same calculus one point at a time.  The resulting
entries are frozen in tests/golden/generator_matrices.json.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import linalg
from .compositions import compositions
from .embeddings import embedding_matrix
from .ring import GroupRingElement, exact_divide
from .surfaces import SIDES, SurfaceTriad, standard_local_system

__all__ = [
    "BraidWord",
    "RepMatrix",
    "ConjugationCertificate",
    "disc_triad",
    "generator_matrix",
    "evaluate_word",
    "dual_representation",
    "braid_relations_hold",
    "diagonal_conjugation_integrality",
]

_TAGS = {1: "burau/t=x/arc-basis", 2: "lkb/q=x,t=-d/arc-basis"}


def disc_triad(n: int, m: int) -> SurfaceTriad:
    """The punctured-disc triad for the braid group on n strands."""
    if n < 2:
        raise ValueError(f"need at least 2 marked circles, got n={n}")
    return SurfaceTriad(genus=0, inner_circles=n, outer_intervals=0, points=m)


@dataclass(frozen=True)
class BraidWord:
    """A word in the standard braid generators on n strands.

    Letters are nonzero integers: i > 0 stands for the i-th generator,
    -i for its inverse.  The empty word is the identity braid.
    """

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"braid group needs n >= 2 strands, got {self.n}")
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        for a in self.letters:
            if a == 0 or abs(a) > self.n - 1:
                raise ValueError(f"letter {a} out of range for n={self.n}")

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-a for a in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.n, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class RepMatrix:
    """A braid-group matrix on the composition basis of the disc triad."""

    n: int
    m: int
    entries: tuple[tuple[GroupRingElement, ...], ...]
    convention: str

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def ring(self):
        return self.entries[0][0].ring

    def rows(self) -> list[list[GroupRingElement]]:
        return [list(row) for row in self.entries]


@functools.lru_cache(maxsize=None)
def _system(m: int):
    return standard_local_system(m)


def _freeze(rows) -> tuple[tuple[GroupRingElement, ...], ...]:
    return tuple(tuple(row) for row in rows)


# -- m = 1: reduced Burau ----------------------------------------------------
#
# One point on the consecutive arcs A_1..A_{n-1}; the i-th half-twist acts by
#   A_{i-1} -> A_{i-1} + A_i,   A_i -> -x A_i,   A_{i+1} -> x A_i + A_{i+1}.


def _burau_rows(n: int, i: int):
    ring = _system(1).ring
    x = ring.var("x")
    size = n - 1
    rows = [[ring.one if a == b else ring.zero for b in range(size)] for a in range(size)]
    c = i - 1
    rows[c][c] = -x
    if c - 1 >= 0:
        rows[c][c - 1] = ring.one
    if c + 1 < size:
        rows[c][c + 1] = x
    return rows


# -- m = 2: corner-sum basis over the pair table -----------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]


def _pair_images(n: int, i: int, ring):
    # Classical two-parameter table on the pair basis, with q = x, t = -d.
    q = ring.var("x")
    t = -ring.var("d")
    one = ring.one
    images = {}
    for (j, k) in _pairs(n):
        img = {}
        if i == j - 1:
            img[(i, k)] = q
            img[(i, j)] = q * q - q
            img[(j, k)] = one - q
        elif i == j and j != k - 1:
            img[(j + 1, k)] = one
        elif i == k - 1 and i != j:
            img[(j, i)] = q
            img[(j, k)] = one - q
            img[(i, k)] = -(q * q - q) * t
        elif i == k:
            img[(j, k + 1)] = one
        elif i == j == k - 1:
            img[(j, k)] = -t * q * q
        else:
            img[(j, k)] = one
        images[(j, k)] = img
    return images


def _arcs_of(e: tuple[int, ...]) -> tuple[int, int]:
    arcs = [idx + 1 for idx, part in enumerate(e) for _ in range(part)]
    return arcs[0], arcs[1]


def _corner_vector(e: tuple[int, ...], ring):
    a, b = _arcs_of(e)
    if a == b:
        return {(a, a + 1): ring.one}
    vec = {}
    for s in (a, a + 1):
        for r in (b, b + 1):
            if s == r:
                continue
            key = (min(s, r), max(s, r))
            sign = 1 if ((s - a) + (r - b)) % 2 == 0 else -1
            vec[key] = vec.get(key, ring.zero) + (ring.one if sign > 0 else -ring.one)
    return vec


@functools.lru_cache(maxsize=None)
def _corner_data(n: int):
    # Change of basis P (pair coordinates of each F_e) and its exact inverse.
    ring = _system(2).ring
    comps = compositions(n - 1, 2)
    pairs = _pairs(n)
    index = {p: a for a, p in enumerate(pairs)}
    size = len(pairs)
    P = [[ring.zero for _ in range(size)] for _ in range(size)]
    for col, e in enumerate(comps):
        for pair, coeff in _corner_vector(e, ring).items():
            P[index[pair]][col] = coeff
    Pinv = linalg.invert(P, ring)
    return _freeze(P), _freeze(Pinv)


def _pair_rows(n: int, i: int):
    ring = _system(2).ring
    pairs = _pairs(n)
    index = {p: a for a, p in enumerate(pairs)}
    size = len(pairs)
    rows = [[ring.zero for _ in range(size)] for _ in range(size)]
    images = _pair_images(n, i, ring)
    for col, pair in enumerate(pairs):
        for target, coeff in images[pair].items():
            rows[index[target]][col] = coeff
    return rows


@functools.lru_cache(maxsize=None)
def _generator_entries(n: int, i: int, m: int):
    if m == 1:
        return _freeze(_burau_rows(n, i))
    P, Pinv = _corner_data(n)
    W = _pair_rows(n, i)
    return _freeze(linalg.mat_mul(Pinv, linalg.mat_mul(W, P)))


@functools.lru_cache(maxsize=None)
def _generator_inverse_entries(n: int, i: int, m: int):
    ring = _system(m).ring
    return _freeze(linalg.invert(_generator_entries(n, i, m), ring))


def _validate(n: int, i: int, m: int):
    if m not in (1, 2):
        raise ValueError(f"explicit matrices exist only for m in {{1, 2}}, got m={m}")
    if n < 2:
        raise ValueError(f"braid group needs n >= 2, got {n}")
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")


def generator_matrix(n: int, i: int, m: int) -> RepMatrix:
    """Matrix of the i-th braid generator on the composition basis.

    m = 1 gives the reduced Burau action (size n-1), m = 2 the LKB action
    (size n(n-1)/2).  Row and column order is the composition enumeration
    order of E_{n-1,m}.
    """
    _validate(n, i, m)
    return RepMatrix(n, m, _generator_entries(n, i, m), _TAGS[m])


def evaluate_word(word: BraidWord, m: int) -> RepMatrix:
    """Ordered product of generator matrices over the letters of `word`.

    Inverse letters use exact inverses; all entries stay in R because the
    generator determinants are units.
    """
    if m not in (1, 2):
        raise ValueError(f"explicit matrices exist only for m in {{1, 2}}, got m={m}")
    ring = _system(m).ring
    n = word.n
    size = len(compositions(n - 1, m))
    product = linalg.identity(ring, size)
    for letter in word.letters:
        if letter > 0:
            factor = _generator_entries(n, letter, m)
        else:
            factor = _generator_inverse_entries(n, -letter, m)
        product = linalg.mat_mul(product, factor)
    return RepMatrix(n, m, _freeze(product), _TAGS[m])


def dual_representation(word: BraidWord, m: int, side: str = "in") -> RepMatrix:
    """The dual action rho'(beta) = alpha(rho(beta^{-1}))^T.

    Pairing invariance against the identity pairing matrix,
    alpha(rho(beta))^T . rho'(beta) = 1, holds by construction; `side`
    labels which half of the pairing carries rho and is recorded in the
    convention tag.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    base = evaluate_word(word.inverse(), m)
    entries = _freeze(linalg.transpose(linalg.mat_alpha(base.rows())))
    return RepMatrix(word.n, m, entries, f"{_TAGS[m]}/dual-{side}")


def braid_relations_hold(n: int, m: int) -> bool:
    """Check both braid relations on all generator matrices for B_n."""
    mats = {i: _generator_entries(n, i, m) for i in range(1, n)}
    for i in range(1, n - 1):
        lhs = linalg.mat_mul(mats[i], linalg.mat_mul(mats[i + 1], mats[i]))
        rhs = linalg.mat_mul(mats[i + 1], linalg.mat_mul(mats[i], mats[i + 1]))
        if not linalg.mat_eq(lhs, rhs):
            return False
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            if not linalg.mat_eq(linalg.mat_mul(mats[i], mats[j]),
                                 linalg.mat_mul(mats[j], mats[i])):
                return False
    return True


@dataclass(frozen=True)
class ConjugationCertificate:
    """Result of the diagonal conjugation integrality test.

    When `integral` is false, `generator`, `position` and `entry` name one
    offending matrix entry whose D-conjugate leaves the ring.
    """

    integral: bool
    generator: int | None = None
    position: tuple[int, int] | None = None
    entry: GroupRingElement | None = None

    def __bool__(self) -> bool:
        return self.integral


def diagonal_conjugation_integrality(n: int, m: int = 2) -> ConjugationCertificate:
    """Check that D^{-1} rho(sigma_i) D stays in R for every generator.

    D is the embedding diagonal diag(prod [e_i]_u!) of the disc triad; the
    check divides each entry rho_{ab} D_b by D_a exactly.  For m = 1 the
    diagonal is the identity and the answer is trivially true.
    """
    if m not in (1, 2):
        raise ValueError(f"explicit matrices exist only for m in {{1, 2}}, got m={m}")
    triad = disc_triad(n, m)
    system = _system(m)
    diagonal = embedding_matrix(triad, "in", system).diagonal
    for value in diagonal:
        if value.is_zero():
            raise ValueError("zero diagonal entry, conjugation undefined")
    for i in range(1, n):
        rho = _generator_entries(n, i, m)
        for a, d_a in enumerate(diagonal):
            for b, d_b in enumerate(diagonal):
                if exact_divide(rho[a][b] * d_b, d_a) is None:
                    return ConjugationCertificate(False, i, (a, b), rho[a][b])
    return ConjugationCertificate(True)
