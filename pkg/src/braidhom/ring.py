"""Exact arithmetic in group rings of free abelian groups.

The ring R = k[Z^d] of Laurent polynomials in d commuting variables is the
coefficient ring underlying every other module in this package: group rings of
deck transformation groups, scalars of intersection pairings, entries of braid
matrices.  Elements are stored sparsely as a map from exponent vectors (tuples
of d signed integers, the group Z^d written additively) to nonzero
coefficients.

Supported coefficient rings k: the integers, the rationals, the integers mod a
prime, and tolerance-based complex floats.  The first three are integral
domains, which makes R an integral domain as well; this is what the unit and
zero-divisor tests rely on.  Complex coefficients are honest about rounding:
equality means "difference within tolerance", and the ill-posed predicates
(is_unit, is_non_zero_divisor, exact division) refuse to answer.

The canonical anti-automorphism alpha sends a group element to its inverse,
i.e. negates every exponent vector; since R is commutative it is a ring
involution.  Quantum integers [n]_u = 1 + u + ... + u^(n-1) and their
factorials live here too, because they are plain ring elements once u is
chosen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Exponents = tuple[int, ...]


# ---------------------------------------------------------------------------
# coefficient rings
# ---------------------------------------------------------------------------

class CoefficientRing:
    """Interface for the supported coefficient rings k.

    Concrete subclasses are value objects (frozen dataclasses), so two ring
    descriptions compare equal exactly when they denote the same ring.
    """

    name: str = "?"
    is_domain: bool = False
    is_exact: bool = True
    is_field: bool = False

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def coerce(self, value):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return a == 0

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def invert(self, a):
        raise NotImplementedError

    def power(self, a, n: int):
        if n >= 0:
            result = self.one
            for _ in range(n):
                result = self.mul(result, a)
            return result
        return self.power(self.invert(a), -n)

    # (sign, magnitude) split used only for printing "a - b" instead of "a + -b"
    def split_sign(self, a):
        return 1, a

    def to_str(self, a) -> str:
        return str(a)

    def from_str(self, s: str):
        raise NotImplementedError


@dataclass(frozen=True)
class Integers(CoefficientRing):
    name = "integers"
    is_domain = True

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"not an integer: {value!r}")
        return value

    def is_unit(self, a) -> bool:
        return a in (1, -1)

    def invert(self, a):
        if a not in (1, -1):
            raise ValueError(f"{a} is not a unit of the integers")
        return a

    def split_sign(self, a):
        return (-1, -a) if a < 0 else (1, a)

    def from_str(self, s: str):
        return int(s)


@dataclass(frozen=True)
class Rationals(CoefficientRing):
    name = "rationals"
    is_domain = True
    is_field = True

    def coerce(self, value):
        if isinstance(value, bool):
            raise TypeError(f"not a rational: {value!r}")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise TypeError(f"not a rational: {value!r}")

    def is_unit(self, a) -> bool:
        return a != 0

    def invert(self, a):
        if a == 0:
            raise ValueError("0 is not a unit of the rationals")
        return 1 / Fraction(a)

    def split_sign(self, a):
        return (-1, -a) if a < 0 else (1, a)

    def from_str(self, s: str):
        return Fraction(s)


@dataclass(frozen=True)
class IntegersModP(CoefficientRing):
    """The field Z/pZ for a prime p, residues stored in [0, p)."""

    p: int
    name = "integers-mod-p"
    is_domain = True
    is_field = True

    def __post_init__(self):
        p = self.p
        if p < 2 or any(p % q == 0 for q in range(2, int(math.isqrt(p)) + 1)):
            raise ValueError(f"modulus {p} is not prime")

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"not an integer: {value!r}")
        return value % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def is_unit(self, a) -> bool:
        return a % self.p != 0

    def invert(self, a):
        if a % self.p == 0:
            raise ValueError(f"0 is not a unit mod {self.p}")
        return pow(a, -1, self.p)

    def from_str(self, s: str):
        return int(s) % self.p


@dataclass(frozen=True)
class ComplexApprox(CoefficientRing):
    """Complex floats with an explicit comparison tolerance.

    Not an integral domain as far as this package is concerned: rounding makes
    "is this element a unit / a zero-divisor" ill-posed, so those predicates
    are refused rather than answered unreliably.
    """

    tolerance: float = 1e-9
    name = "complex-approx"
    is_domain = False
    is_exact = False

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")

    def coerce(self, value):
        if isinstance(value, bool):
            raise TypeError(f"not a number: {value!r}")
        if isinstance(value, (int, float, complex, Fraction)):
            return complex(value)
        raise TypeError(f"not a number: {value!r}")

    def is_zero(self, a) -> bool:
        return abs(a) <= self.tolerance

    def is_unit(self, a) -> bool:
        raise ValueError("is_unit is ill-posed over complex-approx coefficients")

    def invert(self, a):
        if self.is_zero(a):
            raise ValueError("cannot invert a coefficient within tolerance of 0")
        return 1 / a

    def to_str(self, a) -> str:
        return repr(a)

    def from_str(self, s: str):
        return complex(s)


# ---------------------------------------------------------------------------
# the Laurent ring R = k[Z^d]
# ---------------------------------------------------------------------------

def _default_variables(rank: int) -> tuple[str, ...]:
    if rank == 0:
        return ()
    if rank == 1:
        return ("x",)
    if rank == 2:
        return ("x", "d")
    return tuple(f"x{i + 1}" for i in range(rank))


@dataclass(frozen=True)
class LaurentRing:
    """The group ring k[Z^rank], with named variables for printing/parsing."""

    rank: int
    coefficients: CoefficientRing
    variables: tuple[str, ...] = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if self.variables is None:
            object.__setattr__(self, "variables", _default_variables(self.rank))
        else:
            object.__setattr__(self, "variables", tuple(self.variables))
        if len(self.variables) != self.rank:
            raise ValueError("need exactly one variable name per lattice rank")
        if len(set(self.variables)) != self.rank:
            raise ValueError("variable names must be distinct")
        for v in self.variables:
            if not v.isidentifier():
                raise ValueError(f"bad variable name: {v!r}")

    # -- constructors -------------------------------------------------------

    def element(self, terms: dict) -> GroupRingElement:
        """Build an element from {exponent tuple: coefficient}, canonicalizing."""
        k = self.coefficients
        clean: dict[Exponents, object] = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != self.rank or not all(isinstance(e, int) for e in exps):
                raise ValueError(f"bad exponent vector {exps!r} for rank {self.rank}")
            c = k.coerce(coeff)
            if exps in clean:
                c = k.add(clean[exps], c)
            clean[exps] = c
        clean = {e: c for e, c in clean.items() if c != k.zero}
        return GroupRingElement(self, clean)

    @property
    def zero(self) -> GroupRingElement:
        return GroupRingElement(self, {})

    @property
    def one(self) -> GroupRingElement:
        return self.scalar(1)

    def scalar(self, coeff) -> GroupRingElement:
        return self.element({(0,) * self.rank: coeff})

    def monomial(self, exponents: Exponents, coeff=1) -> GroupRingElement:
        return self.element({tuple(exponents): coeff})

    def gen(self, i: int) -> GroupRingElement:
        """The i-th lattice generator as a ring element (the variable itself)."""
        if not 0 <= i < self.rank:
            raise ValueError(f"no generator {i} in rank {self.rank}")
        exps = tuple(1 if j == i else 0 for j in range(self.rank))
        return self.monomial(exps)

    @property
    def gens(self) -> tuple[GroupRingElement, ...]:
        return tuple(self.gen(i) for i in range(self.rank))

    def var(self, name: str) -> GroupRingElement:
        return self.gen(self.variables.index(name))

    # -- serialization ------------------------------------------------------

    def from_json_terms(self, data: list) -> GroupRingElement:
        k = self.coefficients
        return self.element(
            {tuple(item["exponents"]): k.from_str(item["coeff"]) for item in data}
        )

    def parse(self, text: str) -> GroupRingElement:
        """Parse the canonical text form produced by GroupRingElement.to_text."""
        return _parse_element(self, text)


class GroupRingElement:
    """A finitely supported function Z^d -> k, i.e. a sparse Laurent polynomial.

    Immutable after construction.  Use LaurentRing.element / monomial / scalar
    to build instances; the constructor trusts its input to be canonical.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: LaurentRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basics -------------------------------------------------------------

    def is_zero(self) -> bool:
        k = self.ring.coefficients
        return all(k.is_zero(c) for c in self.terms.values())

    def coefficient(self, exponents: Exponents):
        return self.terms.get(tuple(exponents), self.ring.coefficients.zero)

    def support(self) -> list[Exponents]:
        return sorted(self.terms)

    def _check_context(self, other: GroupRingElement):
        if self.ring != other.ring:
            raise ValueError(
                f"ring context mismatch: {self.ring} vs {other.ring}"
            )

    def _coerce_operand(self, other):
        if isinstance(other, GroupRingElement):
            self._check_context(other)
            return other
        if isinstance(other, (int, Fraction, float, complex)):
            return self.ring.scalar(other)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        k = self.ring.coefficients
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = k.add(terms.get(exps, k.zero), c)
            if s == k.zero:
                terms.pop(exps, None)
            else:
                terms[exps] = s
        return GroupRingElement(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        k = self.ring.coefficients
        return GroupRingElement(self.ring, {e: k.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        k = self.ring.coefficients
        terms: dict[Exponents, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = k.add(terms.get(e, k.zero), k.mul(c1, c2))
                if s == k.zero:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return GroupRingElement(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one
        square = self
        while n:
            if n & 1:
                result = result * square
            square = square * square
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, float, complex)):
            other = self.ring.scalar(other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        if self.ring != other.ring:
            return False
        if self.ring.coefficients.is_exact:
            return self.terms == other.terms
        return (self - other).is_zero()

    __hash__ = None  # mutable dict inside; elements are not dict keys

    # -- structure ----------------------------------------------------------

    def alpha(self) -> GroupRingElement:
        """The canonical involution: negate every exponent vector (g -> g^-1)."""
        return GroupRingElement(
            self.ring, {tuple(-e for e in exps): c for exps, c in self.terms.items()}
        )

    def is_unit(self) -> bool:
        """Whether this element is invertible in k[Z^d].

        Over an integral domain k the units of k[Z^d] are exactly the single
        monomials with unit coefficient.  Refused over complex-approx.
        """
        k = self.ring.coefficients
        if not k.is_domain:
            raise ValueError(
                f"is_unit is not supported over {k.name} coefficients"
            )
        if len(self.terms) != 1:
            return False
        (coeff,) = self.terms.values()
        return k.is_unit(coeff)

    def is_non_zero_divisor(self) -> bool:
        """Whether multiplication by this element is injective.

        k[Z^d] over an integral domain is itself an integral domain, so this
        just means "nonzero".  Refused over complex-approx.
        """
        k = self.ring.coefficients
        if not k.is_domain:
            raise ValueError(
                f"is_non_zero_divisor is not supported over {k.name} coefficients"
            )
        return bool(self.terms)

    def inverse(self) -> GroupRingElement:
        """Invert a unit (a single monomial with unit coefficient)."""
        if not self.is_unit():
            raise ValueError(f"not a unit: {self}")
        ((exps, coeff),) = self.terms.items()
        k = self.ring.coefficients
        return self.ring.monomial(tuple(-e for e in exps), k.invert(coeff))

    def specialize(self, assignments: dict, target: CoefficientRing) -> GroupRingElement:
        """Substitute a numeric value for every variable.

        `assignments` maps variable names to values coercible into `target`;
        the result lives in the rank-0 Laurent ring over `target`.  Values
        must be invertible in `target` whenever negative exponents occur.
        """
        missing = set(self.ring.variables) - set(assignments)
        if missing:
            raise ValueError(f"unassigned variables: {sorted(missing)}")
        values = [target.coerce(assignments[v]) for v in self.ring.variables]
        out = LaurentRing(0, target)
        total = target.zero
        for exps, coeff in self.terms.items():
            term = target.coerce(coeff)
            for value, e in zip(values, exps):
                term = target.mul(term, target.power(value, e))
            total = target.add(total, term)
        return out.scalar(total)

    # -- printing and parsing -------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: terms in ascending lex order of exponents."""
        if not self.terms:
            return "0"
        k = self.ring.coefficients
        pieces: list[tuple[int, str]] = []
        for exps in sorted(self.terms):
            sign, mag = k.split_sign(self.terms[exps])
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.ring.variables, exps)
                if e != 0
            )
            if not mono:
                body = k.to_str(mag)
            elif mag == k.one:
                body = mono
            else:
                body = f"{k.to_str(mag)}*{mono}"
            pieces.append((sign, body))
        sign, body = pieces[0]
        out = ("-" if sign < 0 else "") + body
        for sign, body in pieces[1:]:
            out += (" - " if sign < 0 else " + ") + body
        return out

    def to_json_terms(self) -> list:
        k = self.ring.coefficients
        return [
            {"exponents": list(exps), "coeff": k.to_str(self.terms[exps])}
            for exps in sorted(self.terms)
        ]

    def __repr__(self):
        return self.to_text()


def _parse_element(ring: LaurentRing, text: str) -> GroupRingElement:
    text = text.strip()
    if text == "0":
        return ring.zero
    chunks = text.replace(" - ", " + -").split(" + ")
    k = ring.coefficients
    terms: dict[Exponents, object] = {}
    for chunk in chunks:
        chunk = chunk.strip()
        negate = False
        coeff = None
        exps = [0] * ring.rank
        if chunk.startswith("-") and not _looks_numeric(chunk, k):
            negate = True
            chunk = chunk[1:]
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"cannot parse term {chunk!r}")
            name, _, power = factor.partition("^")
            if name in ring.variables:
                exps[ring.variables.index(name)] += int(power) if power else 1
            elif coeff is None:
                coeff = k.from_str(factor)
            else:
                raise ValueError(f"cannot parse factor {factor!r} in {chunk!r}")
        if coeff is None:
            coeff = k.one
        if negate:
            coeff = k.neg(coeff)
        e = tuple(exps)
        terms[e] = k.add(terms.get(e, k.zero), coeff)
    return ring.element(terms)


def _looks_numeric(chunk: str, k: CoefficientRing) -> bool:
    # "-2*x" starts with a numeric factor carrying its own sign; "-x" does not
    head = chunk.split("*", 1)[0]
    try:
        k.from_str(head)
        return True
    except (ValueError, TypeError):
        return False


# ---------------------------------------------------------------------------
# exact division
# ---------------------------------------------------------------------------

def exact_divide(f: GroupRingElement, g: GroupRingElement) -> GroupRingElement | None:
    """Return q with f = q*g if one exists in the same Laurent ring, else None.

    Works over integral-domain coefficients only.  Division is by leading
    terms in lex order; termination is guaranteed because the support of any
    true quotient is confined to the per-coordinate box
    [min(f) - min(g), max(f) - max(g)] (supports add when polynomials
    multiply), so a candidate quotient exponent escaping the box proves
    non-divisibility.  Over the integers the division runs through the
    rationals and the quotient is then checked for integrality.
    """
    if f.ring != g.ring:
        raise ValueError("ring context mismatch")
    k = f.ring.coefficients
    if not k.is_domain:
        raise ValueError(f"exact division is not supported over {k.name} coefficients")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero element")
    if f.is_zero():
        return f.ring.zero

    if isinstance(k, Integers):
        rational = LaurentRing(f.ring.rank, Rationals(), f.ring.variables)
        fq = rational.element(dict(f.terms))
        gq = rational.element(dict(g.terms))
        q = exact_divide(fq, gq)
        if q is None or any(c.denominator != 1 for c in q.terms.values()):
            return None
        return f.ring.element({e: int(c) for e, c in q.terms.items()})

    rank = f.ring.rank
    f_exps, g_exps = list(f.terms), list(g.terms)
    lo = tuple(
        min(e[i] for e in f_exps) - min(e[i] for e in g_exps) for i in range(rank)
    )
    hi = tuple(
        max(e[i] for e in f_exps) - max(e[i] for e in g_exps) for i in range(rank)
    )
    if any(a > b for a, b in zip(lo, hi)):
        return None

    g_lead = max(g.terms)
    g_lead_coeff = g.terms[g_lead]
    remainder = f
    quotient: dict[Exponents, object] = {}
    while not remainder.is_zero():
        r_lead = max(remainder.terms)
        q_exp = tuple(a - b for a, b in zip(r_lead, g_lead))
        if any(q < a or q > b for q, a, b in zip(q_exp, lo, hi)) or q_exp in quotient:
            return None
        q_coeff = k.mul(remainder.terms[r_lead], k.invert(g_lead_coeff))
        quotient[q_exp] = q_coeff
        remainder = remainder - f.ring.monomial(q_exp, q_coeff) * g
    return f.ring.element(quotient)


# ---------------------------------------------------------------------------
# quantum integers and factorials
# ---------------------------------------------------------------------------

def quantum_integer(n: int, u: GroupRingElement) -> GroupRingElement:
    """[n]_u = 1 + u + u^2 + ... + u^(n-1), defined for n >= 1."""
    if n < 1:
        raise ValueError(f"quantum integers are defined for n >= 1, got {n}")
    total = u.ring.one
    power = u.ring.one
    for _ in range(n - 1):
        power = power * u
        total = total + power
    return total


def quantum_factorial(n: int, u: GroupRingElement) -> GroupRingElement:
    """[n]_u! = [1]_u [2]_u ... [n]_u, with the empty-product convention [0]_u! = 1.

    The n = 0 case is what makes compositions with zero parts contribute a
    factor 1 to diagonal embedding entries.
    """
    if n < 0:
        raise ValueError(f"quantum factorials are defined for n >= 0, got {n}")
    result = u.ring.one
    for j in range(2, n + 1):
        result = result * quantum_integer(j, u)
    return result
