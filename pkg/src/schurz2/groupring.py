"""Exact arithmetic in the rational group ring of the free abelian group Z x Z.

Group elements are exponent pairs ``(i, j)`` standing for ``a^i b^j``.  Ring
elements are finitely supported maps from exponent pairs to exact rational
coefficients; no zero coefficient is ever stored and no rounding ever happens.
All values are immutable after construction and every operation returns a new
value, so anything in this module can be shared between threads.

Also provided: integer lattices (subgroups of Z^2) kept in a canonical
triangular basis, with exact membership and index computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Gpt = tuple[int, int]

IDENTITY: Gpt = (0, 0)

_F0 = Fraction(0)


def gadd(g: Gpt, h: Gpt) -> Gpt:
    return (g[0] + h[0], g[1] + h[1])


def gneg(g: Gpt) -> Gpt:
    return (-g[0], -g[1])


def gscale(m: int, g: Gpt) -> Gpt:
    return (m * g[0], m * g[1])


def _check_point(g) -> Gpt:
    if (
        not isinstance(g, tuple)
        or len(g) != 2
        or not isinstance(g[0], int)
        or not isinstance(g[1], int)
    ):
        raise TypeError(f"group element must be a pair of ints, got {g!r}")
    return g


def _raw(terms: dict[Gpt, Fraction]) -> "RingElement":
    element = RingElement.__new__(RingElement)
    element._terms = terms
    return element


class RingElement:
    """A finitely supported group-ring element with exact coefficients.

    The term map is normalized on construction: coefficients become
    :class:`~fractions.Fraction` values, repeated keys are merged, zeros are
    dropped.  Multiplication is convolution; use :meth:`hadamard` for the
    pointwise product.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict[Gpt, Fraction] = {}
        if terms is not None:
            items = terms.items() if hasattr(terms, "items") else terms
            for g, c in items:
                g = _check_point(g)
                acc = clean.get(g, _F0) + Fraction(c)
                if acc:
                    clean[g] = acc
                elif g in clean:
                    del clean[g]
        self._terms = clean

    def terms(self) -> dict[Gpt, Fraction]:
        return dict(self._terms)

    def support(self) -> frozenset[Gpt]:
        return frozenset(self._terms)

    def coeff(self, g: Gpt) -> Fraction:
        return self._terms.get(g, _F0)

    def sorted_terms(self) -> list[tuple[Gpt, Fraction]]:
        return sorted(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"<RingElement {format_element(self)!r}>"

    def __str__(self) -> str:
        return format_element(self)

    def __add__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        out = dict(self._terms)
        for g, c in other._terms.items():
            acc = out.get(g, _F0) + c
            if acc:
                out[g] = acc
            elif g in out:
                del out[g]
        return _raw(out)

    def __neg__(self):
        return _raw({g: -c for g, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RingElement):
            out: dict[Gpt, Fraction] = {}
            for (i1, j1), c1 in self._terms.items():
                for (i2, j2), c2 in other._terms.items():
                    g = (i1 + i2, j1 + j2)
                    acc = out.get(g, _F0) + c1 * c2
                    if acc:
                        out[g] = acc
                    elif g in out:
                        del out[g]
            return _raw(out)
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return _raw({})
            return _raw({g: c * v for g, v in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def star(self) -> "RingElement":
        """The involution sending every group element to its inverse."""
        return _raw({(-i, -j): c for (i, j), c in self._terms.items()})

    def frobenius(self, m: int) -> "RingElement":
        """Map every term at g to the same coefficient at m*g.

        For m = 0 all terms collide on the identity and their coefficients
        add up; for any other m the map is injective on points.
        """
        out: dict[Gpt, Fraction] = {}
        for (i, j), c in self._terms.items():
            g = (m * i, m * j)
            acc = out.get(g, _F0) + c
            if acc:
                out[g] = acc
            elif g in out:
                del out[g]
        return _raw(out)

    def hadamard(self, other: "RingElement") -> "RingElement":
        """Pointwise coefficient product; support is the support intersection."""
        if not isinstance(other, RingElement):
            raise TypeError("hadamard product needs another RingElement")
        small, big = sorted((self._terms, other._terms), key=len)
        # nonzero * nonzero stays nonzero over Q, so no zero-dropping needed
        return _raw({g: c * big[g] for g, c in small.items() if g in big})

    def coeff_slice(self, c) -> frozenset[Gpt]:
        """All points carrying the exact coefficient c (c must be nonzero)."""
        c = Fraction(c)
        if not c:
            raise ValueError("the zero coefficient slice is infinite")
        return frozenset(g for g, v in self._terms.items() if v == c)

    def apply_coeff_fn(self, mapping) -> "RingElement":
        """Apply a finite coefficient mapping to every stored coefficient.

        The mapping must be defined on every coefficient that occurs; values
        mapped to zero are dropped.  Zero itself is implicitly mapped to zero
        because zero coefficients are never stored.
        """
        table = {Fraction(k): Fraction(v) for k, v in mapping.items()}
        out: dict[Gpt, Fraction] = {}
        for g, c in self._terms.items():
            if c not in table:
                raise ValueError(f"coefficient mapping undefined for {c}")
            v = table[c]
            if v:
                out[g] = v
        return _raw(out)


def simple_quantity(points) -> RingElement:
    """The formal sum of a non-empty finite set of group elements."""
    points = set(points)
    if not points:
        raise ValueError("simple quantity of the empty set is not defined")
    return _raw({_check_point(g): Fraction(1) for g in points})


# --- element expression grammar -------------------------------------------
#
#   element := term (('+' | '-') term)*
#   term    := [rational '*']? 'g(' int ',' int ')'
#   rational:= int ['/' positive-int]
#
# Whitespace insensitive.  The bare string "0" denotes the zero element, and
# a leading sign before the first term is tolerated on input.  Serialization
# sorts terms lexicographically by (i, j) and is the parser's inverse.


class ParseError(ValueError):
    """Malformed element expression; carries the 1-based source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class _Scanner:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def fail(self, message: str):
        before = self.src[: self.pos]
        line = before.count("\n") + 1
        column = self.pos - (before.rfind("\n") + 1) + 1
        raise ParseError(message, line, column)

    def expect(self, ch: str):
        self.skip_ws()
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() in "+-":
            self.pos += 1
        if not self.peek().isdigit():
            self.pos = start
            self.fail("expected an integer")
        while self.peek().isdigit():
            self.pos += 1
        return int(self.src[start : self.pos])

    def eof(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.src)


def _parse_term(sc: _Scanner, sign: int) -> tuple[Gpt, Fraction]:
    sc.skip_ws()
    coeff = Fraction(1)
    if sc.peek().isdigit() or sc.peek() in "+-":
        num = sc.integer()
        den = 1
        sc.skip_ws()
        if sc.peek() == "/":
            sc.pos += 1
            sc.skip_ws()
            den_pos = sc.pos
            den = sc.integer()
            if den <= 0:
                sc.pos = den_pos
                sc.fail("denominator must be a positive integer")
        coeff = Fraction(num, den)
        sc.expect("*")
    sc.skip_ws()
    if sc.peek() != "g":
        sc.fail("expected 'g('")
    sc.pos += 1
    sc.expect("(")
    i = sc.integer()
    sc.expect(",")
    j = sc.integer()
    sc.expect(")")
    return ((i, j), sign * coeff)


def parse_element(src: str) -> RingElement:
    """Parse an element expression such as ``2*g(1,0) + g(-1,0) - 1/2*g(0,3)``.

    Repeated terms are merged and terms that cancel are dropped.
    """
    if src.strip() == "0":
        return RingElement()
    sc = _Scanner(src)
    if sc.eof():
        sc.fail("empty element expression")
    sign = 1
    if sc.peek() == "+":
        sc.pos += 1
    elif sc.peek() == "-":
        sign = -1
        sc.pos += 1
    terms = [_parse_term(sc, sign)]
    while not sc.eof():
        sc.skip_ws()
        ch = sc.peek()
        if ch == "+":
            sign = 1
        elif ch == "-":
            sign = -1
        else:
            sc.fail("expected '+' or '-'")
        sc.pos += 1
        terms.append(_parse_term(sc, sign))
    return RingElement(terms)


def format_element(x: RingElement) -> str:
    """Serialize in the element grammar, terms sorted lexicographically by (i, j)."""
    if not x:
        return "0"
    parts: list[str] = []
    for k, ((i, j), c) in enumerate(sorted(x.terms().items())):
        mag = abs(c)
        body = f"g({i},{j})" if mag == 1 else f"{mag}*g({i},{j})"
        if k == 0:
            parts.append(body if c > 0 else f"{c}*g({i},{j})")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


# --- integer lattices -------------------------------------------------------


def _fold_generator(lead: Gpt, v: Gpt) -> tuple[Gpt, int]:
    """Euclidean reduction of two rows; returns the new lead row and the
    leftover second coordinate of the row whose first coordinate became 0."""
    a0, a1 = lead
    b0, b1 = v
    while b0:
        q = a0 // b0
        a0, a1, b0, b1 = b0, b1, a0 - q * b0, a1 - q * b1
    return (a0, a1), b1


@dataclass(frozen=True)
class Lattice:
    """A subgroup of Z^2 in canonical triangular form.

    The basis is () for the trivial subgroup, a single vector with positive
    leading entry for rank one, or ``((p, q), (0, s))`` with p > 0, s > 0 and
    0 <= q < s for rank two.  Equal subgroups always produce identical basis
    data, so dataclass equality decides subgroup equality.
    """

    basis: tuple[Gpt, ...]

    @classmethod
    def span(cls, points) -> "Lattice":
        lead: Gpt = (0, 0)
        tail = 0
        for g in points:
            g = _check_point(g)
            if g == (0, 0):
                continue
            lead, rem = _fold_generator(lead, g)
            tail = gcd(tail, rem)
        p, q = lead
        if p == 0:
            tail = gcd(tail, q)
            return cls(((0, tail),)) if tail else cls(())
        if p < 0:
            p, q = -p, -q
        if tail == 0:
            return cls(((p, q),))
        return cls(((p, q % tail), (0, tail)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def index(self) -> int | None:
        """Index in Z^2 (the basis determinant) for rank 2, else None."""
        if len(self.basis) != 2:
            return None
        return self.basis[0][0] * self.basis[1][1]

    def coordinates(self, g: Gpt) -> tuple[int, ...] | None:
        """Integer coordinates of g in the basis, or None if g lies outside."""
        x, y = g
        if not self.basis:
            return () if g == (0, 0) else None
        if len(self.basis) == 1:
            p, q = self.basis[0]
            if p:
                if x % p:
                    return None
                t = x // p
                return (t,) if t * q == y else None
            if x:
                return None
            return (y // q,) if y % q == 0 else None
        (p, q), (_, s) = self.basis
        if x % p:
            return None
        t = x // p
        r = y - t * q
        if r % s:
            return None
        return (t, r // s)

    def contains(self, g: Gpt) -> bool:
        return self.coordinates(g) is not None


def generated_lattice(points) -> Lattice:
    """Canonical form of the subgroup of Z^2 generated by the given points."""
    return Lattice.span(points)


def lattice_contains(lattice: Lattice, g: Gpt) -> bool:
    return lattice.contains(g)
