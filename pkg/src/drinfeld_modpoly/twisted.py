"""Twisted polynomials sum f_i tau^i with tau a = a^q tau."""

from __future__ import annotations

from typing import Sequence

from . import upoly
from .printing import format_twisted
from .triangular import RingElem, TriangularRing


class NonAdditiveExponent(ValueError):
    """An X-polynomial has a nonzero term whose exponent is not a power of q."""


class TwistedPoly:
    """Immutable twisted polynomial; coefficients are listed lowest degree first."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: TriangularRing, coeffs: Sequence):
        cs = [ring(c) for c in coeffs] or [ring.zero]
        while len(cs) > 1 and cs[-1].is_zero():
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def tau(cls, ring: TriangularRing, k: int = 1) -> "TwistedPoly":
        return cls(ring, [ring.zero] * k + [ring.one])

    @property
    def degree(self) -> int:
        return -1 if self.is_zero() else len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_zero()

    def is_monic(self) -> bool:
        return not self.is_zero() and self.coeffs[-1].is_one()

    def leading(self) -> RingElem:
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> RingElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def _check(self, other: "TwistedPoly"):
        if not isinstance(other, TwistedPoly):
            raise TypeError("expected a TwistedPoly")
        if other.ring is not self.ring:
            raise ValueError("twisted polynomials over different rings")

    def __add__(self, other: "TwistedPoly") -> "TwistedPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return TwistedPoly(self.ring, [self[i] + other[i] for i in range(n)])

    def __neg__(self):
        return TwistedPoly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "TwistedPoly") -> "TwistedPoly":
        return tw_mul(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, TwistedPoly)
            and len(self.coeffs) == len(other.coeffs)
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash(self.coeffs)

    def map(self, fn) -> "TwistedPoly":
        """Apply a ring map to every coefficient; ``fn`` decides the target ring."""
        cs = [fn(c) for c in self.coeffs]
        return TwistedPoly(cs[0].ring, cs)

    def __call__(self, x: RingElem) -> RingElem:
        """Evaluate the additive polynomial at x."""
        out = self.ring.zero
        xp = self.ring(x)
        for i, c in enumerate(self.coeffs):
            if i:
                xp = xp ** self.ring.q
            if not c.is_zero():
                out = out + c * xp
        return out

    def to_text(self) -> str:
        return format_twisted(self.coeffs)

    __str__ = to_text

    def __repr__(self):
        return f"TwistedPoly({self.to_text()})"


def _frobenius_table(g: TwistedPoly, depth: int) -> list[list[RingElem]]:
    """table[i][j] = g_j^(q^i) for i < depth."""
    q = g.ring.q
    rows = [list(g.coeffs)]
    for _ in range(1, depth):
        rows.append([c**q if not c.is_zero() else c for c in rows[-1]])
    return rows


def tw_mul(f: TwistedPoly, g: TwistedPoly) -> TwistedPoly:
    """(fg)_k = sum_{i+j=k} f_i g_j^(q^i)."""
    f._check(g)
    if f.is_zero() or g.is_zero():
        return TwistedPoly(f.ring, [])
    table = _frobenius_table(g, len(f.coeffs))
    out = [f.ring.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(table[i]):
            if not b.is_zero():
                out[i + j] = out[i + j] + a * b
    return TwistedPoly(f.ring, out)


def tw_div_right(f: TwistedPoly, g: TwistedPoly) -> tuple[TwistedPoly, TwistedPoly]:
    """(quo, rem) with f = quo * g + rem and deg rem < deg g; g must be monic."""
    f._check(g)
    if not g.is_monic():
        raise ValueError("right division needs a monic divisor")
    dg = g.degree
    rem = list(f.coeffs)
    if f.degree < dg:
        return TwistedPoly(f.ring, []), f
    table = _frobenius_table(g, f.degree - dg + 1)
    quo = [f.ring.zero] * (f.degree - dg + 1)
    for k in range(f.degree - dg, -1, -1):
        c = rem[k + dg]
        quo[k] = c
        if c.is_zero():
            continue
        for j, b in enumerate(table[k]):
            if not b.is_zero():
                rem[k + j] = rem[k + j] - c * b
    return TwistedPoly(f.ring, quo), TwistedPoly(f.ring, rem[:dg])


def to_additive(f: TwistedPoly) -> list[RingElem]:
    """sum f_i tau^i  ->  sum f_i X^(q^i) as a dense X-polynomial."""
    q = f.ring.q
    out = [f.ring.zero] * (q ** (len(f.coeffs) - 1) + 1)
    for i, c in enumerate(f.coeffs):
        out[q**i] = c
    return upoly.trim(out)


def from_additive(h: Sequence[RingElem], ring: TriangularRing | None = None) -> TwistedPoly:
    h = upoly.trim(h)
    ring = ring or h[0].ring
    q = ring.q
    powers = {}
    e, i = 1, 0
    while e < len(h):
        powers[e] = i
        e *= q
        i += 1
    coeffs = [ring.zero] * (i or 1)
    for k, c in enumerate(h):
        if c.is_zero():
            continue
        if k not in powers:
            raise NonAdditiveExponent(f"exponent {k} is not a power of {q}")
        coeffs[powers[k]] = c
    return TwistedPoly(ring, coeffs)


def additive_compose(h1: Sequence[RingElem], h2: Sequence[RingElem]) -> list[RingElem]:
    """h1(h2(X)) for dense X-polynomials."""
    out = [h2[0].ring.zero]
    for c in reversed(list(h1)):
        out = upoly.add(upoly.mul(out, h2), [c])
    return out
