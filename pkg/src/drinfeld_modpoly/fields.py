"""Finite fields F_{p^n} and small helpers for the polynomial ring A = F_q[T].

Elements of A are plain tuples of residues, lowest degree first, with no
trailing zeros (the zero polynomial is the empty tuple).  Only prime q is
supported, so residues are ints modulo q.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

# Pinned moduli, lowest coefficient first.
PINNED_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),        # u^2 + u + 1
    (2, 3): (1, 1, 0, 1),     # u^3 + u + 1
    (3, 2): (1, 0, 1),        # u^2 + 1
    (2, 4): (1, 1, 0, 0, 1),  # u^4 + u + 1
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


# ---------------------------------------------------------------------------
# A = F_q[T]

def a_trim(a: Sequence[int], q: int) -> tuple[int, ...]:
    a = [c % q for c in a]
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def a_degree(a: Sequence[int]) -> int:
    return len(a) - 1


def a_add(a, b, q):
    n = max(len(a), len(b))
    return a_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], q)


def a_mul(a, b, q):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return a_trim(out, q)


def a_divmod(a, b, q):
    """Division with remainder in F_q[T]; ``b`` must be nonzero."""
    b = a_trim(b, q)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = list(a_trim(a, q))
    inv = pow(b[-1], q - 2, q)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv % q
        quo[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] = (a[k + i] - c * y) % q
    return a_trim(quo, q), a_trim(a, q)


def a_enumerate(q: int, max_degree: int, monic: bool = False) -> Iterator[tuple[int, ...]]:
    """All polynomials of degree <= max_degree in degree-lexicographic order."""
    if not monic:
        yield ()
    for d in range(0, max_degree + 1):
        lead = [1] if monic else range(1, q)
        for lc in lead:
            for low in itertools.product(range(q), repeat=d):
                yield tuple(low) + (lc,)


def a_is_irreducible(a: Sequence[int], q: int) -> bool:
    """Exhaustive trial division by monic polynomials of degree <= deg/2."""
    a = a_trim(a, q)
    d = a_degree(a)
    if d < 1:
        return False
    for f in a_enumerate(q, d // 2, monic=True):
        if a_degree(f) >= 1 and not a_divmod(a, f, q)[1]:
            return False
    return True


def a_is_monic_prime(a: Sequence[int], q: int) -> bool:
    a = a_trim(a, q)
    return bool(a) and a[-1] == 1 and a_is_irreducible(a, q)


def a_to_str(a: Sequence[int], var: str = "T") -> str:
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# F_{p^n}

class FieldCtx:
    """The field F_p[u]/(modulus) with a monic irreducible modulus of degree n."""

    def __init__(self, p: int, n: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if n < 1:
            raise ValueError("extension degree must be positive")
        if modulus is None:
            modulus = (0, 1) if n == 1 else default_modulus(p, n)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if not a_is_irreducible(modulus, p):
            raise ValueError(f"modulus {a_to_str(modulus, 'u')} is reducible over F_{p}")
        self.p = p
        self.n = n
        self.modulus = modulus
        self.order = p**n

    @classmethod
    def pinned(cls, p: int, n: int) -> "FieldCtx":
        return _field(p, n)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        if self.n == 1:
            return f"FieldCtx(F_{self.p})"
        return f"FieldCtx(F_{self.order} = F_{self.p}[u]/({a_to_str(self.modulus, 'u')}))"

    def __call__(self, x) -> "FFElem":
        if isinstance(x, FFElem):
            if x.ctx != self:
                raise ValueError("element belongs to another field")
            return x
        if isinstance(x, int):
            return FFElem(self, (x % self.p,) + (0,) * (self.n - 1))
        return FFElem(self, tuple(x))

    @property
    def zero(self) -> "FFElem":
        return self(0)

    @property
    def one(self) -> "FFElem":
        return self(1)

    @property
    def gen(self) -> "FFElem":
        if self.n == 1:
            raise ValueError("prime field has no generator u")
        return FFElem(self, (0, 1) + (0,) * (self.n - 2))

    def elements(self) -> Iterator["FFElem"]:
        """All elements, ordered by the integer encoding sum c_i p^i."""
        for k in range(self.order):
            yield self.from_int(k)

    def from_int(self, k: int) -> "FFElem":
        res = []
        for _ in range(self.n):
            k, c = divmod(k, self.p)
            res.append(c)
        return FFElem(self, tuple(res))

    def unit_group_generator(self) -> "FFElem":
        return _primitive_element(self)


@lru_cache(maxsize=None)
def _field(p: int, n: int) -> FieldCtx:
    return FieldCtx(p, n, PINNED_MODULI.get((p, n)))


@lru_cache(maxsize=None)
def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """Pinned modulus if there is one, else the first monic irreducible in degree-lex order."""
    if (p, n) in PINNED_MODULI:
        return PINNED_MODULI[(p, n)]
    for low in itertools.product(range(p), repeat=n):
        cand = tuple(low) + (1,)
        if a_is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")


@lru_cache(maxsize=None)
def _primitive_element(ctx: FieldCtx) -> "FFElem":
    m = ctx.order - 1
    primes = [d for d in range(2, m + 1) if m % d == 0 and is_prime(d)]
    for x in ctx.elements():
        if x.is_zero():
            continue
        if all(x ** (m // d) != ctx.one for d in primes):
            return x
    raise AssertionError("unreachable")


class FFElem:
    __slots__ = ("ctx", "res")

    def __init__(self, ctx: FieldCtx, res: tuple[int, ...]):
        if len(res) != ctx.n:
            res = _reduce(list(res), ctx)
        self.ctx = ctx
        self.res = tuple(c % ctx.p for c in res)

    def is_zero(self) -> bool:
        return not any(self.res)

    def is_one(self) -> bool:
        return self.res[0] == 1 and not any(self.res[1:])

    def _coerce(self, other) -> "FFElem":
        if isinstance(other, FFElem):
            if other.ctx != self.ctx:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, int):
            return self.ctx(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FFElem(self.ctx, tuple((a + b) % p for a, b in zip(self.res, other.res)))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FFElem(self.ctx, tuple(-a % p for a in self.res))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ctx = self.ctx
        if ctx.n == 1:
            return FFElem(ctx, ((self.res[0] * other.res[0]) % ctx.p,))
        prod = [0] * (2 * ctx.n - 1)
        for i, a in enumerate(self.res):
            if a:
                for j, b in enumerate(other.res):
                    prod[i + j] += a * b
        return FFElem(ctx, _reduce(prod, ctx))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.ctx.one, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "FFElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self ** (self.ctx.order - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx(other)
        return isinstance(other, FFElem) and self.ctx == other.ctx and self.res == other.res

    def __hash__(self):
        return hash((self.ctx, self.res))

    def to_int(self) -> int:
        return sum(c * self.ctx.p**i for i, c in enumerate(self.res))

    def __lt__(self, other: "FFElem") -> bool:
        return self.to_int() < other.to_int()

    def __str__(self):
        if self.ctx.n == 1:
            return str(self.res[0])
        return a_to_str(self.res, "u").replace(" + ", "+") if any(self.res) else "0"

    def __repr__(self):
        return f"FFElem({self})"


def _reduce(coeffs: list[int], ctx: FieldCtx) -> tuple[int, ...]:
    p, n, m = ctx.p, ctx.n, ctx.modulus
    coeffs = [c % p for c in coeffs]
    for k in range(len(coeffs) - 1, n - 1, -1):
        c = coeffs[k]
        if c:
            for i in range(n + 1):
                coeffs[k - n + i] = (coeffs[k - n + i] - c * m[i]) % p
    coeffs = coeffs[:n] + [0] * (n - len(coeffs))
    return tuple(coeffs)


def ff_frobenius(x: FFElem, e: int, q: int | None = None) -> FFElem:
    """x^(q^e); q defaults to the characteristic."""
    q = x.ctx.p if q is None else q
    for _ in range(e):
        x = x**q
    return x


def residue_field(P: Sequence[int], q: int) -> FieldCtx:
    """F_P = A/PA as a FieldCtx; P must be a monic prime of F_q[T]."""
    P = a_trim(P, q)
    if not a_is_monic_prime(P, q):
        raise ValueError(f"{a_to_str(P)} is not a monic prime of F_{q}[T]")
    return FieldCtx(q, a_degree(P), P) if a_degree(P) > 1 else FieldCtx(q, 1)


def fp_to_apoly(x: FFElem) -> tuple[int, ...]:
    """View an element of F_P = F_q[T]/(P) as its reduced representative in A."""
    return a_trim(x.res, x.ctx.p)
