"""Dense univariate polynomials in X over a TriangularRing.

A polynomial is a list of ring elements, lowest degree first, trimmed so the
last entry is nonzero (the zero polynomial is ``[zero]``).
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .triangular import RingElem


class InexactDivision(ArithmeticError):
    pass


def trim(p: Sequence[RingElem]) -> list[RingElem]:
    p = list(p)
    while len(p) > 1 and p[-1].is_zero():
        p.pop()
    return p


def degree(p: Sequence[RingElem]) -> int:
    p = trim(p)
    return -1 if len(p) == 1 and p[0].is_zero() else len(p) - 1


def is_zero(p: Sequence[RingElem]) -> bool:
    return degree(p) < 0


def add(p, q):
    n = max(len(p), len(q))
    zero = (p or q)[0].ring.zero
    return trim([(p[i] if i < len(p) else zero) + (q[i] if i < len(q) else zero) for i in range(n)])


def sub(p, q):
    return add(p, [-c for c in q])


def scale(p, c):
    return trim([x * c for x in p])


def mul(p, q):
    zero = p[0].ring.zero
    out = [zero] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x.is_zero():
            continue
        for j, y in enumerate(q):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return trim(out)


def power(p, e: int):
    result = [p[0].ring.one]
    base = p
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def divmod_monic(p, q):
    """Euclidean division by a monic q; no inversion needed."""
    q = trim(q)
    if not q[-1].is_one():
        raise ValueError("divisor must be monic")
    p = list(trim(p))
    dq = len(q) - 1
    zero = p[0].ring.zero
    if len(p) <= dq:
        return [zero], p
    quo = [zero] * (len(p) - dq)
    for k in range(len(p) - 1 - dq, -1, -1):
        c = p[k + dq]
        quo[k] = c
        if c.is_zero():
            continue
        for i in range(dq):
            if not q[i].is_zero():
                p[k + i] = p[k + i] - c * q[i]
    rem = trim(p[:dq]) if dq else [zero]
    return trim(quo), rem


def div_exact(p, q):
    quo, rem = divmod_monic(p, q)
    if not is_zero(rem):
        raise InexactDivision("polynomial division leaves a nonzero remainder")
    return quo


def from_roots(roots: Iterable[RingElem], one: RingElem):
    """prod (X - rho), multiplied in a balanced tree for speed."""
    factors = [[-r, one] for r in roots]
    if not factors:
        return [one]
    while len(factors) > 1:
        nxt = [mul(factors[i], factors[i + 1]) for i in range(0, len(factors) - 1, 2)]
        if len(factors) % 2:
            nxt.append(factors[-1])
        factors = nxt
    return factors[0]


def product(polys: Sequence[Sequence[RingElem]], one: RingElem):
    polys = [list(p) for p in polys]
    if not polys:
        return [one]
    while len(polys) > 1:
        nxt = [mul(polys[i], polys[i + 1]) for i in range(0, len(polys) - 1, 2)]
        if len(polys) % 2:
            nxt.append(polys[-1])
        polys = nxt
    return polys[0]


def evaluate(p, x):
    out = x.ring.zero
    for c in reversed(p):
        out = out * x + c
    return out


def inflate(p, k: int):
    """p(X^k)."""
    zero = p[0].ring.zero
    out = [zero] * ((len(p) - 1) * k + 1)
    for i, c in enumerate(p):
        out[i * k] = c
    return out


def deflate(p, k: int):
    """Inverse of inflate; every exponent must be a multiple of k."""
    for i, c in enumerate(p):
        if i % k and not c.is_zero():
            raise InexactDivision(f"exponent {i} is not a multiple of {k}")
    return trim(p[::k])


def map_coeffs(p, fn: Callable[[RingElem], RingElem]):
    return trim([fn(c) for c in p])


def derivative(p):
    zero = p[0].ring.zero
    return trim([c * i for i, c in enumerate(p)][1:] or [zero])


def equal(p, q) -> bool:
    p, q = trim(p), trim(q)
    return len(p) == len(q) and all(a == b for a, b in zip(p, q))


def frobenius_power(p, e: int):
    """p^(q^e) in characteristic q: raise coefficients and exponents by q^e."""
    q = p[0].ring.q
    k = q**e
    zero = p[0].ring.zero
    out = [zero] * ((len(p) - 1) * k + 1)
    for i, c in enumerate(p):
        if not c.is_zero():
            out[i * k] = c.frobenius(e)
    return trim(out)
