"""The coefficient ring B = F_{q^r}[T, g_1, ..., g_{r-1}], its reduction mod P, and its fraction field.

F_{q^r} is realised as F_q[u]/(pinned modulus), so a ring here is a flat
flint polynomial ring in u, T, g_i modulo the u-relation (and, for the
reduced ring B/PB, modulo P(T)).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .fields import FFElem, FieldCtx, a_is_monic_prime, a_trim, is_prime
from .triangular import RingElem, TriangularRing, remap


class PolyRing(TriangularRing):
    """B = F_{q^r}[T, g_1..g_{r-1}] (``P`` None) or B tensor A/PA (``P`` a monic prime).

    ``extra`` appends further free variables (used for an X variable when
    parsing polynomials over B).
    """

    def __init__(self, q: int, r: int, P: Sequence[int] | None = None, extra: Sequence[str] = ()):
        if not is_prime(q):
            raise ValueError(f"q = {q} must be prime")
        if r < 1:
            raise ValueError("rank must be positive")
        field = FieldCtx.pinned(q, r) if r > 1 else FieldCtx(q, 1)
        self.r = r
        self.P = None if P is None else a_trim(P, q)
        if self.P is not None and not a_is_monic_prime(self.P, q):
            raise ValueError("P must be a monic irreducible polynomial")
        g_names = [f"g{i}" for i in range(1, r)]
        levels, builders = ["u"], [_u_relation]
        free = list(g_names) + list(extra)
        if self.P is None:
            free.insert(0, "T")
        else:
            levels.append("T")
            builders.append(_p_relation)
        self.g_names = tuple(g_names)
        self.extra = tuple(extra)
        super().__init__(q, field, levels, builders, free, ["T", *g_names, *extra])

    @property
    def is_reduced(self) -> bool:
        return self.P is not None

    def _make(self, num, den=None):
        return MPoly(self, num) if den is None else RatFunc(self, num, den)

    def from_apoly(self, a: Sequence[int]) -> "MPoly":
        """Image of a in A = F_q[T]."""
        T = self.raw_gen("T")
        out = self._zero
        for c in reversed(list(a)):
            out = out * T + (c % self.q)
        return self._make(self.reduce(out))

    def g(self, i: int) -> "MPoly":
        return self.gen(f"g{i}")

    @property
    def T(self) -> "MPoly":
        return self.gen("T")

    def __repr__(self):
        kind = f"B/({self.P})" if self.P else "B"
        return f"PolyRing({kind}, q={self.q}, r={self.r})"


def _u_relation(ring: TriangularRing):
    u = ring.raw_gen("u")
    out = ring._zero
    for i, c in enumerate(ring.field.modulus):
        if c:
            out += c * u**i
    return out


def _p_relation(ring: PolyRing):
    T = ring.raw_gen("T")
    out = ring._zero
    for i, c in enumerate(ring.P):
        if c:
            out += c * T**i
    return out


@lru_cache(maxsize=None)
def poly_ring(q: int, r: int, P: tuple[int, ...] | None = None, extra: tuple[str, ...] = ()) -> PolyRing:
    """Shared ring instance; elements of equal rings are only compatible through this cache."""
    return PolyRing(q, r, P, extra)


class MPoly(RingElem):
    """Polynomial element of B (or of B/PB)."""

    __slots__ = ()

    def g_exponent_terms(self):
        """Yield (T exponent, g-exponent tuple, F_{q^r} coefficient) for every term."""
        R = self.ring
        names = [n for n in R.names if n != "u"]
        ti = names.index("T")
        gi = [names.index(n) for n in R.g_names]
        for exps, c in self.ff_terms().items():
            yield exps[ti], tuple(exps[i] for i in gi), c

    def degree_in(self, name: str) -> int:
        return self.num.degrees()[self.ring.names.index(name)]


class RatFunc(RingElem):
    """Element of K = Frac(B): numerator in B, denominator monic in F_q[T, g]."""

    __slots__ = ()

    @property
    def numerator(self) -> MPoly:
        return MPoly(self.ring, self.num)

    @property
    def denominator(self) -> MPoly:
        return MPoly(self.ring, self.den)


def ratfunc(num: RingElem, den: RingElem) -> RingElem:
    """num/den in canonical form."""
    return num / den


# ---------------------------------------------------------------------------
# lambda-action and invariance

def _weight(ring: PolyRing, gexps: Sequence[int]) -> int:
    q = ring.q
    return sum(e * (q**i - 1) for i, e in enumerate(gexps, start=1))


def lambda_act(lam: FFElem, f: RingElem) -> RingElem:
    """lambda * f: scales g_i by lam^(q^i - 1) and fixes T."""
    if lam.is_zero():
        raise ValueError("lambda must be nonzero")
    R = f.ring
    if lam.ctx != R.field:
        if lam.ctx.n != 1:
            raise ValueError("lambda must lie in F_{q^r}")
        lam = R.field(lam.res[0])
    if f.den is None:
        return _act_raw(R, lam, f.num)
    return _act_raw(R, lam, f.num) / _act_raw(R, lam, f.den)


def _act_raw(R: PolyRing, lam: FFElem, poly) -> RingElem:
    names = [n for n in R.names if n != "u"]
    gi = [names.index(n) for n in R.g_names]
    order = R.field.order - 1
    scaled = {}
    for exps, c in RingElem(R, poly).ff_terms().items():
        w = _weight(R, [exps[i] for i in gi]) % order
        scaled[exps] = c * lam**w if w else c
    return from_ff_terms(R, scaled)


def from_ff_terms(R: TriangularRing, terms: dict) -> RingElem:
    """Inverse of ``ff_terms``."""
    ui = R._u_idx
    out = {}
    for exps, c in terms.items():
        for k, a in enumerate(c.res):
            if a:
                e = list(exps)
                if ui is not None:
                    e.insert(ui, k)
                key = tuple(e)
                out[key] = (out.get(key, 0) + a) % R.q
    return R._make(R.reduce(R.ctx.from_dict({k: v for k, v in out.items() if v})))


def is_invariant(f: RingElem, method: str = "congruence") -> bool:
    """Membership in the ring of invariants C.

    ``congruence`` checks every monomial weight mod q^r - 1; ``sweep`` compares
    f with lambda * f for every lambda in F_{q^r}^*.
    """
    R = f.ring
    if method == "sweep" or f.den is not None:
        return all(lambda_act(lam, f) == f for lam in R.field.elements() if not lam.is_zero())
    if method != "congruence":
        raise ValueError(f"unknown method {method!r}")
    order = R.field.order - 1
    return all(_weight(R, gexps) % order == 0 for _, gexps, _ in MPoly(R, f.num).g_exponent_terms())


def mpoly_mod_prime(f: RingElem, P: Sequence[int]) -> MPoly:
    """Image of f in B/PB (T-degree below deg P)."""
    R = f.ring
    P = a_trim(P, R.q)
    if not a_is_monic_prime(P, R.q):
        raise ValueError("P must be a monic prime of F_q[T]")
    if f.den is not None:
        raise ValueError("only polynomials can be reduced mod P")
    target = poly_ring(R.q, R.r, P, R.extra)
    if R.P is not None and R.P != P:
        raise ValueError("element already lives modulo a different prime")
    return target._make(target.reduce(remap(f.num, R.names, target.ctx, target.names)))
