"""Drinfeld F_q[T]-modules, the action of A, P-torsion towers and height."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from . import upoly
from .fields import a_degree, a_is_monic_prime, a_to_str, a_trim
from .polynomials import PolyRing, mpoly_mod_prime, poly_ring
from .tower import SplitDetected, Tower, adjoin_root, replay
from .triangular import RingElem, TriangularRing
from .twisted import TwistedPoly, to_additive, tw_mul


class DrinfeldModule:
    """phi_T = t0 + a_1 tau + ... + a_{r-1} tau^{r-1} + tau^r over a ring containing T's image."""

    def __init__(self, ring: TriangularRing, phi_T: Sequence):
        phi = TwistedPoly(ring, phi_T)
        if phi.degree < 1:
            raise ValueError("phi_T must have positive tau-degree")
        if not phi.is_monic():
            raise ValueError("phi_T must be monic")
        if "T" in ring.names and phi[0] != ring.gen("T"):
            raise ValueError("constant term of phi_T must be the image of T")
        self.ring = ring
        self.phi_T = phi
        self.rank = phi.degree
        self._cache: dict[tuple[int, ...], TwistedPoly] = {}

    @classmethod
    def generic(cls, q: int, r: int) -> "DrinfeldModule":
        return _generic(q, r)

    @classmethod
    def from_coefficients(cls, ring: TriangularRing, coeffs: Sequence) -> "DrinfeldModule":
        """Module with phi_T = T + coeffs[0] tau + ... + coeffs[-1] tau^{r-1} + tau^r."""
        return cls(ring, [ring.gen("T"), *coeffs, ring.one])

    @property
    def coefficients(self) -> tuple[RingElem, ...]:
        """(a_1, ..., a_{r-1})."""
        return self.phi_T.coeffs[1:-1]

    @property
    def q(self) -> int:
        return self.ring.q

    def phi_a(self, a: Sequence[int]) -> TwistedPoly:
        """phi_a by Horner evaluation of a(T) at phi_T."""
        a = a_trim(a, self.q)
        if a not in self._cache:
            res = TwistedPoly(self.ring, [])
            for c in reversed(a):
                res = tw_mul(res, self.phi_T) + TwistedPoly(self.ring, [self.ring(c)])
            self._cache[a] = res
        return self._cache[a]

    def over(self, ring: TriangularRing) -> "DrinfeldModule":
        """The same module with coefficients viewed in a larger ring."""
        if ring is self.ring:
            return self
        return DrinfeldModule(ring, [ring(c) for c in self.phi_T.coeffs])

    def reduce(self, P: Sequence[int]) -> "DrinfeldModule":
        """Coefficientwise image modulo P."""
        ring = self.ring
        if not isinstance(ring, PolyRing) or ring.P is not None:
            raise ValueError("only modules over B can be reduced")
        coeffs = [mpoly_mod_prime(c, P) for c in self.phi_T.coeffs]
        return DrinfeldModule(coeffs[0].ring, coeffs)

    def __eq__(self, other):
        return isinstance(other, DrinfeldModule) and self.phi_T == other.phi_T

    def __hash__(self):
        return hash(self.phi_T)

    def __repr__(self):
        return f"DrinfeldModule(phi_T = {self.phi_T})"


@lru_cache(maxsize=None)
def _generic(q: int, r: int) -> DrinfeldModule:
    B = poly_ring(q, r)
    return DrinfeldModule(B, [B.T, *(B.g(i) for i in range(1, r)), B.one])


def residues(P: Sequence[int], q: int) -> list[tuple[int, ...]]:
    """Representatives of A/PA (all polynomials of degree < deg P), in counting order."""
    d = a_degree(P)
    return [a_trim(c, q) for c in itertools.product(range(q), repeat=d)]


def height(phibar: DrinfeldModule, P: Sequence[int]) -> int:
    """Largest h with phibar_P = (something) * tau^(h deg P)."""
    coeffs = phibar.phi_a(P).coeffs
    low = next(i for i, c in enumerate(coeffs) if not c.is_zero())
    d = a_degree(a_trim(P, phibar.q))
    if low % d:
        raise AssertionError("tau-valuation of phi_P is not a multiple of deg P")
    return low // d


def ordinary_part(phibar: DrinfeldModule, P: Sequence[int]) -> TwistedPoly:
    """phi~_P with phibar_P = phi~_P tau^(h deg P); its constant term is nonzero."""
    coeffs = phibar.phi_a(P).coeffs
    low = next(i for i, c in enumerate(coeffs) if not c.is_zero())
    return TwistedPoly(phibar.ring, coeffs[low:])


# ---------------------------------------------------------------------------
# torsion


def span_points(module: DrinfeldModule, gens: Sequence[RingElem], P, ring: TriangularRing) -> list[RingElem]:
    """All sum phi_{a_i}(gens_i) for a_i in A/PA, ordered by the coefficient tuple."""
    reps = residues(P, module.q)
    mod = module.over(ring)
    multiples = [[mod.phi_a(a)(ring(g)) for a in reps] for g in gens]
    pts = [ring.zero]
    for mult in multiples:
        pts = [p + m for p in pts for m in mult]
    return pts


@dataclass
class ReducedTorsion:
    """Torsion of a height-h module in characteristic P: r - h generators."""

    module: DrinfeldModule
    P: tuple[int, ...]
    tower: TriangularRing
    gens: list[RingElem]
    height: int

    def points(self) -> list[RingElem]:
        return span_points(self.module, self.gens, self.P, self.tower)


def reduced_torsion(phibar: DrinfeldModule, P: Sequence[int], names: Sequence[str] | None = None,
                    overrides: dict | None = None) -> ReducedTorsion:
    """Generators of phibar[P] built from phibar_P(X), dividing out each known root with multiplicity |P|^h."""
    P = a_trim(P, phibar.q)
    h = height(phibar, P)
    r = phibar.rank
    norm = phibar.q ** a_degree(P)
    mult = norm**h
    names = list(names or [f"y{i}" for i in range(1, r - h + 1)])
    f = to_additive(phibar.phi_a(P))
    t: TriangularRing = phibar.ring
    gens: list[RingElem] = []
    overrides = overrides or {}
    for k in range(r - h):
        span = span_points(phibar, gens, P, t)
        t, w = adjoin_root(t, f, [x for x in span for _ in range(mult)], names[k], overrides.get(names[k]))
        gens = [t(g) for g in gens] + [w]
    gens = [t(g) for g in gens]
    return ReducedTorsion(phibar.over(t), P, t, gens, h)


@dataclass
class TorsionBasis:
    """Generators w_1..w_r of phi[P] with a reduction map onto the reduced torsion.

    w_r reduces to 0; w_i reduces to the i-th generator of the reduced torsion.
    """

    module: DrinfeldModule
    P: tuple[int, ...]
    tower: Tower
    gens: list[RingElem]
    reduced: ReducedTorsion
    reduced_gens: list[RingElem] = field(default_factory=list)

    @property
    def q(self) -> int:
        return self.module.q

    @property
    def rank(self) -> int:
        return self.module.rank

    def reduce(self, x: RingElem) -> RingElem:
        """Image of a tower element under the chosen prime above P."""
        images = {self.tower.gen_names[0]: self.reduced.tower.zero}
        for name, y in zip(self.tower.gen_names[1:], self.reduced.gens):
            images[name] = y
        return self.reduced.tower.compose(self.tower(x), images)

    def reduce_twisted(self, f: TwistedPoly) -> TwistedPoly:
        return f.map(self.reduce)

    def points(self) -> list[RingElem]:
        return span_points(self.module, self.gens, self.P, self.tower)

    def describe(self) -> str:
        lines = [f"P: {a_to_str(self.P)}", "tower:"]
        lines += ["  " + line for line in self.tower.describe().splitlines()]
        lines.append("generators:")
        for i, (w, y) in enumerate(zip(self.gens, self.reduced_gens), start=1):
            lines.append(f"  w{i} = {w}    reduces to {y}")
        lines.append("reduced tower:")
        lines += ["  " + line for line in getattr(self.reduced.tower, "describe", lambda: "(base ring)")().splitlines()]
        return "\n".join(lines)


def torsion_basis(phi: DrinfeldModule, P: Sequence[int]) -> TorsionBasis:
    """Split phi_P(X) over an explicit tower and fix the reduction of each generator.

    The first generator adjoined is sent to 0 modulo P; it becomes w_r.  Each
    later generator w_i is sent to the i-th generator of the reduced torsion,
    whose level polynomial is the image of the generic one.
    """
    q = phi.q
    P = a_trim(P, q)
    if not a_is_monic_prime(P, q):
        raise ValueError(f"{a_to_str(P)} is not a monic prime of F_{q}[T]")
    if not isinstance(phi.ring, PolyRing) or phi.ring.P is not None:
        raise ValueError("torsion_basis needs a module over B")
    return _torsion_cached(phi, P)


@lru_cache(maxsize=32)
def _torsion_cached(phi: DrinfeldModule, P: tuple[int, ...]) -> TorsionBasis:
    r = phi.rank
    names = [f"w{r}"] + [f"w{i}" for i in range(1, r)]

    def build(overrides):
        f = to_additive(phi.phi_a(P))
        t: TriangularRing = phi.ring
        gens: list[RingElem] = []
        for k in range(r):
            span = span_points(phi, gens, P, t)
            try:
                t, w = adjoin_root(t, f, span, names[k], overrides.get(names[k]))
            except SplitDetected as err:
                err.tower = t
                raise
            gens = [t(g) for g in gens] + [w]
        return t, [t(g) for g in gens]

    tower, gens = replay(build)
    if not isinstance(tower, Tower) or len(tower.gen_names) != r:
        raise AssertionError("expected one tower level per generator")
    phibar = phi.reduce(P)
    red = reduced_torsion(phibar, P)
    if red.height != 1:
        raise AssertionError("reduction of the module is not ordinary")
    basis = TorsionBasis(phi.over(tower), P, tower, gens[1:] + gens[:1], red)
    basis.reduced_gens = list(red.gens) + [red.tower.zero]
    _check_reduction(basis)
    return basis


def _check_reduction(basis: TorsionBasis):
    """Each level polynomial must vanish at the chosen images, so the reduction map is well defined."""
    t = basis.tower
    for name in t.gen_names:
        m = t.minimal_polynomial(name)
        image = basis.reduce(t.gen(name))
        value = upoly.evaluate([basis.reduce(c) for c in m], image)
        if not value.is_zero():
            raise AssertionError(f"reduction is inconsistent at level {name}")


def torsion_points(basis: TorsionBasis) -> Iterator[RingElem]:
    yield from basis.points()
