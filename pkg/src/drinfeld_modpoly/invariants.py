"""Invariants of the lambda-action: monoid generators, evaluation, isomorphism tests, separating invariants."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .drinfeld import DrinfeldModule
from .fields import FFElem, a_enumerate, a_to_str
from .polynomials import MPoly, PolyRing, poly_ring
from .triangular import RingElem, TriangularRing


@dataclass(frozen=True)
class MonoidBasis:
    """Minimal exponent vectors e with sum e_i (q^i - 1) = 0 mod q^r - 1."""

    q: int
    r: int
    vectors: tuple[tuple[int, ...], ...]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(generator_name(e, self.r) for e in self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def monomial(self, e: Sequence[int], ring: PolyRing | None = None) -> MPoly:
        ring = ring or poly_ring(self.q, self.r)
        out = ring.one
        for i, k in enumerate(e, start=1):
            if k:
                out = out * ring.g(i) ** k
        return out

    def generators(self, ring: PolyRing | None = None) -> list[MPoly]:
        return [self.monomial(e, ring) for e in self.vectors]

    def by_name(self) -> dict[str, tuple[int, ...]]:
        return dict(zip(self.names, self.vectors))


def generator_name(e: Sequence[int], r: int) -> str:
    if r == 2:
        return "j"
    if all(k < 10 for k in e):
        return "J" + "".join(str(k) for k in e)
    return "J_" + "_".join(str(k) for k in e)


def _weight(e: Sequence[int], q: int) -> int:
    return sum(k * (q**i - 1) for i, k in enumerate(e, start=1))


@lru_cache(maxsize=None)
def invariant_monoid_basis(q: int, r: int) -> MonoidBasis:
    """Hilbert basis of the congruence monoid, searched in the box [0, q^r - 1]^(r-1)."""
    if r < 2:
        raise ValueError("need r >= 2")
    n = q**r - 1
    members = [
        e
        for e in itertools.product(range(n + 1), repeat=r - 1)
        if any(e) and _weight(e, q) % n == 0
    ]
    # breadth-first by total degree; keep e unless a smaller member sits below it
    members.sort(key=lambda e: (sum(e), e))
    minimal: list[tuple[int, ...]] = []
    for e in members:
        if not any(all(a <= b for a, b in zip(m, e)) for m in minimal):
            minimal.append(e)
    return MonoidBasis(q, r, tuple(sorted(minimal)))


def is_decomposable(e: Sequence[int], basis: MonoidBasis) -> bool:
    """True if e is a sum of two nonzero members of the monoid."""
    q, n = basis.q, basis.q**basis.r - 1
    for sub in itertools.product(*(range(k + 1) for k in e)):
        rest = tuple(a - b for a, b in zip(e, sub))
        if any(sub) and any(rest) and _weight(sub, q) % n == 0:
            return True
    return False


# ---------------------------------------------------------------------------
# invariant elements and evaluation


@dataclass
class InvariantElem:
    """An invariant J in g_1..g_{r-1} with A-coefficients, optionally remembered as an A-combination of generators."""

    poly: MPoly
    combination: tuple[tuple[tuple[int, ...], str], ...] = ()
    label: str = ""

    def __str__(self):
        if self.combination:
            parts = []
            for a, name in self.combination:
                text = a_to_str(a)
                parts.append(name if text == "1" else (f"({text})*{name}" if "+" in text else f"{text}*{name}"))
            return " + ".join(parts)
        return self.label or str(self.poly)


def _as_poly(J) -> MPoly:
    return J.poly if isinstance(J, InvariantElem) else J


def module_coefficients(psi) -> tuple:
    if isinstance(psi, DrinfeldModule):
        return psi.coefficients
    return tuple(psi)


def eval_invariant(J, psi) -> RingElem:
    """Substitute (g_1, ..., g_{r-1}) = coefficients of psi into J."""
    poly = _as_poly(J)
    coeffs = module_coefficients(psi)
    if len(coeffs) != poly.ring.r - 1:
        raise ValueError(f"rank mismatch: expected {poly.ring.r - 1} coefficients, got {len(coeffs)}")
    if not coeffs:
        raise ValueError("rank 1 modules have no invariants")
    target = _common_ring(coeffs)
    images = {f"g{i}": c for i, c in enumerate(coeffs, start=1)}
    if all(isinstance(c, RingElem) and c.ring is target and c.den is None for c in coeffs):
        return target.compose(poly, images)
    return _evaluate_terms(poly, images, target)


def _common_ring(coeffs) -> TriangularRing:
    for c in coeffs:
        if isinstance(c, RingElem):
            best = c
            for d in coeffs:
                if isinstance(d, RingElem) and d.ring is not best.ring:
                    best = best + d  # lifts into the larger ring
            return best.ring
    raise ValueError("coefficients must be ring elements")


def _evaluate_terms(poly: MPoly, images: dict, target: TriangularRing) -> RingElem:
    names = [n for n in poly.ring.names if n != "u"]
    out = target.zero
    powers: dict = {}
    for exps, c in poly.ff_terms().items():
        term = target(c)
        for name, k in zip(names, exps):
            if not k:
                continue
            key = (name, k)
            if key not in powers:
                base = target(images[name]) if name in images else target.gen(name)
                powers[key] = base**k
            term = term * powers[key]
        out = out + term
    return out


# ---------------------------------------------------------------------------
# isomorphism


def _scalar(ring: TriangularRing, lam: FFElem) -> RingElem:
    return ring(lam)


def is_isomorphic(psi1, psi2, method: str = "lambda") -> bool:
    """Is there lambda with lambda^(q^i - 1) a_i = b_i for i = 1..r?

    Both modules are monic, so the condition at i = r reads
    lambda^(q^r - 1) = 1.  Three independent procedures decide this:

    ``lambda``      solve for a power of lambda with a Bezout combination
    ``sweep``       try every lambda in F_{q^r}^*
    ``invariants``  compare the values of every monoid generator
    """
    a = module_coefficients(psi1)
    b = module_coefficients(psi2)
    if len(a) != len(b):
        raise ValueError("rank mismatch")
    ring = _common_ring(a + b)
    a = [ring(x) for x in a]
    b = [ring(x) for x in b]
    q, r = ring.q, len(a) + 1
    if method == "invariants":
        basis = invariant_monoid_basis(q, r)
        B = poly_ring(q, r)
        return all(eval_invariant(J, a) == eval_invariant(J, b) for J in basis.generators(B))
    if method not in ("lambda", "sweep"):
        raise ValueError(f"unknown method {method!r}")
    if any(x.is_zero() != y.is_zero() for x, y in zip(a, b)):
        return False
    ratios = {i: b[i - 1] / a[i - 1] for i, x in enumerate(a, start=1) if not x.is_zero()}
    ratios[r] = ring.one
    if method == "sweep":
        for lam in ring.field.elements():
            if lam.is_zero():
                continue
            L = _scalar(ring, lam)
            if all(L ** (q**i - 1) == c for i, c in ratios.items()):
                return True
        return False
    # lambda^d = mu with d = gcd(q^i - 1); consistent iff mu^(e_i/d) = c_i for every i
    exps = {i: q**i - 1 for i in ratios}
    d, bez = _bezout(list(exps.values()))
    mu = ring.one
    for i, k in zip(exps, bez):
        mu = mu * ratios[i] ** k
    return all(mu ** (exps[i] // d) == ratios[i] for i in ratios)


def _bezout(values: Sequence[int]) -> tuple[int, list[int]]:
    """gcd and integer coefficients k with sum k_i v_i = gcd."""
    g, coeffs = values[0], [1]
    for v in values[1:]:
        x, y, g2 = _xgcd(g, v)
        coeffs = [c * x for c in coeffs] + [y]
        g = g2
    return g, coeffs


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        qt, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - qt * x1
        y0, y1 = y1, y0 - qt * y1
    return x0, y0, a


def lambda_twist(psi, lam: FFElem) -> tuple:
    """Coefficients of lambda^{-1} psi lambda: a_i -> lambda^(q^i - 1) a_i."""
    coeffs = module_coefficients(psi)
    ring = _common_ring(coeffs)
    L = ring(lam)
    q = ring.q
    return tuple(L ** (q**i - 1) * ring(c) for i, c in enumerate(coeffs, start=1))


# ---------------------------------------------------------------------------
# separating invariants


class IsomorphicPair(ValueError):
    def __init__(self, i: int, j: int):
        super().__init__(f"modules {i} and {j} are isomorphic; no invariant separates them")
        self.pair = (i, j)


def distinguishing_invariant(modules: Sequence, generators: Sequence | None = None, names: Sequence[str] | None = None) -> InvariantElem:
    """An A-linear combination of the generators taking pairwise distinct values on ``modules``.

    Follows the induction: separate all but the first module, then repair the
    single possible collision by adding a * J_2 for the least suitable a in A.
    """
    mods = [module_coefficients(m) for m in modules]
    if not mods:
        raise ValueError("need at least one module")
    r = len(mods[0]) + 1
    ring0 = _common_ring([c for m in mods for c in m])
    q = ring0.q
    if generators is None:
        basis = invariant_monoid_basis(q, r)
        generators = basis.generators(poly_ring(q, r))
        names = list(basis.names)
    generators = [_as_poly(G) for G in generators]
    names = list(names or [f"G{k + 1}" for k in range(len(generators))])
    values = [[eval_invariant(G, m) for m in mods] for G in generators]
    target = values[0][0].ring
    cap = len(mods) ** 2

    def value(comb: dict[int, tuple[int, ...]], idx: int) -> RingElem:
        out = target.zero
        for g, a in comb.items():
            out = out + _apoly(target, a) * values[g][idx]
        return out

    def separates(comb, idxs) -> bool:
        vals = [value(comb, i) for i in idxs]
        return all(vals[x] != vals[y] for x, y in itertools.combinations(range(len(vals)), 2))

    def solve(idxs: list[int]) -> dict[int, tuple[int, ...]]:
        if len(idxs) <= 1:
            return {0: (1,)}
        J1 = solve(idxs[1:])
        if separates(J1, idxs):
            return J1
        first = idxs[0]
        v1 = value(J1, first)
        other = next(i for i in idxs[1:] if value(J1, i) == v1)
        g2 = next((g for g in range(len(generators)) if values[g][first] != values[g][other]), None)
        if g2 is None:
            raise IsomorphicPair(first, other)
        for a in a_enumerate(q, cap):
            if not a:
                continue
            comb = dict(J1)
            comb[g2] = _aadd(comb.get(g2, ()), a, q)
            comb = {k: v for k, v in comb.items() if v}
            if separates(comb, idxs):
                return comb
        raise RuntimeError(f"no separating combination with coefficient degree <= {cap}")

    comb = solve(list(range(len(mods))))
    B = generators[0].ring
    poly = B.zero
    for g, a in comb.items():
        poly = poly + B.from_apoly(a) * generators[g]
    combination = tuple((comb[g], names[g]) for g in sorted(comb))
    return InvariantElem(poly, combination)


def _apoly(ring: TriangularRing, a: Sequence[int]) -> RingElem:
    T = ring.gen("T")
    out = ring.zero
    for c in reversed(list(a)):
        out = out * T + ring(c)
    return out


def _aadd(a, b, q):
    from .fields import a_add

    return a_add(a, b, q)


def separation_table(J, modules) -> list[tuple[int, int, bool]]:
    """Post-hoc check: (i, j, values differ) for every pair."""
    vals = [eval_invariant(J, m) for m in modules]
    return [(i, j, vals[i] != vals[j]) for i, j in itertools.combinations(range(len(vals)), 2)]

