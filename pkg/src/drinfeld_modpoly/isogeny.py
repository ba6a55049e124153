"""Isogenies with kernel inside phi[P]: subspace enumeration, kernel polynomials, pushforwards."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import upoly
from .drinfeld import DrinfeldModule, TorsionBasis, residues, span_points
from .fields import a_degree, a_trim
from .triangular import RingElem, TriangularRing
from .twisted import TwistedPoly, from_additive, tw_div_right, tw_mul


@dataclass(frozen=True)
class SubspaceMatrix:
    """s x r matrix over A/PA in reduced row-echelon form; entries are residues as coefficient tuples."""

    rows: tuple[tuple[tuple[int, ...], ...], ...]
    pivots: tuple[int, ...]
    r: int

    @property
    def s(self) -> int:
        return len(self.rows)

    def is_special(self) -> bool:
        return is_special(self)

    def last_pivot_is_last_column(self) -> bool:
        """The non-special case where the last row's leading 1 sits in column r."""
        return bool(self.pivots) and self.pivots[-1] == self.r - 1

    def to_text(self) -> str:
        from .fields import a_to_str

        return "[" + "; ".join(" ".join(a_to_str(x) for x in row) for row in self.rows) + "]"

    __str__ = to_text


def gaussian_binomial(n: int, k: int, v: int) -> int:
    """Number of k-dimensional subspaces of F_v^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= v ** (n - i) - 1
        den *= v ** (i + 1) - 1
    return num // den


def enumerate_subspaces(r: int, s: int, P: Sequence[int], q: int) -> list[SubspaceMatrix]:
    """All RREF s x r matrices over A/PA, by pivot columns and then free entries lexicographically."""
    P = a_trim(P, q)
    if not 0 <= s <= r:
        raise ValueError("need 0 <= s <= r")
    reps = residues(P, q)
    zero, one = (), (1,)
    out = []
    for piv in itertools.combinations(range(r), s):
        free = [(i, j) for i in range(s) for j in range(piv[i] + 1, r) if j not in piv]
        for vals in itertools.product(reps, repeat=len(free)):
            rows = [[zero] * r for _ in range(s)]
            for i, j in enumerate(piv):
                rows[i][j] = one
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            out.append(SubspaceMatrix(tuple(tuple(row) for row in rows), piv, r))
    return out


def is_special(m: SubspaceMatrix) -> bool:
    """Last column identically zero."""
    return all(not row[-1] for row in m.rows)


def kernel_generators(m: SubspaceMatrix, wb: TorsionBasis) -> list[RingElem]:
    """eta_i = sum_j phi_{m_ij}(w_j)."""
    return combine(wb.module, wb.gens, m, wb.tower)


def combine(module: DrinfeldModule, gens: Sequence[RingElem], m: SubspaceMatrix, ring: TriangularRing):
    mod = module.over(ring)
    etas = []
    for row in m.rows:
        eta = ring.zero
        for a, w in zip(row, gens):
            if a:
                eta = eta + mod.phi_a(a)(ring(w))
        etas.append(eta)
    return etas


def kernel_polynomial_from(module: DrinfeldModule, etas: Sequence[RingElem], P, ring: TriangularRing) -> TwistedPoly:
    """Monic additive polynomial vanishing exactly on the A-span of etas."""
    pts = span_points(module, etas, P, ring)
    return from_additive(upoly.from_roots(pts, ring.one), ring)


def kernel_polynomial(m: SubspaceMatrix, wb: TorsionBasis) -> TwistedPoly:
    return kernel_polynomial_from(wb.module, kernel_generators(m, wb), wb.P, wb.tower)


class NotAnIsogeny(ArithmeticError):
    pass


def pushforward(f: TwistedPoly, phi: DrinfeldModule) -> DrinfeldModule:
    """phi' with f phi_T = phi'_T f, as the exact right quotient of f phi_T by f."""
    if not f.is_monic():
        raise ValueError("isogeny must be monic")
    phi = phi.over(f.ring)
    quo, rem = tw_div_right(tw_mul(f, phi.phi_T), f)
    if not rem.is_zero():
        raise NotAnIsogeny("f phi_T is not right divisible by f")
    return DrinfeldModule(f.ring, quo.coeffs)


@dataclass
class Isogeny:
    domain: DrinfeldModule
    codomain: DrinfeldModule
    f: TwistedPoly
    s: int
    matrix: SubspaceMatrix | None = None

    def check(self, a: Sequence[int]) -> bool:
        """f phi_a == phi'_a f."""
        return tw_mul(self.f, self.domain.phi_a(a)) == tw_mul(self.codomain.phi_a(a), self.f)


def isogeny_of(m: SubspaceMatrix, wb: TorsionBasis) -> Isogeny:
    f = kernel_polynomial(m, wb)
    return Isogeny(wb.module, pushforward(f, wb.module), f, m.s, m)


def frobenius_isogeny(wb: TorsionBasis, w: RingElem | None = None) -> Isogeny:
    """F = prod_{a in A/PA} (X - phi_a(w)) for the generator w that vanishes mod P (default w_r)."""
    w = wb.gens[-1] if w is None else w
    F = kernel_polynomial_from(wb.module, [w], wb.P, wb.tower)
    return Isogeny(wb.module, pushforward(F, wb.module), F, 1)


def count_rref(r: int, s: int, v: int) -> int:
    """Size of the RREF enumeration without materializing it."""
    total = 0
    for piv in itertools.combinations(range(r), s):
        free = sum(1 for i in range(s) for j in range(piv[i] + 1, r) if j not in piv)
        total += v**free
    return total


def brute_force_subspace_count(r: int, s: int, P: Sequence[int], q: int) -> int:
    """Count s-dimensional subspaces of (A/PA)^r by growing spans one vector at a time.

    Every subspace is stored as the frozen set of its vectors, so the count
    does not rely on any normal form.  Only practical for small counts.
    """
    from .fields import residue_field

    F = residue_field(P, q)
    elems = list(F.elements())
    v = len(elems)
    mul = [[(a * b).to_int() for b in elems] for a in elems]
    add = [[(a + b).to_int() for b in elems] for a in elems]
    vectors = list(itertools.product(range(v), repeat=r))

    def extend(space: frozenset, vec) -> frozenset:
        out = set(space)
        for c in range(1, v):
            cv = tuple(mul[c][x] for x in vec)
            out |= {tuple(add[x][y] for x, y in zip(p, cv)) for p in space}
        return frozenset(out)

    layer = {frozenset([tuple([0] * r)])}
    for _ in range(s):
        nxt = set()
        for space in layer:
            for vec in vectors:
                if vec not in space:
                    nxt.add(extend(space, vec))
        layer = nxt
    return len(layer)
