"""Modular polynomials Phi_{J,(A/PA)^s}, their separable parts mod P, and the congruences linking them."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import upoly
from .drinfeld import DrinfeldModule, ReducedTorsion, TorsionBasis, reduced_torsion, torsion_basis
from .fields import FFElem, a_degree, a_to_str, a_trim
from .invariants import InvariantElem, MonoidBasis, eval_invariant, invariant_monoid_basis
from .isogeny import (
    combine,
    enumerate_subspaces,
    gaussian_binomial,
    kernel_polynomial,
    kernel_polynomial_from,
    pushforward,
)
from .polynomials import MPoly, PolyRing, from_ff_terms, is_invariant, mpoly_mod_prime, poly_ring
from .printing import format_upoly
from .triangular import RingElem, TriangularRing


class CoefficientNotInB(ArithmeticError):
    """A symmetric function of tower elements failed to land in the base ring."""


class InvarianceFailed(ArithmeticError):
    pass


def _poly(J) -> MPoly:
    return J.poly if isinstance(J, InvariantElem) else J


def descend(coeffs: Sequence[RingElem], base: PolyRing) -> list[MPoly]:
    """Map tower coefficients into the base ring, insisting every tower component vanishes."""
    out = []
    for c in coeffs:
        if c.den is not None:
            raise CoefficientNotInB("coefficient has a denominator")
        extra = c.variables() - set(base.names)
        if extra:
            raise CoefficientNotInB(f"coefficient still involves {sorted(extra)}")
        out.append(base.convert(c))
    return out


@dataclass
class ModularPoly:
    """Monic polynomial in X with coefficients in B (or B/PB), lowest degree first."""

    J: MPoly
    P: tuple[int, ...]
    s: int | str
    coeffs: list[MPoly]
    J_label: str = ""
    invariant: bool | None = None
    distinct_roots: bool | None = None
    roots_checked: int = 0
    expected_degree: int | None = None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def ring(self) -> TriangularRing:
        return self.coeffs[0].ring

    def to_text(self) -> str:
        return format_upoly(self.coeffs, "X")

    __str__ = to_text

    def mod_p(self, P: Sequence[int] | None = None) -> list[MPoly]:
        P = self.P if P is None else P
        return [mpoly_mod_prime(c, P) for c in self.coeffs]

    def certificate(self, basis: MonoidBasis | None = None) -> str:
        R = self.ring
        lines = [
            "modular polynomial certificate",
            f"q: {R.q}",
            f"r: {R.r}",
            f"P: {a_to_str(self.P)}",
            f"s: {self.s}",
            f"J: {self.J_label + ' = ' if self.J_label else ''}{self.J}",
        ]
        if self.expected_degree is not None:
            ok = "ok" if self.expected_degree == self.degree else "MISMATCH"
            lines.append(f"degree: {self.degree} (expected {self.expected_degree}) {ok}")
        else:
            lines.append(f"degree: {self.degree}")
        lines.append("coefficients in B: ok")
        if self.invariant is not None:
            lines.append(f"invariant: {'ok' if self.invariant else 'FAILED'}")
        if self.distinct_roots is None:
            lines.append("distinct roots: unchecked")
        else:
            lines.append(f"distinct roots: {'yes' if self.distinct_roots else 'no'}")
        lines.append(f"Phi(X) = {self.to_text()}")
        if basis is not None:
            lines.append(f"Phi(X) in generators = {format_in_invariants(self.coeffs, basis)}")
        return "\n".join(lines)


def _certify(mp: ModularPoly, sweep: bool = True) -> ModularPoly:
    mp.invariant = all(is_invariant(c, "sweep" if sweep else "congruence") for c in mp.coeffs)
    if not mp.invariant:
        raise InvarianceFailed("a coefficient is not fixed by the lambda-action")
    return mp


def _map(fn, items, threads: int):
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def isogenous_invariants(J, P: Sequence[int], s: int, wb: TorsionBasis, threads: int = 1) -> list[RingElem]:
    """J(phi^(f_m)) for every RREF matrix m of size s x r, in enumeration order."""
    Jp = _poly(J)
    if s == 0:
        return [eval_invariant(Jp, wb.module)]

    def root(m):
        f = kernel_polynomial(m, wb)
        return eval_invariant(Jp, pushforward(f, wb.module))

    return _map(root, enumerate_subspaces(wb.rank, s, wb.P, wb.q), threads)


def modular_poly(
    J,
    P: Sequence[int],
    s: int,
    wb: TorsionBasis | None = None,
    phi: DrinfeldModule | None = None,
    threads: int = 1,
    check_distinct: bool = False,
    certify: bool = True,
) -> ModularPoly:
    """prod over isogenies f of type (A/PA)^s of (X - J(phi^(f)))."""
    Jp = _poly(J)
    q, r = Jp.ring.q, Jp.ring.r
    P = a_trim(P, q)
    if not 0 <= s <= r:
        raise ValueError("need 0 <= s <= r")
    phi = phi or DrinfeldModule.generic(q, r)
    wb = wb or torsion_basis(phi, P)
    roots = isogenous_invariants(Jp, P, s, wb, threads)
    ring = roots[0].ring
    coeffs = descend(upoly.from_roots(roots, ring.one), phi.ring)
    mp = ModularPoly(Jp, P, s, coeffs, getattr(J, "label", ""), expected_degree=gaussian_binomial(r, s, q ** a_degree(P)))
    if check_distinct:
        mp.distinct_roots = len(set(roots)) == len(roots)
        mp.roots_checked = len(roots)
    return _certify(mp) if certify else mp


def full_modular_poly(J, P: Sequence[int], wb: TorsionBasis | None = None, phi: DrinfeldModule | None = None,
                      threads: int = 1) -> ModularPoly:
    """Product of the type-(A/PA)^s polynomials over s = 0..r."""
    Jp = _poly(J)
    q, r = Jp.ring.q, Jp.ring.r
    phi = phi or DrinfeldModule.generic(q, r)
    wb = wb or torsion_basis(phi, a_trim(P, q))
    parts = [modular_poly(Jp, P, s, wb, phi, threads, certify=False) for s in range(r + 1)]
    coeffs = upoly.product([p.coeffs for p in parts], phi.ring.one)
    v = q ** a_degree(a_trim(P, q))
    mp = ModularPoly(Jp, a_trim(P, q), "full", coeffs, getattr(J, "label", ""),
                     expected_degree=sum(gaussian_binomial(r, s, v) for s in range(r + 1)))
    return _certify(mp)


# ---------------------------------------------------------------------------
# reduced side


@lru_cache(maxsize=32)
def _reduced_torsion(phi: DrinfeldModule, P: tuple[int, ...]) -> ReducedTorsion:
    return reduced_torsion(phi.reduce(P), P)


def special_roots(J, P: Sequence[int], s: int, phi: DrinfeldModule | None = None, threads: int = 1) -> tuple[list[RingElem], ReducedTorsion]:
    """J(phibar^(f)) for the separable isogenies of phibar whose kernel is an s-dimensional subspace of phibar[P]."""
    Jp = _poly(J)
    q, r = Jp.ring.q, Jp.ring.r
    P = a_trim(P, q)
    phi = phi or DrinfeldModule.generic(q, r)
    red = _reduced_torsion(phi, P)
    Jbar = mpoly_mod_prime(Jp, P) if Jp.ring.P is None else Jp
    k = len(red.gens)
    if not 1 <= s <= k:
        raise ValueError(f"need 1 <= s <= {k}")
    module = red.module

    def root(m):
        etas = combine(module, red.gens, m, red.tower)
        f = kernel_polynomial_from(module, etas, P, red.tower)
        return eval_invariant(Jbar, pushforward(f, module))

    return _map(root, enumerate_subspaces(k, s, P, q), threads), red


def special_poly_mod_p(J, P: Sequence[int], s: int, phi: DrinfeldModule | None = None, threads: int = 1,
                       descend_to_base: bool = True) -> list[RingElem]:
    """Phi^sep_{J,(A/PA)^s} mod P computed from the reduced module; s = 0 gives X - J.

    With ``descend_to_base`` the coefficients must lie in B/PB; otherwise they
    are returned in the reduced tower (needed for J without a |P|-th power).
    """
    Jp = _poly(J)
    P = a_trim(P, Jp.ring.q)
    if s == 0:
        Jbar = mpoly_mod_prime(Jp, P) if Jp.ring.P is None else Jp
        return [-Jbar, Jbar.ring.one]
    roots, red = special_roots(Jp, P, s, phi, threads)
    coeffs = upoly.from_roots(roots, red.tower.one)
    if not descend_to_base:
        return coeffs
    return descend(coeffs, poly_ring(Jp.ring.q, Jp.ring.r, P))


def extract_sep_from_s1(phi_mod_p: Sequence[MPoly], J, P: Sequence[int]) -> list[MPoly]:
    """Divide out (X - J^|P|) and contract X^(|P| k) -> X^k."""
    Jp = _poly(J)
    P = a_trim(P, Jp.ring.q)
    v = Jp.ring.q ** a_degree(P)
    Jbar = mpoly_mod_prime(Jp, P) if Jp.ring.P is None else Jp
    ring = phi_mod_p[0].ring
    quo = upoly.div_exact(list(phi_mod_p), [ring(-(Jbar**v)), ring.one])
    return upoly.deflate(quo, v)


# ---------------------------------------------------------------------------
# congruences


@dataclass
class CongruenceReport:
    q: int
    r: int
    P: tuple[int, ...]
    s: int
    J: MPoly
    lhs: list[MPoly]
    factors: dict[str, list] = field(default_factory=dict)
    residual_first: list[MPoly] = field(default_factory=list)
    residual_second: list[MPoly] = field(default_factory=list)
    J_label: str = ""

    @property
    def first_holds(self) -> bool:
        return upoly.is_zero(self.residual_first)

    @property
    def second_holds(self) -> bool:
        return upoly.is_zero(self.residual_second)

    @property
    def passed(self) -> bool:
        return self.first_holds and self.second_holds

    def to_text(self) -> str:
        Pt = a_to_str(self.P)
        lines = [
            "congruence report",
            f"q: {self.q}",
            f"r: {self.r}",
            f"P: {Pt}",
            f"s: {self.s}",
            f"J: {self.J_label + ' = ' if self.J_label else ''}{self.J}",
            f"Phi mod P = {format_upoly(self.lhs)}",
        ]
        for name, poly in self.factors.items():
            lines.append(f"{name} = {format_upoly(poly)}")
        lines.append(
            f"first form  (sep_(J^|P|, s-1) * sep_(J, s)^(|P|^s)): {'PASS' if self.first_holds else 'FAIL'}"
            f" residual {format_upoly(self.residual_first)}"
        )
        lines.append(
            f"second form (sep_(J^|P|, s-1) * sep_(J^|P|, s)(X^|P|)^(|P|^(s-1))): {'PASS' if self.second_holds else 'FAIL'}"
            f" residual {format_upoly(self.residual_second)}"
        )
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    __str__ = to_text


def kronecker_verify(J, P: Sequence[int], s: int, phi: DrinfeldModule | None = None,
                     lhs: Sequence[MPoly] | None = None, threads: int = 1) -> CongruenceReport:
    """Check both factorizations of Phi_{J,(A/PA)^s} mod P; failures are reported, not raised.

    ``lhs`` replaces the computed Phi mod P (to replay a stored polynomial).
    """
    Jp = _poly(J)
    q, r = Jp.ring.q, Jp.ring.r
    P = a_trim(P, q)
    if not 1 <= s <= r - 1:
        raise ValueError("need 1 <= s <= r - 1")
    v = q ** a_degree(P)
    e = a_degree(P)  # |P| = q^e
    phi = phi or DrinfeldModule.generic(q, r)
    if lhs is None:
        lhs = modular_poly(Jp, P, s, phi=phi, threads=threads).mod_p(P)
    else:
        lhs = [mpoly_mod_prime(c, P) if c.ring.P is None else c for c in lhs]
    base = lhs[0].ring
    JP = Jp**v
    low = special_poly_mod_p(JP, P, s - 1, phi, threads)
    sep_J_tower = special_poly_mod_p(Jp, P, s, phi, threads, descend_to_base=False)
    sep_JP = special_poly_mod_p(JP, P, s, phi, threads)
    # first form: the |P|^s power descends even though sep_J itself need not
    powered = descend(upoly.frobenius_power(sep_J_tower, e * s), base)
    rhs1 = upoly.mul([base(c) for c in low], powered)
    inner = upoly.inflate([base(c) for c in sep_JP], v)
    rhs2 = upoly.mul([base(c) for c in low], upoly.frobenius_power(inner, e * (s - 1)) if s > 1 else inner)
    lhs = [base(c) for c in lhs]
    factors = {
        "sep_(J^|P|, s-1)": [base(c) for c in low],
        "sep_(J^|P|, s)": [base(c) for c in sep_JP],
        "sep_(J, s)^(|P|^s)": powered,
    }
    if all(c.ring is base or c.ring.names == base.names for c in sep_J_tower) and not any(
        c.variables() - set(base.names) for c in sep_J_tower
    ):
        factors["sep_(J, s)"] = descend(sep_J_tower, base)
    return CongruenceReport(
        q, r, P, s, Jp, lhs, factors,
        upoly.sub(lhs, rhs1), upoly.sub(lhs, rhs2), getattr(J, "label", ""),
    )


def case_one_factor(phi_mod_p: Sequence[MPoly], J, P: Sequence[int], s: int, phi: DrinfeldModule | None = None) -> list[MPoly]:
    """Phi mod P divided exactly by sep_(J, s)^(|P|^s): the separable factor sep_(J^|P|, s-1)."""
    Jp = _poly(J)
    P = a_trim(P, Jp.ring.q)
    e = a_degree(P)
    base = phi_mod_p[0].ring
    sep_J_tower = special_poly_mod_p(Jp, P, s, phi, descend_to_base=False)
    powered = descend(upoly.frobenius_power(sep_J_tower, e * s), base)
    return upoly.div_exact(list(phi_mod_p), powered)


# ---------------------------------------------------------------------------
# rewriting in generators


@dataclass
class GeneratorExpression:
    """sum of coefficient * prod J_k^{n_k}; coefficients are polynomials in T (and u)."""

    terms: list[tuple[MPoly, tuple[int, ...]]]
    basis: MonoidBasis

    def to_g(self, ring: PolyRing) -> MPoly:
        out = ring.zero
        gens = self.basis.generators(ring)
        for coeff, exps in self.terms:
            term = ring(coeff)
            for G, n in zip(gens, exps):
                if n:
                    term = term * G**n
            out = out + term
        return out

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        names = self.basis.names
        for coeff, exps in self.terms:
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, exps) if k)
            ctext = coeff.to_text()
            if not mono:
                parts.append(ctext if " + " not in ctext else f"({ctext})")
            elif ctext == "1":
                parts.append(mono)
            else:
                parts.append(f"({ctext})*{mono}" if " + " in ctext else f"{ctext}*{mono}")
        return " + ".join(parts)

    __str__ = to_text


def express_in_invariants(c: MPoly, basis: MonoidBasis) -> GeneratorExpression:
    """Greedy factorization of each g-monomial into generators (first fitting generator in basis order)."""
    if not is_invariant(c):
        raise ValueError("element is not invariant")
    R = c.ring
    collected: dict[tuple[int, ...], dict] = {}
    names_wo_u = [n for n in R.names if n != "u"]
    g_idx = [names_wo_u.index(n) for n in R.g_names]
    for exps, coeff in c.ff_terms().items():
        g = [exps[i] for i in g_idx]
        counts = [0] * len(basis.vectors)
        while any(g):
            k = next((k for k, e in enumerate(basis.vectors) if all(a <= b for a, b in zip(e, g))), None)
            if k is None:
                raise AssertionError(f"monomial {g} does not factor over the generators")
            counts[k] += 1
            g = [b - a for a, b in zip(basis.vectors[k], g)]
        rest = list(exps)
        for i in g_idx:
            rest[i] = 0
        key = tuple(counts)
        collected.setdefault(key, {})[tuple(rest)] = coeff
    terms = [(from_ff_terms(R, d), key) for key, d in collected.items()]
    terms.sort(key=lambda t: t[1], reverse=True)
    return GeneratorExpression(terms, basis)


def format_in_invariants(coeffs: Sequence[MPoly], basis: MonoidBasis, var: str = "X") -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c.is_zero():
            continue
        text = express_in_invariants(c, basis).to_text()
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            parts.append(text)
        elif text == "1":
            parts.append(mono)
        else:
            parts.append(f"({text})*{mono}" if " + " in text else f"{text}*{mono}")
    return " + ".join(parts) if parts else "0"


def default_basis(q: int, r: int) -> MonoidBasis:
    return invariant_monoid_basis(q, r)


# ---------------------------------------------------------------------------
# exploratory: factor degrees of a reduced polynomial at specialized coefficients


@dataclass
class FactorEvidence:
    point: tuple[FFElem, ...]
    squarefree: bool
    degrees: list[int]

    def to_text(self) -> str:
        pt = ", ".join(f"g{i}={x}" for i, x in enumerate(self.point, start=1))
        return f"[{pt}] squarefree={'yes' if self.squarefree else 'no'} factor degrees={self.degrees}"


def factor_evidence(coeffs: Sequence[MPoly], count: int = 8, seed: int = 0) -> list[FactorEvidence]:
    """Specialize g_i to random nonzero elements of F_{q^r} and factor the result over F_{q^r}.

    Only defined for deg P = 1, where B/PB is F_{q^r}[g].  Nothing is asserted;
    the output is evidence about irreducibility, not a proof.
    """
    import random

    import flint

    R = coeffs[0].ring
    if R.P is None or a_degree(R.P) != 1:
        raise ValueError("factor evidence needs coefficients reduced modulo a degree-one prime")
    F = R.field
    fl = flint.fq_default_ctx(modulus=flint.fmpz_mod_poly_ctx(R.q)(list(F.modulus)), var="u")
    ring_x = flint.fq_default_poly_ctx(fl)
    names = [n for n in R.names if n != "u"]
    g_idx = [names.index(n) for n in R.g_names]
    units = [x for x in F.elements() if not x.is_zero()]
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        point = tuple(rng.choice(units) for _ in g_idx)
        vals = []
        for c in coeffs:
            acc = F.zero
            for exps, a in c.ff_terms().items():
                term = a
                for i, x in zip(g_idx, point):
                    term = term * x ** exps[i]
                acc = acc + term
            vals.append(fl(list(acc.res)))
        poly = ring_x(vals)
        _, factors = poly.factor()
        degrees = sorted(f.degree() for f, e in factors for _ in range(e))
        out.append(FactorEvidence(point, poly.is_squarefree(), degrees))
    return out
