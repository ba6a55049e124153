"""Towers of simple algebraic extensions over B (or B/PB) with dynamic-evaluation inversion.

Every level adjoins a generator x_k with a monic minimal polynomial whose
coefficients are integral over the level below.  Irreducibility is never
checked up front: inversion runs an extended Euclid against each level
polynomial and raises :class:`SplitDetected` when it meets a nontrivial
common factor, so a caller can rebuild with the smaller factor.
"""

from __future__ import annotations

from typing import Callable, Sequence

from . import upoly
from .fields import a_to_str
from .polynomials import PolyRing
from .printing import format_upoly
from .triangular import RingElem, SplitDetected, TriangularRing, remap

__all__ = [
    "Tower",
    "TowerElem",
    "SplitDetected",
    "tower_extend",
    "tower_inv",
    "adjoin_root",
    "NothingToAdjoin",
    "replay",
]


class NothingToAdjoin(ValueError):
    """All roots are already known; the remaining factor is a constant."""


class TowerElem(RingElem):
    __slots__ = ()


class Tower(TriangularRing):
    """A base PolyRing with generator levels ``(name, minimal polynomial)`` stacked on top.

    Each minimal polynomial is a coefficient list (lowest first) of integral
    elements of the ring directly below it.
    """

    def __init__(self, base: PolyRing, levels: Sequence[tuple[str, Sequence[RingElem]]] = ()):
        self.base = base
        self.gen_levels = tuple((name, tuple(m)) for name, m in levels)
        self.r = base.r
        self.P = base.P
        self.g_names = base.g_names
        self.extra = base.extra
        builders = [_copy_relation(rel, base) for rel in base.relations]
        builders += [_level_relation(name, m) for name, m in self.gen_levels]
        super().__init__(
            base.q,
            base.field,
            base.level_names + tuple(n for n, _ in self.gen_levels),
            builders,
            base.free_names,
            base.printable_names,
        )

    def _make(self, num, den=None):
        return TowerElem(self, num, den)

    @property
    def gen_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.gen_levels)

    @property
    def degree(self) -> int:
        out = 1
        for name in self.gen_names:
            out *= self.level_degrees[self.level_names.index(name)]
        return out

    def minimal_polynomial(self, name: str) -> list[RingElem]:
        """Level polynomial of ``name`` with coefficients mapped into this tower."""
        for n, m in self.gen_levels:
            if n == name:
                return [self(c) for c in m]
        raise KeyError(name)

    def below(self, name: str) -> "Tower":
        """The tower of all levels strictly below ``name``."""
        idx = self.gen_names.index(name)
        return Tower(self.base, self.gen_levels[:idx])

    def describe(self) -> str:
        lines = [f"base: {_base_text(self.base)}"]
        for name, m in self.gen_levels:
            lines.append(f"{name}: {format_upoly(list(m), name)}")
        lines.append(f"degree: {self.degree}")
        return "\n".join(lines)

    def __repr__(self):
        return f"Tower(degree={self.degree}, levels={list(self.gen_names)})"


def _base_text(base: PolyRing) -> str:
    roster = ", ".join(base.printable_names)
    order = base.field.order
    text = f"F_{order}[{roster}]"
    if base.field.n > 1:
        text += f" with F_{order} = F_{base.q}[u]/({a_to_str(base.field.modulus, 'u')})"
    if base.P is not None:
        text += f", T reduced modulo {a_to_str(base.P)}"
    return text


def _copy_relation(rel, src: TriangularRing) -> Callable:
    return lambda ring: remap(rel, src.names, ring.ctx, ring.names)


def _level_relation(name: str, m: Sequence[RingElem]) -> Callable:
    def build(ring: TriangularRing):
        x = ring.raw_gen(name)
        out = ring._zero
        for i, c in enumerate(m):
            if c.den is not None:
                raise ValueError("level polynomial coefficients must be integral")
            if not c.is_zero():
                out += remap(c.num, c.ring.names, ring.ctx, ring.names) * x**i
        return out

    return build


def tower_extend(t: TriangularRing, m: Sequence[RingElem], name: str) -> Tower:
    """Adjoin a root of the monic polynomial m (coefficients in t) as generator ``name``."""
    m = upoly.trim(m)
    if len(m) < 3:
        raise ValueError("level polynomial must have degree at least 2")
    if not m[-1].is_one():
        raise ValueError("level polynomial must be monic")
    if any(c.den is not None for c in m):
        raise ValueError("level polynomial must have integral coefficients")
    if name in t.names:
        raise ValueError(f"variable {name} already in use")
    if isinstance(t, Tower):
        return Tower(t.base, t.gen_levels + ((name, tuple(m)),))
    return Tower(t, [(name, m)])


def tower_inv(x: RingElem) -> RingElem:
    """Inverse via extended Euclid over every level; may raise SplitDetected."""
    return x.inverse()


def adjoin_root(
    t: TriangularRing,
    f: Sequence[RingElem],
    known_roots: Sequence[RingElem],
    name: str,
    override: Sequence[RingElem] | None = None,
) -> tuple[TriangularRing, RingElem]:
    """Divide prod (X - rho) out of f and adjoin a root of what is left.

    ``known_roots`` may repeat a root to divide out a multiple factor.  A
    linear remainder yields its root without extending; ``override``
    replaces the remaining factor by a known divisor of it (used after a split).
    """
    f = [t(c) for c in f]
    if not f[-1].is_one():
        raise ValueError("f must be monic")
    rest = f
    if known_roots:
        rest = upoly.div_exact(f, upoly.from_roots([t(x) for x in known_roots], t.one))
    if override is not None:
        factor = [t(c) for c in override]
        upoly.div_exact(rest, factor)
        rest = factor
    d = upoly.degree(rest)
    if d < 1:
        raise NothingToAdjoin("the known roots exhaust f")
    if d == 1:
        return t, -rest[0]
    t2 = tower_extend(t, rest, name)
    return t2, t2.gen(name)


def lowest_factor(err: SplitDetected, t: TriangularRing) -> list[RingElem]:
    """The canonically smaller of the split factor and its cofactor."""
    name = err.level
    below_rel = t.relations[t.level_names.index(name)]
    m = t._split(below_rel, name)
    g = upoly.trim(err.factor)
    candidates = [g]
    if all(c.den is None for c in g):
        h = upoly.div_exact(m, g)
        candidates.append(h)
    candidates = [c for c in candidates if all(x.den is None for x in c)]
    if not candidates:
        raise ValueError("split factor is not integral; cannot rebuild the level")
    return min(candidates, key=lambda p: (len(p), format_upoly(p)))


def replay(build: Callable[[dict], object], max_splits: int = 16):
    """Run ``build(overrides)``, rebuilding a level with a smaller factor after each split.

    ``build`` receives a dict ``{level name: factor}`` and must pass the
    matching entry as ``override`` to :func:`adjoin_root`.  It should raise
    SplitDetected with the offending tower attached as ``err.tower``.
    """
    overrides: dict[str, list] = {}
    for _ in range(max_splits + 1):
        try:
            return build(overrides)
        except SplitDetected as err:
            t = getattr(err, "tower", None)
            if t is None:
                raise
            overrides[err.level] = lowest_factor(err, t)
    raise RuntimeError("too many splits while building a tower")
