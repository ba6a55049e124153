"""Arithmetic in quotients F_q[levels, free] / (triangular set), backed by flint.

A ring here is F_q[x_1, ..., x_k, y_1, ..., y_m] modulo relations
m_1(x_1), m_2(x_1, x_2), ..., each m_i monic in its own variable x_i and
involving only earlier levels and the free variables y.  The relations are
stored in a lexicographic flint context whose variable order is
``x_k > ... > x_1 > y_1 > ... > y_m``, so the leading monomial of m_i is a
pure power of x_i and successive remainders give a unique normal form.

Elements carry an optional denominator that is a polynomial in the free
variables only.  Denominators are monic (in the canonical printing order)
and coprime to the numerator's content, which makes the pair canonical.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

import flint

from .fields import FFElem, FieldCtx


class SplitDetected(ArithmeticError):
    """A level polynomial turned out to be reducible.

    ``factor`` is a proper monic factor as a coefficient list (lowest degree
    first) of elements of the ring below ``level``.
    """

    def __init__(self, factor, level: str):
        super().__init__(f"level {level} splits off a factor of degree {len(factor) - 1}")
        self.factor = factor
        self.level = level


def make_ctx(names: Sequence[str], q: int):
    return flint.nmod_mpoly_ctx.get(tuple(names), modulus=q, ordering="lex")


def remap(poly, src_names: Sequence[str], dst_ctx, dst_names: Sequence[str]):
    """Move a polynomial between contexts by variable name."""
    idx = [dst_names.index(n) if n in dst_names else -1 for n in src_names]
    n = len(dst_names)
    out = {}
    for exps, c in poly.to_dict().items():
        e = [0] * n
        for i, k in enumerate(exps):
            if k:
                j = idx[i]
                if j < 0:
                    raise ValueError(f"variable {src_names[i]} has no counterpart")
                e[j] = k
        out[tuple(e)] = c
    return dst_ctx.from_dict(out)


def degrevlex_key(e: Sequence[int]):
    """Sort key putting larger monomials first when sorted ascending."""
    return (-sum(e), tuple(e[::-1]))


class TriangularRing:
    """Common machinery for the base ring B (or B mod P) and towers above it."""

    def __init__(
        self,
        q: int,
        field: FieldCtx,
        level_names: Sequence[str],
        relation_builders: Sequence[Callable],
        free_names: Sequence[str],
        printable_names: Sequence[str],
    ):
        self.q = q
        self.field = field
        self.level_names = tuple(level_names)
        self.free_names = tuple(free_names)
        self.names = tuple(reversed(self.level_names)) + self.free_names
        self.ctx = make_ctx(self.names, q)
        self._one = self.ctx.constant(1)
        self._zero = self.ctx.constant(0)
        self.relations = tuple(build(self) for build in relation_builders)
        self.level_degrees = tuple(
            rel.degrees()[self.names.index(name)] for name, rel in zip(self.level_names, self.relations)
        )
        # order in which exponents are shown and compared when printing
        self.printable_names = tuple(printable_names)
        self._print_idx = [self.names.index(n) for n in self.printable_names]
        self._u_idx = self.names.index("u") if "u" in self.names else None
        self._free_idx = [self.names.index(n) for n in self.free_names]
        self._level_idx = {name: self.names.index(name) for name in self.level_names}

    # -- raw polynomial helpers -------------------------------------------------
    def reduce(self, poly):
        for rel in reversed(self.relations):
            poly = poly % rel
        return poly

    def raw_gen(self, name: str):
        return self.ctx.gen(self.names.index(name))

    def raw_pow(self, poly, e: int):
        result = self._one
        base = poly
        while e:
            if e & 1:
                result = self.reduce(result * base)
            e >>= 1
            if e:
                base = self.reduce(base * base)
        return result

    def is_free_only(self, poly) -> bool:
        """True if no level variable occurs in ``poly``."""
        degs = poly.degrees()
        return not any(degs[i] > 0 for i in self._level_idx.values())

    def top_level(self, poly) -> int:
        """Index (bottom-up) of the highest level variable occurring, or -1."""
        degs = poly.degrees()
        for k in range(len(self.level_names) - 1, -1, -1):
            if degs[self._level_idx[self.level_names[k]]] > 0:
                return k
        return -1

    # -- element construction -------------------------------------------------
    def _make(self, num, den=None):
        raise NotImplementedError

    def __call__(self, x):
        if isinstance(x, RingElem):
            if x.ring is self:
                return x
            return self.convert(x)
        if isinstance(x, int):
            return self._make(self.ctx.constant(x % self.q))
        if isinstance(x, FFElem):
            return self._make(self._ff_to_raw(x))
        raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")

    def _ff_to_raw(self, x: FFElem):
        if x.ctx.p != self.q:
            raise ValueError("characteristic mismatch")
        if x.ctx.n == 1:
            return self.ctx.constant(x.res[0])
        if x.ctx != self.field:
            raise ValueError("coefficient field mismatch")
        u = self.raw_gen("u")
        out = self._zero
        for i, c in enumerate(x.res):
            if c:
                out += c * u**i
        return out

    def gen(self, name: str) -> "RingElem":
        return self._make(self.reduce(self.raw_gen(name)))

    @property
    def zero(self):
        return self._make(self._zero)

    @property
    def one(self):
        return self._make(self._one)

    def convert(self, x: "RingElem"):
        """Map an element of another ring into this one by variable name."""
        num = self.reduce(remap(x.num, x.ring.names, self.ctx, self.names))
        den = None if x.den is None else remap(x.den, x.ring.names, self.ctx, self.names)
        return self._normalized(num, den)

    def compose(self, x: "RingElem", images: dict[str, "RingElem"]):
        """Ring map sending each variable of ``x.ring`` to ``images[name]`` (or the same-named variable here)."""
        if x.den is not None:
            raise ValueError("compose is only defined on integral elements")
        vals = []
        simple = True
        for name in x.ring.names:
            if name in images:
                img = self(images[name]) if not isinstance(images[name], RingElem) else images[name]
                if img.ring is not self or img.den is not None:
                    raise ValueError("images must be integral elements of the target ring")
                v = img.num
                if not (v.is_constant() or len(v) == 1 and v.total_degree() == 1 and v.coeffs() == [1]):
                    simple = False
                vals.append(v)
            else:
                vals.append(self.raw_gen(name))
        if simple:
            return self._make(self.reduce(x.num.compose(*vals, ctx=self.ctx)))
        powers: dict[tuple[int, int], object] = {}

        def power(i, k):
            if (i, k) not in powers:
                powers[(i, k)] = self.raw_pow(vals[i], k)
            return powers[(i, k)]

        out = self._zero
        for exps, c in x.num.to_dict().items():
            term = self.ctx.constant(c)
            for i, k in enumerate(exps):
                if k:
                    term = self.reduce(term * power(i, k))
            out += term
        return self._make(self.reduce(out))

    # -- normalization ------------------------------------------------------------
    def _normalized(self, num, den):
        if den is None or den.is_one():
            return self._make(num)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return self._make(num)
        g = num.gcd(den)
        if not g.is_one():
            num = num // g
            den = den // g
        lc = self._leading_coeff(den)
        if lc != 1:
            inv = pow(lc, self.q - 2, self.q)
            num = num * inv
            den = den * inv
        if den.is_one():
            return self._make(num)
        return self._make(num, den)

    def _leading_coeff(self, den) -> int:
        best = None
        for exps, c in den.to_dict().items():
            key = degrevlex_key([exps[i] for i in self._print_idx])
            if best is None or key < best[0]:
                best = (key, c)
        return int(best[1])

    # -- inversion by extended Euclid over the levels -----------------------------
    def invert(self, x: "RingElem") -> "RingElem":
        if x.is_zero():
            raise ZeroDivisionError("inverse of zero")
        inv = self._inv_raw(x.num)
        if x.den is not None:
            inv = inv * self._make(x.den)
        return inv

    def _inv_raw(self, num) -> "RingElem":
        k = self.top_level(num)
        if k < 0:
            # free-variable polynomial: invert in the fraction field
            return self._normalized(self._one, num)
        var = self.level_names[k]
        a = self._split(num, var)
        m = self._split(self.relations[k], var)
        g, s = self._xgcd_inverse(a, m, k)
        if len(g) > 1:
            raise SplitDetected(g, var)
        # g is a nonzero constant c with s*a = c (mod m)
        return self._uni_eval(s, var) * self.invert(g[0])

    def _split(self, poly, var: str) -> list["RingElem"]:
        """Coefficients in ``var`` (lowest first) as elements of this ring."""
        i = self.names.index(var)
        buckets: dict[int, dict] = {}
        for exps, c in poly.to_dict().items():
            e = list(exps)
            d = e[i]
            e[i] = 0
            buckets.setdefault(d, {})[tuple(e)] = c
        deg = max(buckets)
        return [self._make(self.ctx.from_dict(buckets[d])) if d in buckets else self.zero for d in range(deg + 1)]

    def _uni_eval(self, coeffs: Sequence["RingElem"], var: str) -> "RingElem":
        x = self.gen(var)
        out = self.zero
        for c in reversed(coeffs):
            out = out * x + c
        return out

    def _xgcd_inverse(self, a, m, level):
        """Extended Euclid in (lower field)[X]; returns (monic gcd, s) with s*a = gcd mod m."""

        def trim(p):
            p = list(p)
            while len(p) > 1 and p[-1].is_zero():
                p.pop()
            return p

        def sub(p, q_):
            n = max(len(p), len(q_))
            p = p + [self.zero] * (n - len(p))
            q_ = q_ + [self.zero] * (n - len(q_))
            return trim([x - y for x, y in zip(p, q_)])

        def mul(p, q_):
            out = [self.zero] * (len(p) + len(q_) - 1)
            for i, x in enumerate(p):
                if x.is_zero():
                    continue
                for j, y in enumerate(q_):
                    out[i + j] = out[i + j] + x * y
            return trim(out)

        def divmod_(p, q_):
            p = list(p)
            inv_lc = self.invert(q_[-1])
            quo = [self.zero] * max(len(p) - len(q_) + 1, 1)
            for k in range(len(p) - len(q_), -1, -1):
                c = p[k + len(q_) - 1] * inv_lc
                quo[k] = c
                if not c.is_zero():
                    for i, y in enumerate(q_):
                        p[k + i] = p[k + i] - c * y
            return trim(quo), trim(p[: max(len(q_) - 1, 1)])

        r0, r1 = trim(m), trim(a)
        s0, s1 = [self.zero], [self.one]
        while not (len(r1) == 1 and r1[0].is_zero()):
            quo, rem = divmod_(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, sub(s0, mul(quo, s1))
        inv_lc = self.invert(r0[-1])
        g = [c * inv_lc for c in r0]
        s = [c * inv_lc for c in s0]
        if len(g) > 1:
            return g, s
        return [self.one], s


def _embeds(small: TriangularRing, big: TriangularRing) -> bool:
    """True if every variable and relation of ``small`` is carried over into ``big``."""
    return (
        small.q == big.q
        and small.field == big.field
        and set(small.names) <= set(big.names)
        and set(small.level_names) <= set(big.level_names)
        and getattr(small, "P", None) == getattr(big, "P", None)
    )


class RingElem:
    """Element num/den of a TriangularRing; den is None for integral elements."""

    __slots__ = ("ring", "num", "den")

    def __init__(self, ring: TriangularRing, num, den=None):
        self.ring = ring
        self.num = num
        self.den = den

    # -- arithmetic ---------------------------------------------------------------
    def _pair(self, other):
        """Bring both operands into one ring, lifting from a subring by variable name."""
        if isinstance(other, RingElem):
            if other.ring is self.ring:
                return self, other
            if _embeds(other.ring, self.ring):
                return self, self.ring.convert(other)
            if _embeds(self.ring, other.ring):
                return other.ring.convert(self), other
            raise ValueError(f"no common ring for {self.ring!r} and {other.ring!r}")
        if isinstance(other, (int, FFElem)):
            return self, self.ring(other)
        return NotImplemented

    def __add__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return pair
        return pair[0]._add(pair[1])

    __radd__ = __add__

    def _add(self, other):
        R = self.ring
        if self.den is None and other.den is None:
            return R._make(self.num + other.num)
        if self.den is not None and other.den is not None and self.den == other.den:
            return R._normalized(self.num + other.num, self.den)
        d1 = self.den if self.den is not None else R._one
        d2 = other.den if other.den is not None else R._one
        return R._normalized(R.reduce(self.num * d2 + other.num * d1), d1 * d2)

    def __neg__(self):
        return self.ring._make(-self.num, self.den)

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return pair
        return pair[0]._add(-pair[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return pair
        return pair[0]._mul(pair[1])

    __rmul__ = __mul__

    def _mul(self, other):
        R = self.ring
        num = R.reduce(self.num * other.num)
        if self.den is None and other.den is None:
            return R._make(num)
        d1 = self.den if self.den is not None else R._one
        d2 = other.den if other.den is not None else R._one
        return R._normalized(num, d1 * d2)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        R = self.ring
        num = R.raw_pow(self.num, e)
        if self.den is None:
            return R._make(num)
        return R._normalized(num, self.den**e)

    def inverse(self):
        return self.ring.invert(self)

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return pair
        return pair[0]._mul(pair[1].inverse())

    def __rtruediv__(self, other):
        return self.ring(other) * self.inverse()

    def frobenius(self, e: int = 1):
        """x -> x^(q^e)."""
        x = self
        for _ in range(e):
            x = x ** self.ring.q
        return x

    # -- predicates -----------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den is None and self.num.is_one()

    def is_integral(self) -> bool:
        return self.den is None

    def __eq__(self, other):
        if isinstance(other, (int, FFElem)):
            other = self.ring(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        if other.ring is not self.ring:
            try:
                a, b = self._pair(other)
            except ValueError:
                return False
            return a == b
        if self.num != other.num:
            return False
        if self.den is None or other.den is None:
            return self.den is None and other.den is None
        return self.den == other.den

    def __hash__(self):
        key = tuple(sorted(self.num.to_dict().items()))
        dkey = None if self.den is None else tuple(sorted(self.den.to_dict().items()))
        return hash((id(self.ring), key, dkey))

    def __bool__(self):
        return not self.is_zero()

    # -- inspection -------------------------------------------------------------------
    def variables(self) -> set[str]:
        degs = self.num.degrees()
        out = {n for n, d in zip(self.ring.names, degs) if d > 0}
        if self.den is not None:
            out |= {n for n, d in zip(self.ring.names, self.den.degrees()) if d > 0}
        return out

    def coefficients(self, var: str) -> list["RingElem"]:
        """Coefficients in a level variable, lowest first (nested view)."""
        parts = self.ring._split(self.num, var)
        if self.den is None:
            return parts
        return [self.ring._normalized(c.num, self.den) for c in parts]

    def ff_terms(self) -> dict[tuple[int, ...], FFElem]:
        """Numerator as {exponents without u: F_{q^r} coefficient}."""
        R = self.ring
        ui = R._u_idx
        out: dict[tuple[int, ...], list[int]] = {}
        n = R.field.n
        for exps, c in self.num.to_dict().items():
            if ui is None:
                key, k = tuple(exps), 0
            else:
                key = tuple(e for i, e in enumerate(exps) if i != ui)
                k = exps[ui]
            out.setdefault(key, [0] * n)[k] = int(c)
        return {k: FFElem(R.field, tuple(v)) for k, v in out.items()}

    def to_text(self) -> str:
        from .printing import format_raw

        num = format_raw(self.ring, self.num)
        if self.den is None:
            return num
        den = format_raw(self.ring, self.den)
        if " + " in num:
            num = f"({num})"
        return f"{num}/({den})" if " + " in den or "*" in den else f"{num}/{den}"


    __str__ = to_text

    def __repr__(self):
        return f"{type(self).__name__}({self.to_text()})"


def terms_product(items: Iterable[RingElem], one: RingElem) -> RingElem:
    out = one
    for x in items:
        out = out * x
    return out
