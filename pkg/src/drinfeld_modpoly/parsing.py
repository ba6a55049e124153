"""Plain-text polynomial input: a small whitelisted subset of Python expression syntax.

``^`` means power.  Allowed: integers, names, ``+ - * / ^``, parentheses.
"""

from __future__ import annotations

import ast
import re
from typing import Callable, Mapping

from .fields import a_add, a_mul, a_trim
from .invariants import invariant_monoid_basis
from .polynomials import PolyRing, from_ff_terms, poly_ring


class ParseError(ValueError):
    pass


_ALLOWED = re.compile(r"^[A-Za-z0-9_+\-*/^() \t]*$")


def _tree(text: str) -> ast.expr:
    if not text or not text.strip():
        raise ParseError("empty expression")
    if not _ALLOWED.match(text):
        raise ParseError(f"unexpected character in {text!r}")
    if "**" in text:
        raise ParseError("use ^ for powers")
    try:
        return ast.parse(text.replace("^", "**"), mode="eval").body
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}") from exc


def _evaluate(node: ast.expr, name: Callable, const: Callable, allow_div: bool):
    def ev(n):
        if isinstance(n, ast.Constant) and type(n.value) is int:
            return const(n.value)
        if isinstance(n, ast.Name):
            return name(n.id)
        if isinstance(n, ast.UnaryOp) and isinstance(n.op, ast.USub):
            return const(0) - ev(n.operand)
        if isinstance(n, ast.UnaryOp) and isinstance(n.op, ast.UAdd):
            return ev(n.operand)
        if isinstance(n, ast.BinOp):
            if isinstance(n.op, ast.Pow):
                e = n.right
                if not (isinstance(e, ast.Constant) and type(e.value) is int and e.value >= 0):
                    raise ParseError("exponents must be non-negative integer literals")
                return ev(n.left) ** e.value
            a, b = ev(n.left), ev(n.right)
            if isinstance(n.op, ast.Add):
                return a + b
            if isinstance(n.op, ast.Sub):
                return a - b
            if isinstance(n.op, ast.Mult):
                return a * b
            if isinstance(n.op, ast.Div) and allow_div:
                return a / b
        raise ParseError(f"unsupported syntax: {ast.dump(n)}")

    return ev(node)


class _APoly:
    """Minimal wrapper so tuple polynomials over F_q work with the evaluator."""

    def __init__(self, c, q):
        self.c, self.q = a_trim(c, q), q

    def __add__(self, o):
        return _APoly(a_add(self.c, o.c, self.q), self.q)

    def __sub__(self, o):
        return _APoly(a_add(self.c, tuple((-x) % self.q for x in o.c), self.q), self.q)

    def __mul__(self, o):
        return _APoly(a_mul(self.c, o.c, self.q), self.q)

    def __pow__(self, e):
        out = _APoly((1,), self.q)
        for _ in range(e):
            out = out * self
        return out


def parse_apoly(text: str, q: int) -> tuple[int, ...]:
    """A polynomial in T over F_q as a coefficient tuple (lowest degree first)."""

    def name(n):
        if n != "T":
            raise ParseError(f"unknown name {n!r} (only T is allowed here)")
        return _APoly((0, 1), q)

    return _evaluate(_tree(text), name, lambda k: _APoly((k % q,), q), allow_div=False).c


def parse_element(text: str, ring: PolyRing, symbols: Mapping | None = None, allow_div: bool = False):
    """An element of ``ring``; names are ring variables or entries of ``symbols``."""
    symbols = dict(symbols or {})

    def name(n):
        if n in symbols:
            return ring(symbols[n])
        if n in ring.names:
            return ring.gen(n)
        raise ParseError(f"unknown name {n!r}")

    try:
        return _evaluate(_tree(text), name, ring, allow_div)
    except ZeroDivisionError as exc:
        raise ParseError("division by zero") from exc


def generator_symbols(q: int, r: int, ring: PolyRing | None = None) -> dict:
    """Generator name -> g-monomial, for the monoid basis of (q, r)."""
    basis = invariant_monoid_basis(q, r)
    ring = ring or poly_ring(q, r)
    return dict(zip(basis.names, basis.generators(ring)))


def parse_invariant(text: str, q: int, r: int):
    """J given by generator names (j, J07, ...) and/or g-variables, with A-coefficients."""
    B = poly_ring(q, r)
    J = parse_element(text, B, generator_symbols(q, r, B))
    if J.is_zero():
        raise ParseError("J must be nonzero")
    return J


def parse_upoly(text: str, q: int, r: int, P: tuple[int, ...] | None = None) -> list:
    """A polynomial in X with coefficients in B (or B/PB), as a coefficient list lowest first."""
    BX = poly_ring(q, r, P, ("X",))
    B = poly_ring(q, r, P)
    f = parse_element(text, BX, generator_symbols(q, r, BX))
    names = [n for n in BX.names if n != "u"]
    xi = names.index("X")
    by_degree: dict[int, dict] = {}
    for exps, c in f.ff_terms().items():
        key = tuple(e for i, e in enumerate(exps) if i != xi)
        by_degree.setdefault(exps[xi], {})[key] = c
    if not by_degree:
        return [B.zero]
    return [from_ff_terms(B, by_degree.get(k, {})) for k in range(max(by_degree) + 1)]
