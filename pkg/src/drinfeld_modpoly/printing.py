"""Canonical text for ring elements and polynomials in X or tau."""

from __future__ import annotations

from typing import Sequence

from .fields import FFElem, a_to_str
from .triangular import degrevlex_key


def format_ff(c: FFElem) -> str:
    """Coefficient text: an int for the prime field, otherwise a polynomial in u."""
    if c.ctx.n == 1 or not any(c.res[1:]):
        return str(c.res[0])
    return a_to_str(c.res, "u").replace(" + ", "+")


def format_monomial(names: Sequence[str], exps: Sequence[int]) -> str:
    parts = []
    for n, e in zip(names, exps):
        if e == 1:
            parts.append(n)
        elif e:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def format_term(coeff: str, mono: str) -> str:
    if not mono:
        return f"({coeff})" if "+" in coeff else coeff
    if coeff == "1":
        return mono
    if "+" in coeff:
        coeff = f"({coeff})"
    return f"{coeff}*{mono}"


def format_raw(ring, poly) -> str:
    """Text of a flint polynomial of ``ring`` in canonical order."""
    if poly.is_zero():
        return "0"
    from .triangular import RingElem

    terms = RingElem(ring, poly).ff_terms()
    names_wo_u = [n for n in ring.names if n != "u"]
    base_names = list(ring.printable_names)
    tower_names = [n for n in reversed(ring.level_names) if n not in ("u",) and n not in base_names]
    base_idx = [names_wo_u.index(n) for n in base_names]
    tower_idx = [names_wo_u.index(n) for n in tower_names]
    rows = []
    for exps, c in terms.items():
        b = [exps[i] for i in base_idx]
        t = [exps[i] for i in tower_idx]
        key = (tuple(-x for x in t), degrevlex_key(b))
        mono = "*".join(x for x in (format_monomial(base_names, b), format_monomial(tower_names, t)) if x)
        rows.append((key, format_term(format_ff(c), mono)))
    rows.sort(key=lambda kv: kv[0])
    return " + ".join(text for _, text in rows)


def format_upoly(coeffs: Sequence, var: str = "X") -> str:
    """Polynomial sum c_k var^k, highest degree first; coefficients are ring elements."""
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c.is_zero():
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        text = c.to_text()
        if not mono:
            parts.append(text)
        elif text == "1":
            parts.append(mono)
        elif " + " in text or "/" in text:
            parts.append(f"({text})*{mono}")
        else:
            parts.append(f"{text}*{mono}")
    return " + ".join(parts) if parts else "0"


def format_twisted(coeffs: Sequence, var: str = "t") -> str:
    """Twisted polynomial f0 + f1*t + ..., lowest degree first."""
    parts = []
    for k, c in enumerate(coeffs):
        if c.is_zero():
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        text = c.to_text()
        if not mono:
            parts.append(text)
        elif text == "1":
            parts.append(mono)
        elif " + " in text or "/" in text:
            parts.append(f"({text})*{mono}")
        else:
            parts.append(f"{text}*{mono}")
    return " + ".join(parts) if parts else "0"
