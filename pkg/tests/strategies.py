"""Hypothesis strategies shared by the property suites."""

from hypothesis import strategies as st

from drinfeld_modpoly.fields import FieldCtx
from drinfeld_modpoly.polynomials import poly_ring
from drinfeld_modpoly.twisted import TwistedPoly


def ff_elems(ctx: FieldCtx):
    return st.integers(0, ctx.order - 1).map(ctx.from_int)


def apolys(q: int, max_degree: int = 4):
    return st.lists(st.integers(0, q - 1), max_size=max_degree + 1).map(tuple)


@st.composite
def ring_elems(draw, ring, max_terms: int = 4, max_exp: int = 3):
    """Small random polynomials in T and the g-variables with F_{q^r} coefficients."""
    out = ring.zero
    names = ["T", *ring.g_names] if "T" in ring.names else list(ring.g_names)
    for _ in range(draw(st.integers(0, max_terms))):
        term = ring(draw(ff_elems(ring.field)))
        for n in names:
            k = draw(st.integers(0, max_exp))
            if k:
                term = term * ring.gen(n) ** k
        out = out + term
    return out


@st.composite
def twisted_polys(draw, ring, max_degree: int = 3, monic: bool = False):
    deg = draw(st.integers(0, max_degree))
    coeffs = [draw(ring_elems(ring, max_terms=2, max_exp=2)) for _ in range(deg + 1)]
    if monic:
        coeffs[-1] = ring.one
    return TwistedPoly(ring, coeffs)


B22 = poly_ring(2, 2)
B32 = poly_ring(3, 2)
B23 = poly_ring(2, 3)
