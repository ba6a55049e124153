"""Exact computation of modular polynomials for Drinfeld F_q[T]-modules of rank r."""

from .drinfeld import DrinfeldModule, height, reduced_torsion, torsion_basis
from .fields import FFElem, FieldCtx
from .invariants import (
    InvariantElem,
    MonoidBasis,
    distinguishing_invariant,
    eval_invariant,
    invariant_monoid_basis,
    is_isomorphic,
)
from .isogeny import enumerate_subspaces, frobenius_isogeny, gaussian_binomial, kernel_polynomial, pushforward
from .modular import (
    CongruenceReport,
    ModularPoly,
    express_in_invariants,
    extract_sep_from_s1,
    full_modular_poly,
    kronecker_verify,
    modular_poly,
    special_poly_mod_p,
)
from .polynomials import is_invariant, mpoly_mod_prime, poly_ring
from .tower import Tower
from .twisted import TwistedPoly

__all__ = [
    "CongruenceReport",
    "DrinfeldModule",
    "FFElem",
    "FieldCtx",
    "InvariantElem",
    "ModularPoly",
    "MonoidBasis",
    "Tower",
    "TwistedPoly",
    "distinguishing_invariant",
    "enumerate_subspaces",
    "eval_invariant",
    "express_in_invariants",
    "extract_sep_from_s1",
    "frobenius_isogeny",
    "full_modular_poly",
    "gaussian_binomial",
    "height",
    "invariant_monoid_basis",
    "is_invariant",
    "is_isomorphic",
    "kernel_polynomial",
    "kronecker_verify",
    "modular_poly",
    "mpoly_mod_prime",
    "poly_ring",
    "pushforward",
    "reduced_torsion",
    "special_poly_mod_p",
    "torsion_basis",
]
