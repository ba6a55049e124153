# %% [markdown]
# # Rank 3 over F_2 with P = T
#
# The invariant monoid has four generators J07, J12, J41, J70.  Take
# J = J12 = g1 g2^2.  There are seven lines and seven planes in (A/TA)^3,
# so both modular polynomials of type (A/TA)^s for s = 1, 2 have degree 7.

# %%
from drinfeld_modpoly import extract_sep_from_s1, kronecker_verify, modular_poly, poly_ring, special_poly_mod_p
from drinfeld_modpoly.invariants import invariant_monoid_basis
from drinfeld_modpoly.modular import case_one_factor, factor_evidence, format_in_invariants
from drinfeld_modpoly.printing import format_upoly

B = poly_ring(2, 3)
basis = invariant_monoid_basis(2, 3)
print(dict(zip(basis.names, map(str, basis.generators(B)))))
J12 = B.g(1) * B.g(2) ** 2

phi1 = modular_poly(J12, (0, 1), 1)
phi2 = modular_poly(J12, (0, 1), 2)
print(phi1.degree, phi2.degree, phi1.invariant, phi2.invariant)

# %% [markdown]
# Both congruence forms hold exactly for s = 1 and s = 2.

# %%
for s, mp in [(1, phi1), (2, phi2)]:
    print(kronecker_verify(J12, (0, 1), s, lhs=mp.coeffs))
    print()

# %% [markdown]
# The separable part for J12^2 and s = 1 is a cubic.  It comes out the same
# from the reduced module directly, from the s = 1 polynomial, and from the
# s = 2 polynomial.

# %%
a = special_poly_mod_p(J12**2, (0, 1), 1)
b = extract_sep_from_s1(phi1.mod_p(), J12, (0, 1))
c = case_one_factor(phi2.mod_p(), J12, (0, 1), 2)
print(a == b == c)
print(format_upoly(a))
print(format_in_invariants(a, basis))

# %% [markdown]
# Specializing g1, g2 to constants and factoring gives evidence, not proof,
# about the irreducibility of this cubic.

# %%
for e in factor_evidence(a, 6):
    print(e.to_text())
