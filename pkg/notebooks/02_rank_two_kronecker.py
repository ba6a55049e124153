# %% [markdown]
# # Rank 2: the classical shape of the congruence
#
# For rank 2 the invariant ring is A[j] with j = g1^{q+1}.  The modular
# polynomial of type A/PA is the product of X - j(phi') over the |P| + 1
# isogenies with kernel a line in phi[P].

# %%
from drinfeld_modpoly import kronecker_verify, modular_poly, poly_ring
from drinfeld_modpoly.invariants import invariant_monoid_basis
from drinfeld_modpoly.modular import format_in_invariants

B = poly_ring(2, 2)
j = B.g(1) ** 3
mp = modular_poly(j, (0, 1), 1, check_distinct=True)
print(mp.certificate(invariant_monoid_basis(2, 2)))

# %% [markdown]
# Reducing modulo T and comparing with (X - j^2)(X^2 - j):

# %%
report = kronecker_verify(j, (0, 1), 1, lhs=mp.coeffs)
print(report)

# %% [markdown]
# The same holds for q = 3 and for the degree-two prime T^2 + T + 1.

# %%
B3 = poly_ring(3, 2)
for J, P in [(B3.g(1) ** 4, (0, 1)), (j, (1, 1, 1))]:
    mp = modular_poly(J, P, 1)
    rep = kronecker_verify(J, P, 1, lhs=mp.coeffs)
    print(f"q={J.ring.q} P={P} degree {mp.degree}: {'PASS' if rep.passed else 'FAIL'}")
    print("  mod P:", rep.to_text().splitlines()[6])

# %% [markdown]
# Written over the generator j, with coefficients in A:

# %%
print(format_in_invariants(modular_poly(j, (1, 1, 1), 1).coeffs, invariant_monoid_basis(2, 2)))
