# %% [markdown]
# # Invariants, isomorphism and a separating J
#
# Monic modules psi and psi' are isomorphic exactly when a constant lambda in
# F_{q^r}^* scales a_i to lambda^{q^i - 1} a_i.  Invariants are the
# polynomials in the g_i fixed by that scaling; the monomial ones are spanned
# by a finite monoid basis.

# %%
from drinfeld_modpoly.invariants import (
    distinguishing_invariant,
    invariant_monoid_basis,
    is_isomorphic,
    lambda_twist,
    separation_table,
)
from drinfeld_modpoly.parsing import parse_element
from drinfeld_modpoly.polynomials import poly_ring

for q, r in [(2, 2), (3, 2), (2, 3), (3, 3), (2, 4)]:
    basis = invariant_monoid_basis(q, r)
    print(q, r, len(basis), basis.names[:6])

# %% [markdown]
# Three ways to decide isomorphism agree: a Bezout solve for lambda, a sweep
# over F_{q^r}^*, and comparing every generator's value.

# %%
B = poly_ring(2, 3)
psi = (parse_element("T+1", B), parse_element("1/T", B, allow_div=True))
twisted = lambda_twist(psi, B.field.gen)
other = (parse_element("T", B), parse_element("1/T", B, allow_div=True))
for method in ("lambda", "sweep", "invariants"):
    print(method, is_isomorphic(psi, twisted, method=method), is_isomorphic(psi, other, method=method))

# %% [markdown]
# For a finite set of pairwise non-isomorphic modules a single A-linear
# combination of generators takes distinct values on all of them.

# %%
texts = [("1", "T"), ("T", "1"), ("T+1", "1/T"), ("0", "T^2+1"), ("T^2", "T/(T+1)")]
mods = [tuple(parse_element(t, B, allow_div=True) for t in pair) for pair in texts]
J = distinguishing_invariant(mods)
print("J =", J)
for i, k, ok in separation_table(J, mods):
    print(f"  {i + 1} vs {k + 1}: {'distinct' if ok else 'EQUAL'}")
