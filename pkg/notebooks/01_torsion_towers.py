# %% [markdown]
# # Torsion towers
#
# The generic rank-r module over B = F_{q^r}[T, g_1, ..., g_{r-1}] has
# phi_T = T + g_1 t + ... + g_{r-1} t^{r-1} + t^r.  Its P-torsion points live in
# a tower of extensions of B, built one root at a time.  Every level is a
# monic polynomial in its own variable, so arithmetic is exact and reductions
# are canonical.

# %%
from drinfeld_modpoly import DrinfeldModule, height, torsion_basis
from drinfeld_modpoly.isogeny import frobenius_isogeny

phi = DrinfeldModule.generic(2, 2)
print(phi)

# %% [markdown]
# For P = T the additive polynomial phi_T(X) has degree 4.  Dividing out the
# root 0 leaves a cubic for the first generator; dividing out its A/PA-span
# leaves a quadratic for the second.

# %%
wb = torsion_basis(phi, (0, 1))
print(wb.describe())

# %% [markdown]
# All four torsion points are distinct and killed by phi_T.

# %%
pts = wb.points()
phi_T = wb.module.phi_a((0, 1))
print(len(set(pts)), all(phi_T(x).is_zero() for x in pts))

# %% [markdown]
# Modulo P the module has height 1, so its torsion has rank r - 1.  The
# generator w2 reduces to 0 and w1 to a root y1 of the reduced tower.

# %%
phibar = phi.reduce((0, 1))
print("height:", height(phibar, (0, 1)))
print([str(wb.reduce(w)) for w in wb.gens])

# %% [markdown]
# The isogeny whose kernel is spanned by w2 reduces to a pure power of t, and
# its codomain reduces to the module with every g_i raised to the |P|.

# %%
iso = frobenius_isogeny(wb)
print("F       =", iso.f)
print("F mod P =", wb.reduce_twisted(iso.f))
print("codomain mod P:", wb.reduce_twisted(iso.codomain.phi_T))

# %% [markdown]
# Larger cases build in well under a second.

# %%
import time

for q, r, P in [(3, 2, (0, 1)), (2, 2, (1, 1, 1)), (2, 3, (0, 1))]:
    start = time.perf_counter()
    basis = torsion_basis(DrinfeldModule.generic(q, r), P)
    print(q, r, P, "tower degree", basis.tower.degree, f"{time.perf_counter() - start:.2f}s")
