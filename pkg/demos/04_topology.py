# %% [markdown]
# # Orthogonals, closures and density
#
# A pairing `<-, ->: V x W -> R` gives orthogonal complements in both
# directions.  Closure is the double orthogonal; a subset is dense when its
# orthogonal vanishes.

# %%
from corings import (Submodule, canonical_pairing, closure, double_orthogonal_law, is_dense,
                     orthogonal_of_subset, topology_coincidence)
from corings.corpus import group_coring, matrix_coring

P = canonical_pairing(group_coring(4))
V = P.pairing.V
eps = Submodule(V, [[1, 1]])  # the counit of R[C2]
print("orthogonal of the counit:", orthogonal_of_subset(P.pairing, eps).generators)
print("closure:", closure(P.pairing, eps).generators, " dense?", is_dense(P.pairing, eps))
print("the whole dual is dense:", is_dense(P.pairing, V.whole()))

# %% [markdown]
# The closure law checked over every submodule of the dual of M^c_2 over GF(3).

# %%
rep = double_orthogonal_law(canonical_pairing(matrix_coring(3)))
print(rep.passed, rep.data)

# %% [markdown]
# The weak topology and the neighborhoods built from the coring coincide;
# the check lists witnesses both ways.

# %%
rep = topology_coincidence(P)
print(rep.passed, len(rep.data["annihilator_witnesses"]), len(rep.data["factor_witnesses"]))
