# %% [markdown]
# # Coalgebras, corings and their dual rings
#
# A coalgebra over R is a coring over the ground algebra.  The left dual ring
# of a coring carries the opposite of convolution when the base is R.

# %%
from itertools import product

from corings import (FiniteGroup, RingContext, coring_from_coalgebra, dual_algebra, dual_ring,
                     group_algebra, matrix_coalgebra, verify_bialgebra, verify_coalgebra,
                     verify_coring)

R = RingContext(6)
Mc = matrix_coalgebra(R, 2)
print(verify_coalgebra(Mc))

# %% [markdown]
# The dual of the matrix coalgebra multiplies like matrix units:
# `e_ij* e_kl* = [j == k] e_il*`.

# %%
D = dual_algebra(Mc)
names = ["e11", "e12", "e21", "e22"]
for p, q in product(range(4), repeat=2):
    f = D.element_from_matrix([[int(i == p) for i in range(4)]])
    g = D.element_from_matrix([[int(i == q) for i in range(4)]])
    row = list(D.to_matrix(D.mul(f, g)).array[0])
    if any(row):
        print(f"{names[p]}* {names[q]}* = {names[row.index(1)]}*")

# %% [markdown]
# Bialgebras: the group algebra of C2 x C2 over GF(2).

# %%
V4 = FiniteGroup.direct_product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(2))
H = group_algebra(RingContext(2), V4)
print(verify_bialgebra(H).passed, "rank", H.algebra.rank)

# %% [markdown]
# A broken counit is caught with a witness.

# %%
from corings import Coalgebra, ModuleMap, ZnMatrix  # noqa: E402

bad = Coalgebra(Mc.carrier, Mc.comult,
                ModuleMap(Mc.carrier, Mc.counit.codomain, ZnMatrix.from_rows(R, [[1, 1, 1, 1]])),
                "bad counit")
rep = verify_coalgebra(bad)
print(rep.passed, [(c.name, c.witness) for c in rep.failures()])

# %% [markdown]
# The left dual ring of the coring and its unit (the counit).

# %%
C = coring_from_coalgebra(Mc)
print(verify_coring(C).passed)
L = dual_ring(C, "left")
print("unit of *C:", L.to_matrix(L.unit).array.tolist())
