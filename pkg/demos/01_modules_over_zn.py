# %% [markdown]
# # Modules over Z/n
#
# Every carrier in the package is a finitely presented module over Z/n: a
# rank together with relations.  Submodules are compared through a canonical
# (Howell) basis, so two generating sets giving the same submodule compare
# equal.

# %%
from corings import (RingContext, ZnMatrix, Submodule, cyclic_module, decompose, direct_sum,
                     free_module, hom_module, is_projective, smith_normal_form, solve_linear,
                     tensor)

R = RingContext(12)
A = ZnMatrix.from_rows(R, [[2, 4], [6, 8]])
S = smith_normal_form(A)
print("diagonal of the Smith form:", S.divisors)
print("cokernel (Z/12)^2 / colspan(A):", S.cokernel_factors())

# %% [markdown]
# Solving `A x = b` over Z/12 either returns the least solution or None.

# %%
print(solve_linear(A, [2, 6]))
print(solve_linear(A, [1, 0]))

# %% [markdown]
# Cyclic pieces, sums and tensor products.  Z/4 (x) Z/6 over Z/12 is Z/2.

# %%
Z4, Z6 = cyclic_module(R, 4), cyclic_module(R, 6)
print("Z/4 (+) Z/6:", decompose(direct_sum(Z4, Z6)))
print("Z/4 (x) Z/6:", decompose(tensor(Z4, Z6)))
print("|Hom(Z/4, Z/6)| =", hom_module(Z4, Z6).cardinality())
print("Z/4 projective over Z/12?", is_projective(Z4), " Z/2?", is_projective(cyclic_module(R, 2)))

# %% [markdown]
# Submodules are equal when they have the same elements.

# %%
F = free_module(RingContext(4), 2)
print(Submodule(F, [[1, 1], [2, 0]]) == Submodule(F, [[1, 3], [0, 2]]))
print(Submodule(F, [[2, 0]]).cardinality(), "elements in <(2,0)>")
