# %% [markdown]
# # Measuring pairings and rational parts
#
# An algebra acting on a coring through a ring map into the left dual gives a
# pairing.  When the carrier is projective and the map is dense (the alpha
# condition), each module has a well-defined rational part: the elements
# whose action comes from a coaction.

# %%
from corings import RightModule, alpha_check, finite_subcomodule, rat, rat_by_scan, rationality_profile
from corings.corpus import eps_pairing, product_pairing

P = product_pairing(4)  # C* x R acting on R[C2] over Z/4
print(alpha_check(P))

# %% [markdown]
# On the regular module the rational part is `C* x 0`; an element scan agrees.

# %%
M = RightModule.regular(P.acting)
rp = rat(M, P)
print("generators:", rp.submodule.generators, " whole?", rp.is_whole)
print("scan agrees:", rat_by_scan(M, P) == rp.submodule)

# %% [markdown]
# Six independent characterizations of rationality agree on each element.

# %%
for v in [(0, 0, 0), (1, 2, 0), (0, 0, 1)]:
    print(v, rationality_profile(v, M, P, rp).data["legs"])

# %% [markdown]
# A rational element sits in a finitely generated subcomodule spanned by
# the left tensor factors of its coaction.

# %%
fs = finite_subcomodule([(1, 3, 0)], rp)
print("subcomodule:", fs.submodule.generators, "components:", fs.generator_count)

# %% [markdown]
# Acting only through the counit is not dense, and rational parts are refused.

# %%
Q = eps_pairing(4)
print(alpha_check(Q).data["diagnosis"])
