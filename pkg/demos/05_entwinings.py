# %% [markdown]
# # Doi-Koppinen data, entwinings and their corings
#
# A bialgebra H, an H-comodule algebra A and an H-module coalgebra C give an
# entwining `psi: C (x) A -> A (x) C`, which makes `A (x) C` an A-coring.
# Its left dual is the Koppinen ring of maps C -> A under a twisted product.

# %%
from corings import (coring_from_entwining, dk_corpus, dk_to_entwining, koppinen_ring,
                     phi_isomorphism, smash_ring, verify_coring, verify_entwining)
from corings.entwine import entwined_round_trip, regular_entwined_module

corpus = dk_corpus(4)
for name, D in corpus.items():
    E = dk_to_entwining(D)
    C = coring_from_entwining(E)
    print(f"{name:16s} ranks H={D.H.rank} A={E.A.rank} C={E.C.rank}  "
          f"entwining={verify_entwining(E).passed} coring={verify_coring(C).passed}")

# %% [markdown]
# The Koppinen ring is isomorphic to the left dual ring of `A (x) C`.

# %%
E = dk_to_entwining(corpus["relative-hopf"])
K = koppinen_ring(E)
iso = phi_isomorphism(E, K)
print(iso.report)

# %% [markdown]
# The smash product `A # C*` maps onto the Koppinen ring when C is free.

# %%
S = smash_ring(corpus["doi-hc"])
print("rank of A # C*:", S.rank, " beta bijective:", S.beta.is_isomorphism())

# %% [markdown]
# Entwined modules match rational modules over the Koppinen ring.

# %%
print(entwined_round_trip(regular_entwined_module(E)))
