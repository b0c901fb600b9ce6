"""Small named pairings and seeded random module instances for the law suites."""

from __future__ import annotations

import random
from typing import Callable

import numpy as np

from .algebra import (FiniteGroup, ground_algebra, group_algebra, matrix_coalgebra,
                      product_algebra)
from .comodule import (MeasuringPairing, RightModule, canonical_pairing, direct_sum_right,
                       quotient_right, restrict_right_module, stable_closure)
from .coring import coring_from_coalgebra, dual_ring
from .fpmod import ModuleMap, Submodule
from .zn import RingContext, ZnMatrix


def group_coring(n: int, k: int = 2):
    return coring_from_coalgebra(group_algebra(RingContext(n), FiniteGroup.cyclic(k)).coalgebra)


def matrix_coring(n: int, k: int = 2):
    return coring_from_coalgebra(matrix_coalgebra(RingContext(n), k))


def product_pairing(n: int = 4) -> MeasuringPairing:
    """``(C* x R, C)`` for ``C = R[C2]``, kappa the first projection."""
    C = group_coring(n)
    R = C.ring
    D = dual_ring(C)
    A = product_algebra(D, ground_algebra(R))
    kappa = ZnMatrix.from_rows(R, [[1, 0, 0], [0, 1, 0]])
    return MeasuringPairing(A, C, kappa, name="C* x R")


def eps_pairing(n: int = 4) -> MeasuringPairing:
    """``(R eps, R[C2])``: the ground ring acting through the counit only."""
    C = group_coring(n)
    D = dual_ring(C)
    eps = D.unit.vector
    kappa = ZnMatrix.from_array(C.ring, np.asarray([[x] for x in eps], dtype=object))
    return MeasuringPairing(ground_algebra(C.ring), C, kappa, name="R eps")


PAIRINGS: dict[str, Callable[[], MeasuringPairing]] = {
    "canonical-c2-z4": lambda: canonical_pairing(group_coring(4)),
    "canonical-c3-z3": lambda: canonical_pairing(group_coring(3, 3)),
    "canonical-c2-z6": lambda: canonical_pairing(group_coring(6)),
    "canonical-mc2-z2": lambda: canonical_pairing(matrix_coring(2)),
    "canonical-mc2-z3": lambda: canonical_pairing(matrix_coring(3)),
    "product-c2-z4": lambda: product_pairing(4),
    "product-c2-z2": lambda: product_pairing(2),
}

NON_ALPHA: dict[str, Callable[[], MeasuringPairing]] = {
    "eps-only-c2-z4": lambda: eps_pairing(4),
    "eps-only-c2-z3": lambda: eps_pairing(3),
}


def measuring_pairings(include_non_alpha: bool = False) -> dict[str, MeasuringPairing]:
    out = {k: f() for k, f in PAIRINGS.items()}
    if include_non_alpha:
        out.update({k: f() for k, f in NON_ALPHA.items()})
    return out


# ---------------------------------------------------------------------------
# random instances


def _random_vector(M, rng: random.Random) -> list[int]:
    n = M.ring.modulus
    return [rng.randrange(n) for _ in range(M.rank)]


def random_stable_submodule(Mr: RightModule, rng: random.Random, gens: int = 1) -> Submodule:
    return stable_closure(Mr, [_random_vector(Mr.carrier, rng) for _ in range(gens)])


def random_right_module(P: MeasuringPairing, rng: random.Random, max_card: int = 512) -> RightModule:
    """A direct sum of regular, coring and cyclic pieces, possibly divided by a random submodule."""
    A = P.acting
    Areg = RightModule.regular(A)
    pieces = [Areg, P.coring_module]
    mods = []
    card = 1
    for _ in range(rng.randint(1, 2)):
        kind = rng.randrange(3)
        if kind == 2:
            S = random_stable_submodule(Areg, rng)
            piece, _ = quotient_right(Areg, S)
        else:
            piece = pieces[kind]
        c = piece.carrier.cardinality()
        if mods and card * c > max_card:
            break
        mods.append(piece)
        card *= c
    M = mods[0] if len(mods) == 1 else direct_sum_right(*mods)
    if rng.random() < 0.4:
        M, _ = quotient_right(M, random_stable_submodule(M, rng))
    return M


def random_instance(P: MeasuringPairing, rng: random.Random, max_card: int = 512):
    """``(M, submodules, maps)`` for the Rat laws; maps are ``(matrix, target module)``."""
    M = random_right_module(P, rng, max_card)
    subs = [random_stable_submodule(M, rng) for _ in range(2)]
    maps = []
    for S in subs[:1]:
        Q, pi = quotient_right(M, S)
        maps.append((pi.matrix, Q))
    return M, subs, maps


def submodule_inclusions(M: RightModule, S: Submodule):
    """``(N, inc)`` for a stable submodule, for the map law in the other direction."""
    return restrict_right_module(M, S)
