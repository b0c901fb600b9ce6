"""Exhaustive enumeration over finite modules.

Elements are indexed through the cyclic decomposition ``M = (+) Z/d_i``: index
``k`` stands for ``sum_i digit_i(k) g_i`` in mixed radix.  Translations are
then index permutations, so subsets (and in particular submodules) can be
handled as boolean masks.
"""

from __future__ import annotations

from functools import cached_property
from math import prod
from typing import Iterator, Optional

import numpy as np

from .fpmod import Element, FPModule, Submodule


class FiniteIndex:
    """Bijection between ``range(|M|)`` and the elements of a finite module."""

    def __init__(self, M: FPModule):
        self.module = M
        cg = M.cyclic_generators
        self.orders = np.array([d for _, d in cg], dtype=np.int64)
        self.gens = [v for v, _ in cg]
        self.size = int(prod(int(d) for d in self.orders)) if cg else 1
        m = len(cg)
        idx = np.arange(self.size, dtype=np.int64)
        digits = np.zeros((self.size, m), dtype=np.int64)
        rest = idx.copy()
        for i in reversed(range(m)):
            digits[:, i] = rest % self.orders[i]
            rest //= self.orders[i]
        self.digits = digits
        radix = np.ones(m, dtype=np.int64)
        for i in reversed(range(m - 1)):
            radix[i] = radix[i + 1] * self.orders[i + 1]
        self.radix = radix
        self._perms: dict[int, np.ndarray] = {}

    @cached_property
    def vectors(self) -> list[tuple[int, ...]]:
        M = self.module
        n = M.ring.modulus
        if not self.gens:
            return [M.zero().vector]
        G = np.array(self.gens, dtype=object)
        raw = (self.digits.astype(object) @ G) % n
        return [M.normal_form(row) for row in raw]

    @cached_property
    def _lookup(self) -> dict:
        return {v: i for i, v in enumerate(self.vectors)}

    def index(self, x) -> int:
        v = x.vector if isinstance(x, Element) else self.module.normal_form(x)
        return self._lookup[v]

    def element(self, i: int) -> Element:
        return Element(self.module, self.vectors[i])

    def translation(self, t: int) -> np.ndarray:
        """Permutation ``p`` with ``p[j] = index(x_j - x_t)``; ``mask[p]`` shifts by ``x_t``."""
        p = self._perms.get(t)
        if p is None:
            d = (self.digits - self.digits[t]) % self.orders
            p = self._perms[t] = d @ self.radix
        return p

    def mask_of(self, S: Submodule) -> np.ndarray:
        """Boolean mask of the elements of S (by closing its generators)."""
        mask = np.zeros(self.size, dtype=bool)
        mask[0] = True
        for g in S.generators:
            mask = self.join_cyclic(mask, self.index(g))
        return mask

    def join_cyclic(self, mask: np.ndarray, v: int) -> np.ndarray:
        """``S + <x_v>`` for a subgroup S given by its mask."""
        return _join(self, mask, v)

    def members(self, mask: np.ndarray) -> list[int]:
        return [int(i) for i in np.flatnonzero(mask)]

    def mask_to_submodule(self, mask: np.ndarray) -> Submodule:
        """A Submodule with a small generating set for the masked subgroup."""
        gens = []
        cur = np.zeros(self.size, dtype=bool)
        cur[0] = True
        for i in np.flatnonzero(mask):
            if not cur[i]:
                gens.append(self.vectors[int(i)])
                cur = self.join_cyclic(cur, int(i))
            if (cur == mask).all():
                break
        return Submodule(self.module, gens)


def cyclic_masks(ix: FiniteIndex) -> list[tuple[int, np.ndarray]]:
    """One (generator index, mask) pair per distinct cyclic submodule."""
    seen = {}
    zero = np.zeros(ix.size, dtype=bool)
    zero[0] = True
    for v in range(ix.size):
        m = ix.join_cyclic(zero, v)
        key = np.packbits(m).tobytes()
        if key not in seen:
            seen[key] = (v, m)
    return list(seen.values())


def all_submodule_masks(ix: FiniteIndex, limit: Optional[int] = None) -> list[np.ndarray]:
    """Every submodule as a mask, ordered by discovery (breadth first by generator count).

    Stops once ``limit`` submodules have been found, if given.
    """
    zero = np.zeros(ix.size, dtype=bool)
    zero[0] = True
    cyc = cyclic_masks(ix)
    found = {np.packbits(zero).tobytes(): zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for S in frontier:
            for v, Z in cyc:
                if (Z & ~S).any():
                    T = _join(ix, S, v)
                    key = np.packbits(T).tobytes()
                    if key not in found:
                        found[key] = T
                        nxt.append(T)
                        if limit is not None and len(found) >= limit:
                            return list(found.values())
        frontier = nxt
    return list(found.values())


def _join(ix: FiniteIndex, S: np.ndarray, v: int) -> np.ndarray:
    """``S + <x_v>`` for a subgroup S: union of the translates ``S + k x_v``."""
    perm = ix.translation(v)
    out = S.copy()
    cur = S
    while True:
        cur = cur[perm]
        if cur[0]:
            break
        out |= cur
    return out


def all_submodules(M: FPModule, limit: Optional[int] = None) -> list[Submodule]:
    ix = FiniteIndex(M)
    return [ix.mask_to_submodule(m) for m in all_submodule_masks(ix, limit)]


def iter_elements(M: FPModule) -> Iterator[Element]:
    ix = FiniteIndex(M)
    for i in range(ix.size):
        yield ix.element(i)
