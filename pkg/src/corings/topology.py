"""Pairings, orthogonals, closures and the finite/weak/C-adic topologies.

A pairing ``(V, W)`` is a bilinear form ``V x W -> U`` stored as a linear map
``V (x) W -> U`` (``U`` is the ground ring unless stated otherwise).  On finite
modules the finite topology is determined by the single finite set ``W``, so
``closure(X) = X + Ke(kappa)``.

>>> from corings.zn import RingContext
>>> from corings.algebra import group_algebra, FiniteGroup
>>> C = group_algebra(RingContext(4), FiniteGroup.cyclic(2)).coalgebra
>>> P = evaluation_pairing(C.carrier)
>>> eps = P.V.submodule([C.counit.matrix.entries])
>>> [list(g) for g in orthogonal_of_subset(P, eps).generators]
[[1, 3]]
"""

from __future__ import annotations

import random
from typing import Iterable, Optional, Sequence

import numpy as np

from .enumeration import FiniteIndex, all_submodule_masks
from .errors import AxiomViolation, DimensionMismatch, RingMismatch, SubmoduleMismatch
from .fpmod import (Element, FPModule, ModuleMap, Submodule, direct_sum, dual, free_module,
                    ground_module, hom_module, kernel_of_map, preimage, tensor)
from .report import Report
from .zn import ZnMatrix


class Pairing:
    """A bilinear form ``<v, w>`` with values in ``U``."""

    def __init__(self, V: FPModule, W: FPModule, form, values: Optional[FPModule] = None,
                 name: str = ""):
        if V.ring != W.ring:
            raise RingMismatch("pairing across rings")
        self.V, self.W = V, W
        self.ring = V.ring
        self.values = values if values is not None else ground_module(V.ring)
        VW = tensor(V, W)
        if isinstance(form, ModuleMap):
            mat = form.matrix
        elif isinstance(form, ZnMatrix):
            mat = form
        else:
            mat = ZnMatrix.from_rows(self.ring, form)
        if mat.shape != (self.values.rank, VW.rank):
            raise DimensionMismatch("form must be a map V (x) W -> U")
        self.form = ModuleMap(VW, self.values, mat)
        self.name = name
        u = self.values.rank
        self._B = np.asarray(mat.array, dtype=object).reshape(u, V.rank, W.rank)

    # --- evaluation -------------------------------------------------------------
    def evaluate(self, v, w) -> Element:
        vv = np.asarray(v.vector if isinstance(v, Element) else v, dtype=object)
        wv = np.asarray(w.vector if isinstance(w, Element) else w, dtype=object)
        return self.values.element(np.einsum("uij,i,j->u", self._B, vv, wv))

    def __call__(self, v, w) -> Element:
        return self.evaluate(v, w)

    def row_map(self, v) -> ZnMatrix:
        """Matrix of ``<v, ->: W -> U``."""
        vv = np.asarray(v.vector if isinstance(v, Element) else v, dtype=object)
        return ZnMatrix.from_array(self.ring, np.einsum("uij,i->uj", self._B, vv))

    def column_map(self, w) -> ZnMatrix:
        """Matrix of ``<-, w>: V -> U``."""
        wv = np.asarray(w.vector if isinstance(w, Element) else w, dtype=object)
        return ZnMatrix.from_array(self.ring, np.einsum("uij,j->ui", self._B, wv))

    @property
    def kappa(self) -> ModuleMap:
        """``V -> Hom(W, U)``, ``v -> <v, ->``."""
        H = hom_module(self.W, self.values)
        return ModuleMap.from_images(self.V, H, [H.from_matrix(self.row_map(g)) for g in self.V.gens()])

    @property
    def chi(self) -> ModuleMap:
        """``W -> Hom(V, U)``, ``w -> <-, w>``."""
        H = hom_module(self.V, self.values)
        return ModuleMap.from_images(self.W, H, [H.from_matrix(self.column_map(g)) for g in self.W.gens()])

    def verify(self) -> Report:
        rep = Report(f"pairing {self.name}".strip())
        H = self.kappa.codomain
        bad = None
        for i, v in enumerate(self.V.gens()):
            f = H.to_map(self.kappa(v))
            for j, w in enumerate(self.W.gens()):
                if f(w) != self.evaluate(v, w):
                    bad = {"v": i, "w": j}
        rep.add("kappa agrees with the form", bad is None, bad)
        H2 = self.chi.codomain
        bad = None
        for j, w in enumerate(self.W.gens()):
            f = H2.to_map(self.chi(w))
            for i, v in enumerate(self.V.gens()):
                if f(v) != self.evaluate(v, w):
                    bad = {"v": i, "w": j}
        rep.add("chi agrees with the form", bad is None, bad)
        return rep

    def __repr__(self):
        return f"Pairing({self.name or 'unnamed'}, |V| rank {self.V.rank}, |W| rank {self.W.rank})"


def evaluation_pairing(W: FPModule) -> Pairing:
    """``(W*, W)`` with ``<f, w> = f(w)``."""
    D = dual(W)
    mats = [D.to_map(g).matrix.array[0] for g in D.gens()]
    form = [[int(mats[i][j]) for i in range(D.rank) for j in range(W.rank)]]
    return Pairing(D, W, form, name="evaluation")


def pairing_from_kappa(V: FPModule, W: FPModule, kappa_rows: Sequence[Sequence[int]],
                       name: str = "") -> Pairing:
    """Pairing with ``<v_i, w_j> = kappa_rows[i][j]``."""
    form = [[int(kappa_rows[i][j]) for i in range(V.rank) for j in range(W.rank)]]
    return Pairing(V, W, form, name=name)


def zero_pairing(V: FPModule, W: FPModule) -> Pairing:
    return Pairing(V, W, [[0] * (V.rank * W.rank)], name="zero")


def trivial_pairing(ring) -> Pairing:
    R = free_module(ring, 1)
    return Pairing(R, R, [[1]], name="R")


def as_pairing(P) -> Pairing:
    return P if isinstance(P, Pairing) else P.pairing


# ---------------------------------------------------------------------------
# orthogonals and closures


def _require(S: Submodule, M: FPModule, what: str):
    if S.parent != M:
        raise SubmoduleMismatch(f"{what} is not a submodule of the expected module")


def _annihilator(P: Pairing, gens: Sequence, side: str) -> Submodule:
    U = P.values
    target = P.W if side == "W" else P.V
    if not gens:
        return target.whole()
    S = direct_sum(*([U] * len(gens)))
    rows = []
    for g in gens:
        M = P.row_map(g) if side == "W" else P.column_map(g)
        rows.extend(M.tolist())
    return kernel_of_map(ModuleMap(target, S, ZnMatrix.from_rows(P.ring, rows), check=False))


def orthogonal_of_subset(P, X: Submodule) -> Submodule:
    """``X^perp = {w : <x, w> = 0 for all x in X}`` inside W."""
    P = as_pairing(P)
    _require(X, P.V, "X")
    return _annihilator(P, X.generators, "W")


def orthogonal_of_w(P, K: Submodule) -> Submodule:
    """``K^perp = {v : <v, k> = 0 for all k in K}`` inside V."""
    P = as_pairing(P)
    _require(K, P.W, "K")
    return _annihilator(P, K.generators, "V")


def finite_orthogonal(P, F: Iterable) -> Submodule:
    """``F^perp = kappa^{-1}(An(F))`` for a finite subset F of W."""
    P = as_pairing(P)
    return orthogonal_of_w(P, Submodule(P.W, list(F)))


def kernel_of_kappa(P) -> Submodule:
    P = as_pairing(P)
    return orthogonal_of_w(P, P.W.whole())


def closure(P, X: Submodule) -> Submodule:
    """Closure in the weak topology; the intersection over finite F is attained at F = W."""
    P = as_pairing(P)
    _require(X, P.V, "X")
    return X + kernel_of_kappa(P)


def is_dense(P, X: Submodule, Y: Optional[Submodule] = None) -> bool:
    """Whether X is dense in Y (default: in V)."""
    P = as_pairing(P)
    Y = Y if Y is not None else P.V.whole()
    return Y <= closure(P, X)


def double_orthogonal(P, X: Submodule) -> Submodule:
    return orthogonal_of_w(P, orthogonal_of_subset(P, X))


# ---------------------------------------------------------------------------
# exhaustive laws on finite pairings


class _MaskPairing:
    """Zero table of the form on all element pairs, for mask-level orthogonals."""

    def __init__(self, P: Pairing):
        self.P = P
        self.iv, self.iw = FiniteIndex(P.V), FiniteIndex(P.W)
        n = P.ring.modulus
        gv = np.array(self.iv.gens, dtype=object).reshape(len(self.iv.gens), P.V.rank)
        gw = np.array(self.iw.gens, dtype=object).reshape(len(self.iw.gens), P.W.rank)
        G = np.einsum("uij,ai,bj->uab", P._B, gv, gw) % n if gv.size and gw.size else \
            np.zeros((P.values.rank, len(self.iv.gens), len(self.iw.gens)), dtype=object)
        Dv, Dw = self.iv.digits.astype(object), self.iw.digits.astype(object)
        T = np.einsum("va,uab,wb->vwu", Dv, G, Dw) % n if G.size else \
            np.zeros((self.iv.size, self.iw.size, P.values.rank), dtype=object)
        if P.values.relations.cols == 0:
            self.zero = ~(T.astype(np.int64) != 0).any(axis=2)
        else:
            flat = T.reshape(-1, P.values.rank)
            self.zero = np.array([P.values.is_zero_vector(r) for r in flat]).reshape(
                self.iv.size, self.iw.size)

    def perp_v(self, mask: np.ndarray) -> np.ndarray:
        return self.zero[mask].all(axis=0)

    def perp_w(self, mask: np.ndarray) -> np.ndarray:
        return self.zero[:, mask].all(axis=1)


def _sum_masks(ix: FiniteIndex, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    out = A.copy()
    for i in np.flatnonzero(B):
        if not out[i]:
            out = ix.join_cyclic(out, int(i))
    return out


def double_orthogonal_law(P, limit: int = 4096, pair_samples: int = 3000, seed: int = 0,
                          cross_checks: int = 12) -> Report:
    """closure(X) = X^perp^perp for every submodule X of V, and
    X dense in Y iff X^perp = Y^perp for X contained in Y."""
    P = as_pairing(P)
    rep = Report("double orthogonal law")
    mp = _MaskPairing(P)
    iv = mp.iv
    if iv.size > limit:
        rep.flag("exhaustive", f"|V| = {iv.size} exceeds {limit}; sampling cyclic submodules")
        masks = all_submodule_masks(iv, limit)
    else:
        masks = all_submodule_masks(iv)
    ke = mp.perp_w(np.ones(mp.iw.size, dtype=bool))
    bad = None
    perps, closures = [], []
    for k, X in enumerate(masks):
        xp = mp.perp_v(X)
        xpp = mp.perp_w(xp)
        cl = _sum_masks(iv, X, ke)
        perps.append(xp)
        closures.append(cl)
        if bad is None and not (cl == xpp).all():
            bad = {"submodule": [list(iv.vectors[i]) for i in iv.members(X)][:8]}
    rep.add("closure = double orthogonal", bad is None, bad)
    rep.data["submodules"] = len(masks)
    # density leg
    rng = random.Random(seed)
    idx = [(a, b) for a in range(len(masks)) for b in range(len(masks))]
    if len(idx) > pair_samples:
        idx = rng.sample(idx, pair_samples)
    bad, tested = None, 0
    for a, b in idx:
        X, Y = masks[a], masks[b]
        if (X & ~Y).any():
            continue
        tested += 1
        dense = not (Y & ~closures[a]).any()
        same = (perps[a] == perps[b]).all()
        if dense != same and bad is None:
            bad = {"X": a, "Y": b}
    rep.add("X dense in Y iff X^perp = Y^perp", bad is None, bad)
    rep.data["density_pairs"] = tested
    # cross-check the mask computation against the linear-algebra path
    bad = None
    for k in sorted(rng.sample(range(len(masks)), min(cross_checks, len(masks)))):
        X = iv.mask_to_submodule(masks[k])
        lin = double_orthogonal(P, X)
        if not (iv.mask_of(lin) == _sum_masks(iv, masks[k], ke)).all():
            bad = {"submodule": k}
        if not (iv.mask_of(closure(P, X)) == closures[k]).all():
            bad = {"submodule": k}
    rep.add("linear algebra agrees with enumeration", bad is None, bad)
    return rep


def galois_connection_law(P, limit: int = 256) -> Report:
    """Galois-connection, Hausdorff, density and closed-submodule laws, exhaustively."""
    P = as_pairing(P)
    rep = Report("orthogonality laws")
    mp = _MaskPairing(P)
    iv, iw = mp.iv, mp.iw
    mv = all_submodule_masks(iv)
    mw = all_submodule_masks(iw)
    ke = mp.perp_w(np.ones(iw.size, dtype=bool))
    bad = next((k for k, X in enumerate(mv) if (X & ~mp.perp_w(mp.perp_v(X))).any()), None)
    rep.add("X in X^perp^perp", bad is None, bad)
    bad = next((k for k, K in enumerate(mw) if (K & ~mp.perp_v(mp.perp_w(K))).any()), None)
    rep.add("K in K^perp^perp", bad is None, bad)
    bad = next((k for k, X in enumerate(mv)
                if not (mp.perp_v(X) == mp.perp_v(mp.perp_w(mp.perp_v(X)))).all()), None)
    rep.add("triple orthogonal collapses", bad is None, bad)
    bad = None
    for a, X in enumerate(mv[:64]):
        for b, Y in enumerate(mv[:64]):
            if not (X & ~Y).any() and (mp.perp_v(Y) & ~mp.perp_v(X)).any():
                bad = {"X": a, "Y": b}
    rep.add("orthogonal reverses inclusion", bad is None, bad)
    zero = np.zeros(iv.size, dtype=bool)
    zero[0] = True
    hausdorff = not ke[1:].any()
    rep.add("Hausdorff iff kappa injective", hausdorff == (kernel_of_kappa(P).is_zero()))
    chi_injective = not mp.perp_v(np.ones(iv.size, dtype=bool))[1:].any()
    if chi_injective:
        full = np.ones(iv.size, dtype=bool)
        bad = next((k for k, Y in enumerate(mv)
                    if (_sum_masks(iv, Y, ke) == full).all() != (not mp.perp_v(Y)[1:].any())), None)
        rep.add("dense iff zero orthogonal", bad is None, bad)
    else:
        rep.vacuous("dense iff zero orthogonal", "W does not embed in V*")
    if iv.size <= limit and iw.size <= limit:
        closed = {np.packbits(X).tobytes() for X in mv
                  if (_sum_masks(iv, X, ke) == X).all()}
        perps = {np.packbits(mp.perp_w(K)).tobytes() for K in mw}
        rep.add("closed submodules are the orthogonals", closed == perps)
        rep.data["closed_submodules"] = len(closed)
    else:
        rep.vacuous("closed submodules are the orthogonals", f"|V| or |W| exceeds {limit}")
    rep.vacuous("cofinite legs", "every submodule of a finite module is cofinite")
    return rep


# ---------------------------------------------------------------------------
# the C-adic topology of a measuring pairing


def cadic_neighborhood(P, F: Iterable) -> Submodule:
    """``(0_C : F) = {a : c <- a = 0 for all c in F}``, a right ideal of the acting algebra."""
    F = [c.vector if isinstance(c, Element) else tuple(c) for c in F]
    Am = P.acting.carrier
    if not F:
        return Am.whole()
    C = P.coring.carrier
    S = direct_sum(*([C] * len(F)))
    rows = []
    for c in F:
        rows.extend(P.hit_matrix(c).tolist())
    I = kernel_of_map(ModuleMap(Am, S, ZnMatrix.from_rows(P.ring, rows), check=False))
    A = P.acting
    for g in I.generators:
        for b in A.basis():
            if not I.contains(A.mul(Am.element(g), b)):
                raise AxiomViolation("(0:F) is not a right ideal; the pairing is not measuring", None)
    return I


def _right_factors(P, F: Sequence) -> Submodule:
    """``K = sum R c~_ij`` from the right tensor factors of the lifts of Delta(c_i)."""
    C = P.coring
    vecs = []
    for c in F:
        for coef, i, j in C.delta_terms(c):
            vecs.append(C.carrier.gen(j).vector)
    return Submodule(C.carrier, vecs)


def topology_coincidence(P, Ks: Optional[Sequence[Submodule]] = None,
                         Fs: Optional[Sequence[Sequence]] = None) -> Report:
    """Both witness families of the coincidence of the weak and C-adic topologies."""
    C = P.coring.carrier
    basis = C.gens()
    if Ks is None:
        Ks = [C.zero_submodule()] + [Submodule(C, [b]) for b in basis] + [C.whole()]
    if Fs is None:
        Fs = [[]] + [[b] for b in basis] + [basis]
    rep = Report("weak and C-adic topologies coincide")
    w1 = []
    bad = None
    for k, K in enumerate(Ks):
        ann = cadic_neighborhood(P, K.generators)
        perp = orthogonal_of_w(P, K)
        ok = ann <= perp
        w1.append({"K": [list(g) for g in K.generators], "ok": ok})
        if not ok and bad is None:
            bad = {"K": k}
    rep.add("(0:K) in K^perp", bad is None, bad)
    w2 = []
    bad = None
    for k, F in enumerate(Fs):
        K = _right_factors(P, F)
        perp = orthogonal_of_w(P, K)
        ann = cadic_neighborhood(P, F)
        ok = perp <= ann
        w2.append({"F": [list(c.vector) if isinstance(c, Element) else list(c) for c in F],
                   "K": [list(g) for g in K.generators], "ok": ok})
        if not ok and bad is None:
            bad = {"F": k}
    rep.add("K^perp in (0:F) for K built from Delta(F)", bad is None, bad)
    rep.data["annihilator_witnesses"] = w1
    rep.data["factor_witnesses"] = w2
    return rep


# ---------------------------------------------------------------------------
# pulling back kernels along maps


def kernel_of_subset(W: FPModule, X: Submodule) -> Submodule:
    """``Ke(X) = {w : f(w) = 0 for f in X}`` for X a submodule of W*."""
    D = X.parent
    if not hasattr(D, "to_map"):
        raise SubmoduleMismatch("X must be a submodule of a dual module")
    fs = [D.to_map(D.element(g)).matrix for g in X.generators]
    if not fs:
        return W.whole()
    R = ground_module(W.ring)
    S = direct_sum(*([R] * len(fs)))
    rows = [f.tolist()[0] for f in fs]
    return kernel_of_map(ModuleMap(W, S, ZnMatrix.from_rows(W.ring, rows), check=False))


def ke_pullback_law(theta: ModuleMap, X: Submodule) -> Report:
    """``Ke(theta*(X)) = theta^{-1}(Ke(X))``."""
    Wp, W = theta.domain, theta.codomain
    Dw = X.parent
    Dwp = dual(Wp)
    pulled = Submodule(Dwp, [Dwp.from_matrix(Dw.to_map(Dw.element(g)).matrix @ theta.matrix)
                               for g in X.generators])
    lhs = kernel_of_subset(Wp, pulled)
    rhs = preimage(theta, kernel_of_subset(W, X))
    rep = Report("kernel pullback")
    rep.add("Ke(theta*(X)) = theta^-1(Ke(X))", lhs == rhs,
            {"lhs": [list(g) for g in lhs.generators], "rhs": [list(g) for g in rhs.generators]})
    rep.data["size"] = lhs.cardinality()
    return rep


# ---------------------------------------------------------------------------
# tensor pairings


def tensor_pairing(P, Pp) -> Pairing:
    """``(V' (x) V, W (x) W')`` with ``<v' (x) v, w (x) w'> = <v, w><v', w'>``."""
    P, Pp = as_pairing(P), as_pairing(Pp)
    if P.ring != Pp.ring:
        raise RingMismatch("pairings over different rings")
    if P.values.rank != 1 or Pp.values.rank != 1:
        raise DimensionMismatch("tensor pairings need ground-ring values")
    V, W, Vp, Wp = P.V, P.W, Pp.V, Pp.W
    B, Bp = P._B[0], Pp._B[0]
    form = []
    for a in range(Vp.rank):
        for b in range(V.rank):
            for c in range(W.rank):
                for d in range(Wp.rank):
                    form.append(int(B[b, c] * Bp[a, d]))
    return Pairing(tensor(Vp, V), tensor(W, Wp), [form], name=f"{Pp.name}(x){P.name}")
