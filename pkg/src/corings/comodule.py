"""Comodules, measuring pairings and rational parts.

A measuring pairing ``(A, C)`` is an algebra ``A`` with a ring map
``kappa: A -> *C`` into the left dual ring.  Every right C-comodule becomes a
right A-module through ``m . a = sum m0 <a, m1>``, and for an arbitrary right
A-module M the rational part is the largest submodule on which that formula
can be solved for a coaction:

    ``Rat(M) = rho^-1(image(alpha))``  with
    ``rho: M -> Hom(A, M), m -> (a -> m a)`` and
    ``alpha: M (x) C -> Hom(A, M), m (x) c -> (a -> m <a, c>)``.

>>> from corings.zn import RingContext
>>> from corings.algebra import matrix_coalgebra
>>> P = canonical_pairing(matrix_coalgebra(RingContext(6), 2))
>>> bool(alpha_check(P))
True
>>> Cr = P.coring_module
>>> rat(Cr, P).is_whole
True
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .algebra import (Algebra, Coalgebra, LeftModule, RightModule, eye, kron, opposite_algebra,
                      scalar_right_module, swap_matrix, verify_right_module)
from .coring import (ACoring, DualRing, TensorOverA, as_coring, dual_ring, is_ground)
from .errors import (AmbiguousCoaction, AxiomViolation, BaseMismatch, DimensionMismatch,
                     NotRational, SubmoduleMismatch, UnsupportedBase)
from .fpmod import (Element, FPModule, ModuleMap, Submodule, _columns_matrix, cyclic_module,
                    direct_sum, hom_module, is_projective, is_pure_submodule, kernel_of_map,
                    preimage, tensor)
from .report import Report
from .topology import (Pairing, closure, kernel_of_kappa, orthogonal_of_subset,
                       orthogonal_of_w)
from .zn import ZnMatrix


def _vec(x) -> tuple:
    return x.vector if isinstance(x, Element) else tuple(int(v) for v in x)


def _cols(M: FPModule, vecs: Sequence) -> ZnMatrix:
    return _columns_matrix(M.ring, M.rank, [list(_vec(v)) for v in vecs])


def _as_matrix(x, dom: FPModule, cod: FPModule) -> ZnMatrix:
    if isinstance(x, ModuleMap):
        mat = x.matrix
    elif isinstance(x, ZnMatrix):
        mat = x
    else:
        mat = ZnMatrix.from_rows(dom.ring, x)
    if mat.shape != (cod.rank, dom.rank):
        raise DimensionMismatch(f"expected a {cod.rank}x{dom.rank} matrix, got {mat.shape}")
    return mat


def _solve_through(F: ZnMatrix, Y: FPModule, y) -> Optional[tuple[int, ...]]:
    """Some x with ``F x = y`` in Y, or None."""
    S = Submodule(Y, [F.column(j) for j in range(F.cols)])
    return S.coordinates(y)


def _first_bad(M: FPModule, X: ZnMatrix, Y: ZnMatrix) -> Optional[int]:
    D = (X - Y).array
    for j in range(D.shape[1]):
        if not M.is_zero_vector(D[:, j]):
            return j
    return None


def _scalar_over(M: FPModule, A: Algebra) -> RightModule:
    """M as a right module over a ground algebra A."""
    return RightModule(M, A, ModuleMap(tensor(M, A.carrier), M, eye(M.ring, M.rank), check=False))


def restrict_right_module(Mr: RightModule, S: Submodule) -> tuple[RightModule, ModuleMap]:
    """A stable submodule as a right module on its abstract presentation."""
    if S.parent != Mr.carrier:
        raise SubmoduleMismatch("submodule of a different module")
    N, inc = S.as_module()
    A = Mr.algebra
    eA = np.eye(A.rank, dtype=object)

    def fn(i, k):
        x = Mr.act_vec(S.generators[i], eA[k])
        c = S.coordinates(x)
        if c is None:
            raise SubmoduleMismatch("submodule is not stable under the action")
        return c

    return RightModule.from_function(N, A, fn, Mr.name), inc


def restrict_left_module(Ml: LeftModule, S: Submodule) -> tuple[LeftModule, ModuleMap]:
    if S.parent != Ml.carrier:
        raise SubmoduleMismatch("submodule of a different module")
    N, inc = S.as_module()
    A = Ml.algebra
    eA = np.eye(A.rank, dtype=object)
    images = []
    for k in range(A.rank):
        for i in range(N.rank):
            c = S.coordinates(Ml.act_vec(eA[k], S.generators[i]))
            if c is None:
                raise SubmoduleMismatch("submodule is not stable under the action")
            images.append(c)
    act = ModuleMap.from_images(tensor(A.carrier, N), N, images)
    return LeftModule(N, A, act, Ml.name), inc


def is_stable(Mr, S: Submodule) -> bool:
    """Whether S is closed under the action of a right or left module."""
    A = Mr.algebra
    eA = np.eye(A.rank, dtype=object)
    for g in S.generators:
        for k in range(A.rank):
            x = Mr.act_vec(g, eA[k]) if isinstance(Mr, RightModule) else Mr.act_vec(eA[k], g)
            if not S.contains(x):
                return False
    return True


def stable_closure(Mr, vecs: Iterable) -> Submodule:
    """The smallest submodule containing ``vecs`` and closed under the action."""
    M = Mr.carrier
    S = Submodule(M, [M.normal_form(_vec(v)) for v in vecs])
    A = Mr.algebra
    eA = np.eye(A.rank, dtype=object)
    while True:
        new = [Mr.act_vec(g, eA[k]) if isinstance(Mr, RightModule) else Mr.act_vec(eA[k], g)
               for g in S.generators for k in range(A.rank)]
        T = S + Submodule(M, new)
        if T == S:
            return S
        S = Submodule.from_lattice(M, T.lattice)


def direct_sum_right(*mods: RightModule) -> RightModule:
    """Direct sum of right modules over one algebra."""
    A = mods[0].algebra
    S = direct_sum(*[m.carrier for m in mods])
    where = [(k, i) for k, m in enumerate(mods) for i in range(m.carrier.rank)]
    eA = np.eye(A.rank, dtype=object)

    def fn(j, a):
        k, i = where[j]
        m = mods[k]
        local = m.act_vec(np.eye(m.carrier.rank, dtype=object)[i], eA[a])
        out = [0] * S.rank
        off = S.offsets[k]
        out[off:off + m.carrier.rank] = local
        return out

    return RightModule.from_function(S, A, fn, "(+)".join(m.name for m in mods))


def quotient_right(Mr: RightModule, S: Submodule) -> tuple[RightModule, ModuleMap]:
    """``M / S`` for a stable submodule, with the projection."""
    if not is_stable(Mr, S):
        raise SubmoduleMismatch("submodule is not stable under the action")
    Q, pi = S.quotient()
    act = ModuleMap(tensor(Q, Mr.algebra.carrier), Q, Mr.action.matrix)
    return RightModule(Q, Mr.algebra, act, f"{Mr.name}/S"), pi


# ---------------------------------------------------------------------------
# comodules


class Comodule:
    """A right comodule: carrier with a right base action and ``rho: M -> M (x)_A C``."""

    def __init__(self, coring, carrier: FPModule, coaction, right_module: Optional[RightModule] = None,
                 name: str = ""):
        C = as_coring(coring)
        if right_module is None:
            if not C.base_is_ground:
                raise BaseMismatch("a right base action is required over a non-trivial base")
            right_module = _scalar_over(carrier, C.base)
        if right_module.carrier != carrier:
            raise DimensionMismatch("base action lives on a different carrier")
        self.coring = C
        self.carrier = carrier
        self.right_module = right_module
        self.ring = carrier.ring
        self.name = name
        self.mc = TensorOverA(right_module, C.left_module)
        self.coaction = ModuleMap(carrier, self.mc, _as_matrix(coaction, carrier, self.mc))

    @classmethod
    def regular(cls, coring) -> "Comodule":
        C = as_coring(coring)
        return cls(C, C.carrier, C.comult.matrix, C.right_module, C.name)

    @property
    def rank(self) -> int:
        return self.carrier.rank

    def coact(self, m) -> Element:
        return self.coaction(m)

    def terms(self, m) -> list[tuple[int, int, int]]:
        """Nonzero ``(coef, i, j)`` of the stored lift: ``coef * m_i (x) c_j``."""
        r = self.coring.rank
        return [(int(x), k // r, k % r) for k, x in enumerate(self.coact(m).vector) if x]

    @cached_property
    def mcc(self) -> FPModule:
        """``M (x)_A C (x)_A C`` on the generators ``m_i (x) c_j (x) c_k``."""
        C = self.coring
        r, m = C.rank, self.rank
        plain = tensor(tensor(self.carrier, C.carrier), C.carrier)
        cols = [plain.relations.column(j) for j in range(plain.relations.cols)]
        Ir, Im = np.eye(r, dtype=object), np.eye(m, dtype=object)
        for b in self.mc.balancing_relators:
            for k in range(r):
                cols.append(list(np.kron(np.asarray(b, dtype=object), Ir[k])))
        for b in C.cc.balancing_relators:
            for i in range(m):
                cols.append(list(np.kron(Im[i], np.asarray(b, dtype=object))))
        return FPModule(self.ring, plain.rank, _columns_matrix(self.ring, plain.rank, cols))

    def __repr__(self):
        return f"Comodule({self.name or 'unnamed'}, rank={self.rank}, over {self.coring.name})"


def zero_comodule(coring) -> Comodule:
    C = as_coring(coring)
    Z = FPModule(C.ring, 0, ZnMatrix.from_array(C.ring, C.ring.zeros((0, 0))))
    RA = RightModule(Z, C.base, ModuleMap(tensor(Z, C.base.carrier), Z,
                                          ZnMatrix.from_array(C.ring, C.ring.zeros((0, 0))), check=False))
    return Comodule(C, Z, ZnMatrix.from_array(C.ring, C.ring.zeros((0, 0))), RA, "0")


def verify_comodule(M: Comodule) -> Report:
    """Base linearity of the coaction, coassociativity, counitality."""
    rep = Report(f"comodule {M.name}".strip())
    C = M.coring
    ring, m, r, ra = M.ring, M.rank, C.rank, C.base.rank
    P = M.coaction.matrix
    Ract = M.right_module.action.matrix
    D, E, Rm = C.comult.matrix, C.counit.matrix, C.right_action.matrix
    Im, Ir, Ia = eye(ring, m), eye(ring, r), eye(ring, ra)
    if m == 0:
        rep.vacuous("coassociativity", "zero comodule")
        rep.vacuous("counit", "zero comodule")
        return rep
    if not C.base_is_ground:
        j = _first_bad(M.mc, P @ Ract, kron(Im, Rm) @ kron(P, Ia))
        rep.add("coaction is right A-linear", j is None,
                None if j is None else {"m": j // ra, "a": j % ra})
    j = _first_bad(M.mcc, kron(P, Ir) @ P, kron(Im, D) @ P)
    rep.add("coassociativity", j is None, None if j is None else {"basis_element": j})
    j = _first_bad(M.carrier, Ract @ kron(Im, E) @ P, Im)
    rep.add("counit", j is None, None if j is None else {"basis_element": j})
    return rep


def verify_colinear(f, M: Comodule, N: Comodule) -> Report:
    """``(f (x) id) o rho_M = rho_N o f``, plus base linearity over a non-trivial base."""
    F = _as_matrix(f, M.carrier, N.carrier)
    ModuleMap(M.carrier, N.carrier, F)
    rep = Report("colinear map")
    C = M.coring
    ring, r, ra = M.ring, C.rank, C.base.rank
    if not C.base_is_ground:
        j = _first_bad(N.carrier, F @ M.right_module.action.matrix,
                       N.right_module.action.matrix @ kron(F, eye(ring, ra)))
        rep.add("f is right A-linear", j is None, None if j is None else {"column": j})
    if M.rank == 0:
        rep.vacuous("colinearity square", "zero domain")
        return rep
    j = _first_bad(N.mc, kron(F, eye(ring, r)) @ M.coaction.matrix, N.coaction.matrix @ F)
    rep.add("colinearity square", j is None, None if j is None else {"basis_element": j})
    return rep


def subcomodule(M: Comodule, S: Submodule) -> tuple[Comodule, ModuleMap]:
    """The comodule structure on a subcomodule S, on its abstract presentation."""
    C = M.coring
    NA, inc = restrict_right_module(M.right_module, S)
    N = NA.carrier
    NC = TensorOverA(NA, C.left_module)
    F = kron(inc.matrix, eye(M.ring, C.rank))
    cols = []
    for g in S.generators:
        y = _solve_through(F, M.mc, M.coact(M.carrier.element(g)))
        if y is None:
            raise SubmoduleMismatch("submodule is not a subcomodule")
        cols.append(y)
    return Comodule(C, N, _cols(NC, cols), NA, M.name), inc


# ---------------------------------------------------------------------------
# measuring pairings


class MeasuringPairing:
    """An algebra ``A`` acting on a coring ``C`` through ``kappa: A -> (*C, *l)``.

    ``kappa`` is a map into the carrier of the left dual ring, given as a
    ModuleMap, a matrix, or a list of functional matrices (one per basis
    element of A, each ``rank(base) x rank(C)``).
    """

    def __init__(self, acting: Algebra, coring, kappa, base_map=None,
                 dual: Optional[DualRing] = None, check: bool = True, name: str = ""):
        C = as_coring(coring)
        self.acting = acting
        self.coring = C
        self.ring = C.ring
        self.name = name
        self.dual = dual if dual is not None else dual_ring(C, "left", check=check)
        Dm = self.dual.carrier
        if isinstance(kappa, (list, tuple)) and kappa and not isinstance(kappa[0], (int, np.integer)) \
                and _looks_like_matrices(kappa):
            imgs = [self.dual.element_from_matrix(X) for X in kappa]
            kmat = _cols(Dm, imgs)
        else:
            kmat = _as_matrix(kappa, acting.carrier, Dm)
        self.kappa = ModuleMap(acting.carrier, Dm, kmat)
        if base_map is None:
            if C.base_is_ground:
                self.base_map = None
            else:
                raise BaseMismatch("a base map A -> acting algebra is required over a non-trivial base")
        else:
            self.base_map = ModuleMap(C.base.carrier, acting.carrier,
                                      _as_matrix(base_map, C.base.carrier, acting.carrier))
        self.functionals = [self.dual.to_matrix(self.kappa(a)) for a in acting.basis()]
        V, W, U = acting.carrier, C.carrier, C.base.carrier
        form = self.ring.zeros((U.rank, V.rank * W.rank))
        for i, K in enumerate(self.functionals):
            form[:, i * W.rank:(i + 1) * W.rank] = K.array
        self.pairing = Pairing(V, W, ZnMatrix.from_array(self.ring, form), values=U,
                               name=name or "measuring")
        self.verification = verify_measuring(self)
        if check and not self.verification.passed:
            raise AxiomViolation("kappa is not a ring morphism into the left dual ring",
                                 self.verification)

    @cached_property
    def action_matrices(self) -> list[ZnMatrix]:
        """``H_k`` with ``c <- a_k = H_k c``, i.e. ``Rm (I (x) kappa(a_k)) Delta``."""
        C = self.coring
        Ir = eye(self.ring, C.rank)
        return [C.right_action.matrix @ kron(Ir, K) @ C.comult.matrix for K in self.functionals]

    def bracket(self, a, c) -> Element:
        return self.pairing.evaluate(a, c)

    def hit(self, c, a) -> Element:
        """``c <- a = sum c1 <a, c2>``."""
        av = np.asarray(_vec(a), dtype=object)
        cv = np.asarray(_vec(c), dtype=object)
        out = np.zeros(self.coring.rank, dtype=object)
        for k, H in enumerate(self.action_matrices):
            if av[k]:
                out = out + av[k] * np.asarray(H.array, dtype=object) @ cv
        return self.coring.carrier.element(out)

    def hit_matrix(self, c) -> ZnMatrix:
        """Matrix of ``A -> C``, ``a -> c <- a``."""
        cv = np.asarray(_vec(c), dtype=object)
        cols = [np.asarray(H.array, dtype=object) @ cv for H in self.action_matrices]
        return ZnMatrix.from_array(self.ring, np.stack(cols, axis=1) if cols else
                                   self.ring.zeros((self.coring.rank, 0)))

    @cached_property
    def coring_module(self) -> RightModule:
        """The carrier of C as a right module over the acting algebra."""
        C = self.coring
        images = [np.asarray(H.array, dtype=object)[:, i]
                  for i in range(C.rank) for H in self.action_matrices]
        act = ModuleMap.from_images(tensor(C.carrier, self.acting.carrier), C.carrier, images)
        return RightModule(C.carrier, self.acting, act, f"{C.name}_A")

    def base_vector(self, x) -> tuple[int, ...]:
        """The image of a base element in the acting algebra."""
        if self.base_map is None:
            raise UnsupportedBase("no base map over the ground ring")
        return self.base_map(x).vector

    def __repr__(self):
        return f"MeasuringPairing({self.name or 'unnamed'}, acting rank {self.acting.rank}, coring {self.coring.name})"


def _looks_like_matrices(x) -> bool:
    first = x[0]
    if isinstance(first, ZnMatrix):
        return True
    return isinstance(first, (list, tuple)) and first and isinstance(first[0], (list, tuple))


def verify_measuring(P: MeasuringPairing) -> Report:
    rep = Report(f"measuring pairing {P.name}".strip())
    A, D, C = P.acting, P.dual, P.coring
    ab = A.basis()
    bad = None
    for i, a in enumerate(ab):
        for j, b in enumerate(ab):
            if P.kappa(A.mul(a, b)) != D.mul(P.kappa(a), P.kappa(b)):
                bad = {"a": i, "b": j}
                break
        if bad:
            break
    rep.add("kappa is multiplicative", bad is None, bad)
    if A.unit is None:
        rep.vacuous("kappa is unital", "acting algebra has no unit")
    else:
        rep.add("kappa is unital", P.kappa(A.unit) == D.unit)
    if P.base_map is not None:
        B = C.base
        bb = B.basis()
        bad = next(((i, j) for i in range(len(bb)) for j in range(len(bb))
                    if P.base_map(B.mul(bb[i], bb[j])) != A.mul(P.base_map(bb[i]), P.base_map(bb[j]))),
                   None)
        rep.add("base map is multiplicative", bad is None, bad)
        mu, E = B.mult.matrix, C.counit.matrix
        bad = None
        for l, x in enumerate(bb):
            X = mu @ kron(E, ZnMatrix.from_array(P.ring, np.asarray([list(x.vector)], dtype=object).T))
            if P.kappa(P.base_map(x)) != D.element_from_matrix(X):
                bad = {"base_element": l}
        rep.add("kappa extends the base embedding", bad is None, bad)
    return rep


def canonical_pairing(C, check: bool = True) -> MeasuringPairing:
    """``(*C, C)`` with kappa the identity."""
    C = as_coring(C)
    D = dual_ring(C, "left", check=check)
    base_map = None
    if not C.base_is_ground:
        B = C.base
        mu, E = B.mult.matrix, C.counit.matrix
        imgs = [D.element_from_matrix(
            mu @ kron(E, ZnMatrix.from_array(C.ring, np.asarray([list(x.vector)], dtype=object).T)))
            for x in B.basis()]
        base_map = _cols(D.carrier, imgs)
    return MeasuringPairing(D, C, eye(C.ring, D.rank), base_map, dual=D, check=check,
                            name=f"(*{C.name}, {C.name})")


def restrict_to_base(Mr: RightModule, P: MeasuringPairing) -> RightModule:
    """A right module over the acting algebra, viewed over the base of the coring."""
    if Mr.algebra.rank != P.acting.rank:
        raise BaseMismatch("module is not over the acting algebra of the pairing")
    C = P.coring
    if C.base_is_ground:
        return _scalar_over(Mr.carrier, C.base)
    B = C.base
    eM = np.eye(Mr.carrier.rank, dtype=object)
    iota = [np.asarray(P.base_vector(x), dtype=object) for x in B.basis()]
    return RightModule.from_function(Mr.carrier, B, lambda i, l: Mr.act_vec(eM[i], iota[l]))


# ---------------------------------------------------------------------------
# the alpha condition


def pairing_alpha_check(P: Pairing) -> Report:
    """W projective and kappa onto W*: the alpha condition for a finite pairing."""
    if P.values.rank != 1 or P.values.cardinality() != P.ring.modulus:
        raise UnsupportedBase("alpha condition for pairings needs ground-ring values")
    rep = Report(f"alpha condition {P.name}".strip())
    rep.add("W is projective", is_projective(P.W))
    img = P.kappa.image()
    missing = next((g for g in P.kappa.codomain.gens() if not img.contains(g)), None)
    rep.add("kappa is dense", missing is None, {"not_in_image": missing})
    rep.data["diagnosis"] = [c.name for c in rep.failures()]
    return rep


def pairing_alpha_map(P: Pairing, M: FPModule) -> ModuleMap:
    """``alpha_M: M (x) W -> Hom(V, M)``, ``m (x) w -> (v -> <v, w> m)``."""
    H = hom_module(P.V, M)
    MW = tensor(M, P.W)
    imgs = []
    for i in range(M.rank):
        for j in range(P.W.rank):
            col = np.asarray(P.column_map(P.W.gen(j).vector).array, dtype=object)[0]
            X = ZnMatrix.from_array(P.ring, np.outer(np.eye(M.rank, dtype=object)[i], col))
            imgs.append(H.from_matrix(X))
    return ModuleMap.from_images(MW, H, imgs)


def alpha_oracle(P) -> bool:
    """alpha_M injective for every cyclic module M = Z/d (hence for all modules)."""
    P = P.pairing if isinstance(P, MeasuringPairing) else P
    n = P.ring.modulus
    for d in range(2, n + 1):
        if n % d == 0 and not pairing_alpha_map(P, cyclic_module(P.ring, d)).is_injective():
            return False
    return True


def _left_projective(C: ACoring) -> bool:
    """Whether C splits off the free left A-module ``A^r -> C``, ``e_j -> c_j``."""
    A = C.base
    ring, r, ra = C.ring, C.rank, A.rank
    F = direct_sum(*([A.carrier] * r))
    mu, L = A.mult.matrix.array, C.left_action.matrix.array
    pi = ring.zeros((r, r * ra))
    for j in range(r):
        for q in range(ra):
            pi[:, j * ra + q] = L[:, q * r + j]
    LF = ring.zeros((r * ra, ra * r * ra))
    for p in range(ra):
        for j in range(r):
            for q in range(ra):
                LF[j * ra:(j + 1) * ra, p * (r * ra) + j * ra + q] = mu[:, p * ra + q]
    LFm, Lm, pim = (ZnMatrix.from_array(ring, x) for x in (LF, L, pi))
    H = hom_module(C.carrier, F)
    Ia = eye(ring, ra)
    pieces = [F] * (ra * r) + [C.carrier] * r
    S = direct_sum(*pieces)
    imgs = []
    for h in H.gens():
        X = H.to_map(h).matrix
        res = (X @ Lm - LFm @ kron(Ia, X)).array
        comp = (pim @ X).array
        imgs.append(np.concatenate([res[:, k] for k in range(ra * r)] +
                                   [comp[:, k] for k in range(r)]))
    T = Submodule(S, imgs)
    target = np.concatenate([np.zeros(r * ra * ra * r, dtype=object)] +
                            [np.eye(r, dtype=object)[:, k] for k in range(r)])
    return T.coordinates(target) is not None


def alpha_check(P) -> Report:
    """Projectivity of the carrier and density of kappa, with the failing legs named.

    Accepts a measuring pairing, or a coring/coalgebra (then the canonical
    pairing is used, built without requiring the coring axioms).
    """
    if not isinstance(P, MeasuringPairing):
        P = canonical_pairing(P, check=False)
    C = P.coring
    rep = Report(f"alpha condition {P.name}".strip())
    proj = is_projective(C.carrier) if C.base_is_ground else _left_projective(C)
    rep.add("carrier is projective", proj)
    img = P.kappa.image()
    missing = next((g for g in P.kappa.codomain.gens() if not img.contains(g)), None)
    rep.add("kappa is dense", missing is None, {"not_in_image": missing})
    rep.data["diagnosis"] = [c.name for c in rep.failures()]
    return rep


# ---------------------------------------------------------------------------
# rational parts


def rho_map(Mr: RightModule) -> ModuleMap:
    """``M -> Hom(A, M)``, ``m -> (a -> m a)``."""
    A, M = Mr.algebra, Mr.carrier
    H = hom_module(A.carrier, M)
    eA = np.eye(A.rank, dtype=object)
    imgs = []
    for g in M.gens():
        cols = [Mr.act_vec(g.vector, eA[k]) for k in range(A.rank)]
        imgs.append(H.from_matrix(_cols(M, cols)))
    return ModuleMap.from_images(M, H, imgs)


def alpha_map(Mr: RightModule, P: MeasuringPairing, MA: Optional[RightModule] = None):
    """``(M (x)_A C, alpha_M)`` with ``alpha(m (x) c) = (a -> m <a, c>)``."""
    C = P.coring
    MA = MA if MA is not None else restrict_to_base(Mr, P)
    M = Mr.carrier
    MC = TensorOverA(MA, C.left_module)
    H = hom_module(P.acting.carrier, M)
    eM = np.eye(M.rank, dtype=object)
    imgs = []
    for i in range(M.rank):
        for j in range(C.rank):
            cols = [MA.act_vec(eM[i], np.asarray(K.array, dtype=object)[:, j]) for K in P.functionals]
            imgs.append(H.from_matrix(_cols(M, cols)))
    return MC, ModuleMap.from_images(MC, H, imgs, check=False)


@dataclass
class RationalPart:
    module: RightModule
    pairing: MeasuringPairing
    submodule: Submodule
    faithful: bool
    mc: TensorOverA
    base_module: RightModule
    image: Submodule
    rho: ModuleMap
    report: Report = field(repr=False, default=None)

    @property
    def is_whole(self) -> bool:
        return self.submodule == self.module.carrier.whole()

    def contains(self, m) -> bool:
        return self.submodule.contains(m)

    def coaction_of(self, m) -> Element:
        """The unique ``sum m_i (x) c_i`` with ``m a = sum m_i <a, c_i>``."""
        c = self.image.coordinates(self.rho(m))
        if c is None:
            raise NotRational(f"{_vec(m)} is not rational")
        return self.mc.element(c)

    def comodule(self) -> Comodule:
        """The coaction on the whole module (requires Rat(M) = M)."""
        if not self.is_whole:
            raise NotRational("the module is not rational; use as_comodule")
        M = self.module.carrier
        cols = [self.coaction_of(g) for g in M.gens()]
        return Comodule(self.pairing.coring, M, _cols(self.mc, cols), self.base_module,
                        self.module.name)

    def comodule_on(self, S: Submodule) -> tuple[Comodule, ModuleMap]:
        """The coaction restricted to an A-submodule S of the rational part."""
        if not S <= self.submodule:
            raise NotRational("submodule is not inside the rational part")
        C = self.pairing.coring
        NA, inc = restrict_right_module(self.base_module, S)
        NC = TensorOverA(NA, C.left_module)
        F = kron(inc.matrix, eye(C.ring, C.rank))
        cols = []
        for g in S.generators:
            y = _solve_through(F, self.mc, self.coaction_of(g))
            if y is None:
                raise SubmoduleMismatch("coaction does not factor through the submodule")
            cols.append(y)
        return Comodule(C, NA.carrier, _cols(NC, cols), NA, self.module.name), inc

    def as_comodule(self) -> tuple[Comodule, ModuleMap]:
        return self.comodule_on(self.submodule)


def rat(Mr: RightModule, P: MeasuringPairing, check: bool = True) -> RationalPart:
    """The rational part ``rho^-1(image(alpha))`` with its coaction."""
    rep = Report("rational part")
    if check:
        ac = alpha_check(P)
        if not ac.passed:
            raise AmbiguousCoaction(f"not an alpha-pairing: {', '.join(ac.data['diagnosis'])}")
    MA = restrict_to_base(Mr, P)
    rho = rho_map(Mr)
    MC, alpha = alpha_map(Mr, P, MA)
    img = Submodule(rho.codomain, [alpha(g) for g in MC.gens()])
    sub = preimage(rho, img)
    faithful = rho.is_injective()
    if not faithful:
        rep.flag("faithful", "rho_M is not injective; the module is not A-faithful")
    rep.data["faithful"] = faithful
    return RationalPart(Mr, P, sub, faithful, MC, MA, img, rho, rep)


def rat_by_scan(Mr: RightModule, P: MeasuringPairing) -> Submodule:
    """Rational part by scanning every element against every element of ``M (x) C``."""
    from .enumeration import FiniteIndex
    MA = restrict_to_base(Mr, P)
    rho = rho_map(Mr)
    MC, alpha = alpha_map(Mr, P, MA)
    H = rho.codomain
    images = set()
    for x in FiniteIndex(MC).vectors:
        images.add(H.normal_form(alpha.matrix.apply(x)))
    rational = [v for v in FiniteIndex(Mr.carrier).vectors
                if H.normal_form(rho.matrix.apply(v)) in images]
    return Submodule(Mr.carrier, rational)


def induced_module(M: Comodule, P: MeasuringPairing) -> RightModule:
    """``m . a = sum m0 <a, m1>`` (re-verified)."""
    C = P.coring
    if M.coring is not C and M.coring.rank != C.rank:
        raise BaseMismatch("comodule over a different coring")
    ring, m = M.ring, M.rank
    Im = eye(ring, m)
    Ract = M.right_module.action.matrix
    acts = [Ract @ kron(Im, K) @ M.coaction.matrix for K in P.functionals]
    ra = P.acting.rank
    images = [np.asarray(acts[k].array, dtype=object)[:, i] for i in range(m) for k in range(ra)]
    act = ModuleMap.from_images(tensor(M.carrier, P.acting.carrier), M.carrier, images)
    Mr = RightModule(M.carrier, P.acting, act, M.name)
    rep = verify_right_module(Mr)
    if not rep.passed:
        raise AxiomViolation("induced action is not a module structure", rep)
    return Mr


# ---------------------------------------------------------------------------
# finite subcomodules


@dataclass
class FiniteSubcomodule:
    comodule: Comodule
    inclusion: ModuleMap
    submodule: Submodule
    components: list
    report: Report

    @property
    def generator_count(self) -> int:
        return len(self.components)


def finite_subcomodule(S: Iterable, rp: RationalPart) -> FiniteSubcomodule:
    """A subcomodule, finitely generated over R, containing the given rational elements.

    For each ``m``: write ``rho(m) = sum m_j (x) c_j`` with every ``m_j`` in
    ``m A``; the ``m_j`` then generate ``N = sum m A``.  For C free over the
    ground ring the ``c_j`` are its basis, so one component per nonzero
    coefficient; otherwise the ``m_j`` run over generators of ``m A``.
    """
    Mr = rp.module
    M = Mr.carrier
    A = rp.pairing.acting
    C = rp.pairing.coring
    eA = np.eye(A.rank, dtype=object)
    rep = Report("finite subcomodule")
    components = []
    orbit_gens = []
    free_basis = C.base_is_ground and all(int(x) % M.ring.modulus == 0
                                          for x in np.asarray(C.carrier.relations.array).ravel())
    for m in S:
        mv = M.normal_form(_vec(m))
        if not rp.contains(mv):
            raise NotRational(f"{list(mv)} is not rational")
        gens = [mv] + [Mr.act_vec(mv, eA[k]) for k in range(A.rank)]
        raw = Submodule(M, gens)
        Ni = Submodule.from_lattice(M, raw.lattice)
        orbit_gens.extend(Ni.generators)
        if free_basis:
            # Sweedler components on the basis of C: m_j is the coefficient of c_j in rho(m)
            x = rp.coaction_of(mv).vector
            for j in range(C.rank):
                mj = M.normal_form([x[i * C.rank + j] for i in range(M.rank)])
                if not M.is_zero_vector(mj):
                    components.append((mj, tuple(int(i == j) for i in range(C.rank))))
            continue
        F = kron(_cols(M, Ni.generators) if Ni.generators else
                 ZnMatrix.from_array(M.ring, M.ring.zeros((M.rank, 0))), eye(M.ring, C.rank))
        y = _solve_through(F, rp.mc, rp.coaction_of(mv))
        if y is None:
            raise SubmoduleMismatch("coaction does not factor through m A")
        Y = np.asarray(y, dtype=object).reshape(len(Ni.generators), C.rank) % M.ring.modulus
        for p, g in enumerate(Ni.generators):
            if any(Y[p]):
                components.append((tuple(g), tuple(int(x) for x in Y[p])))
    N = Submodule(M, [g for g, _ in components])
    orbit = Submodule(M, orbit_gens)
    rep.add("components generate sum m A", N == orbit)
    rep.add("contains the given elements", all(N.contains(_vec(m)) for m in S))
    if not N.generators:
        comod = zero_comodule(C)
        inc = ModuleMap(comod.carrier, M, ZnMatrix.from_array(M.ring, M.ring.zeros((M.rank, 0))),
                        check=False)
    else:
        comod, inc = rp.comodule_on(N)
    vr = verify_comodule(comod)
    rep.extend(vr, "comodule: ")
    if not vr.passed:
        raise AxiomViolation("finite subcomodule fails the comodule axioms", vr)
    return FiniteSubcomodule(comod, inc, N, components, rep)


# ---------------------------------------------------------------------------
# characterizations of rational elements


def annihilator_of_element(Mr: RightModule, m) -> Submodule:
    """``(0_M : m) = {a : m a = 0}``."""
    A, M = Mr.algebra, Mr.carrier
    eA = np.eye(A.rank, dtype=object)
    mv = M.normal_form(_vec(m))
    cols = [Mr.act_vec(mv, eA[k]) for k in range(A.rank)]
    return kernel_of_map(ModuleMap(A.carrier, M, _cols(M, cols), check=False))


def _subset_search(basis, test, max_subsets: int = 256):
    """Smallest subset of the basis passing the monotone test (or None)."""
    r = len(basis)
    if 2 ** r > max_subsets:
        return list(range(r)) if test(list(basis)) else None
    for size in range(r + 1):
        for idx in combinations(range(r), size):
            if test([basis[i] for i in idx]):
                return list(idx)
    return None


def _direct_power_annihilator(P: MeasuringPairing, xs: Sequence) -> Submodule:
    """Annihilator of ``(x_1, ..., x_k)`` in the direct power ``C^k`` as a right A-module."""
    Cr = P.coring_module
    k = len(xs)
    A = P.acting
    if k == 0:
        return A.carrier.whole()
    Ck = direct_sum(*([Cr.carrier] * k))
    eA = np.eye(A.rank, dtype=object)
    cols = [np.concatenate([np.asarray(Cr.act_vec(_vec(x), eA[a]), dtype=object) for x in xs])
            for a in range(A.rank)]
    return kernel_of_map(ModuleMap(A.carrier, Ck, _cols(Ck, cols), check=False))


def rationality_profile(m, Mr: RightModule, P: MeasuringPairing,
                        rp: Optional[RationalPart] = None) -> Report:
    """The six characterizations of rational elements, each computed on its own.

    The report passes iff the element is rational by every leg;
    ``data["agree"]`` records whether the legs agree.
    """
    from .topology import cadic_neighborhood
    rep = Report("rationality profile")
    ann = annihilator_of_element(Mr, m)
    basis = [g.vector for g in P.coring.carrier.gens()]
    F = _subset_search(basis, lambda F: cadic_neighborhood(P, F) <= ann)
    rep.add("finite F with (0:F) in (0:m)", F is not None, {"F": F})
    X = _subset_search(basis, lambda xs: _direct_power_annihilator(P, xs) <= ann)
    rep.add("m A is subgenerated by C", X is not None, {"x": X})
    rp = rp if rp is not None else rat(Mr, P)
    rep.add("m is in Rat(M)", rp.contains(m))
    K = _subset_search(basis, lambda ks: orthogonal_of_w(P, Submodule(P.coring.carrier, ks)) <= ann)
    rep.add("f.g. K with K^perp in (0:m)", K is not None, {"K": K})
    zero = P.acting.carrier.zero_submodule()
    rep.add("(0:m) contains a closed cofinite submodule", closure(P, zero) <= ann)
    rep.add("(0:m) is a closed right ideal", closure(P, ann) == ann)
    rep.data["cofinite"] = "automatic: every submodule of a finite module is cofinite"
    legs = [c.status == "pass" for c in rep.checks]
    rep.data["legs"] = legs
    rep.data["agree"] = len(set(legs)) == 1
    return rep


# ---------------------------------------------------------------------------
# coproper pairings


def coproper_check(P: MeasuringPairing, modules: Sequence[RightModule] = ()) -> Report:
    """Density of ``T = Rat(A_A)``, local units in T, and ``Rat(M) = M T``."""
    ac = alpha_check(P)
    if not ac.passed:
        raise AmbiguousCoaction(f"not an alpha-pairing: {', '.join(ac.data['diagnosis'])}")
    A = P.acting
    rep = Report("coproper pairing")
    Areg = RightModule.regular(A)
    T = rat(Areg, P, check=False).submodule
    rep.data["T"] = [list(g) for g in T.generators]
    dense = A.carrier.whole() <= closure(P, T)
    rep.add("T is dense", dense)
    rep.data["T_perp_is_zero"] = orthogonal_of_subset(P.pairing, T).is_zero()
    if not dense:
        rep.vacuous("local units", "T is not dense")
        rep.vacuous("Rat(M) = M T", "T is not dense")
        return rep
    bad, units = None, []
    for i, f in enumerate(T.generators):
        fe = Submodule(A.carrier, [A.mul_vec(f, t) for t in T.generators])
        c = fe.coordinates(f)
        if c is None:
            bad = {"generator": i}
            break
        e = np.zeros(A.rank, dtype=object)
        for ci, t in zip(c, T.generators):
            e = e + ci * np.asarray(t, dtype=object)
        units.append(list(A.carrier.normal_form(e)))
    rep.add("local units", bad is None, bad)
    rep.data["local_units"] = units
    bad = None
    for k, Mr in enumerate([Areg] + list(modules)):
        R = rat(Mr, P, check=False).submodule
        MT = Submodule(Mr.carrier, [Mr.act_vec(g.vector, t) for g in Mr.carrier.gens()
                                    for t in T.generators])
        if R != MT:
            bad = {"module": k}
            break
    rep.add("Rat(M) = M T", bad is None, bad)
    return rep


# ---------------------------------------------------------------------------
# right-handed mirrors and birational parts


def coopposite_coring(C) -> ACoring:
    """Ground-base coring with the tensor factors of Delta swapped."""
    C = as_coring(C)
    if not C.base_is_ground:
        raise UnsupportedBase("coopposite corings are only formed over the ground ring")
    sw = swap_matrix(C.ring, C.rank, C.rank)
    return ACoring(C.base, C.carrier, C.left_action.matrix, C.right_action.matrix,
                   sw @ C.comult.matrix, C.counit.matrix, (C.name + "^cop") if C.name else "")


class RightMeasuringPairing:
    """``(B, D)`` with ``kappa: B -> (D*, *r)``; stored through its left mirror
    ``(B^op, D^cop)``, where ``(D*, *r)^op`` is the left dual ring of ``D^cop``."""

    def __init__(self, acting: Algebra, coring, kappa, check: bool = True, name: str = ""):
        D = as_coring(coring)
        if not D.base_is_ground:
            raise UnsupportedBase("right pairings are only formed over the ground ring")
        self.acting = acting
        self.coring = D
        self.name = name
        self.mirror = MeasuringPairing(opposite_algebra(acting), coopposite_coring(D), kappa,
                                       check=check, name=name)
        self.ring = D.ring


def canonical_right_pairing(C, check: bool = True) -> RightMeasuringPairing:
    C = as_coring(C)
    B = dual_ring(C, "right", check=check)
    return RightMeasuringPairing(B, C, eye(C.ring, B.rank), check=check, name=f"({C.name}*, {C.name})")


def left_as_right(Ml: LeftModule, Bop: Algebra) -> RightModule:
    """A left B-module as a right B^op-module."""
    M, B = Ml.carrier, Ml.algebra
    sw = swap_matrix(M.ring, M.rank, B.rank)
    act = ModuleMap(tensor(M, Bop.carrier), M, Ml.action.matrix @ sw, check=False)
    return RightModule(M, Bop, act, Ml.name)


def left_rat(Ml: LeftModule, Q: RightMeasuringPairing, check: bool = True) -> RationalPart:
    """The left rational part, computed through the mirror."""
    return rat(left_as_right(Ml, Q.mirror.acting), Q.mirror, check=check)


def left_coaction_matrix(rp: RationalPart) -> ZnMatrix:
    """For a whole left rational part: the coaction ``M -> D (x) M``."""
    com = rp.comodule()
    D = rp.pairing.coring
    sw = swap_matrix(com.ring, com.rank, D.rank)
    return sw @ com.coaction.matrix


@dataclass
class Bimodule:
    """A carrier with commuting right A- and left B-actions."""
    right: RightModule
    left: LeftModule

    @property
    def carrier(self) -> FPModule:
        return self.right.carrier


def birational_part(M: Bimodule, P: MeasuringPairing, Q: RightMeasuringPairing):
    """``Rat^C(left Rat(M)) = left Rat(M) & Rat^C(M) = left Rat(Rat^C(M))``.

    Returns ``(submodule, report)``; the report also checks that the two
    coactions on the birational part commute.
    """
    rep = Report("birational part")
    R1 = rat(M.right, P).submodule
    L1 = left_rat(M.left, Q).submodule
    inter = R1 & L1
    if is_stable(M.right, L1):
        rep.add("left rational part is a right A-submodule", True)
        NA, inc = restrict_right_module(M.right, L1)
        a = rat(NA, P).submodule
        a_img = Submodule(M.carrier, [inc(g).vector for g in a.generators])
        rep.add("Rat of the left rational part = intersection", a_img == inter)
    else:
        rep.add("left rational part is a right A-submodule", False)
    if is_stable(M.left, R1):
        rep.add("right rational part is a left B-submodule", True)
        NB, inc = restrict_left_module(M.left, R1)
        c = left_rat(NB, Q).submodule
        c_img = Submodule(M.carrier, [inc(g).vector for g in c.generators])
        rep.add("left Rat of the right rational part = intersection", c_img == inter)
    else:
        rep.add("right rational part is a left B-submodule", False)
    if inter.is_zero():
        rep.vacuous("coactions commute", "birational part is zero")
        return inter, rep
    BA, inc = restrict_right_module(M.right, inter)
    BB, _ = restrict_left_module(M.left, inter)
    rC = rat(BA, P).comodule()
    rD = left_coaction_matrix(left_rat(BB, Q))
    C, D = P.coring, Q.coring
    Bm = BA.carrier
    ring = Bm.ring
    Ic, Id = eye(ring, C.rank), eye(ring, D.rank)
    DBC = tensor(tensor(D.carrier, Bm), C.carrier)
    lhs = kron(Id, rC.coaction.matrix) @ rD
    rhs = kron(rD, Ic) @ rC.coaction.matrix
    j = _first_bad(DBC, lhs, rhs)
    rep.add("coactions commute", j is None, None if j is None else {"basis_element": j})
    return inter, rep


# ---------------------------------------------------------------------------
# bicommutants


def _centralizer(H, mats: Sequence[ZnMatrix]) -> Submodule:
    """``{X in H : X M = M X for all M}`` inside a Hom module ``Hom(C, C)``."""
    gens = H.gens()
    if not mats:
        return H.whole()
    S = direct_sum(*([H] * len(mats)))
    imgs = []
    for h in gens:
        X = H.to_map(h).matrix
        parts = [H.from_matrix(X @ Mk - Mk @ X).vector for Mk in mats]
        imgs.append(np.concatenate([np.asarray(p, dtype=object) for p in parts]))
    return kernel_of_map(ModuleMap.from_images(H, S, imgs, check=False))


def bicommutant_check(P: MeasuringPairing) -> Report:
    """End(C_A), its centralizer Biend, and the image of ``*C`` by ``f -> (c -> c <- f)``.

    Convention: maps are composed on the left, so ``f -> (c -> c <- f)``
    reverses products; Biend is compared with the image as a set and the
    product comparison is made against the opposite composition.
    """
    ac = alpha_check(P)
    if not ac.passed:
        raise AmbiguousCoaction(f"not an alpha-pairing: {', '.join(ac.data['diagnosis'])}")
    C = P.coring
    if not C.base_is_ground:
        raise UnsupportedBase("bicommutants are computed over the ground ring")
    rep = Report("bicommutant")
    W = C.carrier
    H = hom_module(W, W)
    E = _centralizer(H, P.action_matrices)
    Emats = [H.to_map(H.element(g)).matrix for g in E.generators]
    Biend = _centralizer(H, Emats)
    Dl = canonical_pairing(C)
    dual_imgs = [H.from_matrix(Hk) for Hk in Dl.action_matrices]
    emb = ModuleMap.from_images(Dl.acting.carrier, H, dual_imgs, check=False)
    image = Submodule(H, dual_imgs)
    rep.add("End is closed under composition",
            all(E.contains(H.from_matrix(X @ Y)) for X in Emats for Y in Emats))
    rep.add("image of the dual lies in Biend", image <= Biend)
    rep.add("dual embeds injectively", emb.is_injective())
    D = Dl.acting
    b = D.basis()
    rep.add("composition reverses the star product",
            all(emb(D.mul(f, g)) == H.from_matrix(H.to_map(emb(g)).matrix @ H.to_map(emb(f)).matrix)
                for f in b for g in b))
    if is_projective(W):
        rep.add("dual ring is isomorphic to Biend", image == Biend)
    else:
        rep.vacuous("dual ring is isomorphic to Biend", "carrier is not projective")
    rep.flag("convention", "Biend is the centralizer of End(C_A) in End_R(C) with maps composed "
                           "on the left; the reading with the opposite composition is not computed")
    rep.data["sizes"] = {"End": E.cardinality(), "Biend": Biend.cardinality(),
                         "dual": image.cardinality()}
    return rep


# ---------------------------------------------------------------------------
# subcorings and the alpha condition


def subcoring_structure(C, D: Submodule) -> tuple[ACoring, ModuleMap]:
    """The coring structure on D obtained by solving ``Delta(inc d)`` through ``inc (x) inc``."""
    C = as_coring(C)
    Dm, inc = D.as_module()
    F = kron(inc.matrix, inc.matrix)
    DD = tensor(Dm, Dm)
    cols = []
    for g in D.generators:
        y = _solve_through(F, C.cc, C.delta(C.carrier.element(g)))
        if y is None:
            raise SubmoduleMismatch("Delta(D) is not inside the image of D (x) D")
        cols.append(y)
    ring = C.ring
    I = eye(ring, Dm.rank)
    return ACoring(C.base, Dm, I, I, _cols(DD, cols), C.counit.matrix @ inc.matrix,
                   f"sub({C.name})"), inc


def restrict_pairing(P: Pairing, Wsub: Submodule) -> Pairing:
    """``(V, W')`` for a submodule W' of W, on its abstract presentation."""
    if Wsub.parent != P.W:
        raise SubmoduleMismatch("not a submodule of W")
    Wm, inc = Wsub.as_module()
    V = P.V
    form = P.ring.zeros((P.values.rank, V.rank * Wm.rank))
    for i in range(V.rank):
        for j, g in enumerate(Wsub.generators):
            form[:, i * Wm.rank + j] = np.asarray(P.evaluate(V.gen(i).vector, g).vector, dtype=object)
    return Pairing(V, Wm, ZnMatrix.from_array(P.ring, form), values=P.values,
                   name=f"{P.name}|W'")


def subcoring_alpha(C, D: Submodule) -> Report:
    """D pure iff ``(*C, D)`` is an alpha-pairing; and ``Rat(C) = C`` over D iff ``D = C``."""
    C = as_coring(C)
    if not C.base_is_ground:
        raise UnsupportedBase("subcoring purity is tested over the ground ring")
    if D.parent != C.carrier:
        raise SubmoduleMismatch("D is not a submodule of the coring")
    rep = Report("subcoring alpha")
    P = canonical_pairing(C)
    pure = is_pure_submodule(D, C.carrier)
    Q = restrict_pairing(P.pairing, D)
    alpha = pairing_alpha_check(Q).passed
    rep.data["pure"] = pure
    rep.data["alpha"] = alpha
    rep.add("pure iff alpha-pairing", pure == alpha, {"pure": pure, "alpha": alpha})
    try:
        subcoring_structure(C, D)
        rep.data["candidate"] = True
    except SubmoduleMismatch:
        rep.data["candidate"] = False
    if not alpha or not rep.data["candidate"]:
        rep.vacuous("Rat(C) = C iff D = C", "not an alpha-pairing subcoring")
        return rep
    Dc, inc = subcoring_structure(C, D)
    Dd = dual_ring(Dc, "left")
    restr = [Dd.element_from_matrix(P.dual.to_matrix(f) @ inc.matrix) for f in P.acting.basis()]
    Qm = MeasuringPairing(P.acting, Dc, _cols(Dd.carrier, restr), dual=Dd)
    R = rat(P.coring_module, Qm).submodule
    whole = D == C.carrier.whole()
    rep.add("Rat(C) = C iff D = C", (R == C.carrier.whole()) == whole)
    rep.data["rational"] = [list(g) for g in R.generators]
    return rep


# ---------------------------------------------------------------------------
# further laws


def chi_rational_check(P: MeasuringPairing) -> Report:
    """``chi: C -> A*`` is injective with image ``Rat(A*)``."""
    C = P.coring
    if not C.base_is_ground:
        raise UnsupportedBase("A* is formed over the ground ring")
    A = P.acting
    ring = P.ring
    H = hom_module(A.carrier, P.pairing.values)
    mu = A.mult.matrix
    Ia = eye(ring, A.rank)
    eA = np.eye(A.rank, dtype=object)
    images = []
    for h in H.gens():
        Phi = H.to_map(h).matrix
        for k in range(A.rank):
            ek = ZnMatrix.from_array(ring, eA[:, [k]])
            images.append(H.from_matrix(Phi @ mu @ kron(ek, Ia)))
    act = ModuleMap.from_images(tensor(H, A.carrier), H, images)
    Hr = RightModule(H, A, act, "A*")
    R = rat(Hr, P).submodule
    chi = ModuleMap.from_images(C.carrier, H, [H.from_matrix(P.pairing.column_map(g))
                                               for g in C.carrier.gens()])
    rep = Report("chi isomorphism")
    rep.add("chi is injective", chi.is_injective())
    rep.add("image of chi = Rat(A*)", chi.image() == R)
    return rep


def tensor_membership(P: Pairing, K: Submodule, x) -> tuple[bool, bool]:
    """For ``x in L (x) W``: (x in image of K (x) W, every ``sum l_i <v, w_i>`` in K)."""
    L, W = K.parent, P.W
    LW = tensor(L, W)
    KW = Submodule(LW, [np.kron(np.asarray(k, dtype=object), np.asarray(w.vector, dtype=object))
                        for k in K.generators for w in W.gens()])
    xv = np.asarray(_vec(x), dtype=object)
    left = KW.contains(xv)
    X = xv.reshape(L.rank, W.rank)
    right = True
    for v in P.V.gens():
        row = np.asarray(P.row_map(v).array, dtype=object)[0]
        if not K.contains(X @ row):
            right = False
            break
    return left, right


def comodule_round_trip(M: Comodule, P: MeasuringPairing) -> Report:
    """comodule -> induced module -> rational part -> comodule."""
    rep = Report("comodule round trip")
    Mr = induced_module(M, P)
    rp = rat(Mr, P)
    rep.add("induced module is rational", rp.is_whole)
    if not rp.is_whole:
        return rep
    back = rp.comodule()
    bad = _first_bad(M.mc, back.coaction.matrix, M.coaction.matrix)
    rep.add("recovered coaction equals the original", bad is None,
            None if bad is None else {"basis_element": bad})
    return rep


def module_round_trip(Mr: RightModule, P: MeasuringPairing) -> Report:
    """rational module -> comodule -> induced module."""
    rep = Report("module round trip")
    rp = rat(Mr, P)
    rep.add("module is rational", rp.is_whole)
    if not rp.is_whole:
        return rep
    back = induced_module(rp.comodule(), P)
    bad = _first_bad(Mr.carrier, back.action.matrix, Mr.action.matrix)
    rep.add("induced action equals the original", bad is None)
    return rep


def is_module_map(F: ZnMatrix, Mr: RightModule, Nr: RightModule) -> bool:
    ra = Mr.algebra.rank
    return _first_bad(Nr.carrier, F @ Mr.action.matrix,
                      Nr.action.matrix @ kron(F, eye(F.ring, ra))) is None


def hom_equality_check(M: Comodule, N: Comodule, P: MeasuringPairing, limit: int = 4096) -> Report:
    """Colinear maps = A-linear maps between the induced modules, by enumeration."""
    from .enumeration import FiniteIndex
    H = hom_module(M.carrier, N.carrier)
    rep = Report("Hom equality")
    ix = FiniteIndex(H)
    if ix.size > limit:
        rep.vacuous("colinear = A-linear", f"|Hom| = {ix.size} exceeds {limit}")
        return rep
    Mr, Nr = induced_module(M, P), induced_module(N, P)
    colin = lin = 0
    bad = None
    for v in ix.vectors:
        F = H.to_map(H.element(v)).matrix
        a = verify_colinear(F, M, N).passed
        b = is_module_map(F, Mr, Nr)
        colin += a
        lin += b
        if a != b and bad is None:
            bad = {"map": [list(r) for r in F.tolist()]}
    rep.add("colinear = A-linear", bad is None, bad)
    rep.data.update({"maps": ix.size, "colinear": colin, "linear": lin})
    return rep


def rat_laws(Mr: RightModule, P: MeasuringPairing, subs: Sequence[Submodule] = (),
             maps: Sequence[tuple] = ()) -> Report:
    """Rat(M) is a submodule, Rat(N) = N & Rat(M), Rat(Rat(M)) = Rat(M), f(Rat M) in Rat L."""
    rep = Report("rational part laws")
    rp = rat(Mr, P)
    R = rp.submodule
    rep.add("Rat(M) is an A-submodule", is_stable(Mr, R))
    bad = None
    for k, N in enumerate(subs):
        NA, inc = restrict_right_module(Mr, N)
        RN = rat(NA, P, check=False).submodule
        img = Submodule(Mr.carrier, [inc(g).vector for g in RN.generators])
        if img != (N & R):
            bad = {"submodule": k}
            break
    if subs:
        rep.add("Rat(N) = N & Rat(M)", bad is None, bad)
    else:
        rep.vacuous("Rat(N) = N & Rat(M)", "no submodules given")
    RA, inc = restrict_right_module(Mr, R)
    RR = rat(RA, P, check=False)
    rep.add("Rat(Rat(M)) = Rat(M)", RR.is_whole)
    bad = None
    for k, (f, Lr) in enumerate(maps):
        F = _as_matrix(f, Mr.carrier, Lr.carrier)
        RL = rat(Lr, P, check=False).submodule
        if not all(RL.contains(F.apply(g)) for g in R.generators):
            bad = {"map": k}
            break
    if maps:
        rep.add("f(Rat(M)) in Rat(L)", bad is None, bad)
    else:
        rep.vacuous("f(Rat(M)) in Rat(L)", "no maps given")
    return rep
