"""Entwining structures, the coring ``A (x) C``, Koppinen rings and Doi-Koppinen data.

Index conventions: ``C (x) A`` has generator ``c_i (x) a_k`` at ``i*rank(A) + k``
and ``A (x) C`` has ``a_k (x) c_i`` at ``k*rank(C) + i``.  A right-right psi is
stored as a matrix ``C (x) A -> A (x) C``; a left-right psi as ``A (x) C -> A (x) C``.
Left-right structures are handled by transporting them to right-right ones
over the opposite algebra.

>>> from corings.zn import RingContext
>>> from corings.algebra import FiniteGroup, group_algebra
>>> H = group_algebra(RingContext(4), FiniteGroup.cyclic(2))
>>> E = twist_entwining(H.algebra, H.coalgebra)
>>> bool(verify_entwining(E))
True
>>> bool(coring_from_entwining(E).verification)
True
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .algebra import (Algebra, Bialgebra, Coalgebra, ComoduleAlgebra, FiniteGroup, GSet,
                      ModuleCoalgebra, RightModule, dual_algebra, dual_numbers_graded, eye,
                      gset_coalgebra, ground_bialgebra, group_algebra, group_graded_algebra,
                      hit_action, kron, matrix_coalgebra, opposite_algebra, opposite_bialgebra,
                      regular_comodule_algebra, regular_module_coalgebra, swap_matrix,
                      tensor_bialgebra, trivial_comodule_algebra, trivial_module_coalgebra,
                      verify_algebra, verify_bialgebra, verify_comodule_algebra,
                      verify_module_coalgebra, verify_right_module)
from .comodule import (Comodule, MeasuringPairing, _cols, _first_bad, _solve_through,
                       canonical_pairing, induced_module, rat, restrict_right_module,
                       stable_closure, verify_comodule)
from .coring import (ACoring, _first_bad_column, _unflatten, coring_from_coalgebra, dual_ring)
from .errors import AxiomViolation, DimensionMismatch, NotGrouplike, NotSubalgebra
from .fpmod import (Element, FPModule, ModuleMap, Submodule, direct_sum, free_module,
                    hom_module, is_pure_submodule, kernel_of_map, tensor)
from .report import Report
from .topology import is_dense, orthogonal_of_subset
from .zn import RingContext, ZnMatrix

RR, LR = "right-right", "left-right"


def _mat(x, dom: FPModule, cod: FPModule) -> ZnMatrix:
    if isinstance(x, ModuleMap):
        x = x.matrix
    m = x if isinstance(x, ZnMatrix) else ZnMatrix.from_rows(dom.ring, x)
    if m.shape != (cod.rank, dom.rank):
        raise DimensionMismatch(f"expected a {cod.rank}x{dom.rank} matrix, got {m.shape}")
    return m


def _col(ring: RingContext, v) -> ZnMatrix:
    v = v.vector if isinstance(v, Element) else v
    return ZnMatrix.from_array(ring, np.asarray([[int(x)] for x in v], dtype=object).reshape(-1, 1))


def permute_factors(ring: RingContext, dims: Sequence[int], order: Sequence[int]) -> ZnMatrix:
    """``V_0 (x) ... (x) V_k -> V_order[0] (x) ... (x) V_order[k]`` on generators."""
    dims = list(dims)
    total = int(np.prod(dims)) if dims else 1
    P = ring.zeros((total, total))
    for idx in product(*[range(d) for d in dims]):
        src = 0
        for d, j in zip(dims, idx):
            src = src * d + j
        dst = 0
        for o in order:
            dst = dst * dims[o] + idx[o]
        P[dst, src] = 1
    return ZnMatrix.from_array(ring, P)


def _hom_solutions(dom: FPModule, cod: FPModule, constraints) -> tuple:
    """The submodule of ``Hom(dom, cod)`` on which every constraint vanishes.

    A constraint is ``(fn, target)`` with ``fn(X)`` a matrix whose columns are
    elements of ``target``.
    """
    H = hom_module(dom, cod)
    images, blocks = [], None
    for h in H.gens():
        X = H.to_map(h).matrix
        parts = []
        shapes = []
        for fn, target in constraints:
            Y = fn(X).array
            parts.extend(Y[:, j] for j in range(Y.shape[1]))
            shapes.extend([target] * Y.shape[1])
        blocks = shapes
        images.append(np.concatenate(parts) if parts else [])
    if not blocks:
        return H, H.whole()
    S = direct_sum(*blocks)
    return H, kernel_of_map(ModuleMap.from_images(H, S, images))


# ---------------------------------------------------------------------------
# entwining structures


class Entwining:
    """``(A, C, psi)``; ``handed`` is ``right-right`` or ``left-right``."""

    def __init__(self, A: Algebra, C: Coalgebra, psi, handed: str = RR, name: str = ""):
        if handed not in (RR, LR):
            raise ValueError(f"handed must be {RR!r} or {LR!r}")
        self.A, self.C, self.handed, self.name = A, C, handed, name
        self.ring = A.ring
        dom = tensor(C.carrier, A.carrier) if handed == RR else tensor(A.carrier, C.carrier)
        self.psi = ModuleMap(dom, tensor(A.carrier, C.carrier), _mat(psi, dom, tensor(A.carrier, C.carrier)))

    @property
    def matrix(self) -> ZnMatrix:
        return self.psi.matrix

    def apply(self, c, a) -> Element:
        """``sum a_psi (x) c^psi`` for basis or vector inputs (right-right order)."""
        cv = np.asarray(c.vector if isinstance(c, Element) else c, dtype=object)
        av = np.asarray(a.vector if isinstance(a, Element) else a, dtype=object)
        x = np.kron(cv, av) if self.handed == RR else np.kron(av, cv)
        return self.psi(x)

    @cached_property
    def verification(self) -> Report:
        return verify_entwining(self)

    def __repr__(self):
        return f"Entwining({self.name or 'unnamed'}, {self.handed}, A rank {self.A.rank}, C rank {self.C.rank})"


def twist_entwining(A: Algebra, C: Coalgebra, name: str = "") -> Entwining:
    """``psi = tau``, ``c (x) a -> a (x) c``."""
    return Entwining(A, C, swap_matrix(A.ring, C.rank, A.rank), RR, name or f"tau({A.name},{C.name})")


def left_right_transform(E: Entwining) -> Entwining:
    """Left-right ``(A, C, psi)`` <-> right-right ``(A^op, C, psi o tau)``; an involution."""
    ring, ra, rc = E.ring, E.A.rank, E.C.rank
    Aop = opposite_algebra(E.A)
    if E.handed == LR:
        return Entwining(Aop, E.C, E.matrix @ swap_matrix(ring, rc, ra), RR, E.name)
    return Entwining(Aop, E.C, E.matrix @ swap_matrix(ring, ra, rc), LR, E.name)


def verify_entwining(E: Entwining) -> Report:
    """The four entwining identities with basis witnesses.

    A left-right structure is checked through its right-right transform.
    """
    if E.handed == LR:
        rep = Report(f"entwining {E.name} (left-right, via the opposite algebra)".strip())
        rep.extend(verify_entwining(left_right_transform(E)), "")
        return rep
    rep = Report(f"entwining {E.name}".strip())
    A, C = E.A, E.C
    ring, ra, rc = E.ring, A.rank, C.rank
    P, mu = E.matrix, A.mult.matrix
    D, eps = C.comult.matrix, C.counit.matrix
    Ia, Ic = eye(ring, ra), eye(ring, rc)
    AC = tensor(A.carrier, C.carrier)

    def cmp(name, X, Y, dims, labels, where):
        j = _first_bad_column(where, X, Y)
        rep.add(name, j is None, None if j is None else dict(zip(labels, _unflatten(j, dims))))

    cmp("psi is multiplicative", P @ kron(Ic, mu), kron(mu, Ic) @ kron(Ia, P) @ kron(P, Ia),
        (rc, ra, ra), ("c", "a", "b"), AC)
    if A.unit is None:
        rep.vacuous("psi is unital", "algebra has no unit")
    else:
        u = _col(ring, A.unit)
        cmp("psi is unital", P @ kron(Ic, u), kron(u, Ic), (rc,), ("c",), AC)
    cmp("psi is comultiplicative", kron(Ia, D) @ P, kron(P, Ic) @ kron(Ic, P) @ kron(D, Ia),
        (rc, ra), ("c", "a"), tensor(AC, C.carrier))
    cmp("psi is counital", kron(Ia, eps) @ P, kron(eps, Ia), (rc, ra), ("c", "a"), A.carrier)
    return rep


def _rr(E: Entwining) -> Entwining:
    return E if E.handed == RR else left_right_transform(E)


def coring_from_entwining(E: Entwining, check: bool = True) -> ACoring:
    """The coring ``A (x) C`` (over ``A^op`` for a left-right structure)."""
    if check and not E.verification.passed:
        raise AxiomViolation("psi is not an entwining map", E.verification)
    E = _rr(E)
    A, C = E.A, E.C
    ring, ra, rc = E.ring, A.rank, C.rank
    mu, P = A.mult.matrix, E.matrix
    Ia, Ic = eye(ring, ra), eye(ring, rc)
    u = _col(ring, A.unit)
    AC = tensor(A.carrier, C.carrier)
    L = kron(mu, Ic)
    Rm = kron(mu, Ic) @ kron(Ia, P)
    Dm = kron(Ia, Ic, u, Ic) @ kron(Ia, C.comult.matrix)
    Em = kron(Ia, C.counit.matrix)
    K = ACoring(A, AC, L, Rm, Dm, Em, f"{A.name}(x){C.name}" if A.name or C.name else "A(x)C")
    if check and not K.verification.passed:
        raise AxiomViolation("A (x) C fails the coring axioms", K.verification)
    return K


# ---------------------------------------------------------------------------
# Koppinen rings and the map phi


class KoppinenRing(Algebra):
    """``Hom(C, A)`` with ``(f g)(c) = sum f(c2)_psi g(c1^psi)`` and unit ``eta o eps``.

    For a left-right structure the product is ``sum f(c1^psi) g(c2)_psi``,
    obtained as the opposite of the right-right ring over ``A^op``.
    """

    def __init__(self, E: Entwining):
        self.entwining = E
        self.handed = E.handed
        R = _rr(E)
        A, C = R.A, R.C
        ring, ra, rc = R.ring, A.rank, C.rank
        self.hom = H = hom_module(C.carrier, A.carrier)
        mu, P, D = A.mult.matrix, R.matrix, C.comult.matrix
        Ia, Ic = eye(ring, ra), eye(ring, rc)
        mats = [H.to_map(h).matrix for h in H.gens()]

        def prod(F, G):
            return mu @ kron(Ia, G) @ P @ kron(Ic, F) @ D

        flip = E.handed == LR
        images = [H.from_matrix(prod(mats[q], mats[p]) if flip else prod(mats[p], mats[q]))
                  for p in range(H.rank) for q in range(H.rank)]
        mult = ModuleMap.from_images(tensor(H, H), H, images)
        unit = H.from_matrix(_col(ring, A.unit) @ C.counit.matrix)
        super().__init__(H, mult, unit, f"#({C.name},{E.A.name})")

    def element_from_matrix(self, X) -> Element:
        return self.hom.from_matrix(X)

    def to_matrix(self, f: Element) -> ZnMatrix:
        return self.hom.to_map(f).matrix

    def evaluate(self, f: Element, c) -> Element:
        return self.hom.evaluate(f, c)

    def scalar(self, a) -> Element:
        """``a -> (c -> a eps(c))``, the ring map from the base algebra."""
        C = self.entwining.C
        return self.hom.from_matrix(_col(self.ring, a) @ C.counit.matrix)


def koppinen_ring(E: Entwining, check: bool = True) -> KoppinenRing:
    if check and not E.verification.passed:
        raise AxiomViolation("psi is not an entwining map", E.verification)
    K = KoppinenRing(E)
    if check:
        rep = verify_algebra(K)
        if not rep.passed:
            raise AxiomViolation("Koppinen product is not an algebra", rep)
    return K


@dataclass
class PhiIsomorphism:
    koppinen: KoppinenRing
    coring: ACoring
    dual: object
    phi: ModuleMap
    inverse: ModuleMap
    report: Report

    def __bool__(self):
        return bool(self.report)


def phi_matrix(E: Entwining, F: ZnMatrix) -> ZnMatrix:
    """``a (x) c -> a f(c)``."""
    A = _rr(E).A
    return A.mult.matrix @ kron(eye(E.ring, A.rank), F)


def phi_isomorphism(E: Entwining, K: Optional[KoppinenRing] = None,
                    coring: Optional[ACoring] = None) -> PhiIsomorphism:
    """``phi: f -> [a (x) c -> a f(c)]`` onto the left dual ring, with its inverse."""
    K = K if K is not None else koppinen_ring(E)
    Cg = coring if coring is not None else coring_from_entwining(E)
    Dl = dual_ring(Cg, "left")
    R = _rr(E)
    A = R.A
    ring, ra, rc = E.ring, A.rank, R.C.rank
    mu = A.mult.matrix
    u = _col(ring, A.unit)
    rep = Report(f"phi isomorphism {E.name}".strip())
    images = []
    for j, f in enumerate(K.basis()):
        try:
            images.append(Dl.element_from_matrix(phi_matrix(E, K.to_matrix(f))))
        except AxiomViolation:
            rep.add("phi lands in left A-linear maps", False, {"basis_element": j})
            return PhiIsomorphism(K, Cg, Dl, None, None, rep)
    rep.add("phi lands in left A-linear maps", True)
    phi = ModuleMap.from_images(K.carrier, Dl.carrier, images)
    inv = ModuleMap.from_images(
        Dl.carrier, K.carrier,
        [K.element_from_matrix(Dl.to_matrix(h) @ kron(u, eye(ring, rc))) for h in Dl.basis()])
    KB, DB = K.basis(), Dl.basis()
    bad = next((j for j, f in enumerate(KB) if inv(phi(f)) != f), None)
    rep.add("inverse after phi is the identity", bad is None, {"basis_element": bad})
    bad = next((j for j, h in enumerate(DB) if phi(inv(h)) != h), None)
    rep.add("phi after inverse is the identity", bad is None, {"basis_element": bad})
    # a left-right Koppinen ring is the opposite of the right-right one, so phi
    # reverses products there
    flip = E.handed == LR
    bad = next(((p, q) for p, q in product(range(len(KB)), repeat=2)
                if phi(K.mul(KB[p], KB[q])) != (Dl.mul(phi(KB[q]), phi(KB[p])) if flip
                                                else Dl.mul(phi(KB[p]), phi(KB[q])))), None)
    rep.add("phi is anti-multiplicative" if flip else "phi is multiplicative",
            bad is None, {"basis_pair": bad})
    rep.add("phi is unital", phi(K.unit) == Dl.unit)
    # A-bimodule structures: (a f)(c) = sum a_psi f(c^psi), (f a)(c) = f(c) a on the
    # Koppinen side; (a h)(x) = h(x a), (h a)(x) = h(x) a on the dual ring.
    Ia, Ic, Iac = eye(ring, ra), eye(ring, rc), eye(ring, ra * rc)
    bad_l = bad_r = None
    for j, f in enumerate(KB):
        F = K.to_matrix(f)
        Fh = phi_matrix(E, F)
        for k, a in enumerate(A.basis()):
            ac = _col(ring, a)
            aF = mu @ kron(Ia, F) @ R.matrix @ kron(Ic, ac)
            Fa = mu @ kron(F, ac)
            if bad_l is None and Dl.element_from_matrix(phi_matrix(E, aF)) != \
                    Dl.element_from_matrix(Fh @ Cg.right_action.matrix @ kron(Iac, ac)):
                bad_l = {"f": j, "a": k}
            if bad_r is None and Dl.element_from_matrix(phi_matrix(E, Fa)) != \
                    Dl.element_from_matrix(mu @ kron(Fh, ac)):
                bad_r = {"f": j, "a": k}
    rep.add("phi is left A-linear", bad_l is None, bad_l)
    rep.add("phi is right A-linear", bad_r is None, bad_r)
    return PhiIsomorphism(K, Cg, Dl, phi, inv, rep)


def koppinen_pairing(E: Entwining, iso: Optional[PhiIsomorphism] = None) -> MeasuringPairing:
    """``(#(C, A), A (x) C)`` with kappa = phi; the base map is ``a -> a eps``.

    A left-right structure is paired through its right-right transform.
    """
    if E.handed == LR:
        E = left_right_transform(E)
        iso = None
    iso = iso if iso is not None else phi_isomorphism(E)
    if not iso.report.passed:
        raise AxiomViolation("phi is not an isomorphism", iso.report)
    K = iso.koppinen
    A = K.entwining.A
    base = _cols(K.carrier, [K.scalar(a) for a in A.basis()])
    return MeasuringPairing(K, iso.coring, iso.phi.matrix, base, dual=iso.dual,
                            name=f"(#, {iso.coring.name})")


# ---------------------------------------------------------------------------
# Doi-Koppinen structures


@dataclass
class DKStructure:
    """``(H, A, C)``: A a right H-comodule algebra, C a right H-module coalgebra."""

    H: Bialgebra
    A: ComoduleAlgebra
    C: ModuleCoalgebra
    handed: str = RR
    name: str = ""

    @cached_property
    def verification(self) -> Report:
        return verify_dk(self)


def verify_dk(D: DKStructure) -> Report:
    rep = Report(f"Doi-Koppinen structure {D.name}".strip())
    rep.extend(verify_bialgebra(D.H), "bialgebra: ")
    rep.extend(verify_comodule_algebra(D.A), "comodule algebra: ")
    rep.extend(verify_module_coalgebra(D.C), "module coalgebra: ")
    same = D.A.bialgebra.rank == D.H.rank == D.C.bialgebra.rank
    rep.add("components share the bialgebra", same)
    return rep


def _refuse(rep: Report, what: str):
    bad = [c.name for c in rep.failures()]
    raise AxiomViolation(f"{what}: failing components {', '.join(bad)}", rep)


def dk_psi_matrix(D: DKStructure) -> ZnMatrix:
    """``c (x) a -> sum a<0> (x) c a<1>``."""
    A, C, H = D.A.algebra, D.C.coalgebra, D.H
    ring, ra, rc, rh = A.ring, A.rank, C.rank, H.rank
    step = kron(eye(ring, rc), D.A.coaction.matrix)                    # C A H
    step = permute_factors(ring, (rc, ra, rh), (1, 0, 2)) @ step       # A C H
    return kron(eye(ring, ra), D.C.action.matrix) @ step               # A C


def dk_to_entwining(D: DKStructure, check: bool = True) -> Entwining:
    if check and not D.verification.passed:
        _refuse(D.verification, "Doi-Koppinen structure")
    E = Entwining(D.A.algebra, D.C.coalgebra, dk_psi_matrix(D), RR, D.name)
    if check and not E.verification.passed:
        raise AxiomViolation("induced psi is not an entwining map", E.verification)
    return E


def left_right_dk(H: Bialgebra, A: ComoduleAlgebra, C: Coalgebra, left_action, name: str = "") -> DKStructure:
    """A left-right structure (C a left H-module coalgebra) as the right-right
    structure ``(H^op, A^op, C)`` with ``c . h = h c``."""
    Hop = opposite_bialgebra(H)
    ring = H.ring
    CH, HC = tensor(C.carrier, H.carrier), tensor(H.carrier, C.carrier)
    act = _mat(left_action, HC, C.carrier) @ swap_matrix(ring, C.rank, H.rank)
    Aop = ComoduleAlgebra(opposite_algebra(A.algebra), Hop,
                          ModuleMap(A.algebra.carrier, tensor(A.algebra.carrier, Hop.carrier),
                                    A.coaction.matrix, check=False), A.name)
    Cr = ModuleCoalgebra(C, Hop, ModuleMap(CH, C.carrier, act, check=False), C.name)
    return DKStructure(Hop, Aop, Cr, LR, name)


# alternative structures: A a right H-module algebra, C a right H-comodule coalgebra

@dataclass
class ModuleAlgebra:
    algebra: Algebra
    bialgebra: Bialgebra
    action: ZnMatrix  # A (x) H -> A
    name: str = ""


@dataclass
class ComoduleCoalgebra:
    coalgebra: Coalgebra
    bialgebra: Bialgebra
    coaction: ZnMatrix  # C -> C (x) H
    name: str = ""


def verify_module_algebra(MA: ModuleAlgebra) -> Report:
    rep = Report(f"module algebra {MA.name}".strip())
    A, H = MA.algebra, MA.bialgebra
    ring, ra, rh = A.ring, A.rank, H.rank
    act, mu, muH = MA.action, A.mult.matrix, H.algebra.mult.matrix
    DH, eH = H.coalgebra.comult.matrix, H.coalgebra.counit.matrix
    Ia, Ih = eye(ring, ra), eye(ring, rh)
    uA, uH = _col(ring, A.unit), _col(ring, H.algebra.unit)

    def cmp(name, X, Y, dims, labels):
        j = _first_bad_column(A.carrier, X, Y)
        rep.add(name, j is None, None if j is None else dict(zip(labels, _unflatten(j, dims))))

    cmp("action is associative", act @ kron(act, Ih), act @ kron(Ia, muH), (ra, rh, rh), ("a", "g", "h"))
    cmp("action is unital", act @ kron(Ia, uH), Ia, (ra,), ("a",))
    swap = permute_factors(ring, (ra, ra, rh, rh), (0, 2, 1, 3))
    cmp("action is multiplicative", act @ kron(mu, Ih),
        mu @ kron(act, act) @ swap @ kron(Ia, Ia, DH), (ra, ra, rh), ("a", "b", "h"))
    cmp("unit is invariant", act @ kron(uA, Ih), uA @ eH, (rh,), ("h",))
    return rep


def verify_comodule_coalgebra(CC: ComoduleCoalgebra) -> Report:
    rep = Report(f"comodule coalgebra {CC.name}".strip())
    C, H = CC.coalgebra, CC.bialgebra
    ring, rc, rh = C.ring, C.rank, H.rank
    rho, D, eps = CC.coaction, C.comult.matrix, C.counit.matrix
    DH, eH, muH = H.coalgebra.comult.matrix, H.coalgebra.counit.matrix, H.algebra.mult.matrix
    Ic, Ih = eye(ring, rc), eye(ring, rh)
    uH = _col(ring, H.algebra.unit)
    CHH = tensor(tensor(C.carrier, H.carrier), H.carrier)

    def cmp(name, X, Y, where):
        j = _first_bad_column(where, X, Y)
        rep.add(name, j is None, None if j is None else {"basis_element": j})

    cmp("coaction is coassociative", kron(rho, Ih) @ rho, kron(Ic, DH) @ rho, CHH)
    cmp("coaction is counital", kron(Ic, eH) @ rho, Ic, C.carrier)
    swap = permute_factors(ring, (rc, rh, rc, rh), (0, 2, 1, 3))
    cmp("comultiplication is colinear", kron(Ic, Ic, muH) @ swap @ kron(rho, rho) @ D,
        kron(D, Ih) @ rho, tensor(tensor(C.carrier, C.carrier), H.carrier))
    cmp("counit is colinear", kron(eps, Ih) @ rho, uH @ eps, H.carrier)
    return rep


@dataclass
class AltDKStructure:
    H: Bialgebra
    A: ModuleAlgebra
    C: ComoduleCoalgebra
    name: str = ""

    @cached_property
    def verification(self) -> Report:
        rep = Report(f"alternative Doi-Koppinen structure {self.name}".strip())
        rep.extend(verify_bialgebra(self.H), "bialgebra: ")
        rep.extend(verify_module_algebra(self.A), "module algebra: ")
        rep.extend(verify_comodule_coalgebra(self.C), "comodule coalgebra: ")
        return rep


def alt_dk_to_entwining(D: AltDKStructure, check: bool = True) -> Entwining:
    """``c (x) a -> sum a c<1> (x) c<0>``."""
    if check and not D.verification.passed:
        _refuse(D.verification, "alternative Doi-Koppinen structure")
    A, C = D.A.algebra, D.C.coalgebra
    ring, ra, rc, rh = A.ring, A.rank, C.rank, D.H.rank
    step = kron(D.C.coaction, eye(ring, ra))                        # C H A
    step = permute_factors(ring, (rc, rh, ra), (2, 1, 0)) @ step    # A H C
    psi = kron(D.A.action, eye(ring, rc)) @ step
    E = Entwining(A, C, psi, RR, D.name)
    if check and not E.verification.passed:
        raise AxiomViolation("induced psi is not an entwining map", E.verification)
    return E


def yetter_drinfeld_builder(K: Bialgebra, H: Bialgebra, A: Algebra, C: Coalgebra,
                            k_coaction=None, h_coaction=None, k_action=None, h_action=None,
                            name: str = "") -> DKStructure:
    """The structure over ``K^op (x) H`` from a right K^op- and H-comodule algebra A
    and a K-H-bimodule coalgebra C.

    The coactions combine to ``a -> a<0><0> (x) a<0><1> (x) a<1>`` and the actions to
    ``c . (k (x) h) = (k c) h``.  Missing structure maps default to trivial ones.
    """
    ring = A.ring
    ra, rc, rk, rh = A.rank, C.rank, K.rank, H.rank
    Kop = opposite_bialgebra(K)
    B = tensor_bialgebra(Kop, H)
    A_, C_ = A.carrier, C.carrier
    one = lambda X: _col(ring, X.algebra.unit)
    rK = (_mat(k_coaction, A_, tensor(A_, K.carrier)) if k_coaction is not None
          else kron(eye(ring, ra), one(K)))
    rH = (_mat(h_coaction, A_, tensor(A_, H.carrier)) if h_coaction is not None
          else kron(eye(ring, ra), one(H)))
    lK = (_mat(k_action, tensor(K.carrier, C_), C_) if k_action is not None
          else kron(K.coalgebra.counit.matrix, eye(ring, rc)))
    aH = (_mat(h_action, tensor(C_, H.carrier), C_) if h_action is not None
          else kron(eye(ring, rc), H.coalgebra.counit.matrix))
    coact = kron(rK, eye(ring, rh)) @ rH
    act = aH @ kron(lK, eye(ring, rh)) @ permute_factors(ring, (rc, rk, rh), (1, 0, 2))
    CA = ComoduleAlgebra(A, B, ModuleMap(A_, tensor(A_, B.carrier), coact, check=False), A.name)
    MC = ModuleCoalgebra(C, B, ModuleMap(tensor(C_, B.carrier), C_, act, check=False), C.name)
    D = DKStructure(B, CA, MC, RR, name or "Yetter-Drinfeld")
    if not D.verification.passed:
        _refuse(D.verification, "Yetter-Drinfeld datum")
    return D


# ---------------------------------------------------------------------------
# entwined modules


class EntwinedModule:
    """A right A-module and right C-comodule; ``action: M (x) A -> M``, ``coaction: M -> M (x) C``."""

    def __init__(self, E: Entwining, carrier: FPModule, action, coaction, name: str = ""):
        if E.handed != RR:
            raise ValueError("entwined modules are taken over right-right structures")
        self.entwining = E
        self.carrier = carrier
        self.ring = carrier.ring
        self.name = name
        A, C = E.A, E.C
        self.action = ModuleMap(tensor(carrier, A.carrier), carrier,
                                _mat(action, tensor(carrier, A.carrier), carrier))
        self.coaction = ModuleMap(carrier, tensor(carrier, C.carrier),
                                  _mat(coaction, carrier, tensor(carrier, C.carrier)))
        self.koppinen_module: Optional[RightModule] = None

    @property
    def rank(self) -> int:
        return self.carrier.rank

    @cached_property
    def right_module(self) -> RightModule:
        return RightModule(self.carrier, self.entwining.A, self.action, self.name)

    @cached_property
    def comodule(self) -> Comodule:
        """The C-comodule over the ground ring."""
        return Comodule(coring_from_coalgebra(self.entwining.C), self.carrier,
                        self.coaction.matrix, name=self.name)

    def as_coring_comodule(self, coring: Optional[ACoring] = None) -> Comodule:
        """``m -> sum m0 (x)_A (1 (x) m1)`` over ``A (x) C``."""
        K = coring if coring is not None else coring_from_entwining(self.entwining)
        ring = self.ring
        E = self.entwining
        P = kron(eye(ring, self.rank), _col(ring, E.A.unit), eye(ring, E.C.rank)) @ self.coaction.matrix
        return Comodule(K, self.carrier, P, self.right_module, self.name)

    def __repr__(self):
        return f"EntwinedModule({self.name or 'unnamed'}, rank={self.rank})"


def koppinen_action(M: EntwinedModule, K: KoppinenRing) -> RightModule:
    """``m f = sum m0 f(m1)``."""
    ring, m = M.ring, M.rank
    Im = eye(ring, m)
    acts = [(M.action.matrix @ kron(Im, K.to_matrix(f)) @ M.coaction.matrix).array for f in K.basis()]
    images = [acts[k][:, i] for i in range(m) for k in range(K.rank)]
    act = ModuleMap.from_images(tensor(M.carrier, K.carrier), M.carrier, images)
    return RightModule(M.carrier, K, act, M.name)


def compatibility_check(M: EntwinedModule) -> Optional[dict]:
    """First ``(m, a)`` with ``rho(m a) != sum m0 a_psi (x) m1^psi``, or None."""
    E = M.entwining
    ring, m, ra, rc = M.ring, M.rank, E.A.rank, E.C.rank
    act, rho = M.action.matrix, M.coaction.matrix
    lhs = rho @ act
    rhs = kron(act, eye(ring, rc)) @ kron(eye(ring, m), E.matrix) @ kron(rho, eye(ring, ra))
    j = _first_bad_column(tensor(M.carrier, E.C.carrier), lhs, rhs)
    return None if j is None else {"m": j // ra, "a": j % ra}


def verify_entwined_module(M: EntwinedModule, K: Optional[KoppinenRing] = None) -> Report:
    """Module, comodule and compatibility checks; on success installs the Koppinen action."""
    rep = Report(f"entwined module {M.name}".strip())
    rep.extend(verify_right_module(M.right_module), "module: ")
    rep.extend(verify_comodule(M.comodule), "comodule: ")
    if M.rank == 0:
        rep.vacuous("rho(m a) = sum m0 a_psi (x) m1^psi", "zero module")
    else:
        w = compatibility_check(M)
        rep.add("rho(m a) = sum m0 a_psi (x) m1^psi", w is None, w)
    if not rep.passed:
        return rep
    K = K if K is not None else koppinen_ring(M.entwining)
    Mr = koppinen_action(M, K)
    rep.extend(verify_right_module(Mr), "Koppinen action: ")
    if rep.passed:
        M.koppinen_module = Mr
    return rep


def regular_entwined_module(E: Entwining) -> EntwinedModule:
    """``A (x) C`` with ``(a (x) c) b = sum a b_psi (x) c^psi`` and ``a (x) c -> a (x) c1 (x) c2``."""
    A, C = E.A, E.C
    ring = E.ring
    AC = tensor(A.carrier, C.carrier)
    act = kron(A.mult.matrix, eye(ring, C.rank)) @ kron(eye(ring, A.rank), E.matrix)
    return EntwinedModule(E, AC, act, kron(eye(ring, A.rank), C.comult.matrix), "A(x)C")


def entwined_from_comodule_algebra(D: DKStructure, E: Optional[Entwining] = None) -> EntwinedModule:
    """A itself, when C = H: multiplication and the H-coaction."""
    E = E if E is not None else dk_to_entwining(D)
    A = D.A.algebra
    if D.C.coalgebra.rank != D.H.rank:
        raise DimensionMismatch("A is an entwined module only when C is H")
    return EntwinedModule(E, A.carrier, A.mult.matrix, D.A.coaction.matrix, A.name)


def entwined_hom(M: EntwinedModule, N: EntwinedModule) -> tuple:
    """``(Hom_R(M, N), A-linear C-colinear maps)``."""
    E = M.entwining
    ring, ra, rc = E.ring, E.A.rank, E.C.rank
    NC = tensor(N.carrier, E.C.carrier)
    cons = [(lambda X: X @ M.action.matrix - N.action.matrix @ kron(X, eye(ring, ra)), N.carrier),
            (lambda X: kron(X, eye(ring, rc)) @ M.coaction.matrix - N.coaction.matrix @ X, NC)]
    return _hom_solutions(M.carrier, N.carrier, cons)


def colinear_hom(N: Comodule, M: EntwinedModule) -> tuple:
    """C-colinear maps from a ground comodule N into M."""
    rc = M.entwining.C.rank
    NC = tensor(M.carrier, M.entwining.C.carrier)
    cons = [(lambda X: kron(X, eye(M.ring, rc)) @ N.coaction.matrix - M.coaction.matrix @ X, NC)]
    return _hom_solutions(N.carrier, M.carrier, cons)


def induced_comodule_functor(N: Comodule, E: Entwining) -> EntwinedModule:
    """``N (x) A`` with ``(n (x) a) b = n (x) ab`` and ``n (x) a -> sum n0 (x) a_psi (x) n1^psi``."""
    A = E.A
    ring, n, ra = E.ring, N.rank, A.rank
    NA = tensor(N.carrier, A.carrier)
    act = kron(eye(ring, n), A.mult.matrix)
    coact = kron(eye(ring, n), E.matrix) @ kron(N.coaction.matrix, eye(ring, ra))
    return EntwinedModule(E, NA, act, coact, f"{N.name}(x)A")


def induced_module_functor(N: RightModule, E: Entwining) -> EntwinedModule:
    """``N (x) C`` with ``(n (x) c) a = sum n a_psi (x) c^psi`` and ``n (x) c -> n (x) c1 (x) c2``."""
    C = E.C
    ring, n = E.ring, N.carrier.rank
    NC = tensor(N.carrier, C.carrier)
    act = kron(N.action.matrix, eye(ring, C.rank)) @ kron(eye(ring, n), E.matrix)
    return EntwinedModule(E, NC, act, kron(eye(ring, n), C.comult.matrix), f"{N.name}(x)C")


def adjunction_check(N: Comodule, M: EntwinedModule, limit: int = 1 << 16) -> Report:
    """``Hom_A^C(N (x) A, M) = Hom^C(N, M)`` via ``g -> g(- (x) 1)``, ``f -> [n (x) a -> f(n) a]``,
    with both Hom-sets enumerated."""
    E = M.entwining
    ring, ra = E.ring, E.A.rank
    NA = induced_comodule_functor(N, E)
    rep = Report("induction adjunction")
    rep.extend(verify_entwined_module(NA), "N (x) A: ")
    H1, S1 = entwined_hom(NA, M)
    H2, S2 = colinear_hom(N, M)
    c1, c2 = S1.cardinality(), S2.cardinality()
    rep.data.update({"entwined_maps": c1, "colinear_maps": c2})
    if max(c1, c2) > limit:
        rep.vacuous("bijection", f"Hom-sets exceed {limit} elements")
        return rep
    u = _col(ring, E.A.unit)
    In = eye(ring, N.rank)

    def fwd(G):
        return G @ kron(In, u)

    def back(F):
        return M.action.matrix @ kron(F, eye(ring, ra))

    ok_f = ok_b = ok_rt = True
    first = None
    for g in S1.elements():
        G = H1.to_map(g).matrix
        F = fwd(G)
        if not S2.contains(H2.from_matrix(F)):
            ok_f = False
            first = first or {"entwined_map": [list(r) for r in G.tolist()]}
        elif H1.from_matrix(back(F)) != g:
            ok_rt = False
            first = first or {"entwined_map": [list(r) for r in G.tolist()]}
    for f in S2.elements():
        F = H2.to_map(f).matrix
        B = back(F)
        if not S1.contains(H1.from_matrix(B)):
            ok_b = False
            first = first or {"colinear_map": [list(r) for r in F.tolist()]}
        elif H2.from_matrix(fwd(B)) != f:
            ok_rt = False
            first = first or {"colinear_map": [list(r) for r in F.tolist()]}
    rep.add("restriction lands in colinear maps", ok_f, first)
    rep.add("extension lands in entwined maps", ok_b, first)
    rep.add("the two maps are mutually inverse", ok_rt, first)
    rep.add("cardinalities agree", c1 == c2, {"entwined": c1, "colinear": c2})
    return rep


def entwined_round_trip(M: EntwinedModule, pairing: Optional[MeasuringPairing] = None) -> Report:
    """entwined module -> Koppinen module -> rational part -> entwined module."""
    E = M.entwining
    rep = Report(f"entwined round trip {M.name}".strip())
    P = pairing if pairing is not None else koppinen_pairing(E)
    K = P.acting
    vr = verify_entwined_module(M, K)
    rep.add("input is an entwined module", vr.passed)
    if not vr.passed:
        return rep
    rp = rat(M.koppinen_module, P)
    rep.add("Koppinen module is rational", rp.is_whole)
    if not rp.is_whole:
        return rep
    back = rp.comodule()
    ring = M.ring
    j = _first_bad(M.carrier, rp.base_module.action.matrix, M.action.matrix)
    rep.add("recovered A-action equals the original", j is None, None if j is None else {"column": j})
    coact = kron(M.action.matrix, eye(ring, E.C.rank)) @ back.coaction.matrix
    j = _first_bad(tensor(M.carrier, E.C.carrier), coact, M.coaction.matrix)
    rep.add("recovered coaction equals the original", j is None, None if j is None else {"basis_element": j})
    return rep


def restrict_entwined(M: EntwinedModule, S: Submodule) -> tuple[EntwinedModule, ModuleMap]:
    """An A-stable subcomodule as an entwined module on its abstract presentation."""
    NA, inc = restrict_right_module(M.right_module, S)
    E = M.entwining
    rc = E.C.rank
    F = kron(inc.matrix, eye(M.ring, rc))
    NC = tensor(NA.carrier, E.C.carrier)
    cols = []
    for g in S.generators:
        y = _solve_through(F, tensor(M.carrier, E.C.carrier), M.coaction(g))
        if y is None:
            raise AxiomViolation("submodule is not a subcomodule")
        cols.append(y)
    return EntwinedModule(E, NA.carrier, NA.action.matrix, _cols(NC, cols), M.name), inc


def is_subcomodule(M: EntwinedModule, S: Submodule) -> bool:
    rc = M.entwining.C.rank
    F = kron(S.as_module()[1].matrix, eye(M.ring, rc))
    MC = tensor(M.carrier, M.entwining.C.carrier)
    return all(_solve_through(F, MC, M.coaction(g)) is not None for g in S.generators)


def subobject_law(M: EntwinedModule, N: Submodule) -> Report:
    """For a subcomodule N, the A-submodule ``N A`` is an entwined submodule."""
    rep = Report("N A is an entwined submodule")
    if not is_subcomodule(M, N):
        rep.vacuous("N A is entwined", "N is not a subcomodule")
        return rep
    NA = stable_closure(M.right_module, N.generators)
    rep.add("N A is a subcomodule", is_subcomodule(M, NA))
    if rep.passed:
        sub, _ = restrict_entwined(M, NA)
        rep.extend(verify_entwined_module(sub), "N A: ")
    return rep


# ---------------------------------------------------------------------------
# smash products


def check_t_subalgebra(D: DKStructure, T: Submodule, Cs=None) -> Report:
    """T inside C*: contains eps, closed under convolution, stable under the H-action."""
    C = D.C.coalgebra
    Cs = Cs if Cs is not None else dual_algebra(C)
    rep = Report("T is a left H-module subalgebra of C*")
    rep.add("eps in T", T.contains(Cs.unit), {"eps": Cs.unit.vector})
    gens = [Cs.carrier.element(g) for g in T.generators]
    bad = next(((i, j) for i, j in product(range(len(gens)), repeat=2)
                if not T.contains(Cs.mul(gens[i], gens[j]))), None)
    rep.add("closed under convolution", bad is None, {"generator_pair": bad})
    act = hit_action(D.C, Cs)
    bad = next(((k, i) for k, h in enumerate(D.H.algebra.basis()) for i, f in enumerate(gens)
                if not T.contains(act(h, f))), None)
    rep.add("stable under H", bad is None, {"h": None if bad is None else bad[0],
                                            "generator": None if bad is None else bad[1]})
    return rep


class SmashRing(Algebra):
    """``A #op T`` with ``(a # f)(b # g) = sum a<0> b # (a<1> g) * f``.

    The carrier is the image of ``A (x) T`` in ``A (x) C*`` (equal to ``A (x) T``
    whenever that map is injective, e.g. when A is free).
    """

    def __init__(self, D: DKStructure, T: Optional[Submodule] = None,
                 E: Optional[Entwining] = None, K: Optional[KoppinenRing] = None):
        self.dk = D
        A, Ccoal = D.A.algebra, D.C.coalgebra
        ra = A.rank
        self.Cstar = Cs = dual_algebra(Ccoal)
        T = T if T is not None else Cs.carrier.whole()
        if T.parent != Cs.carrier:
            raise NotSubalgebra("T is not a submodule of C*")
        self.T = T
        self.t_report = check_t_subalgebra(D, T, Cs)
        if not self.t_report.passed:
            w = {c.name: c.witness for c in self.t_report.failures()}
            raise NotSubalgebra("T is not an H-stable subalgebra containing eps", w)
        self.entwining = E if E is not None else dk_to_entwining(D)
        self.koppinen = K if K is not None else koppinen_ring(self.entwining)
        AC = tensor(A.carrier, Cs.carrier)
        self.ambient = AC
        eA = np.eye(ra, dtype=object)
        self.span = S = Submodule(AC, [np.kron(eA[i], np.asarray(t, dtype=object))
                                       for i in range(ra) for t in T.generators])
        Sm, inc = S.as_module()
        self.inclusion = inc
        act = hit_action(D.C, Cs)
        Hb = D.H.algebra.basis()
        rs = Cs.rank
        fb = Cs.basis()

        def amb_mul(x, y):
            X = np.asarray(x, dtype=object).reshape(ra, rs)
            Y = np.asarray(y, dtype=object).reshape(ra, rs)
            out = np.zeros((ra, rs), dtype=object)
            for i, k in zip(*np.nonzero(X)):
                for coef, i0, h in D.A.coact_terms(eA[i]):
                    for j, l in zip(*np.nonzero(Y)):
                        a = A.mul_vec(eA[i0], eA[j])
                        g = Cs.mul(act(Hb[h], fb[l]), fb[k]).vector
                        out += (X[i, k] * Y[j, l] * coef) * np.outer(a, g)
            return out.ravel()

        self._amb_mul = amb_mul
        gens = [inc(g).vector for g in Sm.gens()]
        images = []
        for x in gens:
            for y in gens:
                c = S.coordinates(amb_mul(x, y))
                if c is None:
                    raise NotSubalgebra("product leaves A (x) T")
                images.append(c)
        mult = ModuleMap.from_images(tensor(Sm, Sm), Sm, images)
        unit = S.coordinates(np.kron(np.asarray(A.unit.vector, dtype=object),
                                     np.asarray(Cs.unit.vector, dtype=object)))
        super().__init__(Sm, mult, unit, f"{A.name}#{Ccoal.name}*")
        self.t_pure = is_pure_submodule(T, Cs.carrier)
        self.base_map = ModuleMap.from_images(
            A.carrier, Sm, [S.coordinates(np.kron(eA[i], np.asarray(Cs.unit.vector, dtype=object)))
                            for i in range(ra)])
        Kr = self.koppinen
        self.beta = ModuleMap.from_images(Sm, Kr.carrier, [Kr.element_from_matrix(self._beta(x)) for x in gens])

    def _beta(self, x) -> ZnMatrix:
        """``a # f -> [c -> a f(c)]`` on an ambient vector."""
        A = self.dk.A.algebra
        Cs = self.Cstar
        X = np.asarray(x, dtype=object).reshape(A.rank, Cs.rank)
        out = np.zeros((A.rank, self.dk.C.coalgebra.rank), dtype=object)
        for k, l in zip(*np.nonzero(X)):
            row = Cs.to_matrix(Cs.basis()[l]).array[0]
            out += X[k, l] * np.outer(np.eye(A.rank, dtype=object)[k], row)
        return ZnMatrix.from_array(self.ring, out)

    def smash(self, a, f) -> Element:
        """The element ``a # f``."""
        av = np.asarray(a.vector if isinstance(a, Element) else a, dtype=object)
        fv = np.asarray(f.vector if isinstance(f, Element) else f, dtype=object)
        c = self.span.coordinates(np.kron(av, fv))
        if c is None:
            raise NotSubalgebra("f is not in T")
        return self.carrier.element(c)

    def t_map(self) -> ModuleMap:
        """``T -> A #op T``, ``f -> 1 # f`` on the abstract presentation of T."""
        Tm, tinc = self.T.as_module()
        one = self.dk.A.algebra.unit
        return ModuleMap.from_images(Tm, self.carrier, [self.smash(one, tinc(g)) for g in Tm.gens()])

    @cached_property
    def verification(self) -> Report:
        rep = Report(f"smash ring {self.name}".strip())
        rep.extend(self.t_report, "T: ")
        if not self.t_pure:
            rep.flag("T is pure in C*", "A (x) T may not embed in A (x) C*")
        rep.extend(verify_algebra(self), "algebra: ")
        A = self.dk.A.algebra
        ab = A.basis()
        bad = next(((i, j) for i, j in product(range(len(ab)), repeat=2)
                    if self.base_map(A.mul(ab[i], ab[j])) != self.mul(self.base_map(ab[i]), self.base_map(ab[j]))),
                   None)
        rep.add("a -> a # eps is multiplicative", bad is None, {"basis_pair": bad})
        rep.add("a -> a # eps is unital", self.base_map(A.unit) == self.unit)
        K, b = self.koppinen, self.beta
        B = self.basis()
        bad = next(((p, q) for p, q in product(range(len(B)), repeat=2)
                    if b(self.mul(B[p], B[q])) != K.mul(b(B[p]), b(B[q]))), None)
        rep.add("beta is multiplicative", bad is None, {"basis_pair": bad})
        rep.add("beta is unital", b(self.unit) == K.unit)
        return rep


def smash_ring(D: DKStructure, T: Optional[Submodule] = None) -> SmashRing:
    S = SmashRing(D, T)
    rep = S.verification
    if not rep.passed:
        raise AxiomViolation("smash ring fails verification", rep)
    return S


def smash_pairing(S: SmashRing, iso: Optional[PhiIsomorphism] = None) -> MeasuringPairing:
    """``(A #op T, A (x) C)`` with kappa = phi o beta."""
    iso = iso if iso is not None else phi_isomorphism(S.entwining, S.koppinen)
    kappa = iso.phi.matrix @ S.beta.matrix
    return MeasuringPairing(S, iso.coring, kappa, S.base_map.matrix, dual=iso.dual,
                            name=f"({S.name}, {iso.coring.name})")


def beta_density(D: DKStructure, T: Optional[Submodule] = None) -> Report:
    """Density of ``beta(A #op T)`` in the Koppinen ring for the pairing with ``A (x) C``."""
    rep = Report("beta image is dense")
    if D.C.coalgebra.rank == 0:
        rep.vacuous("dense", "zero coalgebra")
        return rep
    S = smash_ring(D, T)
    Pm = koppinen_pairing(S.entwining)
    img = Submodule(Pm.acting.carrier, [S.beta(g).vector for g in S.carrier.gens()])
    dense = is_dense(Pm.pairing, img)
    perp = orthogonal_of_subset(Pm.pairing, img)
    rep.add("dense", dense, None if dense else {"orthogonal": perp.generators})
    rep.data["image_is_everything"] = img == Pm.acting.carrier.whole()
    rep.data["orthogonal"] = [list(g) for g in perp.generators]
    rep.flag("finite scale", "C is finitely generated, so density is tested in the weak "
             "topology of a finite pairing")
    return rep


def t_pairing(S: SmashRing) -> tuple[MeasuringPairing, ModuleMap]:
    """``(T, C)`` with T acting through ``*C = (C*)^op``; also ``T -> A #op T``."""
    C = coring_from_coalgebra(S.dk.C.coalgebra)
    Cs = S.Cstar
    Tm, tinc = S.T.as_module()
    imgs = []
    for p in range(Tm.rank):
        for q in range(Tm.rank):
            prod = Cs.mul(tinc(Tm.gen(q)), tinc(Tm.gen(p)))
            imgs.append(S.T.coordinates(prod))
    Talg = Algebra(Tm, ModuleMap.from_images(tensor(Tm, Tm), Tm, imgs),
                   S.T.coordinates(Cs.unit), "T")
    funcs = [Cs.to_matrix(tinc(g)) for g in Tm.gens()]
    return MeasuringPairing(Talg, C, funcs, name="(T, C)"), S.t_map()


def dk_rat_equality(M: RightModule, S: SmashRing) -> Report:
    """``Rat^C(_T M) = Rat(M)`` over ``A #op T``; a rational M is an entwined module."""
    rep = Report("rational parts agree")
    Q = smash_pairing(S)
    rp = rat(M, Q)
    TP, tmap = t_pairing(S)
    eT = np.eye(TP.acting.rank, dtype=object)
    eM = np.eye(M.carrier.rank, dtype=object)
    tv = [tmap(eT[k]).vector for k in range(TP.acting.rank)]
    MT = RightModule.from_function(M.carrier, TP.acting, lambda i, k: M.act_vec(eM[i], tv[k]))
    rt = rat(MT, TP)
    rep.add("Rat^C(_T M) = Rat(M)", rt.submodule == rp.submodule,
            {"over_T": rt.submodule.generators, "over_smash": rp.submodule.generators})
    rep.data["rational"] = [list(g) for g in rp.submodule.generators]
    rep.data["whole"] = rp.is_whole
    # f[m a] = sum ((a<1> f) m) a<0>
    A = S.dk.A.algebra
    act = hit_action(S.dk.C, S.Cstar)
    Tm, tinc = S.T.as_module()
    bad = None
    for i, k, f in product(range(M.carrier.rank), range(A.rank), range(Tm.rank)):
        fv = tinc(Tm.gen(f))
        lhs = M.act_vec(M.act_vec(eM[i], S.base_map.matrix.column(k)), S.smash(A.unit, fv).vector)
        rhs = np.zeros(M.carrier.rank, dtype=object)
        for coef, i0, h in S.dk.A.coact_terms(np.eye(A.rank, dtype=object)[k]):
            g = act(S.dk.H.algebra.basis()[h], fv)
            x = M.act_vec(eM[i], S.smash(A.unit, g).vector)
            rhs = rhs + coef * np.asarray(M.act_vec(x, S.base_map.matrix.column(i0)), dtype=object)
        if not M.carrier.is_zero_vector(np.asarray(lhs, dtype=object) - rhs):
            bad = {"m": i, "a": k, "f": f}
            break
    rep.add("f[m a] = sum ((a<1> f) m) a<0>", bad is None, bad)
    if rp.is_whole:
        co = rp.comodule()
        ring = M.carrier.ring
        E = S.entwining
        MA = rp.base_module
        coact = kron(MA.action.matrix, eye(ring, E.C.rank)) @ co.coaction.matrix
        EM = EntwinedModule(E, M.carrier, MA.action.matrix, coact, M.name)
        rep.extend(verify_entwined_module(EM, S.koppinen), "rational module: ")
    else:
        rep.vacuous("rational module: entwined", "M is not rational")
    return rep


def grouplike_coinvariants(M: Comodule, x) -> tuple[Submodule, Report]:
    """``M^co = {m : rho(m) = m (x)_A x}`` and whether ``M^co (x) A -> M`` is onto."""
    C = M.coring
    ring = C.ring
    xv = np.asarray(x.vector if isinstance(x, Element) else x, dtype=object)
    xc = _col(ring, xv)
    dx = C.comult.matrix @ xc
    if not C.cc.is_zero_vector(np.asarray(dx.array, dtype=object)[:, 0] - np.kron(xv, xv)):
        raise NotGrouplike("Delta(x) != x (x) x")
    if C.counit.matrix.apply(list(xv)) != C.base.unit.vector:
        raise NotGrouplike("eps(x) != 1")
    m = M.rank
    F = M.coaction.matrix - kron(eye(ring, m), xc)
    co = kernel_of_map(ModuleMap(M.carrier, M.mc, F, check=False))
    rep = Report("grouplike coinvariants")
    span = stable_closure(M.right_module, co.generators)
    onto = span == M.carrier.whole()
    rep.data["coinvariants"] = [list(g) for g in co.generators]
    rep.data["surjective"] = onto
    if onto:
        P = canonical_pairing(C)
        rep.add("M is rational", rat(induced_module(M, P), P).is_whole)
    else:
        rep.vacuous("M is rational", "M^co (x) A -> M is not onto")
    return co, rep


# ---------------------------------------------------------------------------
# corpus


def _c2(n):
    R = RingContext(n)
    G = FiniteGroup.cyclic(2)
    return R, G, group_algebra(R, G)


def hopf_modules(n: int = 4) -> DKStructure:
    R, G, H = _c2(n)
    return DKStructure(H, regular_comodule_algebra(H), regular_module_coalgebra(H), RR, "Hopf modules")


def relative_hopf(n: int = 4) -> DKStructure:
    R, G, H = _c2(n)
    return DKStructure(H, dual_numbers_graded(R, G, 1), regular_module_coalgebra(H), RR, "relative Hopf")


def gset_three(G: FiniteGroup) -> GSet:
    return GSet(G, [[0, 1], [1, 0], [2, 2]])


def doi_hc(n: int = 4) -> DKStructure:
    """``(H, H, C)`` with C the 3-point G-set coalgebra."""
    R, G, H = _c2(n)
    return DKStructure(H, regular_comodule_algebra(H), gset_coalgebra(R, gset_three(G)), RR, "Doi [C,H]")


def long_dimodules(n: int = 4, minimal: bool = False) -> DKStructure:
    R = RingContext(n)
    B = ground_bialgebra(R)
    if minimal:
        A, C = B.algebra, B.coalgebra
    else:
        H = group_algebra(R, FiniteGroup.cyclic(2))
        A, C = H.algebra, H.coalgebra
    return DKStructure(B, trivial_comodule_algebra(A, B), trivial_module_coalgebra(C, B), RR, "Long")


def gset_graded(n: int = 4, points: int = 2, algebra: str = "dual") -> DKStructure:
    """``(R[C2], A, R[X])`` with ``|X|`` in {1, 2, 3}."""
    R, G, H = _c2(n)
    X = {1: GSet.trivial(G, 1), 2: GSet.regular(G), 3: gset_three(G)}[points]
    A = dual_numbers_graded(R, G, 1) if algebra == "dual" else group_graded_algebra(R, G)
    return DKStructure(H, A, gset_coalgebra(R, X), RR, f"G-set |X|={points}")


def yetter_drinfeld_c2(n: int = 4) -> DKStructure:
    R, G, H = _c2(n)
    mu = H.algebra.mult.matrix
    D = H.coalgebra.comult.matrix
    return yetter_drinfeld_builder(H, H, H.algebra, H.coalgebra, k_coaction=D, h_coaction=D,
                                   k_action=mu, h_action=mu, name="Yetter-Drinfeld")


def dk_corpus(n: int = 4) -> dict[str, DKStructure]:
    return {
        "hopf-modules": hopf_modules(n),
        "relative-hopf": relative_hopf(n),
        "doi-hc": doi_hc(n),
        "long": long_dimodules(n),
        "gset-1": gset_graded(n, 1),
        "gset-2": gset_graded(n, 2),
        "gset-3": gset_graded(n, 3),
        "yetter-drinfeld": yetter_drinfeld_c2(n),
    }


def alt_matrix_example(n: int = 4) -> AltDKStructure:
    """``R^C2`` with the translation action and ``M^c_2`` graded by ``deg e_ij = g^[i != j]``."""
    R, G, H = _c2(n)
    A = Algebra.from_table(free_module(R, 2, ["p0", "p1"]),
                           lambda i, j: [int(i == j == 0), int(i == j == 1)], [1, 1], "R^C2")
    act = ZnMatrix.from_rows(R, [[1, 0, 0, 1], [0, 1, 1, 0]])  # p_x . g^k = p_{x+k}
    C = matrix_coalgebra(R, 2)
    cols = []
    for idx in range(4):
        i, j = divmod(idx, 2)
        v = [0] * 8
        v[idx * 2 + int(i != j)] = 1
        cols.append(v)
    rho = ZnMatrix.from_array(R, np.asarray(cols, dtype=object).T)
    return AltDKStructure(H, ModuleAlgebra(A, H, act, "R^C2"), ComoduleCoalgebra(C, H, rho, "Mc2"),
                          "alternative matrix")
