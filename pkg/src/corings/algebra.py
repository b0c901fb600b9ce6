"""Algebras, coalgebras and bialgebras over Z/n given by structure constants.

A structure lives on an :class:`~corings.fpmod.FPModule` carrier; the
multiplication and comultiplication are :class:`~corings.fpmod.ModuleMap`
objects out of / into tensor products, so they are checked to be
well-defined on the relations of the carrier when constructed. All axiom
checks evaluate on tuples of carrier generators; linearity does the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import BadArity, BadInput, DimensionMismatch, RingMismatch
from .fpmod import (Element, FPModule, HomModule, ModuleMap, direct_sum, dual, free_module,
                    ground_module, hom_module, tensor, tensor_map)
from .report import Report
from .zn import RingContext, ZnMatrix


def _arr(ring, data, shape):
    return ZnMatrix.from_array(ring, np.asarray(data, dtype=object).reshape(shape) % ring.modulus)


def swap_matrix(ring: RingContext, r: int, s: int) -> ZnMatrix:
    """Matrix of ``M (x) N -> N (x) M`` on ambient generators."""
    P = ring.zeros((s * r, r * s))
    for i in range(r):
        for j in range(s):
            P[j * r + i, i * s + j] = 1
    return ZnMatrix.from_array(ring, P)


def swap_map(M: FPModule, N: FPModule) -> ModuleMap:
    return ModuleMap(tensor(M, N), tensor(N, M), swap_matrix(M.ring, M.rank, N.rank), check=False)


def kron(*mats: ZnMatrix) -> ZnMatrix:
    out = mats[0].array
    for m in mats[1:]:
        out = np.kron(out, m.array)
    return ZnMatrix.from_array(mats[0].ring, out)


def eye(ring: RingContext, k: int) -> ZnMatrix:
    return ZnMatrix.identity(ring, k)


# ---------------------------------------------------------------------------
# finite groups


class FiniteGroup:
    """A finite group given by its multiplication table on indices 0..k-1."""

    def __init__(self, table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None,
                 identity: Optional[int] = None):
        self.table = [list(row) for row in table]
        k = len(self.table)
        if k == 0:
            raise BadInput("a group needs at least one element")
        if any(len(row) != k for row in self.table):
            raise BadInput("group table must be square")
        self.order = k
        self.labels = list(labels) if labels is not None else [f"g{i}" for i in range(k)]
        if identity is None:
            identity = next((e for e in range(k) if all(self.table[e][x] == x for x in range(k))), None)
        if identity is None:
            raise BadInput("group table has no identity")
        self.identity = identity
        for a, b, c in product(range(k), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise BadInput("group table is not associative")
        self.inverse = []
        for a in range(k):
            inv = [b for b in range(k) if self.table[a][b] == identity]
            if len(inv) != 1:
                raise BadInput("group table has no inverses")
            self.inverse.append(inv[0])

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def elements(self) -> range:
        return range(self.order)

    @classmethod
    def cyclic(cls, k: int) -> "FiniteGroup":
        if k < 1:
            raise BadInput("cyclic group of order < 1")
        labels = ["e"] + (["g"] if k == 2 else [f"g{i}" for i in range(1, k)])
        return cls([[(a + b) % k for b in range(k)] for a in range(k)], labels, 0)

    @classmethod
    def direct_product(cls, G: "FiniteGroup", H: "FiniteGroup") -> "FiniteGroup":
        k = H.order
        elems = [(a, b) for a in G.elements() for b in H.elements()]
        table = [[G.mul(a, c) * k + H.mul(b, d) for (c, d) in elems] for (a, b) in elems]
        labels = [f"({G.labels[a]},{H.labels[b]})" for a, b in elems]
        return cls(table, labels, G.identity * k + H.identity)


@dataclass
class GSet:
    """A finite right G-set: ``action[x][g] = x.g``."""

    group: FiniteGroup
    action: list
    labels: Optional[list] = None

    def __post_init__(self):
        if not self.action:
            raise BadInput("a G-set needs at least one point")
        G = self.group
        for x in range(len(self.action)):
            if self.action[x][G.identity] != x:
                raise BadInput("identity must act trivially")
            for g, h in product(G.elements(), repeat=2):
                if self.action[self.action[x][g]][h] != self.action[x][G.mul(g, h)]:
                    raise BadInput("not a right action")
        if self.labels is None:
            self.labels = [f"x{i}" for i in range(len(self.action))]

    @property
    def size(self) -> int:
        return len(self.action)

    @classmethod
    def regular(cls, G: FiniteGroup) -> "GSet":
        return cls(G, [[G.mul(x, g) for g in G.elements()] for x in G.elements()], list(G.labels))

    @classmethod
    def cosets_of_cyclic(cls, G: FiniteGroup, orbit: int) -> "GSet":
        """The transitive C_k-set with ``orbit`` points (orbit divides k), g acting as +1."""
        k = G.order
        if k % orbit:
            raise BadInput("orbit size must divide the group order")
        return cls(G, [[(x + g) % orbit for g in range(k)] for x in range(orbit)])

    @classmethod
    def trivial(cls, G: FiniteGroup, points: int = 1) -> "GSet":
        return cls(G, [[x] * G.order for x in range(points)])


# ---------------------------------------------------------------------------
# algebras


class Algebra:
    """An associative unital R-algebra on an FPModule carrier."""

    def __init__(self, carrier: FPModule, mult: ModuleMap, unit, name: str = ""):
        if mult.domain != tensor(carrier, carrier) or mult.codomain != carrier:
            raise DimensionMismatch("multiplication must be a map A (x) A -> A")
        self.carrier = carrier
        self.ring = carrier.ring
        self.mult = mult
        if unit is None or isinstance(unit, Element):
            self.unit = unit
        else:
            self.unit = carrier.element(unit)
        self.name = name
        r = carrier.rank
        self._T = np.asarray(mult.matrix.array, dtype=np.int64 if self.ring.dtype is np.int64
                             else object).reshape(r, r, r)

    @classmethod
    def from_table(cls, carrier: FPModule, table: Callable[[int, int], Sequence[int]], unit,
                   name: str = "") -> "Algebra":
        r = carrier.rank
        cols = [list(table(i, j)) for i in range(r) for j in range(r)]
        mat = _arr(carrier.ring, np.array(cols, dtype=object).T if cols else [], (r, r * r))
        return cls(carrier, ModuleMap(tensor(carrier, carrier), carrier, mat), unit, name)

    @property
    def rank(self) -> int:
        return self.carrier.rank

    def mul_vec(self, x, y) -> np.ndarray:
        n = self.ring.modulus
        x = np.asarray(x, dtype=self._T.dtype)
        y = np.asarray(y, dtype=self._T.dtype)
        return np.einsum("kij,i,j->k", self._T, x, y) % n

    def mul(self, x: Element, y: Element) -> Element:
        return self.carrier.element(self.mul_vec(x.vector, y.vector))

    def one(self) -> Element:
        return self.unit

    def basis(self) -> list[Element]:
        return self.carrier.gens()

    def power(self, x: Element, k: int) -> Element:
        out = self.unit
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def __repr__(self):
        return f"Algebra({self.name or 'unnamed'}, rank={self.rank}, Z/{self.ring.modulus})"


def ground_algebra(ring: RingContext) -> Algebra:
    R = ground_module(ring)
    return Algebra.from_table(R, lambda i, j: [1], [1], "R")


def verify_algebra(A: Algebra) -> Report:
    rep = Report(f"algebra {A.name}".strip())
    B = A.basis()
    bad = None
    for x, y, z in product(range(len(B)), repeat=3):
        if A.mul(A.mul(B[x], B[y]), B[z]) != A.mul(B[x], A.mul(B[y], B[z])):
            bad = (x, y, z)
            break
    rep.add("associativity", bad is None, {"basis_triple": bad})
    if A.unit is None:
        rep.vacuous("left unit", "the algebra has no unit")
        rep.vacuous("right unit", "the algebra has no unit")
        return rep
    left = next((i for i in range(len(B)) if A.mul(A.unit, B[i]) != B[i]), None)
    rep.add("left unit", left is None, {"basis_element": left})
    right = next((i for i in range(len(B)) if A.mul(B[i], A.unit) != B[i]), None)
    rep.add("right unit", right is None, {"basis_element": right})
    return rep


def is_algebra_morphism(f: ModuleMap, A: Algebra, B: Algebra) -> Report:
    rep = Report("algebra morphism")
    gens = A.basis()
    bad = next(((i, j) for i in range(len(gens)) for j in range(len(gens))
                if f(A.mul(gens[i], gens[j])) != B.mul(f(gens[i]), f(gens[j]))), None)
    rep.add("multiplicative", bad is None, {"basis_pair": bad})
    rep.add("unital", f(A.unit) == B.unit)
    return rep


def opposite_algebra(A: Algebra) -> Algebra:
    sw = swap_matrix(A.ring, A.rank, A.rank)
    mult = ModuleMap(A.mult.domain, A.carrier, A.mult.matrix @ sw, check=False)
    name = A.name[:-3] if A.name.endswith("^op") else (A.name + "^op" if A.name else "")
    return Algebra(A.carrier, mult, A.unit, name)


def tensor_algebra(A: Algebra, B: Algebra) -> Algebra:
    """``A (x) B`` with ``(a (x) b)(a' (x) b') = aa' (x) bb'``."""
    ring = A.ring
    T = tensor(A.carrier, B.carrier)
    ra, rb = A.rank, B.rank
    # (a b)(a' b') -> reorder to (a a')(b b') then kron of multiplications
    P = ring.zeros((ra * ra * rb * rb, ra * rb * ra * rb))
    for i, j, k, l in product(range(ra), range(rb), range(ra), range(rb)):
        src = ((i * rb + j) * ra + k) * rb + l
        dst = ((i * ra + k) * rb + j) * rb + l
        P[dst, src] = 1
    mat = kron(A.mult.matrix, B.mult.matrix) @ ZnMatrix.from_array(ring, P)
    unit = T.pure(A.unit, B.unit)
    name = f"{A.name}(x){B.name}" if A.name or B.name else ""
    return Algebra(T, ModuleMap(tensor(T, T), T, mat, check=False), unit, name)


def product_algebra(A: Algebra, B: Algebra) -> Algebra:
    """The direct product ring ``A x B``."""
    ring = A.ring
    S = direct_sum(A.carrier, B.carrier)
    ra, rb = A.rank, B.rank
    r = ra + rb

    def table(i, j):
        v = [0] * r
        if i < ra and j < ra:
            v[:ra] = A.mul(A.carrier.gen(i), A.carrier.gen(j)).vector
        elif i >= ra and j >= ra:
            v[ra:] = B.mul(B.carrier.gen(i - ra), B.carrier.gen(j - ra)).vector
        return v

    return Algebra.from_table(S, table, S.pack(A.unit, B.unit).vector,
                              f"{A.name}x{B.name}" if A.name or B.name else "")


def matrix_algebra(ring: RingContext, k: int) -> Algebra:
    """``M_k(R)`` on the matrix units ``e_ij`` (index ``i*k + j``)."""
    C = free_module(ring, k * k, [f"e{i + 1}{j + 1}" for i in range(k) for j in range(k)])

    def table(a, b):
        i, j = divmod(a, k)
        l, m = divmod(b, k)
        v = [0] * (k * k)
        if j == l:
            v[i * k + m] = 1
        return v

    unit = [1 if i == j else 0 for i in range(k) for j in range(k)]
    return Algebra.from_table(C, table, unit, f"M{k}")


# ---------------------------------------------------------------------------
# coalgebras


class Coalgebra:
    """A coassociative counital R-coalgebra on an FPModule carrier."""

    def __init__(self, carrier: FPModule, comult: ModuleMap, counit: ModuleMap, name: str = ""):
        if comult.domain != carrier or comult.codomain != tensor(carrier, carrier):
            raise DimensionMismatch("comultiplication must be a map C -> C (x) C")
        if counit.domain != carrier or counit.codomain != ground_module(carrier.ring):
            raise DimensionMismatch("counit must be a map C -> R")
        self.carrier = carrier
        self.ring = carrier.ring
        self.comult = comult
        self.counit = counit
        self.name = name
        self.CC = comult.codomain

    @classmethod
    def from_table(cls, carrier: FPModule, delta: Callable[[int], Sequence[int]],
                   eps: Sequence[int], name: str = "") -> "Coalgebra":
        """``delta(i)`` gives the vector of Delta(c_i) in C (x) C; ``eps[i]`` = eps(c_i)."""
        ring = carrier.ring
        r = carrier.rank
        cols = [list(delta(i)) for i in range(r)]
        D = _arr(ring, np.array(cols, dtype=object).T if cols else [], (r * r, r))
        CC = tensor(carrier, carrier)
        E = _arr(ring, list(eps), (1, r))
        return cls(carrier, ModuleMap(carrier, CC, D), ModuleMap(carrier, ground_module(ring), E), name)

    @property
    def rank(self) -> int:
        return self.carrier.rank

    def delta(self, c: Element) -> Element:
        return self.comult(c)

    def eps(self, c: Element) -> int:
        return self.counit(c).vector[0]

    def delta_terms(self, c) -> list[tuple[int, int, int]]:
        """Sweedler expansion of the stored lift: triples (coefficient, i, j)."""
        v = c.vector if isinstance(c, Element) else tuple(c)
        raw = self.comult.matrix.apply(v)
        r = self.rank
        return [(x, k // r, k % r) for k, x in enumerate(raw) if x]

    def basis(self) -> list[Element]:
        return self.carrier.gens()

    def __repr__(self):
        return f"Coalgebra({self.name or 'unnamed'}, rank={self.rank}, Z/{self.ring.modulus})"


def ground_coalgebra(ring: RingContext) -> Coalgebra:
    return Coalgebra.from_table(ground_module(ring), lambda i: [1], [1], "R")


def tensor_power(C: FPModule, k: int) -> FPModule:
    T = C
    for _ in range(k - 1):
        T = tensor(T, C)
    return T


def verify_coalgebra(C: Coalgebra) -> Report:
    rep = Report(f"coalgebra {C.name}".strip())
    ring = C.ring
    r = C.rank
    I = eye(ring, r)
    D = C.comult.matrix
    E = C.counit.matrix
    CCC = tensor_power(C.carrier, 3)
    lhs = kron(D, I) @ D
    rhs = kron(I, D) @ D
    bad = next((i for i in range(r) if not CCC.is_zero_vector(
        [a - b for a, b in zip(lhs.column(i), rhs.column(i))])), None)
    rep.add("coassociativity", bad is None, {"basis_element": bad})
    left = kron(E, I) @ D
    right = kron(I, E) @ D
    badl = next((i for i in range(r) if not C.carrier.is_zero_vector(
        [a - b for a, b in zip(left.column(i), I.column(i))])), None)
    rep.add("left counit", badl is None, {"basis_element": badl})
    badr = next((i for i in range(r) if not C.carrier.is_zero_vector(
        [a - b for a, b in zip(right.column(i), I.column(i))])), None)
    rep.add("right counit", badr is None, {"basis_element": badr})
    return rep


def iterated_delta(C: Coalgebra, c: Element, k: int, check: bool = False) -> Element:
    """``Delta_k(c)`` in ``C^{(x)(k+1)}``, with ``Delta_k = (Delta (x) id^{k-1}) o Delta_{k-1}``."""
    if k < 1:
        raise BadArity("iterated comultiplication needs k >= 1")
    ring = C.ring
    r = C.rank
    v = ZnMatrix.from_array(ring, np.asarray(c.vector, dtype=object).reshape(r, 1))
    first = v
    for step in range(k):
        first = kron(C.comult.matrix, eye(ring, r ** step)) @ first
    T = tensor_power(C.carrier, k + 1)
    out = T.element(first.column(0))
    if check:
        last = v
        for step in range(k):
            last = kron(eye(ring, r ** step), C.comult.matrix) @ last
        if T.element(last.column(0)) != out:
            raise AssertionError("iterated comultiplication depends on the bracketing")
    return out


def coopposite_coalgebra(C: Coalgebra) -> Coalgebra:
    sw = swap_matrix(C.ring, C.rank, C.rank)
    comult = ModuleMap(C.carrier, C.CC, sw @ C.comult.matrix, check=False)
    return Coalgebra(C.carrier, comult, C.counit, (C.name + "^cop") if C.name else "")


def tensor_coalgebra(C: Coalgebra, D: Coalgebra) -> Coalgebra:
    """``C (x) D`` with ``Delta(c (x) d) = (c1 (x) d1) (x) (c2 (x) d2)``."""
    ring = C.ring
    T = tensor(C.carrier, D.carrier)
    rc, rd = C.rank, D.rank
    P = ring.zeros((rc * rd * rc * rd, rc * rc * rd * rd))
    for i, k, j, l in product(range(rc), range(rc), range(rd), range(rd)):
        src = ((i * rc + k) * rd + j) * rd + l
        dst = ((i * rd + j) * rc + k) * rd + l
        P[dst, src] = 1
    comult = ZnMatrix.from_array(ring, P) @ kron(C.comult.matrix, D.comult.matrix)
    counit = kron(C.counit.matrix, D.counit.matrix)
    name = f"{C.name}(x){D.name}" if C.name or D.name else ""
    return Coalgebra(T, ModuleMap(T, tensor(T, T), comult, check=False),
                     ModuleMap(T, ground_module(ring), counit, check=False), name)


def is_coalgebra_morphism(f: ModuleMap, C: Coalgebra, D: Coalgebra) -> Report:
    rep = Report("coalgebra morphism")
    lhs = D.comult.matrix @ f.matrix
    rhs = kron(f.matrix, f.matrix) @ C.comult.matrix
    bad = next((i for i in range(C.rank) if not D.CC.is_zero_vector(
        [a - b for a, b in zip(lhs.column(i), rhs.column(i))])), None)
    rep.add("comultiplicative", bad is None, {"basis_element": bad})
    badc = next((i for i in range(C.rank)
                 if (D.counit.matrix @ f.matrix).column(i) != C.counit.matrix.column(i)), None)
    rep.add("counital", badc is None, {"basis_element": badc})
    return rep


def matrix_coalgebra(ring: RingContext, k: int) -> Coalgebra:
    """``M^c_k``: ``Delta(e_ij) = sum_l e_il (x) e_lj``, ``eps(e_ij) = delta_ij``."""
    C = free_module(ring, k * k, [f"e{i + 1}{j + 1}" for i in range(k) for j in range(k)])

    def delta(a):
        i, j = divmod(a, k)
        v = [0] * (k ** 4)
        for l in range(k):
            v[(i * k + l) * k * k + (l * k + j)] = 1
        return v

    eps = [1 if i == j else 0 for i in range(k) for j in range(k)]
    return Coalgebra.from_table(C, delta, eps, f"Mc{k}")


def grouplike_coalgebra(ring: RingContext, labels: Sequence[str], name: str = "") -> Coalgebra:
    """Free module on the labels with every basis element grouplike."""
    r = len(labels)
    if r == 0:
        raise BadInput("need at least one grouplike")
    C = free_module(ring, r, labels)

    def delta(i):
        v = [0] * (r * r)
        v[i * r + i] = 1
        return v

    return Coalgebra.from_table(C, delta, [1] * r, name)


# ---------------------------------------------------------------------------
# convolution and dual algebras


class ConvolutionAlgebra(Algebra):
    """``Hom(C, A)`` with ``(f * g)(c) = sum f(c1) g(c2)`` and unit ``eta o eps``."""

    def __init__(self, C: Coalgebra, A: Algebra, name: str = ""):
        self.coalgebra = C
        self.target = A
        H = hom_module(C.carrier, A.carrier)
        self.hom = H
        ring = C.ring
        maps = [H.to_map(h).matrix for h in H.gens()]
        images = []
        for p in range(H.rank):
            for q in range(H.rank):
                X = A.mult.matrix @ kron(maps[p], maps[q]) @ C.comult.matrix
                images.append(H.from_matrix(X))
        HH = tensor(H, H)
        mult = ModuleMap.from_images(HH, H, images)
        unit_mat = ZnMatrix.from_array(
            ring, np.outer(np.asarray(A.unit.vector, dtype=object), C.counit.matrix.array[0]))
        super().__init__(H, mult, H.from_matrix(unit_mat), name)

    def element_from_matrix(self, X) -> Element:
        return self.hom.from_matrix(X)

    def to_matrix(self, f: Element) -> ZnMatrix:
        return self.hom.to_map(f).matrix

    def evaluate(self, f: Element, c) -> Element:
        return self.hom.evaluate(f, c)


def convolution_algebra(C: Coalgebra, A: Algebra) -> ConvolutionAlgebra:
    return ConvolutionAlgebra(C, A, f"Hom({C.name},{A.name})")


def dual_algebra(C: Coalgebra) -> ConvolutionAlgebra:
    """``C*`` with the convolution product; the unit is eps."""
    return ConvolutionAlgebra(C, ground_algebra(C.ring), f"{C.name}*")


def functional_matrix(ring: RingContext, row: Sequence[int]) -> ZnMatrix:
    return ZnMatrix.from_array(ring, np.asarray([list(row)], dtype=object))


def dual_map(theta: ModuleMap, Cstar: ConvolutionAlgebra, Dstar: ConvolutionAlgebra) -> ModuleMap:
    """``theta*: D* -> C*`` for ``theta: C -> D``, ``f -> f o theta``."""
    images = [Cstar.element_from_matrix(Dstar.to_matrix(g) @ theta.matrix) for g in Dstar.basis()]
    return ModuleMap.from_images(Dstar.carrier, Cstar.carrier, images)


def right_hit(C: Coalgebra, Cstar: ConvolutionAlgebra, c: Element, f: Element) -> Element:
    """``c <- f = sum f(c1) c2``."""
    F = Cstar.to_matrix(f)
    v = np.zeros(C.rank, dtype=object)
    for coef, i, j in C.delta_terms(c):
        v[j] += coef * F.array[0, i]
    return C.carrier.element(v)


def left_hit(C: Coalgebra, Cstar: ConvolutionAlgebra, f: Element, c: Element) -> Element:
    """``f -> c = sum c1 f(c2)``."""
    F = Cstar.to_matrix(f)
    v = np.zeros(C.rank, dtype=object)
    for coef, i, j in C.delta_terms(c):
        v[i] += coef * F.array[0, j]
    return C.carrier.element(v)


# ---------------------------------------------------------------------------
# bialgebras and their modules / comodules


class Bialgebra:
    def __init__(self, algebra: Algebra, coalgebra: Coalgebra, name: str = ""):
        if algebra.carrier != coalgebra.carrier:
            raise DimensionMismatch("algebra and coalgebra must share a carrier")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.carrier = algebra.carrier
        self.ring = algebra.ring
        self.name = name or algebra.name

    @property
    def rank(self):
        return self.carrier.rank

    def __repr__(self):
        return f"Bialgebra({self.name}, rank={self.rank}, Z/{self.ring.modulus})"


def verify_bialgebra(H: Bialgebra) -> Report:
    rep = Report(f"bialgebra {H.name}".strip())
    rep.extend(verify_algebra(H.algebra), "algebra: ")
    rep.extend(verify_coalgebra(H.coalgebra), "coalgebra: ")
    A, C = H.algebra, H.coalgebra
    HH = tensor_algebra(A, A)
    B = A.basis()
    bad = next(((i, j) for i in range(len(B)) for j in range(len(B))
                if HH.carrier.element(C.delta(A.mul(B[i], B[j])).vector)
                != HH.mul(HH.carrier.element(C.delta(B[i]).vector),
                          HH.carrier.element(C.delta(B[j]).vector))), None)
    rep.add("comultiplication is multiplicative", bad is None, {"basis_pair": bad})
    rep.add("comultiplication is unital",
            HH.carrier.element(C.delta(A.unit).vector) == HH.unit)
    n = H.ring.modulus
    badc = next(((i, j) for i in range(len(B)) for j in range(len(B))
                 if C.eps(A.mul(B[i], B[j])) != (C.eps(B[i]) * C.eps(B[j])) % n), None)
    rep.add("counit is multiplicative", badc is None, {"basis_pair": badc})
    rep.add("counit is unital", C.eps(A.unit) == 1)
    return rep


def group_algebra(ring: RingContext, G: FiniteGroup) -> Bialgebra:
    """``R[G]``: group elements grouplike, product from the group table."""
    k = G.order
    C = grouplike_coalgebra(ring, G.labels, "")
    carrier = C.carrier

    def table(a, b):
        v = [0] * k
        v[G.mul(a, b)] = 1
        return v

    unit = [1 if g == G.identity else 0 for g in range(k)]
    A = Algebra.from_table(carrier, table, unit, f"R[G{k}]")
    C.name = A.name
    return Bialgebra(A, C, A.name)


def dual_group_bialgebra(ring: RingContext, G: FiniteGroup) -> Bialgebra:
    """``R^G``: orthogonal idempotents ``p_g``, ``Delta(p_g) = sum_{ab=g} p_a (x) p_b``."""
    k = G.order
    carrier = free_module(ring, k, [f"p_{l}" for l in G.labels])

    def table(a, b):
        v = [0] * k
        if a == b:
            v[a] = 1
        return v

    A = Algebra.from_table(carrier, table, [1] * k, f"R^G{k}")

    def delta(g):
        v = [0] * (k * k)
        for a in range(k):
            for b in range(k):
                if G.mul(a, b) == g:
                    v[a * k + b] = 1
        return v

    eps = [1 if g == G.identity else 0 for g in range(k)]
    C = Coalgebra.from_table(carrier, delta, eps, A.name)
    return Bialgebra(A, C, A.name)


def tensor_bialgebra(K: Bialgebra, H: Bialgebra) -> Bialgebra:
    A = tensor_algebra(K.algebra, H.algebra)
    C = tensor_coalgebra(K.coalgebra, H.coalgebra)
    return Bialgebra(A, Coalgebra(A.carrier, C.comult, C.counit, C.name), f"{K.name}(x){H.name}")


def opposite_bialgebra(H: Bialgebra) -> Bialgebra:
    A = opposite_algebra(H.algebra)
    return Bialgebra(A, H.coalgebra, A.name)


def ground_bialgebra(ring: RingContext) -> Bialgebra:
    return Bialgebra(ground_algebra(ring), ground_coalgebra(ring), "R")


class ModuleCoalgebra:
    """A right H-module coalgebra: a coalgebra C with an action ``C (x) H -> C``."""

    def __init__(self, coalgebra: Coalgebra, bialgebra: Bialgebra, action: ModuleMap, name=""):
        if action.domain != tensor(coalgebra.carrier, bialgebra.carrier) or \
                action.codomain != coalgebra.carrier:
            raise DimensionMismatch("action must be a map C (x) H -> C")
        self.coalgebra = coalgebra
        self.bialgebra = bialgebra
        self.action = action
        self.name = name or coalgebra.name

    def act(self, c: Element, h: Element) -> Element:
        return self.action(tensor(self.coalgebra.carrier, self.bialgebra.carrier).pure(c, h))

    def act_vec(self, i: int, j: int) -> tuple[int, ...]:
        return self.action.matrix.column(i * self.bialgebra.rank + j)


class ComoduleAlgebra:
    """A right H-comodule algebra: an algebra A with a coaction ``A -> A (x) H``."""

    def __init__(self, algebra: Algebra, bialgebra: Bialgebra, coaction: ModuleMap, name=""):
        if coaction.domain != algebra.carrier or \
                coaction.codomain != tensor(algebra.carrier, bialgebra.carrier):
            raise DimensionMismatch("coaction must be a map A -> A (x) H")
        self.algebra = algebra
        self.bialgebra = bialgebra
        self.coaction = coaction
        self.name = name or algebra.name

    def coact(self, a: Element) -> Element:
        return self.coaction(a)

    def coact_terms(self, a) -> list[tuple[int, int, int]]:
        """Triples (coefficient, i, j) for ``sum a0 (x) a1`` on generators."""
        v = a.vector if isinstance(a, Element) else tuple(a)
        raw = self.coaction.matrix.apply(v)
        rh = self.bialgebra.rank
        return [(x, k // rh, k % rh) for k, x in enumerate(raw) if x]


def verify_module_coalgebra(MC: ModuleCoalgebra) -> Report:
    C, H = MC.coalgebra, MC.bialgebra
    if C.ring != H.ring:
        raise RingMismatch("module coalgebra over different rings")
    rep = Report(f"module coalgebra {MC.name}".strip())
    A = H.algebra
    Cb, Hb = C.basis(), A.basis()
    bad = next(((i, j, k) for i in range(len(Cb)) for j in range(len(Hb)) for k in range(len(Hb))
                if MC.act(MC.act(Cb[i], Hb[j]), Hb[k]) != MC.act(Cb[i], A.mul(Hb[j], Hb[k]))), None)
    rep.add("action is associative", bad is None, {"basis_triple": bad})
    badu = next((i for i in range(len(Cb)) if MC.act(Cb[i], A.unit) != Cb[i]), None)
    rep.add("action is unital", badu is None, {"basis_element": badu})
    ring = C.ring
    rc, rh = C.rank, H.rank
    CH = tensor(C.carrier, H.carrier)
    # Delta_C o act  vs  (act (x) act) o (C H C H reorder) o (Delta_C (x) Delta_H)
    P = ring.zeros((rc * rh * rc * rh, rc * rc * rh * rh))
    for i, k, j, l in product(range(rc), range(rc), range(rh), range(rh)):
        P[((i * rh + j) * rc + k) * rh + l, ((i * rc + k) * rh + j) * rh + l] = 1
    lhs = C.comult.matrix @ MC.action.matrix
    rhs = kron(MC.action.matrix, MC.action.matrix) @ ZnMatrix.from_array(ring, P) @ \
        kron(C.comult.matrix, H.coalgebra.comult.matrix)
    badd = next((divmod(col, rh) for col in range(rc * rh) if not C.CC.is_zero_vector(
        [a - b for a, b in zip(lhs.column(col), rhs.column(col))])), None)
    rep.add("comultiplication is H-linear", badd is None, {"basis_pair": badd})
    lhs_e = C.counit.matrix @ MC.action.matrix
    rhs_e = kron(C.counit.matrix, H.coalgebra.counit.matrix)
    bade = next((divmod(col, rh) for col in range(rc * rh)
                 if lhs_e.column(col) != rhs_e.column(col)), None)
    rep.add("counit is H-linear", bade is None, {"basis_pair": bade})
    return rep


def verify_comodule_algebra(CA: ComoduleAlgebra) -> Report:
    A, H = CA.algebra, CA.bialgebra
    if A.ring != H.ring:
        raise RingMismatch("comodule algebra over different rings")
    rep = Report(f"comodule algebra {CA.name}".strip())
    ring = A.ring
    ra, rh = A.rank, H.rank
    rho = CA.coaction.matrix
    AHH = tensor(tensor(A.carrier, H.carrier), H.carrier)
    lhs = kron(rho, eye(ring, rh)) @ rho
    rhs = kron(eye(ring, ra), H.coalgebra.comult.matrix) @ rho
    bad = next((i for i in range(ra) if not AHH.is_zero_vector(
        [a - b for a, b in zip(lhs.column(i), rhs.column(i))])), None)
    rep.add("coaction is coassociative", bad is None, {"basis_element": bad})
    cu = kron(eye(ring, ra), H.coalgebra.counit.matrix) @ rho
    badc = next((i for i in range(ra) if not A.carrier.is_zero_vector(
        [a - b for a, b in zip(cu.column(i), eye(ring, ra).column(i))])), None)
    rep.add("coaction is counital", badc is None, {"basis_element": badc})
    AH = tensor_algebra(A, H.algebra)
    B = A.basis()
    badm = next(((i, j) for i in range(ra) for j in range(ra)
                 if AH.carrier.element(CA.coact(A.mul(B[i], B[j])).vector)
                 != AH.mul(AH.carrier.element(CA.coact(B[i]).vector),
                           AH.carrier.element(CA.coact(B[j]).vector))), None)
    rep.add("coaction is multiplicative", badm is None, {"basis_pair": badm})
    rep.add("coaction is unital", AH.carrier.element(CA.coact(A.unit).vector) == AH.unit)
    return rep


def regular_module_coalgebra(H: Bialgebra) -> ModuleCoalgebra:
    """H as a right H-module coalgebra through its multiplication."""
    return ModuleCoalgebra(H.coalgebra, H, H.algebra.mult, H.name)


def regular_comodule_algebra(H: Bialgebra) -> ComoduleAlgebra:
    """H as a right H-comodule algebra through its comultiplication."""
    return ComoduleAlgebra(H.algebra, H, H.coalgebra.comult, H.name)


def trivial_module_coalgebra(C: Coalgebra, H: Bialgebra) -> ModuleCoalgebra:
    """``c . h = eps(h) c``."""
    ring = C.ring
    mat = kron(eye(ring, C.rank), H.coalgebra.counit.matrix)
    return ModuleCoalgebra(C, H, ModuleMap(tensor(C.carrier, H.carrier), C.carrier, mat,
                                           check=False), C.name)


def trivial_comodule_algebra(A: Algebra, H: Bialgebra) -> ComoduleAlgebra:
    """``a -> a (x) 1``."""
    ring = A.ring
    one = ZnMatrix.from_array(ring, np.asarray(H.algebra.unit.vector, dtype=object).reshape(-1, 1))
    mat = kron(eye(ring, A.rank), one)
    return ComoduleAlgebra(A, H, ModuleMap(A.carrier, tensor(A.carrier, H.carrier), mat,
                                           check=False), A.name)


def gset_coalgebra(ring: RingContext, X: GSet) -> ModuleCoalgebra:
    """``R[X]`` with grouplike points, a right ``R[G]``-module coalgebra via ``x . g``."""
    if X.size == 0:
        raise BadInput("empty G-set")
    H = group_algebra(ring, X.group)
    C = grouplike_coalgebra(ring, X.labels, f"R[X{X.size}]")
    k = X.group.order

    def col(idx):
        x, g = divmod(idx, k)
        v = [0] * X.size
        v[X.action[x][g]] = 1
        return v

    cols = [col(i) for i in range(X.size * k)]
    mat = _arr(ring, np.array(cols, dtype=object).T, (X.size, X.size * k))
    action = ModuleMap(tensor(C.carrier, H.carrier), C.carrier, mat, check=False)
    return ModuleCoalgebra(C, H, action, C.name)


def graded_algebra(ring: RingContext, G: FiniteGroup, degrees: Sequence[int],
                   table: Callable[[int, int], Sequence[int]], unit: Sequence[int],
                   name: str = "") -> ComoduleAlgebra:
    """A G-graded algebra on a homogeneous basis, as an ``R[G]``-comodule algebra.

    ``degrees[i]`` is the degree of basis element i; the coaction is
    ``a_i -> a_i (x) degrees[i]``.
    """
    if not degrees:
        raise BadInput("graded algebra needs at least one basis element")
    H = group_algebra(ring, G)
    r = len(degrees)
    carrier = free_module(ring, r)
    A = Algebra.from_table(carrier, table, unit, name)
    k = G.order
    cols = []
    for i in range(r):
        v = [0] * (r * k)
        v[i * k + degrees[i]] = 1
        cols.append(v)
    mat = _arr(ring, np.array(cols, dtype=object).T, (r * k, r))
    return ComoduleAlgebra(A, H, ModuleMap(carrier, tensor(carrier, H.carrier), mat, check=False), name)


def dual_numbers_graded(ring: RingContext, G: FiniteGroup, g: int) -> ComoduleAlgebra:
    """``R[x]/(x^2)`` with x homogeneous of degree g (needs g^2 = e)."""
    if G.mul(g, g) != G.identity:
        raise BadInput("x^2 = 0 lies in degree g^2, which must be the identity")

    def table(i, j):
        return [[1, 0], [0, 1], [0, 1], [0, 0]][i * 2 + j]

    return graded_algebra(ring, G, [G.identity, g], table, [1, 0], f"R[x]/x^2 deg {G.labels[g]}")


def group_graded_algebra(ring: RingContext, G: FiniteGroup) -> ComoduleAlgebra:
    """``R[G]`` graded by G itself (coaction = comultiplication)."""
    H = group_algebra(ring, G)
    return ComoduleAlgebra(H.algebra, H, H.coalgebra.comult, H.name)


def hit_action(MC: ModuleCoalgebra, Cstar: ConvolutionAlgebra) -> Callable[[Element, Element], Element]:
    """Left H-action on ``C*``: ``(h f)(c) = f(c . h)``."""
    C = MC.coalgebra

    def act(h: Element, f: Element) -> Element:
        F = Cstar.to_matrix(f)
        row = []
        for i in range(C.rank):
            row.append(F.apply(MC.act(C.carrier.gen(i), h).vector)[0])
        return Cstar.element_from_matrix(functional_matrix(C.ring, row))

    return act


# ---------------------------------------------------------------------------
# modules over algebras


class RightModule:
    """A right module over an algebra, with action ``M (x) A -> M``."""

    def __init__(self, carrier: FPModule, algebra: Algebra, action: ModuleMap, name: str = ""):
        if action.domain != tensor(carrier, algebra.carrier) or action.codomain != carrier:
            raise DimensionMismatch("right action must be a map M (x) A -> M")
        self.carrier = carrier
        self.algebra = algebra
        self.action = action
        self.ring = carrier.ring
        self.name = name
        self._MA = action.domain

    def act(self, m: Element, a: Element) -> Element:
        return self.action(self._MA.pure(m, a))

    def act_vec(self, m, a) -> tuple[int, ...]:
        v = np.kron(np.asarray(m, dtype=object), np.asarray(a, dtype=object))
        return self.carrier.normal_form(self.action.matrix.apply(v))

    @classmethod
    def regular(cls, A: Algebra) -> "RightModule":
        return cls(A.carrier, A, A.mult, f"{A.name}_{A.name}")

    @classmethod
    def from_function(cls, carrier: FPModule, algebra: Algebra, fn, name: str = "") -> "RightModule":
        """``fn(i, k)`` gives the vector of ``m_i . a_k``."""
        images = [fn(i, k) for i in range(carrier.rank) for k in range(algebra.rank)]
        act = ModuleMap.from_images(tensor(carrier, algebra.carrier), carrier, images)
        return cls(carrier, algebra, act, name)


class LeftModule:
    """A left module over an algebra, with action ``A (x) M -> M``."""

    def __init__(self, carrier: FPModule, algebra: Algebra, action: ModuleMap, name: str = ""):
        if action.domain != tensor(algebra.carrier, carrier) or action.codomain != carrier:
            raise DimensionMismatch("left action must be a map A (x) M -> M")
        self.carrier = carrier
        self.algebra = algebra
        self.action = action
        self.ring = carrier.ring
        self.name = name
        self._AM = action.domain

    def act(self, a: Element, m: Element) -> Element:
        return self.action(self._AM.pure(a, m))

    def act_vec(self, a, m) -> tuple[int, ...]:
        v = np.kron(np.asarray(a, dtype=object), np.asarray(m, dtype=object))
        return self.carrier.normal_form(self.action.matrix.apply(v))

    @classmethod
    def regular(cls, A: Algebra) -> "LeftModule":
        return cls(A.carrier, A, A.mult, f"{A.name}{A.name}")


def verify_right_module(M: RightModule) -> Report:
    rep = Report(f"right module {M.name}".strip())
    A = M.algebra
    mb, ab = M.carrier.gens(), A.basis()
    bad = next(((i, j, k) for i in range(len(mb)) for j in range(len(ab)) for k in range(len(ab))
                if M.act(M.act(mb[i], ab[j]), ab[k]) != M.act(mb[i], A.mul(ab[j], ab[k]))), None)
    rep.add("action is associative", bad is None, {"basis_triple": bad})
    if A.unit is None:
        rep.vacuous("action is unital", "the algebra has no unit")
    else:
        badu = next((i for i in range(len(mb)) if M.act(mb[i], A.unit) != mb[i]), None)
        rep.add("action is unital", badu is None, {"basis_element": badu})
    return rep


def verify_left_module(M: LeftModule) -> Report:
    rep = Report(f"left module {M.name}".strip())
    A = M.algebra
    mb, ab = M.carrier.gens(), A.basis()
    bad = next(((j, k, i) for i in range(len(mb)) for j in range(len(ab)) for k in range(len(ab))
                if M.act(ab[j], M.act(ab[k], mb[i])) != M.act(A.mul(ab[j], ab[k]), mb[i])), None)
    rep.add("action is associative", bad is None, {"basis_triple": bad})
    if A.unit is None:
        rep.vacuous("action is unital", "the algebra has no unit")
    else:
        badu = next((i for i in range(len(mb)) if M.act(A.unit, mb[i]) != mb[i]), None)
        rep.add("action is unital", badu is None, {"basis_element": badu})
    return rep


def scalar_right_module(M: FPModule) -> RightModule:
    """An R-module as a right module over the ground algebra."""
    R = ground_algebra(M.ring)
    return RightModule(M, R, ModuleMap(tensor(M, R.carrier), M, eye(M.ring, M.rank), check=False))


def scalar_left_module(M: FPModule) -> LeftModule:
    R = ground_algebra(M.ring)
    return LeftModule(M, R, ModuleMap(tensor(R.carrier, M), M, eye(M.ring, M.rank), check=False))
