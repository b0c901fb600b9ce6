"""Finitely presented Z/n-modules and the maps between them.

A module is a free module ``(Z/n)^rank`` modulo the span of the columns of a
relation matrix. Elements are residue vectors in that ambient free module,
always stored in canonical form (the lexicographically least representative
of their class), so equality of elements is equality of vectors.

>>> from corings.zn import RingContext
>>> R = RingContext(4)
>>> M = cyclic_module(R, 2)
>>> decompose(M)
(2,)
>>> decompose(hom_module(M, free_module(R, 1)))
(2,)
"""

from __future__ import annotations

from functools import cached_property
from itertools import product
from math import gcd
from typing import Callable, Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import (DimensionMismatch, IllDefinedMap, ModuleMismatch, RingMismatch,
                     SubmoduleMismatch)
from .zn import Lattice, RingContext, Solver, ZnMatrix, smith_normal_form


def _vec(ring: RingContext, v, length: int) -> tuple[int, ...]:
    arr = np.asarray(v, dtype=object).ravel()
    if arr.shape != (length,):
        raise DimensionMismatch(f"vector of length {arr.shape[0]}, expected {length}")
    return tuple(int(x) % ring.modulus for x in arr)


def _columns_matrix(ring: RingContext, rows: int, cols: Sequence[Sequence[int]]) -> ZnMatrix:
    if not cols:
        return ZnMatrix.zero(ring, rows, 0)
    return ZnMatrix.from_array(ring, np.array([list(c) for c in cols], dtype=object).T)


class FPModule:
    """``(Z/n)^rank`` modulo the column span of ``relations``."""

    def __init__(self, ring: RingContext, rank: int, relations: Optional[ZnMatrix] = None,
                 labels: Optional[Sequence[str]] = None):
        if relations is None:
            relations = ZnMatrix.zero(ring, rank, 0)
        if relations.ring != ring:
            raise RingMismatch("relation matrix over a different ring")
        if relations.rows != rank:
            raise DimensionMismatch(f"relations have {relations.rows} rows for rank {rank}")
        self.ring = ring
        self.rank = rank
        self.relations = relations
        self.lattice = Lattice.from_matrix_columns(relations)
        self._key = self.lattice.key()
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != rank:
            raise DimensionMismatch("one label per generator is required")

    # --- construction helpers -------------------------------------------------
    @classmethod
    def from_relations(cls, ring: RingContext, rank: int, relators: Iterable[Sequence[int]],
                       labels=None) -> "FPModule":
        return cls(ring, rank, _columns_matrix(ring, rank, [_vec(ring, r, rank) for r in relators]),
                   labels)

    # --- identity -------------------------------------------------------------
    def key(self) -> tuple:
        return self._key

    def __eq__(self, other) -> bool:
        return self is other or (isinstance(other, FPModule) and self._key == other._key)

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"FPModule(Z/{self.ring.modulus}, rank={self.rank}, factors={list(decompose(self))})"

    # --- elements -------------------------------------------------------------
    def normal_form(self, vec) -> tuple[int, ...]:
        return self.lattice.reduce(_vec(self.ring, vec, self.rank))

    def element(self, vec) -> "Element":
        return Element(self, self.normal_form(vec))

    def __call__(self, vec) -> "Element":
        return self.element(vec)

    def zero(self) -> "Element":
        return Element(self, (0,) * self.rank)

    def gen(self, i: int) -> "Element":
        v = [0] * self.rank
        v[i] = 1
        return self.element(v)

    def gens(self) -> list["Element"]:
        return [self.gen(i) for i in range(self.rank)]

    def is_zero_vector(self, vec) -> bool:
        return self.lattice.contains(_vec(self.ring, vec, self.rank))

    @cached_property
    def smith(self):
        return smith_normal_form(self.relations)

    @cached_property
    def cyclic_generators(self) -> list[tuple[tuple[int, ...], int]]:
        """Pairs (ambient vector, order) giving ``M = (+) Z/order``, trivial summands dropped."""
        sf = self.smith
        n = self.ring.modulus
        out = []
        for i in range(self.rank):
            order = n if i >= len(sf.divisors) else sf.divisors[i]
            if order != 1:
                out.append((self.normal_form(sf.U_inverse.column(i)), order))
        return out

    def cardinality(self) -> int:
        size = 1
        for _, order in self.cyclic_generators:
            size *= order
        return size

    def __len__(self) -> int:
        return self.cardinality()

    def elements(self) -> Iterator["Element"]:
        """Every element exactly once, in a deterministic order."""
        gens = self.cyclic_generators
        n = self.ring.modulus
        basis = [np.asarray(v, dtype=self.ring.dtype) for v, _ in gens]
        for coeffs in product(*[range(order) for _, order in gens]):
            v = np.zeros(self.rank, dtype=self.ring.dtype)
            for k, b in zip(coeffs, basis):
                if k:
                    v = v + k * b
            yield self.element(v % n)

    def is_zero_module(self) -> bool:
        return self.cardinality() == 1

    # --- submodules ------------------------------------------------------------
    def submodule(self, generators: Iterable) -> "Submodule":
        return Submodule(self, generators)

    def whole(self) -> "Submodule":
        return Submodule(self, self.gens())

    def zero_submodule(self) -> "Submodule":
        return Submodule(self, [])


class Element:
    """An element of an :class:`FPModule`, stored in canonical form."""

    __slots__ = ("module", "vector")

    def __init__(self, module: FPModule, vector: tuple[int, ...]):
        self.module = module
        self.vector = vector

    def _same(self, other: "Element"):
        if not isinstance(other, Element):
            raise TypeError(f"cannot combine an element with {type(other).__name__}")
        if other.module is not self.module and other.module != self.module:
            raise ModuleMismatch("arithmetic between elements of different modules")

    def __add__(self, other):
        self._same(other)
        return self.module.element([a + b for a, b in zip(self.vector, other.vector)])

    def __sub__(self, other):
        self._same(other)
        return self.module.element([a - b for a, b in zip(self.vector, other.vector)])

    def __neg__(self):
        return self.module.element([-a for a in self.vector])

    def __rmul__(self, k: int):
        return self.module.element([int(k) * a for a in self.vector])

    def __mul__(self, k: int):
        return self.__rmul__(k)

    def is_zero(self) -> bool:
        return not any(self.vector)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.module == other.module and self.vector == other.vector

    def __hash__(self):
        return hash(self.vector)

    def __repr__(self):
        return f"Element({list(self.vector)})"


def free_module(ring: RingContext, rank: int, labels=None) -> FPModule:
    return FPModule(ring, rank, labels=labels)


def cyclic_module(ring: RingContext, d: int) -> FPModule:
    """Z/d as a module over Z/n (d divides n)."""
    if ring.modulus % d:
        raise ValueError(f"{d} does not divide {ring.modulus}")
    return FPModule.from_relations(ring, 1, [[d]] if d != ring.modulus else [])


def zero_module(ring: RingContext) -> FPModule:
    return FPModule(ring, 0)


def ground_module(ring: RingContext) -> FPModule:
    """R itself, the free module of rank one."""
    return FPModule(ring, 1)


def decompose(M: FPModule) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... with ``M = (+) Z/d_i`` (1s dropped)."""
    return tuple(sorted(order for _, order in M.cyclic_generators))


# ---------------------------------------------------------------------------
# maps


class ModuleMap:
    """An R-linear map given by a matrix on ambient generators."""

    def __init__(self, domain: FPModule, codomain: FPModule, matrix: ZnMatrix, check: bool = True):
        if domain.ring != codomain.ring or matrix.ring != domain.ring:
            raise RingMismatch("ModuleMap across different rings")
        if matrix.shape != (codomain.rank, domain.rank):
            raise DimensionMismatch(
                f"matrix {matrix.shape} for a map of ranks {domain.rank} -> {codomain.rank}")
        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix
        if check:
            rel = domain.relations
            for j in range(rel.cols):
                image = matrix.apply(rel.column(j))
                if not codomain.is_zero_vector(image):
                    raise IllDefinedMap(f"relation {j} of the domain maps to a nonzero element")

    @classmethod
    def from_images(cls, domain: FPModule, codomain: FPModule, images: Sequence, check=True):
        """The map sending generator i to ``images[i]`` (vectors or elements)."""
        cols = [im.vector if isinstance(im, Element) else _vec(domain.ring, im, codomain.rank)
                for im in images]
        if len(cols) != domain.rank:
            raise DimensionMismatch(f"{len(cols)} images for {domain.rank} generators")
        return cls(domain, codomain, _columns_matrix(domain.ring, codomain.rank, cols), check)

    @classmethod
    def identity(cls, M: FPModule) -> "ModuleMap":
        return cls(M, M, ZnMatrix.identity(M.ring, M.rank), check=False)

    @classmethod
    def zero(cls, M: FPModule, N: FPModule) -> "ModuleMap":
        return cls(M, N, ZnMatrix.zero(M.ring, N.rank, M.rank), check=False)

    def __call__(self, x) -> Element:
        if isinstance(x, Element):
            if x.module != self.domain:
                raise ModuleMismatch("element is not in the domain of the map")
            x = x.vector
        return self.codomain.element(self.matrix.apply(_vec(self.domain.ring, x, self.domain.rank)))

    def compose(self, inner: "ModuleMap") -> "ModuleMap":
        """``self o inner``."""
        if inner.codomain != self.domain:
            raise ModuleMismatch("composition of non-composable maps")
        return ModuleMap(inner.domain, self.codomain, self.matrix @ inner.matrix, check=False)

    def __matmul__(self, inner: "ModuleMap") -> "ModuleMap":
        return self.compose(inner)

    def _same_shape(self, other: "ModuleMap"):
        if self.domain != other.domain or self.codomain != other.codomain:
            raise ModuleMismatch("maps with different domain or codomain")

    def __add__(self, other):
        self._same_shape(other)
        return ModuleMap(self.domain, self.codomain, self.matrix + other.matrix, check=False)

    def __sub__(self, other):
        self._same_shape(other)
        return ModuleMap(self.domain, self.codomain, self.matrix - other.matrix, check=False)

    def scale(self, k: int) -> "ModuleMap":
        return ModuleMap(self.domain, self.codomain, self.matrix.scale(k), check=False)

    def images(self) -> list[Element]:
        return [self.codomain.element(self.matrix.column(j)) for j in range(self.domain.rank)]

    def is_zero(self) -> bool:
        return all(im.is_zero() for im in self.images())

    def __eq__(self, other):
        if not isinstance(other, ModuleMap):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and self.images() == other.images())

    def __hash__(self):
        return hash(tuple(im.vector for im in self.images()))

    def kernel(self) -> "Submodule":
        return kernel_of_map(self)

    def image(self) -> "Submodule":
        return image_of_map(self)

    def is_injective(self) -> bool:
        return self.kernel().is_zero()

    def is_surjective(self) -> bool:
        return self.image() == self.codomain.whole()

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def __repr__(self):
        return f"ModuleMap({self.matrix.tolist()})"


# ---------------------------------------------------------------------------
# submodules


class Submodule:
    """The submodule of ``parent`` generated by the given elements."""

    def __init__(self, parent: FPModule, generators: Iterable):
        self.parent = parent
        gens = []
        for g in generators:
            if isinstance(g, Element):
                if g.module != parent:
                    raise SubmoduleMismatch("generator lives in a different module")
                gens.append(g.vector)
            else:
                gens.append(parent.normal_form(g))
        self.generators = [v for v in gens]
        rel = parent.relations
        self.lattice = Lattice(parent.ring, parent.rank,
                               list(self.generators) + [rel.column(j) for j in range(rel.cols)])

    @classmethod
    def from_lattice(cls, parent: FPModule, lattice: Lattice) -> "Submodule":
        """Submodule spanned by a lattice of ambient vectors, with tidy generators."""
        gens = [g for g in lattice.generators() if not parent.is_zero_vector(g)]
        return cls(parent, gens)

    def _check_parent(self, other: "Submodule"):
        if other.parent != self.parent:
            raise SubmoduleMismatch("submodules of different modules")

    def contains(self, x) -> bool:
        if isinstance(x, Element):
            if x.module != self.parent:
                raise SubmoduleMismatch("element of a different module")
            x = x.vector
        return self.lattice.contains(_vec(self.parent.ring, x, self.parent.rank))

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def key(self) -> tuple:
        return (self.parent.key(), self.lattice.key())

    def __eq__(self, other) -> bool:
        return isinstance(other, Submodule) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __le__(self, other: "Submodule") -> bool:
        self._check_parent(other)
        return self.lattice.issubset(other.lattice)

    def issubset(self, other: "Submodule") -> bool:
        return self <= other

    def __add__(self, other: "Submodule") -> "Submodule":
        self._check_parent(other)
        return Submodule(self.parent, self.generators + other.generators)

    def intersection(self, other: "Submodule") -> "Submodule":
        self._check_parent(other)
        M = self.parent
        rel = M.relations
        g1, g2 = len(self.generators), len(other.generators)
        cols = ([list(v) for v in self.generators] + [[-x for x in v] for v in other.generators]
                + [rel.column(j) for j in range(rel.cols)])
        # x = G1 a = G2 b (mod relations): kernel of [G1 | -G2 | Rel]
        A = _columns_matrix(M.ring, M.rank, cols)
        ker = Solver(A).kernel
        G1 = _columns_matrix(M.ring, M.rank, self.generators)
        vecs = [G1.apply(k[:g1]) for k in ker.generators()]
        return Submodule(M, [v for v in vecs])

    def __and__(self, other):
        return self.intersection(other)

    def is_zero(self) -> bool:
        return all(self.parent.is_zero_vector(g) for g in self.generators)

    def elements_of(self) -> list[Element]:
        return [self.parent.element(g) for g in self.generators]

    def cardinality(self) -> int:
        return self.lattice.cardinality() // self.parent.lattice.cardinality()

    @cached_property
    def _coordinate_solver(self) -> Solver:
        rel = self.parent.relations
        cols = list(self.generators) + [rel.column(j) for j in range(rel.cols)]
        return Solver(_columns_matrix(self.parent.ring, self.parent.rank, cols))

    def coordinates(self, x) -> Optional[tuple[int, ...]]:
        """Coefficients on the generators expressing x, or None if x is not inside."""
        if isinstance(x, Element):
            x = x.vector
        sol = self._coordinate_solver.solve(_vec(self.parent.ring, x, self.parent.rank))
        return None if sol is None else sol[:len(self.generators)]

    @cached_property
    def _presentation(self) -> tuple[FPModule, ModuleMap]:
        M = self.parent
        g = len(self.generators)
        ker = self._coordinate_solver.kernel
        rels = [k[:g] for k in ker.generators()]
        rels = [r for r in rels if any(r)]
        N = FPModule.from_relations(M.ring, g, rels)
        inc = ModuleMap(N, M, _columns_matrix(M.ring, M.rank, self.generators), check=False)
        return N, inc

    def as_module(self) -> tuple[FPModule, ModuleMap]:
        """The submodule as an abstract module on its generators, with the inclusion."""
        return self._presentation

    def quotient(self) -> tuple[FPModule, ModuleMap]:
        """``parent / self`` with the projection map."""
        M = self.parent
        rel = M.relations
        cols = [rel.column(j) for j in range(rel.cols)] + list(self.generators)
        Q = FPModule(M.ring, M.rank, _columns_matrix(M.ring, M.rank, cols), M.labels)
        return Q, ModuleMap(M, Q, ZnMatrix.identity(M.ring, M.rank), check=False)

    def elements(self) -> Iterator[Element]:
        N, inc = self.as_module()
        seen = set()
        for x in N.elements():
            y = inc(x)
            if y.vector not in seen:
                seen.add(y.vector)
                yield y

    def __repr__(self):
        return f"Submodule(gens={[list(g) for g in self.generators]}, size={self.cardinality()})"


def kernel_of_map(f: ModuleMap) -> Submodule:
    return preimage(f, f.codomain.zero_submodule())


def image_of_map(f: ModuleMap) -> Submodule:
    return Submodule(f.codomain, [f.matrix.column(j) for j in range(f.domain.rank)])


def preimage(f: ModuleMap, S: Submodule) -> Submodule:
    """``{x in domain : f(x) in S}``."""
    if S.parent != f.codomain:
        raise SubmoduleMismatch("target submodule is not in the codomain")
    return Submodule.from_lattice(f.domain, _preimage_lattice(f.matrix, S))


def _preimage_lattice(F: ZnMatrix, S: Submodule) -> Lattice:
    N = S.parent
    rel = N.relations
    r = F.cols
    cols = [F.column(j) for j in range(r)] + [[-x for x in g] for g in S.generators] \
        + [[-x for x in rel.column(j)] for j in range(rel.cols)]
    A = _columns_matrix(F.ring, F.rows, cols)
    ker = Solver(A).kernel
    return Lattice(F.ring, r, [k[:r] for k in ker.generators()])


# ---------------------------------------------------------------------------
# direct sums, tensor products, Hom


class DirectSum(FPModule):
    """``M_1 (+) ... (+) M_k`` with inclusions and projections."""

    def __init__(self, summands: Sequence[FPModule]):
        ring = summands[0].ring if summands else None
        if any(s.ring != ring for s in summands):
            raise RingMismatch("direct sum across rings")
        self.summands = tuple(summands)
        self.offsets = []
        total = 0
        for s in summands:
            self.offsets.append(total)
            total += s.rank
        cols = []
        for s, off in zip(summands, self.offsets):
            for j in range(s.relations.cols):
                c = [0] * total
                c[off:off + s.rank] = s.relations.column(j)
                cols.append(c)
        super().__init__(ring, total, _columns_matrix(ring, total, cols))

    def inclusion(self, k: int) -> ModuleMap:
        s, off = self.summands[k], self.offsets[k]
        arr = self.ring.zeros((self.rank, s.rank))
        arr[off:off + s.rank, :] = self.ring.eye(s.rank)
        return ModuleMap(s, self, ZnMatrix.from_array(self.ring, arr), check=False)

    def projection(self, k: int) -> ModuleMap:
        s, off = self.summands[k], self.offsets[k]
        arr = self.ring.zeros((s.rank, self.rank))
        arr[:, off:off + s.rank] = self.ring.eye(s.rank)
        return ModuleMap(self, s, ZnMatrix.from_array(self.ring, arr), check=False)

    def pack(self, *parts) -> Element:
        vec = []
        for s, p in zip(self.summands, parts):
            vec.extend(p.vector if isinstance(p, Element) else _vec(self.ring, p, s.rank))
        return self.element(vec)


def direct_sum(*summands: FPModule) -> DirectSum:
    return DirectSum(summands)


class TensorModule(FPModule):
    """``M (x) N`` on generators ``m_i (x) n_j`` (index ``i * rank(N) + j``)."""

    def __init__(self, left: FPModule, right: FPModule):
        if left.ring != right.ring:
            raise RingMismatch("tensor product across rings")
        ring = left.ring
        r, s = left.rank, right.rank
        cols = []
        for a in range(left.relations.cols):
            col = left.relations.array[:, a]
            for j in range(s):
                e = np.zeros(s, dtype=ring.dtype)
                e[j] = 1
                cols.append(np.kron(col, e))
        for b in range(right.relations.cols):
            col = right.relations.array[:, b]
            for i in range(r):
                e = np.zeros(r, dtype=ring.dtype)
                e[i] = 1
                cols.append(np.kron(e, col))
        super().__init__(ring, r * s, _columns_matrix(ring, r * s, cols))
        self.left = left
        self.right = right

    def pure(self, m, n) -> Element:
        """The canonical bilinear map ``(m, n) -> m (x) n``."""
        mv = m.vector if isinstance(m, Element) else _vec(self.ring, m, self.left.rank)
        nv = n.vector if isinstance(n, Element) else _vec(self.ring, n, self.right.rank)
        return self.element(np.kron(np.asarray(mv, dtype=object), np.asarray(nv, dtype=object)))

    def index(self, i: int, j: int) -> int:
        return i * self.right.rank + j


def tensor(M: FPModule, N: FPModule) -> TensorModule:
    return TensorModule(M, N)


def tensor_map(f: ModuleMap, g: ModuleMap, domain: Optional[FPModule] = None,
               codomain: Optional[FPModule] = None) -> ModuleMap:
    """``f (x) g`` between the tensor products of domains and codomains."""
    dom = domain if domain is not None else tensor(f.domain, g.domain)
    cod = codomain if codomain is not None else tensor(f.codomain, g.codomain)
    arr = np.kron(f.matrix.array, g.matrix.array)
    return ModuleMap(dom, cod, ZnMatrix.from_array(f.domain.ring, arr), check=False)


def matrix_module(N: FPModule, width: int) -> FPModule:
    """All rank(N) x width matrices, modulo those whose columns lie in N's relations.

    Flattened row-major, entry (i, j) at index ``i * width + j``; this is
    ``Hom((Z/n)^width, N)``.
    """
    ring = N.ring
    cols = []
    for b in range(N.relations.cols):
        col = N.relations.array[:, b]
        for j in range(width):
            e = np.zeros(width, dtype=ring.dtype)
            e[j] = 1
            cols.append(np.kron(col, e))
    return FPModule(ring, N.rank * width, _columns_matrix(ring, N.rank * width, cols))


def well_defined_lattice(M: FPModule, N: FPModule) -> Lattice:
    """Flattened matrices X with ``X . rel(M)`` inside rel(N)."""
    ring = M.ring
    r, s = M.rank, N.rank
    k = M.relations.cols
    kn = N.relations.cols
    # unknowns: X (s*r), then y_l (kn each) for each domain relation l
    rows = s * k
    A = ring.zeros((max(rows, 0), s * r + kn * k))
    for l in range(k):
        rho = M.relations.array[:, l]
        for i in range(s):
            A[l * s + i, i * r:(i + 1) * r] = rho
        A[l * s:(l + 1) * s, s * r + l * kn: s * r + (l + 1) * kn] = (-N.relations.array) % ring.modulus
    if k == 0:
        return Lattice(ring, s * r, [ring.eye(s * r)[i] for i in range(s * r)])
    ker = Solver(ZnMatrix.from_array(ring, A)).kernel
    return Lattice(ring, s * r, [g[:s * r] for g in ker.generators()])


class HomModule(FPModule):
    """``Hom_R(M, N)`` presented on generators that are well-defined matrices."""

    def __init__(self, M: FPModule, N: FPModule):
        if M.ring != N.ring:
            raise RingMismatch("Hom across rings")
        self.source = M
        self.target = N
        self.ambient = matrix_module(N, M.rank)
        lat = well_defined_lattice(M, N)
        self.space = Submodule.from_lattice(self.ambient, lat)
        H, inc = self.space.as_module()
        super().__init__(M.ring, H.rank, H.relations)
        self.inclusion = ModuleMap(self, self.ambient, inc.matrix, check=False)

    def to_map(self, h: Element) -> ModuleMap:
        flat = self.inclusion(h).vector
        arr = np.asarray(flat, dtype=object).reshape(self.target.rank, self.source.rank)
        return ModuleMap(self.source, self.target, ZnMatrix.from_array(self.ring, arr), check=False)

    def from_map(self, f: ModuleMap) -> Element:
        if f.domain != self.source or f.codomain != self.target:
            raise ModuleMismatch("map does not belong to this Hom module")
        return self.from_matrix(f.matrix)

    def from_matrix(self, X) -> Element:
        arr = X.array if isinstance(X, ZnMatrix) else np.asarray(X, dtype=object)
        coords = self.space.coordinates(arr.ravel())
        if coords is None:
            raise IllDefinedMap("matrix is not a well-defined map")
        return self.element(coords)

    def evaluate(self, h: Element, m) -> Element:
        return self.to_map(h)(m)

    def all_maps(self) -> Iterator[ModuleMap]:
        for h in self.elements():
            yield self.to_map(h)


def hom_module(M: FPModule, N: FPModule) -> HomModule:
    return HomModule(M, N)


def dual(M: FPModule) -> HomModule:
    """``M* = Hom(M, R)``."""
    return HomModule(M, ground_module(M.ring))


def double_dual_map(M: FPModule) -> tuple[HomModule, ModuleMap]:
    """The evaluation map ``M -> M**``."""
    D = dual(M)
    DD = dual(D)
    ring = M.ring
    images = []
    for i in range(M.rank):
        row = [D.evaluate(D.gen(k), M.gen(i)).vector[0] for k in range(D.rank)]
        images.append(DD.from_matrix(np.asarray([row], dtype=object)))
    return DD, ModuleMap.from_images(M, DD, images)


def hom_map_pre(f: ModuleMap, N: FPModule, H_src: HomModule, H_tgt: HomModule) -> ModuleMap:
    """``Hom(f, N): Hom(M', N) -> Hom(M, N)``, ``h -> h o f``."""
    images = [H_tgt.from_map(H_src.to_map(H_src.gen(i)).compose(f)) for i in range(H_src.rank)]
    return ModuleMap.from_images(H_src, H_tgt, images)


def hom_map_post(g: ModuleMap, H_src: HomModule, H_tgt: HomModule) -> ModuleMap:
    """``Hom(M, g): Hom(M, N) -> Hom(M, N')``, ``h -> g o h``."""
    images = [H_tgt.from_map(g.compose(H_src.to_map(H_src.gen(i)))) for i in range(H_src.rank)]
    return ModuleMap.from_images(H_src, H_tgt, images)


# ---------------------------------------------------------------------------
# projectivity and purity


def is_projective(M: FPModule) -> bool:
    """``Z/d`` is projective over ``Z/n`` iff gcd(d, n/d) = 1."""
    n = M.ring.modulus
    return all(gcd(d, n // d) == 1 for d in decompose(M))


def is_pure_submodule(N: Submodule, M: FPModule) -> bool:
    """True iff ``N (x) Z/d -> M (x) Z/d`` is injective for all divisors d of n."""
    if N.parent != M:
        raise SubmoduleMismatch("N is not a submodule of M")
    return all(pure_against(N, cyclic_module(M.ring, d)) for d in M.ring.divisors())


def pure_against(N: Submodule, W: FPModule) -> bool:
    """Whether ``N (x) W -> M (x) W`` is injective."""
    Nmod, inc = N.as_module()
    f = tensor_map(inc, ModuleMap.identity(W))
    return f.is_injective()


def map_from_function(domain: FPModule, codomain: FPModule,
                      fn: Callable[[Element], Element]) -> ModuleMap:
    """Linear map determined by its values on the generators of ``domain``."""
    return ModuleMap.from_images(domain, codomain, [fn(g) for g in domain.gens()])
