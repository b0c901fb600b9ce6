"""Exact linear algebra over the residue rings Z/n.

Everything above this module reduces to three primitives implemented here:

* :func:`smith_normal_form` for module decompositions,
* :class:`Lattice`, a Howell-form basis of a submodule of ``(Z/n)^c`` that
  gives canonical (lexicographically least) coset representatives,
* :func:`solve_linear` / :func:`kernel` built on top of it.

Example:

>>> R = RingContext(4)
>>> A = ZnMatrix.from_rows(R, [[2]])
>>> solve_linear(A, [1]) is None
True
>>> solve_linear(A, [2])
(1,)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DimensionMismatch, RingMismatch

# Above this modulus numpy int64 arithmetic could overflow in matrix
# products, so entries are stored as Python integers instead.
_INT64_SAFE_MODULUS = 1 << 26


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) over the integers."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


@dataclass(frozen=True)
class RingContext:
    """The ground ring Z/n, with canonical representatives in [0, n)."""

    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, (int, np.integer)) or self.modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.modulus!r}")
        object.__setattr__(self, "modulus", int(self.modulus))

    @property
    def dtype(self):
        return np.int64 if self.modulus <= _INT64_SAFE_MODULUS else object

    def reduce(self, x: int) -> int:
        return int(x) % self.modulus

    def is_unit(self, x: int) -> bool:
        return gcd(int(x), self.modulus) == 1

    def inverse(self, x: int) -> int:
        return pow(int(x) % self.modulus, -1, self.modulus)

    def divisors(self) -> list[int]:
        """All positive divisors of n in increasing order (the ideals of Z/n)."""
        n = self.modulus
        return [d for d in range(1, n + 1) if n % d == 0]

    def associate_unit(self, x: int) -> int:
        """A unit u with u*x = gcd(x, n) mod n."""
        n = self.modulus
        x %= n
        g = gcd(x, n)
        if x == 0:
            return 1
        m = n // g
        base = pow(x // g, -1, m) if m > 1 else 0
        for k in range(g + 1):
            u = base + k * m
            if gcd(u, n) == 1:
                return u % n
        raise ArithmeticError("no associate unit found")  # pragma: no cover

    def array(self, data, shape=None) -> np.ndarray:
        arr = np.array(data, dtype=object)
        if shape is not None:
            arr = arr.reshape(shape)
        arr = arr % self.modulus
        return arr.astype(self.dtype)

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=self.dtype)

    def eye(self, k: int) -> np.ndarray:
        return np.eye(k, dtype=self.dtype)

    def elements(self) -> range:
        return range(self.modulus)


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class ZnMatrix:
    """An immutable rows x cols matrix with entries in Z/n."""

    __slots__ = ("ring", "array")

    def __init__(self, ring: RingContext, rows: int, cols: int, entries: Sequence[int]):
        entries = list(entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        self.ring = ring
        self.array = _freeze(ring.array(entries, (rows, cols)) if entries
                             else ring.zeros((rows, cols)))

    @classmethod
    def from_array(cls, ring: RingContext, arr) -> "ZnMatrix":
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2d array, got shape {arr.shape}")
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.array = _freeze((arr % ring.modulus).astype(ring.dtype))
        return obj

    @classmethod
    def from_rows(cls, ring: RingContext, rows: Sequence[Sequence[int]]) -> "ZnMatrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(ring, len(rows), width, [x for r in rows for x in r])

    @classmethod
    def identity(cls, ring: RingContext, k: int) -> "ZnMatrix":
        return cls.from_array(ring, ring.eye(k))

    @classmethod
    def zero(cls, ring: RingContext, rows: int, cols: int) -> "ZnMatrix":
        return cls.from_array(ring, ring.zeros((rows, cols)))

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.array.shape

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.array.ravel())

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.array]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.array[:, j])

    def _check(self, other: "ZnMatrix"):
        if self.ring != other.ring:
            raise RingMismatch(f"Z/{self.ring.modulus} vs Z/{other.ring.modulus}")

    def __matmul__(self, other: "ZnMatrix") -> "ZnMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return ZnMatrix.from_array(self.ring, self.array @ other.array)

    def __add__(self, other: "ZnMatrix") -> "ZnMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return ZnMatrix.from_array(self.ring, self.array + other.array)

    def __sub__(self, other: "ZnMatrix") -> "ZnMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return ZnMatrix.from_array(self.ring, self.array - other.array)

    def scale(self, k: int) -> "ZnMatrix":
        return ZnMatrix.from_array(self.ring, self.array * (int(k) % self.ring.modulus))

    @property
    def T(self) -> "ZnMatrix":
        return ZnMatrix.from_array(self.ring, self.array.T.copy())

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        v = np.asarray(vec, dtype=self.ring.dtype)
        if v.shape != (self.cols,):
            raise DimensionMismatch(f"vector of length {v.shape} for {self.shape} matrix")
        return tuple(int(x) for x in (self.array @ v) % self.ring.modulus)

    def is_zero(self) -> bool:
        return not self.array.any()

    def __eq__(self, other) -> bool:
        return (isinstance(other, ZnMatrix) and self.ring == other.ring
                and self.shape == other.shape and bool((self.array == other.array).all()))

    def __hash__(self):
        return hash((self.ring.modulus, self.shape, self.entries))

    def __repr__(self):
        return f"ZnMatrix(Z/{self.ring.modulus}, {self.tolist()})"


# ---------------------------------------------------------------------------
# Howell form: canonical bases of submodules of (Z/n)^c


class Lattice:
    """A submodule of ``(Z/n)^c`` stored as a reduced Howell basis.

    Rows are in echelon form, every pivot is a divisor of n, entries above a
    pivot are reduced below it, and the Howell property holds: the elements
    of the span whose first j coordinates vanish are spanned by the rows
    whose pivot column is at least j. Consequently :meth:`reduce` returns the
    lexicographically least representative of a coset, and two lattices are
    equal iff their bases are equal.
    """

    __slots__ = ("ring", "dim", "basis", "pivots")

    def __init__(self, ring: RingContext, dim: int, generators: Iterable[Sequence[int]] = ()):
        self.ring = ring
        self.dim = dim
        gens = [np.asarray(g, dtype=object) for g in generators]
        for g in gens:
            if g.shape != (dim,):
                raise DimensionMismatch(f"generator of shape {g.shape} in dimension {dim}")
        self.basis, self.pivots = _howell(ring, dim, gens)
        for row in self.basis:
            row.flags.writeable = False

    @classmethod
    def from_matrix_columns(cls, mat: ZnMatrix) -> "Lattice":
        return cls(mat.ring, mat.rows, [mat.array[:, j] for j in range(mat.cols)])

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Lexicographically least element of ``vec + self``."""
        n = self.ring.modulus
        v = np.asarray(vec, dtype=self.ring.dtype) % n
        if v.shape != (self.dim,):
            raise DimensionMismatch(f"vector of length {v.shape} in dimension {self.dim}")
        v = v.copy()
        for row, p in zip(self.basis, self.pivots):
            q = int(v[p]) // int(row[p])
            if q:
                v = (v - q * row) % n
        return tuple(int(x) for x in v)

    def contains(self, vec: Sequence[int]) -> bool:
        return not any(self.reduce(vec))

    def __contains__(self, vec) -> bool:
        return self.contains(vec)

    def cardinality(self) -> int:
        n = self.ring.modulus
        return prod(n // int(row[p]) for row, p in zip(self.basis, self.pivots))

    def generators(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in row) for row in self.basis]

    def key(self) -> tuple:
        return (self.ring.modulus, self.dim, tuple(self.generators()))

    def __eq__(self, other) -> bool:
        return isinstance(other, Lattice) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def issubset(self, other: "Lattice") -> bool:
        return all(other.contains(g) for g in self.generators())

    def __add__(self, other: "Lattice") -> "Lattice":
        return Lattice(self.ring, self.dim, self.generators() + other.generators())

    def __repr__(self):
        return f"Lattice(Z/{self.ring.modulus}, dim={self.dim}, basis={self.generators()})"


def _howell(ring: RingContext, dim: int, gens: list) -> tuple[list, list]:
    n = ring.modulus
    work = [(g % n).astype(ring.dtype) for g in gens]
    work = [w for w in work if w.any()]
    basis, pivots = [], []
    for col in range(dim):
        if not work:
            break
        pivot = None
        rest = []
        for r in work:
            if r[col] == 0:
                rest.append(r)
                continue
            if pivot is None:
                pivot = r
                continue
            a, b = int(pivot[col]), int(r[col])
            g, s, t = _xgcd(a, b)
            new_pivot = (s * pivot + t * r) % n
            other = ((b // g) * pivot - (a // g) * r) % n
            pivot = new_pivot
            if other.any():
                rest.append(other)
        if pivot is not None:
            u = ring.associate_unit(int(pivot[col]))
            pivot = (u * pivot) % n
            d = int(pivot[col])
            tail = ((n // d) * pivot) % n
            if tail.any():
                rest.append(tail)
            basis.append(pivot)
            pivots.append(col)
        work = rest  # every row in rest is already known to be nonzero
    # reduce entries above each pivot
    for i in range(len(basis)):
        p, d = pivots[i], int(basis[i][pivots[i]])
        for j in range(i):
            q = int(basis[j][p]) // d
            if q:
                basis[j] = (basis[j] - q * basis[i]) % n
    return basis, pivots


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithForm:
    """Result of :func:`smith_normal_form`.

    ``U @ A @ V == S``. ``divisors`` lists the diagonal of S as divisors of n
    (a zero diagonal entry is recorded as n). ``invariant_factors`` are the
    orders of the cyclic summands of the column span of A, ascending, with a
    free summand recorded as n and trivial summands omitted; so the identity
    has factors ``[n, n]`` and the zero matrix has none.
    """

    S: ZnMatrix
    U: ZnMatrix
    V: ZnMatrix
    U_inverse: ZnMatrix
    divisors: tuple[int, ...]
    invariant_factors: tuple[int, ...]

    def cokernel_factors(self) -> tuple[int, ...]:
        """Invariant factors of ``(Z/n)^rows / colspan(A)``, ascending, without 1s."""
        n = self.S.ring.modulus
        extra = (n,) * (self.S.rows - len(self.divisors))
        return tuple(d for d in self.divisors if d != 1) + extra


def smith_normal_form(A: ZnMatrix) -> SmithForm:
    """Smith normal form over Z/n.

    The integer elimination algorithm runs on the lift of A to Z with
    residues reduced after each step; every transformation has determinant
    +-1 over Z, so U and V are invertible mod n.
    """
    if not isinstance(A, ZnMatrix):
        raise DimensionMismatch("smith_normal_form expects a ZnMatrix")
    ring = A.ring
    n = ring.modulus
    m, c = A.shape
    M = [[int(x) for x in row] for row in A.array]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    Ui = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(c)] for i in range(c)]

    def row_combine(i, k, a, b, cc, d):
        # rows (i, k) <- [[a, b], [cc, d]] @ rows (i, k); det = 1
        for mat in (M, U):
            ri, rk = mat[i], mat[k]
            mat[i] = [(a * x + b * y) % n for x, y in zip(ri, rk)]
            mat[k] = [(cc * x + d * y) % n for x, y in zip(ri, rk)]
        # inverse [[d, -b], [-cc, a]] applied on the right of Ui columns
        for row in Ui:
            x, y = row[i], row[k]
            row[i] = (x * d - y * cc) % n
            row[k] = (-x * b + y * a) % n

    def col_combine(j, k, a, b, cc, d):
        # cols (j, k) <- cols (j, k) @ [[a, cc], [b, d]]
        for mat in (M, V):
            for row in mat:
                x, y = row[j], row[k]
                row[j] = (a * x + b * y) % n
                row[k] = (cc * x + d * y) % n

    def row_scale(i, u):
        ui = pow(u, -1, n) if n > 1 else 0
        M[i] = [(u * x) % n for x in M[i]]
        U[i] = [(u * x) % n for x in U[i]]
        for row in Ui:
            row[i] = (row[i] * ui) % n

    def row_swap(i, k):
        if i != k:
            M[i], M[k] = M[k], M[i]
            U[i], U[k] = U[k], U[i]
            for row in Ui:
                row[i], row[k] = row[k], row[i]

    def col_swap(j, k):
        if j != k:
            for mat in (M, V):
                for row in mat:
                    row[j], row[k] = row[k], row[j]

    t = 0
    while t < min(m, c):
        best = None
        for i in range(t, m):
            for j in range(t, c):
                if M[i][j] % n:
                    g = gcd(M[i][j], n)
                    if best is None or g < best[0]:
                        best = (g, i, j)
        if best is None:
            break
        _, i0, j0 = best
        row_swap(t, i0)
        col_swap(t, j0)
        while True:
            row_scale(t, ring.associate_unit(M[t][t]))
            d = M[t][t]
            dirty = False
            for i in range(t + 1, m):
                b = M[i][t]
                if b == 0:
                    continue
                if b % d == 0:
                    row_combine(t, i, 1, 0, -(b // d), 1)
                else:
                    g, s, u = _xgcd(d, b)
                    row_combine(t, i, s, u, -(b // g), d // g)
                    dirty = True
                    break
            if dirty:
                continue
            for j in range(t + 1, c):
                b = M[t][j]
                if b == 0:
                    continue
                if b % d == 0:
                    col_combine(t, j, 1, 0, -(b // d), 1)
                else:
                    g, s, u = _xgcd(d, b)
                    col_combine(t, j, s, u, -(b // g), d // g)
                    dirty = True
                    break
            if dirty:
                continue
            bad = next((i for i in range(t + 1, m)
                        if any(M[i][j] % d for j in range(t + 1, c))), None)
            if bad is None:
                break
            row_combine(t, bad, 1, 1, 0, 1)
        t += 1

    diag = tuple(M[i][i] if M[i][i] else n for i in range(min(m, c)))
    image = sorted(n // d for d in diag if d != n)
    return SmithForm(
        S=ZnMatrix.from_array(ring, ring.array(M, (m, c)) if m and c else ring.zeros((m, c))),
        U=ZnMatrix.from_array(ring, ring.array(U, (m, m)) if m else ring.zeros((0, 0))),
        V=ZnMatrix.from_array(ring, ring.array(V, (c, c)) if c else ring.zeros((0, 0))),
        U_inverse=ZnMatrix.from_array(ring, ring.array(Ui, (m, m)) if m else ring.zeros((0, 0))),
        divisors=diag,
        invariant_factors=tuple(image),
    )


# ---------------------------------------------------------------------------
# Solving, kernels, images


def _augmented(A: ZnMatrix) -> Lattice:
    """Howell basis of the rows (A e_j, e_j): encodes image and kernel together."""
    ring = A.ring
    m, c = A.shape
    rows = [np.concatenate([A.array[:, j], ring.eye(c)[j]]) for j in range(c)]
    return Lattice(ring, m + c, rows)


def _vector(ring: RingContext, b, length: int) -> np.ndarray:
    v = np.asarray(b, dtype=object).ravel()
    if v.shape != (length,):
        raise DimensionMismatch(f"right-hand side of length {v.shape[0]}, expected {length}")
    return (v % ring.modulus).astype(ring.dtype)


def kernel(A: ZnMatrix) -> ZnMatrix:
    """A matrix whose columns generate ``{x : A x = 0}`` (a Howell basis)."""
    m, c = A.shape
    aug = _augmented(A)
    cols = [row[m:] for row, p in zip(aug.basis, aug.pivots) if p >= m]
    if not cols:
        return ZnMatrix.zero(A.ring, c, 0)
    return ZnMatrix.from_array(A.ring, np.stack(cols, axis=1))


def kernel_lattice(A: ZnMatrix) -> Lattice:
    """The kernel of A as a :class:`Lattice` in ``(Z/n)^cols``."""
    K = kernel(A)
    return Lattice(A.ring, A.cols, [K.array[:, j] for j in range(K.cols)])


class Solver:
    """Precomputed elimination data for repeatedly solving ``A x = b``."""

    def __init__(self, A: ZnMatrix):
        self.A = A
        m, c = A.shape
        self._aug = _augmented(A)
        self._ker = Lattice(A.ring, c, [row[m:] for row, p in
                                        zip(self._aug.basis, self._aug.pivots) if p >= m])

    @property
    def kernel(self) -> Lattice:
        return self._ker

    def solve(self, b: Sequence[int]) -> Optional[tuple[int, ...]]:
        ring = self.A.ring
        n = ring.modulus
        m, c = self.A.shape
        v = np.concatenate([_vector(ring, b, m), ring.zeros(c)])
        for row, p in zip(self._aug.basis, self._aug.pivots):
            if p >= m:
                break
            q = int(v[p]) // int(row[p])
            if q:
                v = (v - q * row) % n
        if v[:m].any():
            return None
        return self._ker.reduce((-v[m:]) % n)


def solve_linear(A: ZnMatrix, b: Sequence[int]) -> Optional[tuple[int, ...]]:
    """The lexicographically least x with A x = b, or None if none exists."""
    return Solver(A).solve(b)


def image_membership(A: ZnMatrix, b: Sequence[int]) -> bool:
    """True iff ``A x = b`` is solvable."""
    return solve_linear(A, b) is not None


def determinant(A: ZnMatrix) -> int:
    """Determinant mod n of a square matrix (Bareiss elimination over Z)."""
    if A.rows != A.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    k = A.rows
    M = [[int(x) for x in row] for row in A.array]
    sign, prev = 1, 1
    for i in range(k - 1):
        if M[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if M[r][i]), None)
            if swap is None:
                return 0
            M[i], M[swap] = M[swap], M[i]
            sign = -sign
        for r in range(i + 1, k):
            for s in range(i + 1, k):
                M[r][s] = (M[r][s] * M[i][i] - M[r][i] * M[i][s]) // prev
        prev = M[i][i]
    det = M[k - 1][k - 1] if k else 1
    return (sign * det) % A.ring.modulus
