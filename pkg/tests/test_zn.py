import pytest
from hypothesis import given, settings, strategies as st

from corings.errors import DimensionMismatch
from corings.zn import (Lattice, RingContext, ZnMatrix, determinant, image_membership,
                        kernel, smith_normal_form, solve_linear)

from oracles import brute_solutions, brute_span

MODULI = [2, 3, 4, 5, 6, 8, 9, 12]


@st.composite
def matrices(draw, max_dim=3, moduli=MODULI):
    n = draw(st.sampled_from(moduli))
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    entries = draw(st.lists(st.integers(0, n - 1), min_size=rows * cols, max_size=rows * cols))
    return ZnMatrix(RingContext(n), rows, cols, entries)


def test_identity_snf_over_z4():
    R = RingContext(4)
    sf = smith_normal_form(ZnMatrix.identity(R, 2))
    assert sf.S == ZnMatrix.identity(R, 2)
    assert sf.invariant_factors == (4, 4)


def test_zero_snf_over_z6():
    R = RingContext(6)
    sf = smith_normal_form(ZnMatrix.zero(R, 2, 2))
    assert sf.S.is_zero()
    assert sf.invariant_factors == ()


def test_snf_2468_over_z12():
    R = RingContext(12)
    A = ZnMatrix.from_rows(R, [[2, 4], [6, 8]])
    sf = smith_normal_form(A)
    assert sf.S == ZnMatrix.from_rows(R, [[2, 0], [0, 4]])
    assert sf.U @ A @ sf.V == sf.S


def test_bad_dimensions():
    with pytest.raises(DimensionMismatch):
        ZnMatrix(RingContext(4), 2, 2, [1, 2, 3])
    A = ZnMatrix.identity(RingContext(4), 2)
    with pytest.raises(DimensionMismatch):
        solve_linear(A, [1, 2, 3])


def test_solve_examples_z4():
    R = RingContext(4)
    two = ZnMatrix.from_rows(R, [[2]])
    assert solve_linear(two, [1]) is None
    assert solve_linear(two, [2]) == (1,)
    assert not image_membership(two, [1])
    assert image_membership(two, [2])
    assert image_membership(two, [0])
    assert solve_linear(ZnMatrix.identity(R, 3), [3, 1, 2]) == (3, 1, 2)


def test_kernel_examples():
    R = RingContext(4)
    assert kernel(ZnMatrix.identity(R, 2)).cols == 0
    assert kernel(ZnMatrix.from_rows(R, [[2]])) == ZnMatrix.from_rows(R, [[2]])
    assert kernel(ZnMatrix.zero(R, 3, 3)) == ZnMatrix.identity(R, 3)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_snf_certificate(A):
    sf = smith_normal_form(A)
    n = A.ring.modulus
    assert sf.U @ A @ sf.V == sf.S
    assert A.ring.is_unit(determinant(sf.U))
    assert A.ring.is_unit(determinant(sf.V))
    assert sf.U @ sf.U_inverse == ZnMatrix.identity(A.ring, A.rows)
    for i in range(sf.S.rows):
        for j in range(sf.S.cols):
            if i != j:
                assert sf.S.array[i, j] == 0
    divs = sf.divisors
    assert all(n % d == 0 for d in divs)
    assert all(b % a == 0 for a, b in zip(divs, divs[1:]))
    # the column span has the cardinality predicted by the invariant factors
    span = brute_span([A.column(j) for j in range(A.cols)], n, A.rows)
    size = 1
    for f in sf.invariant_factors:
        size *= f
    assert size == len(span)


@settings(max_examples=150, deadline=None)
@given(matrices(), st.data())
def test_solve_against_enumeration(A, data):
    n = A.ring.modulus
    b = data.draw(st.lists(st.integers(0, n - 1), min_size=A.rows, max_size=A.rows))
    sols = brute_solutions(A.tolist(), b, n)
    x = solve_linear(A, b)
    assert image_membership(A, b) == (x is not None)
    if sols:
        assert x == min(sols)
        assert A.apply(x) == tuple(bi % n for bi in b)
    else:
        assert x is None


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_kernel_complete(A):
    n = A.ring.modulus
    K = kernel(A)
    for j in range(K.cols):
        assert not any(A.apply(K.column(j)))
    sols = set(brute_solutions(A.tolist(), [0] * A.rows, n))
    assert brute_span([K.column(j) for j in range(K.cols)], n, A.cols) == sols


@settings(max_examples=100, deadline=None)
@given(matrices(), st.data())
def test_lattice_canonical_representative(A, data):
    n = A.ring.modulus
    lat = Lattice.from_matrix_columns(A)
    span = brute_span([A.column(j) for j in range(A.cols)], n, A.rows)
    assert lat.cardinality() == len(span)
    v = tuple(data.draw(st.lists(st.integers(0, n - 1), min_size=A.rows, max_size=A.rows)))
    coset = {tuple((v[i] + s[i]) % n for i in range(A.rows)) for s in span}
    assert lat.reduce(v) == min(coset)
    # basis is canonical: the same lattice from its own basis is identical
    assert Lattice(A.ring, A.rows, lat.generators()) == lat
