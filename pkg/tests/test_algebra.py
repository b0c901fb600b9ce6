from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from corings.algebra import (Algebra, Coalgebra, FiniteGroup, GSet, convolution_algebra,
                             dual_algebra, dual_group_bialgebra, dual_map, dual_numbers_graded,
                             functional_matrix, graded_algebra, group_algebra,
                             group_graded_algebra, gset_coalgebra, is_algebra_morphism,
                             is_coalgebra_morphism, iterated_delta, left_hit, matrix_algebra,
                             matrix_coalgebra, opposite_algebra, regular_comodule_algebra,
                             regular_module_coalgebra, right_hit, tensor_bialgebra,
                             opposite_bialgebra, verify_algebra, verify_bialgebra,
                             verify_coalgebra, verify_comodule_algebra, verify_module_coalgebra,
                             ground_algebra)
from corings.errors import BadArity, BadInput
from corings.fpmod import ModuleMap
from corings.zn import RingContext, ZnMatrix

MODULI = [2, 3, 4, 5, 6, 8, 9, 12]
C2 = FiniteGroup.cyclic(2)


def test_group_algebra_c2_passes():
    H = group_algebra(RingContext(4), C2)
    assert verify_algebra(H.algebra).passed
    assert verify_bialgebra(H).passed


def test_ground_ring_is_an_algebra():
    assert verify_algebra(ground_algebra(RingContext(6))).passed


def test_wrong_unit_fails_at_e():
    H = group_algebra(RingContext(4), C2)
    A = H.algebra
    broken = Algebra(A.carrier, A.mult, [0, 1])
    rep = verify_algebra(broken)
    assert rep.status_of("left unit") == "fail"
    assert rep.check("left unit").witness == {"basis_element": 0}


def test_matrix_coalgebra_z6_passes_and_broken_counit_fails():
    R = RingContext(6)
    Mc = matrix_coalgebra(R, 2)
    assert verify_coalgebra(Mc).passed
    assert verify_coalgebra(group_algebra(R, C2).coalgebra).passed
    broken = Coalgebra(Mc.carrier, Mc.comult,
                       ModuleMap(Mc.carrier, Mc.counit.codomain, ZnMatrix.from_rows(R, [[1, 1, 0, 1]])))
    rep = verify_coalgebra(broken)
    assert not rep.passed
    assert rep.check("right counit").witness == {"basis_element": 1}


def test_iterated_delta():
    R = RingContext(4)
    H = group_algebra(R, C2)
    C = H.coalgebra
    g = C.carrier.gen(1)
    assert iterated_delta(C, g, 1) == C.delta(g)
    g3 = iterated_delta(C, g, 2, check=True)
    expected = [0] * 8
    expected[7] = 1
    assert g3.vector == tuple(expected)
    with pytest.raises(BadArity):
        iterated_delta(C, g, 0)
    Mc = matrix_coalgebra(R, 2)
    d2 = iterated_delta(Mc, Mc.carrier.gen(0), 2, check=True)
    expected = [0] * 64
    for k, l in product(range(2), repeat=2):
        expected[((0 * 2 + k) * 4 + (k * 2 + l)) * 4 + (l * 2 + 0)] = 1
    assert d2.vector == tuple(expected)


def _brute_convolution(C, f, g, n):
    """(f*g)(c_i) = sum over structure constants of Delta(c_i)."""
    r = C.rank
    D = C.comult.matrix.array
    return [sum(int(D[j * r + k, i]) * f[j] * g[k] for j in range(r) for k in range(r)) % n
            for i in range(r)]


def test_dual_of_matrix_coalgebra_is_matrix_algebra():
    R = RingContext(4)
    Mc = matrix_coalgebra(R, 2)
    D = dual_algebra(Mc)
    assert verify_algebra(D).passed
    idx = lambda i, j: i * 2 + j
    for i, j, k, l in product(range(2), repeat=4):
        f = [0] * 4
        f[idx(i, j)] = 1
        g = [0] * 4
        g[idx(k, l)] = 1
        prod_ = D.mul(D.element_from_matrix([f]), D.element_from_matrix([g]))
        expected = [0] * 4
        if j == k:
            expected[idx(i, l)] = 1
        assert list(D.to_matrix(prod_).array[0]) == expected
        assert expected == _brute_convolution(Mc, f, g, 4)
    assert D.to_matrix(D.unit).entries == (1, 0, 0, 1)


def test_dual_of_grouplike_coalgebra():
    R = RingContext(4)
    C = group_algebra(R, C2).coalgebra
    D = dual_algebra(C)
    e_star = D.element_from_matrix([[1, 0]])
    g_star = D.element_from_matrix([[0, 1]])
    assert D.mul(e_star, e_star) == e_star
    assert D.mul(e_star, g_star).is_zero()
    for f in D.carrier.elements():
        assert D.mul(D.unit, f) == f == D.mul(f, D.unit)


def test_convolution_examples():
    R = RingContext(4)
    H = group_algebra(R, C2)
    C = H.coalgebra
    # A = R reproduces the dual algebra
    conv = convolution_algebra(C, ground_algebra(R))
    dual = dual_algebra(C)
    assert conv.mult.matrix == dual.mult.matrix
    # C = R[C2], A = M_2: unit is eta o eps
    M2 = matrix_algebra(R, 2)
    CA = convolution_algebra(C, M2)
    assert verify_algebra(CA).passed
    U = CA.to_matrix(CA.unit)
    assert U.tolist() == [[1, 1], [0, 0], [0, 0], [1, 1]]
    # pointwise product on grouplikes
    Rbig = RingContext(6)
    C3 = group_algebra(Rbig, FiniteGroup.cyclic(3)).coalgebra
    Dd = dual_algebra(C3)
    for f, g in product(list(Dd.carrier.elements())[:20], repeat=2):
        F, G = Dd.to_matrix(f).array[0], Dd.to_matrix(g).array[0]
        FG = Dd.to_matrix(Dd.mul(f, g)).array[0]
        assert [int(x) for x in FG] == [int(a * b % 6) for a, b in zip(F, G)]


def test_bialgebra_module_comodule_examples():
    R = RingContext(4)
    H = group_algebra(R, C2)
    assert verify_bialgebra(H).passed
    assert verify_module_coalgebra(regular_module_coalgebra(H)).passed
    assert verify_comodule_algebra(regular_comodule_algebra(H)).passed


@pytest.mark.parametrize("n", MODULI)
def test_builders_pass_their_checks(n):
    R = RingContext(n)
    C3 = FiniteGroup.cyclic(3)
    V4 = FiniteGroup.direct_product(C2, C2)
    for G in (C2, C3, V4):
        assert verify_bialgebra(group_algebra(R, G)).passed
        assert verify_bialgebra(dual_group_bialgebra(R, G)).passed
        for X in (GSet.regular(G), GSet.trivial(G, 2)):
            MC = gset_coalgebra(R, X)
            assert verify_module_coalgebra(MC).passed
            assert verify_coalgebra(MC.coalgebra).passed
        assert verify_comodule_algebra(group_graded_algebra(R, G)).passed
    for k in (2, 3):
        assert verify_coalgebra(matrix_coalgebra(R, k)).passed
        assert verify_algebra(matrix_algebra(R, k)).passed
    assert verify_comodule_algebra(dual_numbers_graded(R, C2, 1)).passed
    H = group_algebra(R, C2)
    assert verify_bialgebra(tensor_bialgebra(opposite_bialgebra(H), H)).passed


def test_gset_points_are_grouplike():
    R = RingContext(4)
    MC = gset_coalgebra(R, GSet.cosets_of_cyclic(FiniteGroup.cyclic(4), 2))
    C = MC.coalgebra
    for i, x in enumerate(C.basis()):
        expected = [0] * (C.rank ** 2)
        expected[i * C.rank + i] = 1
        assert C.delta(x).vector == tuple(expected)
        assert C.eps(x) == 1
        for k in (1, 2, 3):
            d = iterated_delta(C, x, k)
            assert sum(d.vector) == 1 and d.vector[sum(i * C.rank ** p for p in range(k + 1))] == 1


def test_opposite_is_an_involution():
    A = matrix_algebra(RingContext(5), 2)
    AA = opposite_algebra(opposite_algebra(A))
    assert AA.mult == A.mult and AA.unit == A.unit
    assert verify_algebra(opposite_algebra(A)).passed


def test_empty_inputs_rejected():
    with pytest.raises(BadInput):
        FiniteGroup([])
    with pytest.raises(BadInput):
        GSet(C2, [])
    with pytest.raises(BadInput):
        graded_algebra(RingContext(4), C2, [], lambda i, j: [], [])


def test_bad_grading_is_detected():
    R = RingContext(4)
    # x has degree g but x*x = x would need degree e
    def table(i, j):
        return [[1, 0], [0, 1], [0, 1], [0, 1]][i * 2 + j]
    CA = graded_algebra(R, C2, [0, 1], table, [1, 0])
    rep = verify_comodule_algebra(CA)
    assert rep.status_of("coaction is multiplicative") == "fail"


# --- properties ---------------------------------------------------------------

def _coalgebra_corpus(n):
    R = RingContext(n)
    out = [matrix_coalgebra(R, 2), group_algebra(R, C2).coalgebra,
           group_algebra(R, FiniteGroup.cyclic(3)).coalgebra,
           dual_group_bialgebra(R, C2).coalgebra,
           gset_coalgebra(R, GSet.cosets_of_cyclic(FiniteGroup.cyclic(4), 2)).coalgebra]
    return out


@pytest.mark.parametrize("n", [4, 6])
def test_convolution_unit_is_two_sided(n):
    R = RingContext(n)
    algebras = [ground_algebra(R), matrix_algebra(R, 2), group_algebra(R, C2).algebra]
    for C in _coalgebra_corpus(n)[:3]:
        for A in algebras:
            conv = convolution_algebra(C, A)
            assert verify_algebra(conv).passed


def test_dual_functor_on_coalgebra_morphisms():
    R = RingContext(6)
    G3 = FiniteGroup.cyclic(3)
    C = group_algebra(R, G3).coalgebra
    # group automorphism g -> g^2 gives a coalgebra map
    auto = ModuleMap.from_images(C.carrier, C.carrier, [[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    # the subcoalgebra spanned by the identity element
    sub = Coalgebra.from_table(
        __import__("corings.fpmod", fromlist=["free_module"]).free_module(R, 1),
        lambda i: [1], [1])
    inc = ModuleMap.from_images(sub.carrier, C.carrier, [[1, 0, 0]])
    # the counit itself is a coalgebra map onto the trivial coalgebra
    triv = Coalgebra.from_table(sub.carrier, lambda i: [1], [1])
    eps = ModuleMap(C.carrier, triv.carrier, C.counit.matrix)
    for theta, src, tgt in [(auto, C, C), (inc, sub, C), (eps, C, triv)]:
        assert is_coalgebra_morphism(theta, src, tgt).passed
        Ds, Dt = dual_algebra(src), dual_algebra(tgt)
        assert is_algebra_morphism(dual_map(theta, Ds, Dt), Dt, Ds).passed


@pytest.mark.parametrize("n", [4, 6])
def test_hit_actions_commute(n):
    for C in _coalgebra_corpus(n):
        D = dual_algebra(C)
        elems = list(D.carrier.elements())
        sample = elems[:: max(1, len(elems) // 12)]
        for f, g in product(sample, repeat=2):
            for c in C.basis():
                assert left_hit(C, D, f, right_hit(C, D, c, g)) == right_hit(C, D, left_hit(C, D, f, c), g)
        # f -> (g -> c) = (f * g) -> c for the right C*-module structure on C
        for f, g in product(sample[:4], repeat=2):
            for c in C.basis():
                assert right_hit(C, D, right_hit(C, D, c, f), g) == right_hit(C, D, c, D.mul(f, g))
