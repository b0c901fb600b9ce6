import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from corings.algebra import (Coalgebra, FiniteGroup, LeftModule, RightModule, ground_algebra,
                             group_algebra, matrix_coalgebra, verify_left_module)
from corings.comodule import (Bimodule, Comodule, MeasuringPairing, alpha_check, alpha_oracle,
                              bicommutant_check, birational_part, canonical_pairing,
                              canonical_right_pairing, chi_rational_check, comodule_round_trip,
                              coproper_check, direct_sum_right, finite_subcomodule,
                              hom_equality_check, induced_module, is_module_map,
                              module_round_trip, pairing_alpha_check, quotient_right, rat,
                              rat_by_scan, rat_laws, rationality_profile, restrict_pairing,
                              stable_closure, subcomodule, subcoring_alpha, tensor_membership,
                              verify_colinear, verify_comodule, zero_comodule)
from corings.coring import ACoring, coring_from_coalgebra, dual_ring, ground_ring_coring
from corings.corpus import (eps_pairing, group_coring, matrix_coring, measuring_pairings,
                            product_pairing, random_instance, random_right_module)
from corings.enumeration import FiniteIndex
from corings.errors import AmbiguousCoaction, AxiomViolation, NotRational
from corings.fpmod import ModuleMap, Submodule, cyclic_module, free_module, tensor
from corings.topology import evaluation_pairing, tensor_pairing
from corings.zn import RingContext, ZnMatrix


def _dual_numbers(n):
    """``Delta(1) = 1 (x) 1``, ``Delta(x) = 1 (x) x + x (x) 1``, ``eps(x) = 0``."""
    R = RingContext(n)
    C = free_module(R, 2, ["1", "x"])
    CC = tensor(C, C)
    D = ModuleMap(C, CC, ZnMatrix.from_rows(R, [[1, 0], [0, 1], [0, 1], [0, 0]]))
    E = ModuleMap(C, free_module(R, 1), ZnMatrix.from_rows(R, [[1, 0]]))
    return coring_from_coalgebra(Coalgebra(C, D, E, "dual numbers"))


def _upper_triangular(n):
    """The subcoalgebra ``span(e11, e12, e22)`` of the matrix coalgebra."""
    return matrix_coring(n)


# --- comodules -----------------------------------------------------------------

def test_regular_comodule_and_colinear_maps():
    C = group_coring(4)
    M = Comodule.regular(C)
    assert verify_comodule(M).passed
    assert verify_colinear(ModuleMap.identity(C.carrier), M, M).passed


def test_swap_is_a_coalgebra_map_but_not_colinear():
    # (f (x) id) Delta(e) = g (x) e while Delta(f(e)) = g (x) g
    C = group_coring(4)
    M = Comodule.regular(C)
    rep = verify_colinear([[0, 1], [1, 0]], M, M)
    assert not rep.passed
    assert rep.check("colinearity square").witness == {"basis_element": 0}
    P = canonical_pairing(C)
    Cr = P.coring_module
    sw = ZnMatrix.from_rows(C.ring, [[0, 1], [1, 0]])
    assert not is_module_map(sw, Cr, Cr)
    # the colinear endomorphisms are the diagonal ones, and they are A-linear
    diag = ZnMatrix.from_rows(C.ring, [[3, 0], [0, 2]])
    assert verify_colinear(diag, M, M).passed and is_module_map(diag, Cr, Cr)


def test_broken_comodule_detected():
    C = group_coring(4)
    bad = Comodule(C, C.carrier, [[1, 0], [0, 0], [0, 1], [0, 1]])
    rep = verify_comodule(bad)
    assert not rep.passed
    assert rep.status_of("counit") == "fail"


def test_zero_comodule():
    Z = zero_comodule(group_coring(4))
    assert verify_comodule(Z).passed


def test_comodule_over_takeuchi_coring():
    from test_coring import _trivial_takeuchi
    from corings.algebra import matrix_algebra
    R = RingContext(4)
    A = matrix_algebra(R, 2)
    T = _trivial_takeuchi(A, group_algebra(R, FiniteGroup.cyclic(2)).coalgebra)
    assert verify_comodule(Comodule.regular(T)).passed


# --- measuring pairings and the induced action ---------------------------------

def test_kappa_must_be_multiplicative():
    C = group_coring(4)
    R = C.ring
    with pytest.raises(AxiomViolation):
        MeasuringPairing(ground_algebra(R), C, ZnMatrix.from_rows(R, [[1], [0]]))


def test_grouplike_action():
    P = canonical_pairing(group_coring(4))
    g = (0, 1)
    for a in P.acting.basis():
        expect = P.bracket(a, g).vector[0]
        assert P.hit(g, a).vector == tuple((expect * np.array(g)) % 4)


def test_matrix_coalgebra_action():
    P = canonical_pairing(matrix_coring(6))
    e11_star = P.acting.basis()[0]
    assert P.hit((0, 1, 0, 0), e11_star).vector == (0, 0, 0, 0)
    assert P.hit((1, 0, 0, 0), e11_star).vector == (1, 0, 0, 0)


def test_induced_module_of_regular_comodule():
    P = canonical_pairing(matrix_coring(6))
    M = Comodule.regular(P.coring)
    Mr = induced_module(M, P)
    assert (Mr.action.matrix.array == P.coring_module.action.matrix.array).all()


# --- alpha condition ------------------------------------------------------------

def test_alpha_examples():
    assert alpha_check(canonical_pairing(matrix_coring(6))).passed
    rep = alpha_check(eps_pairing(4))
    assert rep.data["diagnosis"] == ["kappa is dense"]
    R = RingContext(4)
    Z2 = cyclic_module(R, 2)
    bad = ACoring(ground_algebra(R), Z2, [[1]], [[1]], [[1]], [[2]], "Z/2")
    assert alpha_check(bad).data["diagnosis"] == ["carrier is projective"]


@pytest.mark.parametrize("name", sorted(measuring_pairings(include_non_alpha=True)))
def test_alpha_check_agrees_with_oracle(name):
    P = measuring_pairings(include_non_alpha=True)[name]
    assert alpha_check(P).passed == alpha_oracle(P)


def test_alpha_for_non_ground_base():
    from test_coring import _trivial_takeuchi
    from corings.algebra import matrix_algebra
    R = RingContext(4)
    T = _trivial_takeuchi(matrix_algebra(R, 2), group_algebra(R, FiniteGroup.cyclic(2)).coalgebra)
    P = canonical_pairing(T)
    assert alpha_check(P).passed
    Cr = P.coring_module
    assert rat(Cr, P).is_whole


def test_rat_refuses_non_alpha_pairings():
    P = eps_pairing(4)
    with pytest.raises(AmbiguousCoaction):
        rat(RightModule.regular(P.acting), P)


# --- rational parts --------------------------------------------------------------

def test_trivial_coalgebra_everything_rational():
    P = canonical_pairing(ground_ring_coring(RingContext(6)))
    R = P.acting
    M = direct_sum_right(RightModule.regular(R), RightModule.regular(R))
    assert rat(M, P).is_whole


def test_product_pairing_rational_part():
    P = product_pairing(4)
    M = RightModule.regular(P.acting)
    rp = rat(M, P)
    expected = Submodule(M.carrier, [[1, 0, 0], [0, 1, 0]])
    assert rp.submodule == expected
    assert rat_by_scan(M, P) == expected
    assert rp.faithful
    with pytest.raises(NotRational):
        rp.coaction_of((0, 0, 1))


def test_projective_coring_everything_rational_on_cyclic_modules():
    P = canonical_pairing(matrix_coring(2))
    A = RightModule.regular(P.acting)
    ix = FiniteIndex(A.carrier)
    for v in ix.vectors[:64]:
        Mr, _ = quotient_right(A, stable_closure(A, [v]))
        assert rat(Mr, P).is_whole


def test_coaction_reproduces_the_action():
    P = canonical_pairing(matrix_coring(3))
    rp = rat(P.coring_module, P)
    C = P.coring
    for i in range(C.rank):
        x = rp.coaction_of(C.carrier.gen(i))
        assert x == C.delta(C.carrier.gen(i))


# --- finite subcomodules -------------------------------------------------------------

def test_finite_subcomodule_examples():
    P = canonical_pairing(matrix_coring(6))
    rp = rat(P.coring_module, P)
    fs = finite_subcomodule([(1, 0, 0, 0)], rp)
    assert fs.submodule == Submodule(P.coring.carrier, [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert fs.generator_count == 2
    assert fs.report.passed
    empty = finite_subcomodule([], rp)
    assert empty.generator_count == 0 and empty.comodule.rank == 0


def test_finite_subcomodule_grouplike():
    P = canonical_pairing(group_coring(4))
    rp = rat(P.coring_module, P)
    fs = finite_subcomodule([(0, 1)], rp)
    assert fs.submodule == Submodule(P.coring.carrier, [[0, 1]])


def test_finite_subcomodule_rejects_non_rational():
    P = product_pairing(4)
    rp = rat(RightModule.regular(P.acting), P)
    with pytest.raises(NotRational):
        finite_subcomodule([(0, 0, 1)], rp)


def test_subcomodule_restriction():
    C = matrix_coring(4)
    M = Comodule.regular(C)
    row, inc = subcomodule(M, Submodule(C.carrier, [[1, 0, 0, 0], [0, 1, 0, 0]]))
    assert verify_comodule(row).passed


# --- rationality profile ------------------------------------------------------------

def test_profile_examples():
    P = product_pairing(4)
    M = RightModule.regular(P.acting)
    assert rationality_profile((0, 0, 0), M, P).data["legs"] == [True] * 6
    rep = rationality_profile((0, 0, 1), M, P)
    assert rep.data["legs"] == [False] * 6
    assert rationality_profile((1, 2, 0), M, P).data["legs"] == [True] * 6


def test_profile_on_comodule_elements():
    P = canonical_pairing(matrix_coring(2))
    Mr = induced_module(Comodule.regular(P.coring), P)
    for v in FiniteIndex(Mr.carrier).vectors:
        assert rationality_profile(v, Mr, P).data["legs"] == [True] * 6


# --- coproper pairings ------------------------------------------------------------

def test_coproper_examples():
    rep = coproper_check(canonical_pairing(matrix_coring(4)))
    assert rep.passed
    rep = coproper_check(product_pairing(4))
    assert rep.passed
    assert rep.data["T"] == [[1, 0, 0], [0, 1, 0]]
    assert rep.data["T_perp_is_zero"]


# --- birational parts ------------------------------------------------------------

def _regular_bimodule(C):
    P, Q = canonical_pairing(C), canonical_right_pairing(C)
    B = Q.acting
    r = C.rank
    imgs = []
    for k in range(B.rank):
        F = B.to_matrix(B.basis()[k]).array[0]
        for i in range(r):
            out = np.zeros(r, dtype=object)
            for coef, a, b in C.delta_terms(C.carrier.gen(i)):
                out[b] += coef * F[a]
            imgs.append(out)
    Cl = LeftModule(C.carrier, B, ModuleMap.from_images(tensor(B.carrier, C.carrier), C.carrier, imgs))
    assert verify_left_module(Cl).passed
    return Bimodule(P.coring_module, Cl), P, Q


@pytest.mark.parametrize("C", [group_coring(4), matrix_coring(3)], ids=["c2-z4", "mc2-z3"])
def test_regular_bicomodule_is_birational(C):
    M, P, Q = _regular_bimodule(C)
    sub, rep = birational_part(M, P, Q)
    assert rep.passed
    assert sub == C.carrier.whole()


def test_product_pairing_with_trivial_left_structure():
    P = product_pairing(4)
    R = P.ring
    triv = ground_ring_coring(R)
    Q = canonical_right_pairing(triv)
    Mr = RightModule.regular(P.acting)
    M = Mr.carrier
    Ml = LeftModule(M, Q.acting, ModuleMap(tensor(Q.acting.carrier, M), M,
                                           ZnMatrix.identity(R, M.rank)))
    sub, rep = birational_part(Bimodule(Mr, Ml), P, Q)
    assert rep.passed
    assert sub == Submodule(M, [[1, 0, 0], [0, 1, 0]])


# --- bicommutants ----------------------------------------------------------------

@pytest.mark.parametrize("C", [matrix_coring(5), ground_ring_coring(RingContext(4)), group_coring(4)],
                         ids=["mc2-gf5", "trivial", "c2-z4"])
def test_bicommutant(C):
    rep = bicommutant_check(canonical_pairing(C))
    assert rep.passed
    assert rep.status_of("dual ring is isomorphic to Biend") == "pass"
    sizes = rep.data["sizes"]
    assert sizes["Biend"] == sizes["dual"]


# --- subcorings --------------------------------------------------------------------

def test_subcoring_alpha_examples():
    C = group_coring(4)
    full = subcoring_alpha(C, C.carrier.whole())
    assert full.passed and full.data["pure"] and full.status_of("Rat(C) = C iff D = C") == "pass"
    g = subcoring_alpha(C, Submodule(C.carrier, [[0, 1]]))
    assert g.passed and g.data["pure"] and g.data["rational"] == [[0, 1]]
    two = subcoring_alpha(C, Submodule(C.carrier, [[2, 0], [0, 2]]))
    assert two.passed and not two.data["pure"] and not two.data["alpha"]


def test_non_pure_subcorings():
    for n, k in [(4, 2), (8, 4), (9, 3)]:
        C = _dual_numbers(n)
        rep = subcoring_alpha(C, Submodule(C.carrier, [[1, 0], [0, k]]))
        assert rep.passed and rep.data["candidate"] and not rep.data["pure"]


# --- further laws ------------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(measuring_pairings()))
def test_chi_isomorphism(name):
    assert chi_rational_check(measuring_pairings()[name]).passed


def test_tensor_stability_of_alpha():
    Ps = [evaluation_pairing(group_coring(4).carrier), evaluation_pairing(matrix_coring(4).carrier),
          eps_pairing(4).pairing]
    for P in Ps:
        for Q in Ps:
            a, b = pairing_alpha_check(P).passed, pairing_alpha_check(Q).passed
            T = tensor_pairing(P, Q)
            if a and b:
                assert pairing_alpha_check(T).passed
            assert pairing_alpha_check(T).passed == alpha_oracle(T)


def test_purity_transfer():
    R = RingContext(4)
    P = evaluation_pairing(matrix_coring(4).carrier)
    from corings.enumeration import all_submodules
    from corings.fpmod import is_pure_submodule
    seen = {True: 0, False: 0}
    for S in all_submodules(P.W, limit=120):
        Q = restrict_pairing(P, S)
        pure = is_pure_submodule(S, P.W)
        assert pairing_alpha_check(Q).passed == pure
        seen[pure] += 1
    assert seen[True] and seen[False]


def test_tensor_membership_by_enumeration():
    P = evaluation_pairing(group_coring(4).carrier)
    R = P.ring
    L = free_module(R, 2)
    K = Submodule(L, [[2, 0], [1, 1]])
    LW = tensor(L, P.W)
    rng = random.Random(3)
    for _ in range(60):
        x = [rng.randrange(4) for _ in range(LW.rank)]
        left, right = tensor_membership(P, K, x)
        assert left == right


def test_round_trips_and_hom_equality():
    P = canonical_pairing(group_coring(4))
    M = Comodule.regular(P.coring)
    assert comodule_round_trip(M, P).passed
    assert module_round_trip(P.coring_module, P).passed
    rep = hom_equality_check(M, M, P)
    assert rep.passed and rep.data["colinear"] == rep.data["linear"] == 16


@pytest.mark.parametrize("name", sorted(measuring_pairings()))
def test_rat_laws_on_random_instances(name):
    P = measuring_pairings()[name]
    rng = random.Random(name)
    for _ in range(4):
        M, subs, maps = random_instance(P, rng, 256)
        assert rat_laws(M, P, subs, maps).passed


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_profile_legs_agree(seed):
    P = product_pairing(2)
    rng = random.Random(seed)
    M = random_right_module(P, rng, 64)
    rp = rat(M, P)
    for v in FiniteIndex(M.carrier).vectors:
        assert rationality_profile(v, M, P, rp).data["agree"]
