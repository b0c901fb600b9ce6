from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from corings.algebra import (Coalgebra, FiniteGroup, GSet, RightModule, dual_algebra,
                             ground_algebra, ground_bialgebra, group_algebra,
                             group_graded_algebra, gset_coalgebra, kron, trivial_comodule_algebra,
                             trivial_module_coalgebra)
from corings.comodule import Comodule, alpha_check
from corings.coring import coring_from_coalgebra, verify_coring
from corings.entwine import (LR, RR, DKStructure, EntwinedModule, Entwining, SmashRing,
                             adjunction_check, alt_dk_to_entwining, alt_matrix_example,
                             beta_density, coring_from_entwining, dk_corpus, dk_rat_equality,
                             dk_to_entwining, entwined_from_comodule_algebra,
                             entwined_round_trip, grouplike_coinvariants, hopf_modules,
                             induced_comodule_functor, induced_module_functor, is_subcomodule,
                             koppinen_pairing, koppinen_ring, left_right_dk,
                             left_right_transform, long_dimodules, permute_factors,
                             phi_isomorphism, regular_entwined_module, smash_pairing,
                             smash_ring, subobject_law, twist_entwining, verify_entwined_module,
                             verify_entwining, yetter_drinfeld_builder)
from corings.enumeration import all_submodules
from corings.errors import AxiomViolation, NotGrouplike, NotSubalgebra
from corings.fpmod import ModuleMap, Submodule, tensor, zero_module, ground_module
from corings.zn import RingContext, ZnMatrix

CORPUS = dk_corpus()


def _c2(n=4):
    R = RingContext(n)
    G = FiniteGroup.cyclic(2)
    return R, G, group_algebra(R, G)


def _ring_dk(C):
    """A = R acting trivially, C with trivial action of R."""
    B = ground_bialgebra(C.ring)
    return DKStructure(B, trivial_comodule_algebra(ground_algebra(C.ring), B),
                       trivial_module_coalgebra(C, B))


# --- elementwise oracles ------------------------------------------------------------


def _psi_terms(E, i, k):
    """(coef, a, c) with psi(c_i (x) a_k) = sum coef a (x) c, read off by brute force."""
    rc = E.C.rank
    col = E.matrix.column(i * E.A.rank + k) if E.handed == RR else E.matrix.column(k * rc + i)
    return [(x, j // rc, j % rc) for j, x in enumerate(col) if x]


def _kop_oracle(E, F, G):
    """(f g)(c) by summing over Delta and psi term by term."""
    A, C = E.A, E.C
    n = E.ring.modulus
    out = np.zeros((A.rank, C.rank), dtype=object)
    Fa, Ga = np.asarray(F.array, dtype=object), np.asarray(G.array, dtype=object)
    for c in range(C.rank):
        for coef, c1, c2 in C.delta_terms(C.carrier.gen(c)):
            if E.handed == RR:
                # f(c2)_psi g(c1^psi)
                for k in np.nonzero(Fa[:, c2])[0]:
                    for x, a, cp in _psi_terms(E, c1, k):
                        v = A.mul_vec(np.eye(A.rank, dtype=object)[a], Ga[:, cp])
                        out[:, c] += coef * Fa[k, c2] * x * np.asarray(v, dtype=object)
            else:
                # f(c1^psi) g(c2)_psi
                for k in np.nonzero(Ga[:, c2])[0]:
                    for x, a, cp in _psi_terms(E, c1, k):
                        v = A.mul_vec(Fa[:, cp], np.eye(A.rank, dtype=object)[a])
                        out[:, c] += coef * Ga[k, c2] * x * np.asarray(v, dtype=object)
    return ZnMatrix.from_array(E.ring, out % n)


def _dk_oracle(D, F, G):
    """(f g)(c) = sum f(c2)<0> g(c1 f(c2)<1>) straight from the Doi-Koppinen data."""
    A, C, H = D.A.algebra, D.C.coalgebra, D.H
    out = np.zeros((A.rank, C.rank), dtype=object)
    Fa = np.asarray(F.array, dtype=object)
    for c in range(C.rank):
        for coef, c1, c2 in C.delta_terms(C.carrier.gen(c)):
            for x, a0, h in D.A.coact_terms(Fa[:, c2]):
                moved = D.C.act(C.carrier.gen(c1), H.algebra.basis()[h]).vector
                g = np.asarray(G.array, dtype=object) @ np.asarray(moved, dtype=object)
                out[:, c] += coef * x * np.asarray(A.mul_vec(np.eye(A.rank, dtype=object)[a0], g),
                                                   dtype=object)
    return ZnMatrix.from_array(D.A.algebra.ring, out % D.A.algebra.ring.modulus)


# --- entwinings ----------------------------------------------------------------------


def test_permute_factors_matches_swap():
    from corings.algebra import swap_matrix
    R = RingContext(5)
    assert permute_factors(R, (2, 3), (1, 0)) == swap_matrix(R, 2, 3)
    P = permute_factors(R, (2, 3, 2), (2, 0, 1))
    assert P @ permute_factors(R, (2, 2, 3), (1, 2, 0)) == ZnMatrix.identity(R, 12)


def test_twist_is_entwining():
    _, _, H = _c2()
    E = twist_entwining(H.algebra, matrix_coalgebra_z4())
    assert verify_entwining(E).passed
    assert verify_coring(coring_from_entwining(E)).passed


def matrix_coalgebra_z4():
    from corings.algebra import matrix_coalgebra
    return matrix_coalgebra(RingContext(4), 2)


def test_broken_psi_has_witness():
    _, _, H = _c2()
    E = twist_entwining(H.algebra, H.coalgebra)
    arr = np.array(E.matrix.array, dtype=object)
    arr[:, 3] = [0, 0, 0, 0]
    arr[1, 3] = 1  # g (x) g -> e (x) g
    bad = Entwining(H.algebra, H.coalgebra, ZnMatrix.from_array(E.ring, arr))
    rep = verify_entwining(bad)
    assert not rep.passed
    # only counitality breaks: eps(g) g = g but g (x) g now goes to e (x) g
    assert [c.name for c in rep.failures()] == ["psi is counital"]
    assert rep.check("psi is counital").witness == {"c": 1, "a": 1}
    with pytest.raises(AxiomViolation):
        coring_from_entwining(bad)
    with pytest.raises(AxiomViolation):
        koppinen_ring(bad)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_dk_corpus_is_sound(name):
    D = CORPUS[name]
    assert D.verification.passed
    E = dk_to_entwining(D)
    assert E.verification.passed
    C = coring_from_entwining(E)
    assert verify_coring(C).passed
    assert C.rank == D.A.algebra.rank * D.C.coalgebra.rank
    iso = phi_isomorphism(E)
    assert iso.report.passed
    assert iso.phi.is_isomorphism()


def test_dk_refuses_bad_component():
    R, G, H = _c2()
    bad_action = ModuleMap(tensor(H.carrier, H.carrier), H.carrier,
                           ZnMatrix.zero(R, 2, 4), check=False)
    from corings.algebra import ModuleCoalgebra, regular_comodule_algebra
    D = DKStructure(H, regular_comodule_algebra(H), ModuleCoalgebra(H.coalgebra, H, bad_action))
    with pytest.raises(AxiomViolation, match="module coalgebra"):
        dk_to_entwining(D)


def test_left_right_transform_is_involution():
    for D in CORPUS.values():
        E = dk_to_entwining(D)
        L = left_right_transform(E)
        assert L.handed == LR and L.verification.passed
        back = left_right_transform(L)
        assert back.handed == RR and back.matrix == E.matrix
        assert back.A.mult.matrix == E.A.mult.matrix


def test_left_right_dk_builds_entwining():
    R, G, H = _c2()
    from corings.algebra import regular_comodule_algebra
    D = left_right_dk(H, regular_comodule_algebra(H), H.coalgebra, H.algebra.mult)
    assert D.handed == LR and D.verification.passed
    E = dk_to_entwining(D)
    assert E.verification.passed
    # C2 is commutative: the structure agrees with the Hopf-module one
    assert E.matrix == dk_to_entwining(hopf_modules()).matrix


def test_alternative_structure():
    D = alt_matrix_example()
    assert D.verification.passed
    E = alt_dk_to_entwining(D)
    assert E.verification.passed
    assert phi_isomorphism(E).report.passed
    # p0 (x) e12 -> p1 (x) e12: the off-diagonal entries shift the idempotents
    assert E.apply([0, 1, 0, 0], [1, 0]).vector == tuple(int(j == 1 * 4 + 1) for j in range(8))


# --- Koppinen rings ------------------------------------------------------------------


@pytest.mark.parametrize("name", ["hopf-modules", "relative-hopf", "doi-hc", "gset-3", "yetter-drinfeld"])
def test_koppinen_product_oracles(name):
    D = CORPUS[name]
    E = dk_to_entwining(D)
    K = koppinen_ring(E)
    B = K.basis()
    for f, g in product(B, repeat=2):
        F, G = K.to_matrix(f), K.to_matrix(g)
        got = K.to_matrix(K.mul(f, g))
        assert got == _kop_oracle(E, F, G)
        assert got == _dk_oracle(D, F, G)
    assert K.to_matrix(K.unit) == kron(ZnMatrix.from_rows(E.ring, [[x] for x in D.A.algebra.unit.vector]),
                                       D.C.coalgebra.counit.matrix)


def test_left_right_koppinen_formula():
    D = CORPUS["relative-hopf"]
    L = left_right_transform(dk_to_entwining(D))
    K = koppinen_ring(L)
    for f, g in product(K.basis(), repeat=2):
        assert K.to_matrix(K.mul(f, g)) == _kop_oracle(L, K.to_matrix(f), K.to_matrix(g))
    iso = phi_isomorphism(L)
    assert iso.report.passed
    assert iso.report.status_of("phi is anti-multiplicative") == "pass"


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=16, max_size=16))
def test_koppinen_random_elements(coeffs):
    D = CORPUS["doi-hc"] if coeffs[0] % 2 else CORPUS["relative-hopf"]
    E = dk_to_entwining(D)
    K = koppinen_ring(E)
    r = K.rank
    f = K.carrier.element(coeffs[:r])
    g = K.carrier.element(coeffs[-r:])
    assert K.to_matrix(K.mul(f, g)) == _kop_oracle(E, K.to_matrix(f), K.to_matrix(g))


def test_phi_is_identity_over_ground_algebra():
    D = long_dimodules(minimal=True)
    iso = phi_isomorphism(dk_to_entwining(D))
    assert iso.report.passed
    assert iso.phi.matrix == ZnMatrix.identity(iso.phi.matrix.ring, 1)
    D = _ring_dk(group_algebra(RingContext(4), FiniteGroup.cyclic(2)).coalgebra)
    iso = phi_isomorphism(dk_to_entwining(D))
    assert iso.phi.matrix == ZnMatrix.identity(RingContext(4), 2)


def test_phi_bimodule_and_round_trips():
    iso = phi_isomorphism(dk_to_entwining(CORPUS["gset-2"]))
    for name in ("phi is left A-linear", "phi is right A-linear", "inverse after phi is the identity",
                 "phi after inverse is the identity", "phi is unital"):
        assert iso.report.status_of(name) == "pass"


def test_koppinen_pairing_is_alpha():
    for name in ("hopf-modules", "relative-hopf", "long"):
        P = koppinen_pairing(dk_to_entwining(CORPUS[name]))
        assert P.verification.passed
        assert alpha_check(P).passed


# --- Yetter-Drinfeld -----------------------------------------------------------------


def test_yetter_drinfeld_trivial_is_twist():
    R, G, H = _c2()
    B = ground_bialgebra(R)
    D = yetter_drinfeld_builder(B, B, H.algebra, H.coalgebra)
    assert dk_to_entwining(D).matrix == twist_entwining(H.algebra, H.coalgebra).matrix


def test_yetter_drinfeld_structure():
    D = CORPUS["yetter-drinfeld"]
    assert D.H.rank == 4
    E = dk_to_entwining(D)
    M = regular_entwined_module(E)
    assert verify_entwined_module(M).passed


def test_yetter_drinfeld_rejects_bad_action():
    R, G, H = _c2()
    zero = ZnMatrix.zero(R, 2, 4)
    with pytest.raises(AxiomViolation, match="Yetter-Drinfeld"):
        yetter_drinfeld_builder(H, H, H.algebra, H.coalgebra, k_action=zero)


# --- entwined modules ----------------------------------------------------------------


def _gset_module(bad=False):
    D = DKStructure(*_gset_data())
    E = dk_to_entwining(D)
    R = E.ring
    X = gset_coalgebra(R, GSet.regular(FiniteGroup.cyclic(2)))
    M = X.coalgebra.carrier
    # m_x g = m_{x g}; rho(m_x) = m_x (x) x, or (x) x0 in the broken variant
    act = X.action.matrix
    rho = np.zeros((4, 2), dtype=object)
    for x in range(2):
        rho[x * 2 + (0 if bad else x), x] = 1
    return D, E, EntwinedModule(E, M, act, ZnMatrix.from_array(R, rho), "R[X]")


def _gset_data():
    R, G, H = _c2()
    return H, group_graded_algebra(R, G), gset_coalgebra(R, GSet.regular(G))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_regular_entwined_modules(name):
    E = dk_to_entwining(CORPUS[name])
    M = regular_entwined_module(E)
    rep = verify_entwined_module(M)
    assert rep.passed
    assert M.koppinen_module is not None


def test_comodule_algebra_is_entwined():
    D = CORPUS["relative-hopf"]
    M = entwined_from_comodule_algebra(D)
    assert verify_entwined_module(M).passed
    assert entwined_round_trip(M).passed


def test_gset_module_and_broken_variant():
    _, _, M = _gset_module()
    assert verify_entwined_module(M).passed
    assert entwined_round_trip(M).passed
    _, _, bad = _gset_module(bad=True)
    rep = verify_entwined_module(bad)
    assert rep.status_of("rho(m a) = sum m0 a_psi (x) m1^psi") == "fail"
    assert rep.check("rho(m a) = sum m0 a_psi (x) m1^psi").witness == {"m": 0, "a": 1}
    assert bad.koppinen_module is None


@pytest.mark.parametrize("name", ["hopf-modules", "relative-hopf", "doi-hc", "long", "gset-2"])
def test_entwined_round_trip(name):
    E = dk_to_entwining(CORPUS[name])
    assert entwined_round_trip(regular_entwined_module(E)).passed


def test_entwined_as_coring_comodule():
    from corings.comodule import verify_comodule
    E = dk_to_entwining(CORPUS["doi-hc"])
    M = regular_entwined_module(E)
    assert verify_comodule(M.as_coring_comodule()).passed


@pytest.mark.parametrize("name", ["hopf-modules", "relative-hopf", "gset-3", "long"])
def test_induced_functors(name):
    E = dk_to_entwining(CORPUS[name])
    N = Comodule(coring_from_coalgebra(E.C), E.C.carrier, E.C.comult.matrix)
    assert verify_entwined_module(induced_comodule_functor(N, E)).passed
    assert verify_entwined_module(induced_module_functor(RightModule.regular(E.A), E)).passed


@pytest.mark.parametrize("name", ["hopf-modules", "relative-hopf", "gset-2", "long"])
def test_adjunction_cardinalities(name):
    D = CORPUS[name]
    E = dk_to_entwining(D)
    N = Comodule(coring_from_coalgebra(E.C), E.C.carrier, E.C.comult.matrix)
    M = regular_entwined_module(E)
    rep = adjunction_check(N, M)
    assert rep.passed
    assert rep.data["entwined_maps"] == rep.data["colinear_maps"] > 1


def test_adjunction_hand_count():
    # Hom^C(R[C2], H) over Z/4 with H = R[C2]: colinear maps are diagonal, 16 of them
    D = CORPUS["hopf-modules"]
    E = dk_to_entwining(D)
    N = Comodule(coring_from_coalgebra(E.C), E.C.carrier, E.C.comult.matrix)
    rep = adjunction_check(N, entwined_from_comodule_algebra(D, E))
    assert rep.passed and rep.data["colinear_maps"] == 16


def test_subobject_law():
    E = dk_to_entwining(CORPUS["relative-hopf"])
    M = entwined_from_comodule_algebra(CORPUS["relative-hopf"], E)
    subs = all_submodules(M.carrier)
    sc = [S for S in subs if is_subcomodule(M, S)]
    assert 1 < len(sc) < len(subs)
    for S in sc:
        assert subobject_law(M, S).passed
    non = next(S for S in subs if not is_subcomodule(M, S))
    assert subobject_law(M, non).status_of("N A is entwined") == "vacuous"


# --- smash products ------------------------------------------------------------------


@pytest.mark.parametrize("name", ["hopf-modules", "relative-hopf", "doi-hc", "gset-1", "long"])
def test_smash_ring(name):
    D = CORPUS[name]
    S = smash_ring(D)
    assert S.rank == D.A.algebra.rank * D.C.coalgebra.rank
    assert S.verification.passed
    assert S.beta.is_isomorphism()
    assert smash_pairing(S).verification.passed


def test_smash_product_formula():
    # (a # f)(b # g) = sum a0 b # (a1 g) * f for dual numbers with x of degree g
    D = CORPUS["relative-hopf"]
    S = smash_ring(D)
    Cs = S.Cstar
    de, dg = Cs.basis()
    x, one = [0, 1], [1, 0]
    lhs = S.mul(S.smash(x, de), S.smash(one, de))
    # x1 = g, (g de)(c) = de(c g) = dg(c)
    assert lhs == S.smash(x, Cs.mul(dg, de))
    assert lhs == S.carrier.zero()
    assert S.mul(S.smash(x, dg), S.smash(one, de)) == S.smash(x, dg)


def test_smash_rejects_bad_subring():
    D = CORPUS["hopf-modules"]
    Cs = dual_algebra(D.C.coalgebra)
    with pytest.raises(NotSubalgebra) as exc:
        SmashRing(D, Submodule(Cs.carrier, [Cs.basis()[0]]))
    assert "eps in T" in exc.value.witness


def test_smash_with_counit_only():
    R, G, H = _c2()
    D = _ring_dk(H.coalgebra)
    Cs = dual_algebra(D.C.coalgebra)
    T = Submodule(Cs.carrier, [Cs.unit])
    S = smash_ring(D, T)
    assert S.rank == 1
    rep = beta_density(D, T)
    assert not rep.passed
    assert rep.check("dense").witness == {"orthogonal": [(1, 3)]}


def test_beta_density_for_full_dual():
    for name in ("hopf-modules", "relative-hopf", "doi-hc"):
        rep = beta_density(CORPUS[name])
        assert rep.passed and rep.data["image_is_everything"]


def test_beta_density_zero_coalgebra():
    R = RingContext(4)
    Z = zero_module(R)
    C0 = Coalgebra(Z, ModuleMap.zero(Z, tensor(Z, Z)), ModuleMap.zero(Z, ground_module(R)), "0")
    rep = beta_density(_ring_dk(C0))
    assert rep.status_of("dense") == "vacuous"


@pytest.mark.parametrize("name", ["hopf-modules", "relative-hopf", "gset-2"])
def test_dk_rat_equality(name):
    S = smash_ring(CORPUS[name])
    for M in (RightModule.regular(S), smash_pairing(S).coring_module):
        rep = dk_rat_equality(M, S)
        assert rep.passed
        assert rep.data["whole"]


def test_counit_subring_pairing_is_not_alpha():
    from corings.errors import AmbiguousCoaction
    R, G, H = _c2()
    D = _ring_dk(H.coalgebra)
    Cs = dual_algebra(D.C.coalgebra)
    S = smash_ring(D, Submodule(Cs.carrier, [Cs.unit]))
    with pytest.raises(AmbiguousCoaction):
        dk_rat_equality(smash_pairing(S).coring_module, S)


# --- coinvariants --------------------------------------------------------------------


def test_grouplike_coinvariants():
    D = CORPUS["hopf-modules"]
    M = entwined_from_comodule_algebra(D).as_coring_comodule()
    co, rep = grouplike_coinvariants(M, [1, 0, 0, 0])
    assert co == Submodule(M.carrier, [[1, 0]])
    assert rep.data["surjective"] and rep.passed
    with pytest.raises(NotGrouplike):
        grouplike_coinvariants(M, [1, 1, 0, 0])
    with pytest.raises(NotGrouplike):
        grouplike_coinvariants(M, [2, 0, 0, 0])


def test_coinvariants_not_onto():
    # A (x) C for dual numbers: coinvariants 1 (x) e and x (x) e; their A-span misses 1 (x) g
    E = dk_to_entwining(CORPUS["relative-hopf"])
    M = regular_entwined_module(E).as_coring_comodule()
    co, rep = grouplike_coinvariants(M, [1, 0, 0, 0])
    assert co == Submodule(M.carrier, [[1, 0, 0, 0], [0, 0, 1, 0]])
    assert not rep.data["surjective"]
    assert rep.status_of("M is rational") == "vacuous"
