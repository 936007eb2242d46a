from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie import fixtures as fx
from homlie import gfp
from homlie.core import Subspace, center
from homlie.errors import InvalidTarget, NoSolution, PreconditionError
from homlie.oracle import brute_p_structures, brute_restrictable, exhaustive_restricted_audit
from homlie.restricted import (
    PStructure,
    ad_chain,
    count_p_structures,
    direct_sum_p,
    enumerate_p_structures,
    fixed_point_check,
    is_restrictable,
    p_closure,
    p_eval,
    p_flag_check,
    p_structure_delta,
    s_terms,
    synthesize_p_structure,
    verify_p_structure,
)

from .conftest import named_algebras, restricted_instances, vectors


# ad_chain / s_terms ---------------------------------------------------------

def test_ad_chain_examples():
    L = fx.nonab2(3)
    assert ad_chain(L, (1, 0)) == ((0, 0), (0, 1))
    assert ad_chain(L, (0, 1)) == gfp.zero_mat(2)
    assert all(ad_chain(fx.ex34(), x) == gfp.zero_mat(2) for x in fx.ex34().elements())


@pytest.mark.parametrize("label,L", [t for t in named_algebras() if t[1].p == 2])
def test_s1_is_bracket_at_p2(label, L):
    for x in L.basis():
        for y in L.basis():
            assert s_terms(L, x, y).terms == (L.bracket(x, y),)


def test_s_terms_nonab2_p3():
    assert s_terms(fx.nonab2(3), (1, 0), (0, 1)).terms == ((0, 0), (0, 1))


@pytest.mark.parametrize("L", [fx.ab1(5), fx.ex34(3), fx.g2()])
def test_s_terms_vanish_on_abelian(L):
    for x in L.elements():
        for y in L.elements():
            assert not any(map(any, s_terms(L, x, y).terms))


# p_eval ---------------------------------------------------------------------

def test_p_eval_nonab2_closed_form_p3():
    P = PStructure(fx.nonab2(3), ((1, 0), (0, 0)))
    assert p_eval(P, (2, 1)) == (2, 1)
    for lam, mu in product(range(3), repeat=2):
        assert p_eval(P, (lam, mu)) == (lam ** 3 % 3, lam ** 2 * mu % 3)


def test_p_eval_zero_and_abelian():
    assert p_eval(fx.nonab2_p(), (0, 0)) == (0, 0)
    Z = PStructure.zero(fx.ex34())
    assert all(p_eval(Z, x) == (0, 0) for x in fx.ex34().elements())


@given(restricted_instances(shapes=[(2, 2), (2, 3), (3, 2)]))
def test_p_eval_order_independent(pair):
    L, P = pair
    for x in L.elements():
        ref = p_eval(P, x)
        for order in permutations(range(L.n)):
            assert p_eval(P, x, order) == ref


@given(restricted_instances())
def test_r1_as_matrices(pair):
    L, P = pair
    A = L.alpha_power(L.p - 1)
    for x in L.elements():
        lhs = gfp.mat_mul(L.p, L.ad(p_eval(P, x)), A)
        assert lhs == ad_chain(L, x)


# synthesis and restrictability ----------------------------------------------

def test_synthesize_nonab2():
    assert synthesize_p_structure(fx.nonab2()).images == ((1, 0), (0, 0))


def test_synthesize_nr3_fails_at_x():
    with pytest.raises(NoSolution) as info:
        synthesize_p_structure(fx.nr3())
    assert info.value.index == 0


def test_synthesize_with_targets():
    P = synthesize_p_structure(fx.ex34(), {0: (0, 0), 1: (0, 0)})
    assert P.images == ((0, 0), (0, 0))
    with pytest.raises(InvalidTarget):
        synthesize_p_structure(fx.nonab2(), {1: (0, 1)})
    # partial targets keep the canonical value elsewhere
    P = synthesize_p_structure(fx.heis3(), {0: (0, 0, 1)})
    assert P.images == ((0, 0, 1), (0, 0, 0), (0, 0, 0))


def test_synthesize_rejects_non_multiplicative():
    from homlie.core import HomLieAlgebra

    bad = HomLieAlgebra.from_brackets(2, ("h", "x"), {(0, 1): (0, 1)}, ((0, 1), (1, 0)))
    with pytest.raises(PreconditionError):
        synthesize_p_structure(bad)


def test_restrictable_examples():
    assert is_restrictable(fx.ab(3, 3)).decision
    assert is_restrictable(fx.ex34()).decision
    cert = is_restrictable(fx.nr3())
    assert not cert.decision and cert.failing_index == 0
    assert brute_restrictable(fx.nr3()).failing_element == (1, 0, 0)


@pytest.mark.parametrize("label,L", named_algebras())
def test_restrictable_matches_brute_on_fixtures(label, L):
    cert = is_restrictable(L)
    assert cert.decision == brute_restrictable(L).decision
    if cert.decision:
        assert verify_p_structure(cert.witness).ok


# verification ---------------------------------------------------------------

def test_verify_modes_nonab2():
    P = fx.nonab2_p()
    assert verify_p_structure(P).ok
    assert verify_p_structure(P, "exhaustive").ok


def test_verify_rejects_tampered():
    rep = verify_p_structure(PStructure(fx.nonab2(), ((1, 0), (0, 1))))
    assert not rep.ok and rep.axiom == "R1" and rep.witness[0] == (0, 1)
    assert not exhaustive_restricted_audit(PStructure(fx.nonab2(), ((1, 0), (0, 1)))).ok


@given(st.lists(vectors(2, 2), min_size=2, max_size=2))
def test_any_images_on_ex34_pass(images):
    assert verify_p_structure(PStructure(fx.ex34(), tuple(images)), "exhaustive").ok


def test_char2_additivity_form():
    P = fx.heis3_p()
    L = P.algebra
    for x in L.elements():
        for y in L.elements():
            rhs = gfp.vsum(2, [p_eval(P, x), p_eval(P, y), L.bracket(x, y)], 3)
            assert p_eval(P, gfp.vadd(2, x, y)) == rhs


# enumeration, deltas --------------------------------------------------------

@pytest.mark.parametrize("L,count", [(fx.nonab2(), 1), (fx.heis3(), 8), (fx.ex34(), 16)])
def test_counts(L, count):
    assert count_p_structures(L) == count
    found = enumerate_p_structures(L)
    assert len(found) == count
    assert sorted(P.images for P in found) == sorted(P.images for P in brute_p_structures(L))


def test_delta_examples():
    P1 = fx.heis3_p()
    P2 = PStructure(fx.heis3(), ((0, 0, 0),) * 3)
    assert verify_p_structure(P2).ok
    d = p_structure_delta(P1, P2)
    assert d.valid and gfp.column(d.f, 0) == (0, 0, 1)
    same = p_structure_delta(P1, P1)
    assert same.valid and same.f == gfp.zero_mat(3)


@given(restricted_instances(shapes=[(2, 2), (2, 3), (3, 2)]), st.data())
def test_delta_law(pair, data):
    L, P = pair
    C = center(L)
    shifts = [data.draw(st.sampled_from(list(C.elements()))) for _ in range(L.n)]
    Q = PStructure(L, tuple(gfp.vadd(L.p, y, s) for y, s in zip(P.images, shifts)))
    assert verify_p_structure(Q).ok
    assert exhaustive_restricted_audit(Q).ok
    assert p_structure_delta(P, Q).valid


@given(restricted_instances(shapes=[(2, 2), (2, 3)]))
def test_count_law(pair):
    L, _ = pair
    assert count_p_structures(L) == len(list(center(L).elements())) ** L.n
    assert len(brute_p_structures(L)) == count_p_structures(L)


# closures and flags ---------------------------------------------------------

def test_p_closure_examples():
    P = fx.g2_p()
    G = P.algebra
    assert p_closure(P, [(1, 0)]).is_whole()
    assert p_closure(P, [(0, 1)]) == Subspace.of(G, [(0, 1)])
    assert p_closure(P, []).is_zero()


def test_p_flag_examples():
    P = fx.heis3_p()
    assert p_flag_check(P, Subspace.of(P.algebra, [(0, 0, 1)])).p_ideal
    g = p_flag_check(fx.g2_p(), Subspace.of(fx.g2(), [(1, 0)]))
    assert g.subalgebra and not g.p_subalgebra


@given(restricted_instances())
def test_center_is_p_ideal_when_regular(pair):
    from homlie.core import axiom_report

    L, P = pair
    if axiom_report(L).regular:
        assert p_flag_check(P, center(L)).p_ideal


def test_direct_sum_p_examples():
    S = direct_sum_p(fx.nonab2_p(), PStructure.zero(fx.ab1()))
    assert S.images == ((1, 0, 0), (0, 0, 0), (0, 0, 0))
    assert exhaustive_restricted_audit(S).ok
    Z = direct_sum_p(PStructure.zero(fx.ab1()), PStructure.zero(fx.ab1()))
    assert Z.images == ((0, 0), (0, 0))
    big = direct_sum_p(fx.heis3_p(), fx.nonab2_p())
    assert exhaustive_restricted_audit(big).ok


# comparator -----------------------------------------------------------------

def test_comparator_nonab2_both_hold():
    g = fixed_point_check(fx.nonab2_p())
    assert g.structure_ok and g.fixed_point_ok
    assert g.fixed_space.is_whole()


def test_comparator_ex34_separates_definitions():
    g = fixed_point_check(PStructure(fx.ex34(), ((0, 1), (0, 0))))
    assert g.structure_ok
    assert not g.maps_into_fixed and not g.fixed_point_ok


def test_comparator_abelian_zero_map():
    g = fixed_point_check(PStructure.zero(fx.ab(2, 3)))
    assert g.structure_ok and g.fixed_point_ok
