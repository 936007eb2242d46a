import pytest
from hypothesis import given

from homlie import fixtures as fx
from homlie import gfp
from homlie.core import (
    HomMorphism,
    Subspace,
    axiom_report,
    center,
    direct_sum,
    induced_subalgebra,
    is_sub_or_ideal,
    quotient,
)
from homlie.errors import IllDefined, NotAMorphism, NotInvertibleOnPreimage, ValueOutsideImage
from homlie.morphisms import BilinearForm, check_morphism, form_report, graph_check, pull_p, push_p
from homlie.oracle import brute_is_morphism, exhaustive_restricted_audit
from homlie.restricted import PStructure, is_restrictable, verify_p_structure
from homlie.suite import Corpus, morphism_triples

from .conftest import instances, restricted_instances


@pytest.fixture(scope="module")
def corpus():
    return Corpus.build()


def whole(M):
    return Subspace.whole(M.p, M.n)


# check_morphism ----------------------------------------------------------------

def test_identity_is_restricted():
    N = fx.nonab2()
    rep = check_morphism(HomMorphism.identity(N), (fx.nonab2_p(), fx.nonab2_p()))
    assert rep.morphism and rep.restricted


def test_projection_is_morphism():
    H = fx.heis3()
    _, pr = quotient(H, Subspace.of(H, [(0, 0, 1)]))
    assert check_morphism(pr).morphism and brute_is_morphism(pr)


def test_bracket_failure_witness():
    N = fx.nonab2()
    rep = check_morphism(HomMorphism(N, N, ((1, 1), (0, 0))))
    assert rep.commutes_with_twist and not rep.preserves_bracket
    assert rep.witness[0] == "bracket"


# graphs ----------------------------------------------------------------------

def test_graph_examples():
    N, H = fx.nonab2(), fx.heis3()
    assert graph_check(HomMorphism.identity(N), fx.nonab2_p(), fx.nonab2_p()).p_subalgebra
    zero = HomMorphism(H, H, gfp.zero_mat(3))
    g = graph_check(zero, fx.heis3_p(), PStructure.zero(H))
    assert g.p_subalgebra and g.restricted_morphism
    bad = graph_check(HomMorphism.identity(H), fx.heis3_p(), PStructure.zero(H))
    assert not bad.p_subalgebra and not bad.restricted_morphism


def test_graph_agreement_on_seeded_triples(corpus):
    triples = morphism_triples(corpus, 20, seed=7)
    assert len(triples) == 20
    verdicts = set()
    for _, f, P, Q in triples:
        g = graph_check(f, P, Q)
        assert g.agree
        verdicts.add(g.restricted_morphism)
    assert verdicts == {True, False}


# push / pull -----------------------------------------------------------------

def test_push_through_central_quotient():
    H = fx.heis3()
    _, pr = quotient(H, Subspace.of(H, [(0, 0, 1)]))
    Q, _ = push_p(pr, fx.heis3_p())
    assert Q.images == ((0, 0), (0, 0))
    assert verify_p_structure(Q, "exhaustive").ok


def test_push_identity_unchanged():
    Q, incl = push_p(HomMorphism.identity(fx.nonab2()), fx.nonab2_p())
    assert Q.images == fx.nonab2_p().images
    assert incl.F == gfp.identity(2)


def test_push_ill_defined_on_g2():
    G = fx.g2()
    _, pr = quotient(G, Subspace.of(G, [(1, 1)]))
    with pytest.raises(IllDefined):
        push_p(pr, fx.g2_p())


def test_push_needs_morphism():
    N = fx.nonab2()
    with pytest.raises(NotAMorphism):
        push_p(HomMorphism(N, N, ((1, 1), (0, 0))), fx.nonab2_p())


@given(restricted_instances())
def test_successful_push_passes_audit(pair):
    L, P = pair
    I = center(L, "ordinary")
    if not is_sub_or_ideal(L, I).ideal:
        return
    _, pr = quotient(L, I)
    try:
        Q, _ = push_p(pr, P)
    except IllDefined:
        return
    assert exhaustive_restricted_audit(Q).ok


def test_pull_identity_on_subalgebra():
    N = fx.nonab2()
    g = Subspace.of(N, [(1, 0)])
    sub, _ = induced_subalgebra(N, g)
    P, incl = pull_p(HomMorphism.identity(N), g, PStructure(sub, ((1,),)))
    assert P.images == ((1,),) and incl(P.algebra.basis()[0]) == (1, 0)


def test_pull_through_isomorphism_conjugates():
    G = fx.g2()
    swap = HomMorphism(G, G, ((0, 1), (1, 0)))
    sub, _ = induced_subalgebra(G, whole(G))
    Q = PStructure(sub, fx.g2_p().images)
    P, _ = pull_p(swap, whole(G), Q)
    assert P.images == ((0, 0), (1, 0))
    assert verify_p_structure(P, "exhaustive").ok


def test_pull_errors():
    H = fx.heis3()
    Qa, pr = quotient(H, Subspace.of(H, [(0, 0, 1)]))
    sub, _ = induced_subalgebra(Qa, whole(Qa))
    with pytest.raises(NotInvertibleOnPreimage):
        pull_p(pr, whole(Qa), PStructure.zero(sub))
    A, G = fx.ab1(), fx.g2()
    incl = HomMorphism(A, G, ((1,), (0,)))
    gsub, _ = induced_subalgebra(G, whole(G))
    with pytest.raises(ValueOutsideImage):
        pull_p(incl, whole(G), PStructure(gsub, fx.g2_p().images))


# forms -----------------------------------------------------------------------

def test_form_examples():
    N = fx.nonab2()
    r = form_report(N, BilinearForm(N, ((1, 0), (0, 0))))
    assert r.associative and not r.nondegenerate
    z = form_report(N, BilinearForm(N, gfp.zero_mat(2)))
    assert z.associative and not z.nondegenerate
    a = form_report(fx.ab1(), BilinearForm(fx.ab1(), ((1,),)))
    assert a.associative and a.nondegenerate and not a.hook_triggered


def test_form_must_be_symmetric():
    with pytest.raises(ValueError):
        BilinearForm(fx.nonab2(3), ((0, 1), (2, 0)))


def test_form_hook_on_sl2():
    L = fx.sl2(3)
    killing = ((2, 0, 0), (0, 0, 1), (0, 1, 0))
    r = form_report(L, BilinearForm(L, killing))
    assert r.associative and r.nondegenerate and r.center_trivial
    assert r.hook_triggered and r.restrictable


# restrictability transfer ---------------------------------------------------

@given(instances())
def test_surjective_image_of_restrictable(L):
    if not is_restrictable(L).decision:
        return
    for I in (center(L, "ordinary"), whole(L)):
        if is_sub_or_ideal(L, I).ideal:
            Q, pr = quotient(L, I)
            assert pr.is_surjective()
            assert is_restrictable(Q).decision


@pytest.mark.parametrize("M", [fx.nonab2(), fx.heis3(), fx.g2(), fx.nr3()])
def test_direct_sum_restrictable_iff_both(M):
    for L in (fx.ab1(), fx.nr3()):
        both = is_restrictable(L).decision and is_restrictable(M).decision
        assert is_restrictable(direct_sum(L, M)).decision == both


def test_commuting_ideals():
    S = direct_sum(fx.heis3(), fx.nonab2())
    L1 = Subspace.of(S, S.basis()[:3])
    L2 = Subspace.of(S, S.basis()[3:])
    assert is_sub_or_ideal(S, L1).ideal and is_sub_or_ideal(S, L2).ideal
    assert all(not any(S.bracket(x, y)) for x in L1.basis for y in L2.basis)
    assert (L1 + L2).is_whole()
    assert is_restrictable(S).decision
    assert axiom_report(S).valid
