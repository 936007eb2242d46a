import pytest
from hypothesis import given

from homlie import fixtures as fx
from homlie import gfp
from homlie.core import (
    HomLieAlgebra,
    HomMorphism,
    Subspace,
    ad_matrix,
    axiom_report,
    center,
    centralizer,
    direct_sum,
    gl_example,
    is_sub_or_ideal,
    lower_central_series,
    quotient,
    subalgebra_closure,
    yau_twist,
)
from homlie.errors import NotAMorphism, NotAnIdeal, SingularMatrix
from homlie.morphisms import check_morphism
from homlie.oracle import brute_center, brute_hom_jacobi, elements_of, random_lie
from homlie.restricted import is_restrictable

from .conftest import instances


def span(L, *vs):
    return Subspace.of(L, vs)


# axiom_report ---------------------------------------------------------------

def test_nonab2_axioms():
    r = axiom_report(fx.nonab2())
    assert r.alternating and r.hom_jacobi and r.multiplicative
    assert r.regular and r.involutive
    assert not r.abelian


def test_ex34_axioms():
    # twist h -> h, x -> 0 with zero bracket
    r = axiom_report(fx.ex34())
    assert (r.hom_jacobi, r.multiplicative, r.regular, r.involutive, r.abelian) == (True, True, False, False, True)
    assert fx.ex34().alpha == ((1, 0), (0, 0))


def test_non_alternating_has_counterexample():
    c = (((1, 0), (0, 0)), ((0, 0), (0, 0)))
    L = HomLieAlgebra(3, ("a", "b"), c, gfp.identity(2))
    r = axiom_report(L)
    assert not r.alternating
    assert "alternating" in r.counterexamples


def test_regular_needs_multiplicativity_computed():
    # invertible twist that is not a bracket morphism: swap on nonab2
    L = HomLieAlgebra.from_brackets(2, ("h", "x"), {(0, 1): (0, 1)}, ((0, 1), (1, 0)))
    r = axiom_report(L)
    assert r.invertible and not r.multiplicative and not r.regular and not r.involutive


# constructors ---------------------------------------------------------------

def test_yau_twist_of_nonab2_is_ex34():
    assert yau_twist(fx.nonab2(), ((1, 0), (0, 0))) == fx.ex34()


@pytest.mark.parametrize("L", [fx.nonab2(), fx.heis3(), fx.sl2(3)])
def test_yau_twist_identity(L):
    assert yau_twist(L, gfp.identity(L.n)) == L


def test_yau_twist_rejects_non_morphism():
    with pytest.raises(NotAMorphism):
        yau_twist(fx.nonab2(), ((0, 1), (1, 0)))


@given(instances(constructions=("yau-twist",)))
def test_generated_yau_twists_are_multiplicative(L):
    assert axiom_report(L).valid
    assert brute_hom_jacobi(L)


def test_yau_twist_over_random_lie_algebras():
    import random

    from homlie.core import is_lie_morphism

    rng = random.Random(3)
    hits = 0
    for _ in range(30):
        lie = random_lie(rng, 2, 3)
        for A in [gfp.identity(3), gfp.zero_mat(3)]:
            if is_lie_morphism(lie, A):
                assert axiom_report(yau_twist(lie, A)).multiplicative
                hits += 1
    assert hits


def test_gl_example_shapes():
    L, P = gl_example(2, gfp.identity(2), 2)
    assert L.n == 4 and axiom_report(L).valid
    L1, P1 = gl_example(1, ((1,),), 3)
    assert L1.n == 1 and L1.is_abelian()
    assert P1.images == ((1,),)
    with pytest.raises(SingularMatrix):
        gl_example(2, ((1, 1), (1, 1)), 2)


# adjoints, series, centralizers ---------------------------------------------

def test_ad_matrix_examples():
    L = fx.nonab2()
    assert ad_matrix(L, (1, 0)) == ((0, 0), (0, 1))
    assert ad_matrix(L, (1, 0), "alpha") == ad_matrix(L, (1, 0))
    assert all(ad_matrix(fx.ex34(), x) == gfp.zero_mat(2) for x in fx.ex34().elements())


def test_lower_central_series_examples():
    h = lower_central_series(fx.heis3())
    assert h.dims == (3, 1, 0) and h.nilpotent and h.nilpotency_class == 3
    n = lower_central_series(fx.nonab2())
    assert n.dims[:2] == (2, 1) and not n.nilpotent
    assert lower_central_series(fx.ab1()).dims == (1, 0)


def test_center_examples():
    assert center(fx.nonab2()).is_zero()
    assert center(fx.heis3()) == span(fx.heis3(), (0, 0, 1))
    assert center(fx.ex34()).is_whole()


@pytest.mark.parametrize("L", [fx.nonab2(), fx.nonab2(3), fx.heis3(), fx.ex34(), fx.nr3(), fx.sl2(3)])
def test_center_matches_brute_force(L):
    assert elements_of(center(L, "alpha")) == brute_center(L)
    assert elements_of(center(L, "ordinary")) == brute_center(L, ordinary=True)


@given(instances())
def test_regular_twist_centers_agree(L):
    if axiom_report(L).regular:
        assert centralizer(L, mode="alpha") == centralizer(L, mode="ordinary")


def test_sub_or_ideal_examples():
    L = fx.nonab2()
    assert is_sub_or_ideal(L, span(L, (0, 1))).ideal
    f = is_sub_or_ideal(L, span(L, (1, 0)))
    assert f.subalgebra and not f.ideal
    H = fx.heis3()
    assert is_sub_or_ideal(H, span(H, (0, 0, 1))).ideal


def test_subalgebra_closure_examples():
    H = fx.heis3()
    assert subalgebra_closure(H, [(1, 0, 0)]) == span(H, (1, 0, 0))
    assert subalgebra_closure(H, [(1, 0, 0), (0, 1, 0)]).is_whole()
    assert subalgebra_closure(H, []).is_zero()


# sums and quotients ---------------------------------------------------------

def test_direct_sum_examples():
    S = direct_sum(fx.nonab2(), fx.ab1())
    assert S.n == 3 and S.bracket((1, 0, 0), (0, 1, 0)) == (0, 1, 0)
    assert all(not any(S.bracket(S.basis()[2], e)) for e in S.basis())
    assert direct_sum(fx.ab1(), fx.ab1()).is_abelian()
    big = direct_sum(fx.heis3(), fx.nonab2())
    assert big.n == 5 and axiom_report(big).valid


@given(instances(shapes=[(2, 1), (2, 2), (3, 1), (3, 2)]), instances(shapes=[(2, 1), (2, 2), (3, 1)]))
def test_direct_sum_swap_is_isomorphism(L, M):
    if L.p != M.p:
        return
    LM, ML = direct_sum(L, M), direct_sum(M, L)
    n, m = L.n, M.n
    cols = [gfp.unit_vec(n + m, m + j) for j in range(n)] + [gfp.unit_vec(n + m, j) for j in range(m)]
    swap = HomMorphism(LM, ML, gfp.from_columns(cols, n + m))
    assert check_morphism(swap).morphism and swap.is_injective()


def test_quotient_examples():
    H = fx.heis3()
    Q, pr = quotient(H, span(H, (0, 0, 1)))
    assert Q.n == 2 and Q.is_abelian()
    assert check_morphism(pr).morphism
    N = fx.nonab2()
    Q2, _ = quotient(N, span(N, (0, 1)))
    assert Q2.n == 1 and Q2.is_abelian()
    with pytest.raises(NotAnIdeal):
        quotient(N, span(N, (1, 0)))


@given(instances())
def test_projection_preserves_brackets(L):
    I = center(L, "ordinary")
    if not is_sub_or_ideal(L, I).ideal:
        return
    Q, pr = quotient(L, I)
    for x in L.basis():
        for y in L.basis():
            assert pr(L.bracket(x, y)) == Q.bracket(pr(x), pr(y))


@given(instances(constructions=("nilpotent",)))
def test_low_nilpotency_means_restrictable(L):
    series = lower_central_series(L)
    if len(series.terms) > L.p and series.terms[L.p].is_zero():
        assert is_restrictable(L).decision
