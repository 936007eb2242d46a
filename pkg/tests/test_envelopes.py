import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie import fixtures as fx
from homlie import gfp
from homlie.core import HomMorphism, Subspace, axiom_report, center, direct_sum, is_sub_or_ideal
from homlie.envelopes import PEnvelope, check_envelope, decompose, is_minimal, minimize
from homlie.errors import Obstruction, PreconditionError
from homlie.oracle import find_isomorphism
from homlie.restricted import PStructure, direct_sum_p, verify_p_structure
from homlie.suite import padded_envelopes


def ab1_in_g2():
    return PEnvelope(fx.ab1(), fx.g2_p(), HomMorphism(fx.ab1(), fx.g2(), ((1,), (0,))))


def self_envelope(P):
    return PEnvelope(P.algebra, P, HomMorphism.identity(P.algebra))


def not_generating():
    N = fx.nonab2()
    P = direct_sum_p(fx.nonab2_p(), PStructure.zero(fx.ab1()))
    return PEnvelope(N, P, HomMorphism(N, P.algebra, ((1, 0), (0, 1), (0, 0))))


def test_check_envelope_examples():
    assert check_envelope(ab1_in_g2()).ok
    assert check_envelope(self_envelope(fx.nonab2_p())).ok
    rep = check_envelope(not_generating())
    assert rep.morphism and rep.injective and not rep.generates


def test_is_minimal_examples():
    m = is_minimal(ab1_in_g2())
    assert not m.minimal and m.center.is_whole()
    assert is_minimal(self_envelope(fx.nonab2_p())).minimal
    assert is_minimal(self_envelope(fx.heis3_p())).minimal


def test_minimize_ab1_in_g2():
    M = minimize(ab1_in_g2())
    assert M.G.n == 1
    assert M.P.images == ((0,),)
    assert check_envelope(M).ok and is_minimal(M).minimal


def test_minimize_keeps_minimal_envelope():
    E = self_envelope(fx.heis3_p())
    assert minimize(E) == E


def test_rejects_non_envelopes():
    E = not_generating()
    for fn in (minimize, decompose, is_minimal):
        with pytest.raises(PreconditionError):
            fn(E)


def test_decompose_ab1_in_g2():
    E = ab1_in_g2()
    D = decompose(E)
    G = E.G
    assert D.H_subspace == Subspace.of(G, [(1, 0)])
    assert D.J == Subspace.of(G, [(0, 1)])
    # fresh p-map on H, not the restriction (which would leave H)
    assert D.H.P.images == ((0,),)
    assert check_envelope(D.H).ok and is_minimal(D.H).minimal


def test_decompose_minimal_is_trivial():
    E = self_envelope(fx.nonab2_p())
    D = decompose(E)
    assert D.H_subspace.is_whole() and D.J.is_zero()


def decomposition_holds(E, D):
    G = E.G
    H, J = D.H_subspace, D.J
    flags = is_sub_or_ideal(G, J)
    return (
        (H & J).is_zero()
        and (H + J).is_whole()
        and flags.alpha_stable
        and flags.ideal
        and J <= center(G, "alpha")
        and E.embedded_base() <= H
    )


BASES = [fx.nonab2_p(), fx.heis3_p(), PStructure.zero(fx.ab1()), fx.g2_p()]


@given(st.sampled_from(BASES), st.integers(1, 2), st.integers(0, 50))
def test_padded_envelopes_minimize_and_split(P, extra, seed):
    if P.algebra.n + extra > 4:
        extra = 1
    for E in padded_envelopes(P, extra, seed=seed, tries=20)[:2]:
        assert axiom_report(E.base).involutive
        try:
            M = minimize(E)
        except Obstruction:
            continue
        assert is_minimal(M).minimal and check_envelope(M).ok
        assert M.G.n <= E.G.n
        D = decompose(E)
        assert decomposition_holds(E, D)


def test_minimal_envelopes_of_ab1_are_isomorphic():
    found = []
    for seed in range(6):
        for E in padded_envelopes(PStructure.zero(fx.ab1()), 2, seed=seed, tries=30):
            found.append(minimize(E))
    found.append(minimize(ab1_in_g2()))
    assert len(found) > 1
    for M in found[1:]:
        assert find_isomorphism(found[0].G, M.G) is not None


def test_regular_alpha_centers_coincide():
    for P in BASES:
        G = P.algebra
        if axiom_report(G).regular:
            assert center(G, "alpha") == center(G, "ordinary")


def test_heis_in_larger_envelope():
    # heis3 with e^[2] = w lives in heis3 + ab1; minimizing folds w back in
    P = PStructure(direct_sum(fx.heis3(), fx.ab1()), ((0, 0, 0, 1), (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0)))
    assert verify_p_structure(P).ok
    i = HomMorphism(fx.heis3(), P.algebra, gfp.from_columns([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)], 4))
    E = PEnvelope(fx.heis3(), P, i)
    assert check_envelope(E).ok and not is_minimal(E).minimal
    M = minimize(E)
    assert M.G.n == 3 and is_minimal(M).minimal
