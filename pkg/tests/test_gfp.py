from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie import gfp
from homlie.errors import CapExceeded, DegreeOverflow, DimensionError
from homlie.gfp import GF, PolyVec


def matrices(p, rows, cols):
    return st.tuples(*[st.tuples(*[st.integers(0, p - 1)] * cols)] * rows)


def test_field_ops_and_frobenius():
    F = GF(5)
    assert F.mul(3, 4) == 2
    assert F.inv(3) == 2
    assert F.neg(1) == 4
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_fermat_makes_semilinear_linear(p):
    # k^p = k for every scalar, so p-semilinear maps over GF(p) are linear
    F = GF(p)
    assert all(F.frobenius(k) == k for k in F.elements())


def test_modulus_checks():
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(CapExceeded):
        gfp.check_modulus(17)
    old = gfp.set_limits(uncapped=True)
    try:
        gfp.check_modulus(17)
    finally:
        gfp.set_limits(old)


# solve_affine ----------------------------------------------------------------

def test_solve_identity():
    s = gfp.solve_affine(2, gfp.identity(2), (1, 0))
    assert s.solvable and s.particular == (1, 0) and s.kernel_basis == ()


def test_solve_one_free_variable():
    s = gfp.solve_affine(2, ((1, 1), (0, 0)), (1, 0))
    assert s.particular == (1, 0)
    assert s.kernel_basis == ((1, 1),)


def test_solve_inconsistent():
    s = gfp.solve_affine(2, ((0,),), (1,))
    assert not s.solvable and s.size(2) == 0


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionError):
        gfp.solve_affine(3, gfp.identity(2), (1,))


@given(st.sampled_from([2, 3, 5]).flatmap(
    lambda p: st.tuples(st.just(p), matrices(p, 3, 3), st.tuples(*[st.integers(0, p - 1)] * 3))))
def test_solution_set_is_exact(args):
    p, A, b = args
    sol = gfp.solve_affine(p, A, b)
    brute = {x for x in product(range(p), repeat=3) if gfp.mat_vec(p, A, x) == tuple(b)}
    found = set(sol.elements(p))
    assert found == brute
    assert sol.size(p) == len(brute)
    assert gfp.rank(p, sol.kernel_basis) == len(sol.kernel_basis)


@given(st.sampled_from([2, 3, 5]).flatmap(lambda p: st.tuples(st.just(p), matrices(p, 3, 3))))
def test_inverse_roundtrip(args):
    p, A = args
    if gfp.is_invertible(p, A):
        assert gfp.mat_mul(p, A, gfp.inverse(p, A)) == gfp.identity(3)
    else:
        assert gfp.nullspace(p, A)


# polynomial vectors ----------------------------------------------------------

def test_poly_apply_scalar_k():
    M = gfp.affine_poly_matrix(3, gfp.zero_mat(2), gfp.identity(2))
    v = gfp.poly_apply(3, M, PolyVec.constant(3, (1, 0)))
    assert v.at(1) == (1, 0) and v.at(2) == (2, 0)
    assert gfp.poly_coeff(v, 1) == (1, 0)
    assert gfp.poly_coeff(v, 0) == (0, 0)


def test_poly_apply_constant_is_matrix_product():
    A = ((1, 2), (0, 1))
    M = gfp.affine_poly_matrix(3, A, gfp.zero_mat(2))
    v = gfp.poly_apply(3, M, PolyVec.constant(3, (1, 1)))
    assert v.at(0) == gfp.mat_vec(3, A, (1, 1))
    assert v.degree <= 0


def test_nonab2_chain_at_p3():
    # (ad(kh + x))^2 h over GF(3): ad(kh+x) = [[0,0],[-1,k]] on (h, x)
    ad = gfp.affine_poly_matrix(3, ((0, 0), (2, 0)), ((0, 0), (0, 1)))
    v = PolyVec.constant(3, (1, 0))
    v = gfp.poly_apply(3, ad, v)
    v = gfp.poly_apply(3, ad, v)
    assert gfp.poly_coeff(v, 1) == (0, 2)
    assert gfp.poly_coeff(v, 0) == (0, 0)


def test_poly_degree_overflow():
    M = gfp.affine_poly_matrix(2, gfp.zero_mat(1), gfp.identity(1))
    v = gfp.poly_apply(2, M, PolyVec.constant(2, (1,)))
    with pytest.raises(DegreeOverflow):
        gfp.poly_apply(2, M, v)


def test_poly_coeff_range():
    with pytest.raises(IndexError):
        gfp.poly_coeff(PolyVec.constant(3, (1,)), 3)


@given(st.sampled_from([3, 5]).flatmap(lambda p: st.tuples(
    st.just(p), matrices(p, 2, 2), matrices(p, 2, 2), st.tuples(*[st.integers(0, p - 1)] * 2))))
def test_poly_apply_commutes_with_evaluation(args):
    p, C, D, v = args
    M = gfp.affine_poly_matrix(p, C, D)
    out = gfp.poly_apply(p, M, PolyVec.constant(p, v))
    for k in range(p):
        Mk = gfp.mat_add(p, C, gfp.mat_scale(p, k, D))
        assert out.at(k) == gfp.mat_vec(p, Mk, v)


@given(st.sampled_from([3, 5]).flatmap(lambda p: st.tuples(
    st.just(p), matrices(p, 2, 2), matrices(p, 2, 2), st.tuples(*[st.integers(0, p - 1)] * 2),
    st.tuples(*[st.integers(0, p - 1)] * 2))))
def test_poly_apply_distributes(args):
    p, C, D, u, w = args
    M = gfp.affine_poly_matrix(p, C, D)
    U = gfp.poly_apply(p, M, PolyVec.constant(p, u))
    W = gfp.poly_apply(p, M, PolyVec.constant(p, w))
    both = gfp.poly_apply(p, M, PolyVec.constant(p, u) + PolyVec.constant(p, w))
    assert both == U + W
