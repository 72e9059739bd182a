"""Operators on P (x) V against a direct sympy transcription of their definitions."""
from fractions import Fraction

import pytest
import sympy as sp

from conftest import Q, T
from symops import SymOps, same, to_sym
from vvmacdonald.combinatorics import shapes
from vvmacdonald.polyops import (
    GradedBasis,
    NotDivisible,
    VVPoly,
    apply_D,
    apply_T,
    apply_T_inv,
    apply_w,
    apply_wstar,
    apply_xi,
    operator_matrix,
    poly_operators,
)
from vvmacdonald.qt_field import ONE, q, t
from vvmacdonald.verify import operator_relations


@pytest.mark.parametrize("shape", [(2,), (1, 1), (3,), (2, 1), (1, 1, 1)])
def test_operators_match_definitions(shape):
    S = SymOps(shape)
    N = S.N
    for n in range(3):
        B = GradedBasis(N, shape, n)
        for idx in range(B.size):
            f = B.element(idx)
            fs = to_sym(f, S.x)
            for i in range(1, N):
                assert same(to_sym(apply_T(f, i), S.x), S.T(fs, i))
                assert same(to_sym(apply_T_inv(f, i), S.x), S.Tinv(fs, i))
            assert same(to_sym(apply_w(f), S.x), S.w(fs))
            for i in range(1, N + 1):
                assert same(to_sym(apply_xi(f, i), S.x), S.xi(fs, i))
            if n:
                assert same(to_sym(apply_D(f, N), S.x), S.D_N(fs))


def test_scalar_xi_has_factor_t_power():
    # for shape (N) the factor t^{i-N} combines with tau(omega) = t^{N-1}
    f = VVPoly.monomial((1, 0, 0), (3,))
    x = sp.symbols("x1:4")
    expect = T ** 2 * Q * x[2]  # x_1 w = q x_3, times t^{N-1}, for i = N
    assert same(to_sym(apply_w(f), x), {0: expect})


@pytest.mark.parametrize("shape", [s for n in range(1, 5) for s in shapes(n)])
def test_relations_on_polynomials(shape):
    r = operator_relations(shape, 2 if sum(shape) == 4 else 3)
    assert r.ok, r.failures


def test_D_lowers_degree_and_constants_vanish():
    c = VVPoly.constant(3, (2, 1), {0: ONE, 1: t})
    for i in range(1, 4):
        assert apply_D(c, i).is_zero()
    f = VVPoly.monomial((1, 1, 0), (2, 1), 1)
    for i in range(1, 4):
        assert apply_D(f, i).degrees() <= {1}


def test_D_N_needs_divisibility():
    f = VVPoly.monomial((1, 0), (2,))
    with pytest.raises(NotDivisible):
        from vvmacdonald.polyops import _divide_xN
        _divide_xN(f)


def test_wstar_matrix_agrees_with_pointwise():
    P = poly_operators(3, (2, 1))
    B = P.basis(1)
    for r in range(B.size):
        f = B.element(r)
        assert operator_matrix(("wstar",), 1, 3, (2, 1)).apply(f) == apply_wstar(f)
        assert P.operator_matrix(("D", 2), 1).apply(f) == apply_D(f, 2)


def test_vvpoly_basics():
    f = VVPoly.monomial((2, 0), (1, 1), 0, q) + VVPoly.monomial((0, 1), (1, 1), 0, t)
    assert f.degrees() == {1, 2}
    assert f.homogeneous_part(2) == VVPoly.monomial((2, 0), (1, 1), 0, q)
    assert (f - f).is_zero()
    assert VVPoly.from_json(f.to_json()) == f
    assert f.mul_x(2).coeff((2, 1)) == {0: q}
    assert f.leading_exponent() == (2, 0)
    with pytest.raises(ValueError):
        VVPoly(2, (1, 1), {(1,): {0: ONE}})


@pytest.mark.parametrize("shape", [(2, 1), (1, 1, 1), (2, 2)])
def test_all_D_at_a_point(shape):
    point = (Fraction(1, 5), Fraction(3, 2))
    S = SymOps(shape, point)
    N = S.N
    for n in (1, 2):
        B = GradedBasis(N, shape, n)
        for idx in range(B.size):
            f = B.element(idx)
            for i in range(1, N + 1):
                got = S.vec(apply_D(f, i))
                ref = S.D(S.vec(f), i)
                assert all(sp.expand(got.get(k, 0) - ref.get(k, 0)) == 0 for k in set(got) | set(ref))
