import json
from fractions import Fraction

import pytest
import sympy as sp

from symops import SymOps, to_sym
from vvmacdonald.singular import (
    SubstitutionPole,
    certify,
    certify_singular_S0,
    certify_singular_S1,
    check_zero_diff,
    curve_on_boundary,
    factor_check,
    family_data,
    generic_nonsingular,
    iterated_u_identity,
    lemma_product,
    norm_vanishes,
    specialise,
)
from vvmacdonald.polyops import VVPoly
from vvmacdonald.qt_field import monomial, q, t
from vvmacdonald.tableaux import extremal_tableaux
from vvmacdonald.yang_baxter import build_macdonald

FAMILY_SHAPES = [(2, 1), (2, 2), (3, 1), (2, 1, 1)]


def test_family_data_21():
    # h = 3; tau_l = 1 and the last column has length 1
    alpha, S, e = family_data((2, 1), "S1")
    assert alpha == (1, 0, 0) and S == extremal_tableaux((2, 1))[1] and e == 3
    alpha, S, e = family_data((2, 1), "S0")
    assert alpha == (1, 0, 0) and S == extremal_tableaux((2, 1))[0] and e == -3
    assert family_data((2, 2), "S1")[0] == (1, 1, 0, 0)
    assert family_data((3, 1), "S0")[0] == (1, 0, 0, 0)
    assert family_data((2, 1, 1), "S0")[0] == (1, 0, 0, 0)
    assert family_data((2, 1, 1), "S1")[2] == 4


def test_family_errors():
    with pytest.raises(ValueError):
        family_data((3,), "S0")
    with pytest.raises(ValueError):
        family_data((1, 1), "S1")
    with pytest.raises(ValueError):
        family_data((2, 1), "S2")


@pytest.mark.parametrize("tau", FAMILY_SHAPES)
@pytest.mark.parametrize("family", ["S0", "S1"])
def test_certificates(tau, family):
    c = certify(tau, family)
    assert c.valid
    assert len(c.residuals) == sum(tau)
    assert generic_nonsingular(tau, family)
    assert norm_vanishes(tau, family)
    assert factor_check(tau, family)
    assert curve_on_boundary(tau, family, [2, 3, Fraction(1, 2), Fraction(5, 4)])


@pytest.mark.parametrize("tau,family", [((2, 1), "S0"), ((2, 1), "S1"), ((2, 2), "S1"),
                                         ((3, 1), "S0"), ((2, 1, 1), "S1")])
def test_singular_by_direct_evaluation(tau, family):
    # D_i from the sympy operators at points on the curve q = t^e and off it
    alpha, S, e = family_data(tau, family)
    M = build_macdonald(alpha, S).M

    def all_D_vanish(point):
        ops = SymOps(tau, point)
        f = ops.vec(M)
        return all(sp.expand(p) == 0 for i in range(1, ops.N + 1) for p in ops.D(f, i).values())

    for t0 in (Fraction(2), Fraction(2, 3)):
        assert all_D_vanish((t0 ** e, t0))
    assert not all_D_vanish((Fraction(1, 5), Fraction(2)))


def test_wrong_sign_curve_is_not_singular():
    alpha, S, e = family_data((2, 1), "S1")
    c = certify((2, 1), "S1")
    assert c.valid
    M = build_macdonald(alpha, S).M
    from vvmacdonald.polyops import apply_D
    from vvmacdonald.singular import _residual

    assert not all(_residual(apply_D(M, i), -e).is_zero() for i in range(1, 4))


def test_certificate_json():
    c = certify_singular_S1((2, 1))
    doc = json.loads(c.to_json())
    assert doc["shape"] == [2, 1] and doc["alpha"] == [1, 0, 0]
    assert doc["exponent"] == 3 and doc["valid"] is True
    assert doc["residuals"] == ["0", "0", "0"]
    assert certify_singular_S0((2, 1)).exponent == -3


def test_specialise_pole():
    f = VVPoly.monomial((1, 0), (2,), 0, 1 / (1 - q * t ** 2))
    with pytest.raises(SubstitutionPole):
        specialise(f, -2)
    assert specialise(f, 1)[((1, 0), 0)].is_zero() is False


@pytest.mark.parametrize("tau", [(2, 1), (3,), (2, 2), (3, 1)])
def test_zero_diff(tau):
    for S in extremal_tableaux(tau):
        N = sum(tau)
        for alpha in [(1,) + (0,) * (N - 1), (1, 1) + (0,) * (N - 2), (2, 1) + (0,) * (N - 2)]:
            assert check_zero_diff(alpha, S)


@pytest.mark.parametrize("tau,alpha", [((3,), (1, 0, 0)), ((3,), (1, 1, 0)), ((3,), (1, 1, 1)),
                                       ((2, 1), (1, 0, 0)), ((2, 1), (2, 1, 0)), ((2, 1), (1, 1, 0)),
                                       ((2, 2), (2, 2, 1, 0)), ((3, 1), (1, 1, 0, 0))])
def test_iterated_u(tau, alpha):
    for S in extremal_tableaux(tau):
        lhs, rhs = iterated_u_identity(alpha, S)
        assert lhs == rhs
        assert not lhs.is_zero()


@pytest.mark.parametrize("alpha", [(0, 1, 0), (0, 0, 1), (2, 0, 0), (0, 0, 0)])
def test_iterated_u_rejects(alpha):
    with pytest.raises(ValueError):
        iterated_u_identity(alpha, extremal_tableaux((2, 1))[0])


def test_lemma_product_m_equals_N():
    S = extremal_tableaux((2, 1))[0]
    assert lemma_product((1, 1, 1), S) == monomial(0, 0)
    assert lemma_product((1, 0, 0), S) != 0
