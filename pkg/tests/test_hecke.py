import json

import pytest
import sympy as sp

from conftest import T, to_sympy
from vvmacdonald.combinatorics import shapes
from vvmacdonald.hecke import HeckeWord, form0, hecke_module, jm_apply, omega_word, tau_apply
from vvmacdonald.linalg import Matrix
from vvmacdonald.qt_field import ONE, monomial, t, u_factor
from vvmacdonald.tableaux import extremal_tableaux, tableau_index
from vvmacdonald.verify import hecke_relations, jucys_murphy

ALL_SHAPES = [s for n in range(1, 6) for s in shapes(n)]


@pytest.mark.parametrize("tau", ALL_SHAPES)
def test_relations(tau):
    r = hecke_relations(tau)
    assert r.ok, r.failures


@pytest.mark.parametrize("tau", ALL_SHAPES)
def test_jucys_murphy(tau):
    r = jucys_murphy(tau)
    assert r.ok, r.failures


def test_shape_21_explicit():
    # S0 = 3,1|2 (contents 1,-1,0): c(1)-c(2) = 2 so S0 T1 = S1 + (t-1)/(1-t^-2) S0
    H = hecke_module((2, 1))
    S0, S1 = extremal_tableaux((2, 1))
    k0, k1 = tableau_index(S0), tableau_index(S1)
    v = tau_apply({k0: ONE}, (2, 1), 1)
    assert v[k1] == ONE
    ref = sp.cancel((T - 1) / (1 - T ** -2))
    assert sp.simplify(to_sympy(v[k0]) - ref) == 0
    # 1 and 2 in the same row of S1 for T2; 2, 3 in the same column of S0
    assert tau_apply({k1: ONE}, (2, 1), 2) == {k1: t}
    assert tau_apply({k0: ONE}, (2, 1), 2) == {k0: -ONE}
    # reverse case: S1 T1 = x S0 + y S1 with y = t^b (t-1)/(t^b - 1), b = -2
    w = H.apply({k1: ONE}, 1)
    tb = T ** -2
    assert sp.simplify(to_sympy(w[k1]) - tb * (T - 1) / (tb - 1)) == 0
    assert sp.simplify(to_sympy(w[k0]) - T * (tb * T - 1) * (tb / T - 1) / (tb - 1) ** 2) == 0


@pytest.mark.parametrize("tau", [s for s in ALL_SHAPES if sum(s) <= 4])
def test_T_self_adjoint_for_form0(tau):
    H = hecke_module(tau)
    G = H.gram0
    for i in range(1, H.N):
        assert H.T(i) @ G == G @ H.T(i).T


def test_form0_values():
    H = hecke_module((2, 1))
    S0, S1 = extremal_tableaux((2, 1))
    assert H.form0_diag[tableau_index(S0)] == ONE
    assert H.form0_diag[tableau_index(S1)] == u_factor(monomial(0, -2))
    k = tableau_index(S1)
    assert form0({k: ONE}, {k: t}, (2, 1)) == t * u_factor(t ** 2)


def test_jm_apply_eigen():
    S0, _ = extremal_tableaux((3, 2))
    k = tableau_index(S0)
    for i in range(1, 6):
        assert jm_apply({k: ONE}, (3, 2), i) == {k: t ** S0.content(i)}


def test_words():
    w = HeckeWord.of(1, 2)
    assert str(w) == "T1 T2" and str(w.inverse()) == "T2^-1 T1^-1"
    assert str(HeckeWord()) == "I"
    H = hecke_module((2, 2))
    assert H.word(w + w.inverse()) == Matrix.identity(H.dim)
    assert H.omega == H.word(omega_word(4))
    with pytest.raises(IndexError):
        H.T(4)


def test_matrix_json():
    H = hecke_module((2, 1))
    doc = json.loads(H.matrix_json(H.T(2)))
    assert doc["shape"] == [2, 1]
    assert doc["order"] == ["[1,-1,0]", "[-1,1,0]"]
    assert doc["matrix"] == [["-1", "0"], ["0", "t"]]
