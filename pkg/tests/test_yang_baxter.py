import json
from fractions import Fraction

import pytest

from conftest import Q, T
from symops import SymOps, same, to_sym
from vvmacdonald.combinatorics import all_compositions_upto, partitions, shapes
from vvmacdonald.hecke import hecke_module
from vvmacdonald.polyops import apply_T
from vvmacdonald.qt_field import monomial, t
from vvmacdonald.tableaux import extremal_tableaux
from vvmacdonald.verify import eigenfunctions
from vvmacdonald.yang_baxter import (
    MemoLimitExceeded,
    NonGenericParameters,
    YangBaxterBuilder,
    build_macdonald,
    check_eta_closed_form,
    export_graph,
    graph_edges,
    intertwining_holds,
    sorting_sequence,
    spectral_exponents,
)

SMALL = [s for n in range(1, 4) for s in shapes(n)] + [(2, 2), (3, 1)]


def test_scalar_two_variables():
    # eigenvectors checked directly against the sympy operators
    S = SymOps((2,))
    x1, x2 = S.x
    assert same(to_sym(build_macdonald((0, 1)).M, S.x), {0: T * x2})
    for a in [(0, 1), (1, 0), (1, 1), (2, 0), (0, 2)]:
        f = to_sym(build_macdonald(a).M, S.x)
        for i, (e, c) in enumerate(spectral_exponents(a, extremal_tableaux((2,))[0]), 1):
            assert same(S.xi(f, i), {0: Q ** e * T ** c * f[0]})


def test_zero_one_eigenvalues():
    # r = (2, 1) and the row tableau has contents c(1) = 1, c(2) = 0
    node = build_macdonald((0, 1))
    S = node.S
    assert S.content(1) == 1 and S.content(2) == 0
    assert node.zeta_scalars == (t ** S.content(2), monomial(1, S.content(1)))


@pytest.mark.parametrize("shape", SMALL)
def test_eigen_and_leading(shape):
    r = eigenfunctions(shape, 3 if sum(shape) <= 2 else 2)
    assert r.ok, r.failures


@pytest.mark.parametrize("shape", [(2,), (1, 1), (2, 1), (3,), (1, 1, 1)])
def test_oracle_match(shape):
    r = eigenfunctions(shape, 2, oracle=True)
    assert r.ok, r.failures


@pytest.mark.parametrize("shape", [(2, 1), (3,), (2, 2), (3, 1), (2, 1, 1)])
def test_path_independence(shape):
    N = sum(shape)
    a = YangBaxterBuilder(N, shape)
    b = YangBaxterBuilder(N, shape, strategy="descents-first")
    H = hecke_module(shape)
    for alpha in all_compositions_upto(2, N):
        for S in H.tableaux:
            na, nb = a.build(alpha, S), b.build(alpha, S)
            assert na.M == nb.M
            assert na.eta == nb.eta


@pytest.mark.parametrize("shape", [(2, 1), (2, 2), (3, 1)])
def test_eta_closed_form(shape):
    N = sum(shape)
    b = YangBaxterBuilder(N, shape)
    for n in range(3):
        for lam in partitions(n, N):
            for S in b.H.tableaux:
                assert check_eta_closed_form(b.build(lam, S))
    with pytest.raises(ValueError):
        check_eta_closed_form(b.build((0,) * (N - 1) + (1,)))


@pytest.mark.parametrize("shape", [(2, 1), (3,), (2, 2), (2, 1, 1)])
def test_intertwining(shape):
    for alpha in all_compositions_upto(2, sum(shape)):
        assert intertwining_holds(alpha, shape)


@pytest.mark.parametrize("shape", [(2, 1), (3, 1)])
def test_t_action_matches_operator(shape):
    N = sum(shape)
    b = YangBaxterBuilder(N, shape)
    for alpha in all_compositions_upto(2, N):
        for S in b.H.tableaux:
            node = b.build(alpha, S)
            for i in range(1, N):
                assert b.step_down_T(node, i) == apply_T(node.M, i)


def test_sorting_sequence():
    a = [0, 2, 1]
    for i in sorting_sequence(tuple(a)):
        a[i - 1], a[i] = a[i], a[i - 1]
    assert a == [2, 1, 0]
    assert sorting_sequence((2, 1, 0)) == []


def test_nongeneric_point():
    # building (1,0) from (0,1) divides by q t - 1
    b = YangBaxterBuilder(2, (2,), point=(Fraction(1, 2), 2))
    with pytest.raises(NonGenericParameters):
        b.build((1, 0))
    ok = YangBaxterBuilder(2, (2,), point=(Fraction(1, 3), 2))
    ok.build((1, 0))


def test_memo_limit():
    b = YangBaxterBuilder(3, (2, 1), max_nodes=3)
    with pytest.raises(MemoLimitExceeded):
        b.nodes(2)


def test_bad_inputs():
    with pytest.raises(ValueError):
        YangBaxterBuilder(3, (2, 2))
    with pytest.raises(ValueError):
        YangBaxterBuilder(3, (2, 1), strategy="greedy")
    b = YangBaxterBuilder(3, (2, 1))
    with pytest.raises(ValueError):
        b.build((1, 0))
    with pytest.raises(ValueError):
        b.build((1, 0, 0), extremal_tableaux((3,))[0])
    with pytest.raises(IndexError):
        b.t_action((0, 0, 0), b.S0, 3)


def test_graph_export():
    nodes, edges = graph_edges((2, 1), 1)
    assert len(nodes) == 2 * 4
    labels = {lab for _, _, lab in edges}
    assert {"s1", "s2", "t1", "Phi"} <= labels
    dot = export_graph((2, 1), 1)
    assert dot.startswith("digraph") and dot.count("->") == len(edges)
    assert export_graph((2, 1), 1) == dot


def test_node_json():
    node = build_macdonald((0, 1, 0), extremal_tableaux((2, 1))[1])
    doc = json.loads(node.to_json())
    assert doc["alpha"] == [0, 1, 0] and doc["tableau"] == "3,2|1"
    assert doc["path"][-1] in ("s1", "s2", "Phi")
