"""Invariant suites shared by the ``verify`` command and the acceptance run.

Each suite returns a :class:`SuiteResult`; ``failures`` holds short
counterexample descriptions (empty when the suite passes).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .bilinear_form import Form
from .combinatorics import count_rsyt
from .hecke import hecke_module
from .linalg import Matrix
from .polyops import NotDivisible, poly_operators
from .qt_field import t
from .yang_baxter import YangBaxterBuilder

SUITES = ("hecke", "jm", "operators", "eigen", "bf2", "fdxg", "norms")


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, what: str):
        self.checked += 1
        if not cond:
            self.failures.append(what)

    def to_json_obj(self):
        return {"suite": self.name, "pass": self.ok, "checked": self.checked,
                "failures": self.failures[:20]}


def hecke_relations(tau) -> SuiteResult:
    """Quadratic, braid and commuting relations of tau(T_i), plus dimension."""
    res = SuiteResult("hecke")
    H = hecke_module(tau)
    I = Matrix.identity(H.dim)
    res.check(H.dim == count_rsyt(H.shape), f"dim {H.dim} != hook count")
    for i in range(1, H.N):
        Ti = H.T(i)
        res.check(((Ti + I) @ (Ti - Matrix.identity(H.dim, t))).is_zero(), f"quadratic T{i}")
        res.check(Ti @ H.T_inv(i) == I, f"inverse T{i}")
        for j in range(i + 1, H.N):
            Tj = H.T(j)
            if j == i + 1:
                res.check(Ti @ Tj @ Ti == Tj @ Ti @ Tj, f"braid T{i} T{j}")
            else:
                res.check(Ti @ Tj == Tj @ Ti, f"commute T{i} T{j}")
    return res


def jucys_murphy(tau) -> SuiteResult:
    """phi_i commute and act on S by t^{c(i,S)}."""
    res = SuiteResult("jm")
    H = hecke_module(tau)
    for i in range(1, H.N + 1):
        diag = [t ** S.content(i) for S in H.tableaux]
        res.check(H.phi(i) == Matrix.diag(diag), f"phi_{i} not diag(t^c)")
        for j in range(i + 1, H.N + 1):
            res.check(H.phi(i) @ H.phi(j) == H.phi(j) @ H.phi(i), f"phi_{i} phi_{j}")
    return res


def operator_relations(tau, max_degree: int) -> SuiteResult:
    """Hecke relations of T_i on P_n, commuting xi_i, exact D_i."""
    res = SuiteResult("operators")
    H = hecke_module(tau)
    N = H.N
    P = poly_operators(N, H.shape)
    for n in range(max_degree + 1):
        sz = P.basis(n).size
        I = Matrix.identity(sz)
        for i in range(1, N):
            Ti = P.T(i, n)
            res.check(((Ti + I) @ (Ti - Matrix.identity(sz, t))).is_zero(), f"quadratic T{i} n={n}")
            for j in range(i + 1, N):
                Tj = P.T(j, n)
                rel = Ti @ Tj @ Ti == Tj @ Ti @ Tj if j == i + 1 else Ti @ Tj == Tj @ Ti
                res.check(rel, f"braid/commute T{i} T{j} n={n}")
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                res.check(P.xi(i, n) @ P.xi(j, n) == P.xi(j, n) @ P.xi(i, n), f"xi{i} xi{j} n={n}")
        if n >= 1:
            for i in range(1, N + 1):
                try:
                    P.D(i, n)
                    res.check(True, "")
                except NotDivisible as exc:
                    res.check(False, f"D{i} n={n}: {exc}")
    return res


def eigenfunctions(tau, max_degree: int, oracle: bool = False) -> SuiteResult:
    """Eigen equations and leading terms of graph nodes; optional oracle match."""
    res = SuiteResult("eigen")
    H = hecke_module(tau)
    b = YangBaxterBuilder(H.N, H.shape)
    for n in range(max_degree + 1):
        for node in b.nodes(n):
            lab = f"alpha={node.alpha} S={node.S}"
            res.check(b.check_eigen(node), f"eigen {lab}")
            res.check(b.check_leading(node), f"leading {lab}")
            if oracle:
                from .oracle import eigen_solve
                ref = eigen_solve(node.alpha, node.S, H.shape,
                                  normalize_to=node.M.coeff(node.alpha))
                res.check(ref == node.M, f"oracle {lab}")
    return res


def bf2(tau, max_degree: int) -> SuiteResult:
    """Gram symmetry, T_i and xi_N self-adjoint, and the D_N / w* identity."""
    res = SuiteResult("bf2")
    H = hecke_module(tau)
    F = Form(H.N, H.shape)
    P = F.ops
    for n in range(max_degree + 1):
        G = F.gram(n)
        res.check(G == G.transpose(), f"Gram not symmetric n={n}")
        for i in range(1, H.N):
            res.check(F.self_adjoint(P.T(i, n), n), f"T{i} not self-adjoint n={n}")
        res.check(F.self_adjoint(P.xi(H.N, n), n), f"xi_N not self-adjoint n={n}")
        if n >= 1:
            res.check(F.bf2_4_holds(n), f"D_N identity fails n={n}")
    return res


def fdxg(tau, degree: int) -> SuiteResult:
    """Both reduction identities with f of the given degree."""
    res = SuiteResult("fdxg")
    H = hecke_module(tau)
    for (kind, i), ok in sorted(Form(H.N, H.shape).fdxg_holds(degree).items()):
        res.check(ok, f"{kind} identity i={i} degree={degree}")
    return res


def norm_recursions(tau, max_degree: int) -> SuiteResult:
    from .bilinear_form import norm_recursion_failures
    res = SuiteResult("norms")
    bad = norm_recursion_failures(tau, max_degree)
    res.check(not bad, f"recursions fail at {bad[:5]}")
    return res


def run_suite(name: str, tau, max_degree: int = 2, degree: int = 1) -> SuiteResult:
    if name == "hecke":
        return hecke_relations(tau)
    if name == "jm":
        return jucys_murphy(tau)
    if name == "operators":
        return operator_relations(tau, max_degree)
    if name == "eigen":
        return eigenfunctions(tau, max_degree)
    if name == "bf2":
        return bf2(tau, max_degree)
    if name == "fdxg":
        return fdxg(tau, degree)
    if name == "norms":
        return norm_recursions(tau, max_degree)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")


__all__ = [
    "SUITES", "SuiteResult", "hecke_relations", "jucys_murphy", "operator_relations",
    "eigenfunctions", "bf2", "fdxg", "norm_recursions", "run_suite",
]
