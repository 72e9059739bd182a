"""Nonsymmetric Macdonald polynomials M_{alpha,S} from the Yang-Baxter graph.

The root is ``M_{0,S0} = 1 (x) S0``.  Three kinds of step generate every
node:

* s_i (alpha_i < alpha_{i+1}):  M_{alpha.s_i,S} = M T_i + (t-1)/(rho-1) M,
  with rho = zeta(i+1)/zeta(i);
* tableau step at alpha = 0 (c(j,S) - c(j+1,S) >= 2):
  M_{0,S^(j)} = M T_j + (t-1)/(rho-1) M, rho = t^{c(j+1,S) - c(j,S)};
* affine step Phi:  M_{alpha Phi,S} = x_N (M_{alpha,S} w).

Scalar polynomials are the shape ``(N,)`` case of the same code.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import (
    GREATER,
    all_compositions_upto,
    compositions,
    is_partition,
    phi_inverse,
    phi_step,
    rank_vector,
    swap,
    triangle_compare,
)
from .hecke import HeckeWord, hecke_module
from .polyops import VVPoly, apply_T, apply_w, apply_xi
from .qt_field import ONE, Scalar, eval_point, monomial, t
from .tableaux import (
    REVERSED,
    Blocked,
    Tableau,
    exchange,
    extremal_tableaux,
    format_contents,
    tableau_index,
)


class NonGenericParameters(ArithmeticError):
    """A step denominator vanishes at the requested specialization point."""


class MemoLimitExceeded(RuntimeError):
    """The builder's memo store reached ``max_nodes``."""


# ---------------------------------------------------------------------------
# labels


def spectral_exponents(alpha, S: Tableau) -> tuple:
    """Pairs (a, b) with zeta(i) = q^a t^b = q^{alpha_i} t^{c(r_alpha(i), S)}."""
    r = rank_vector(alpha)
    return tuple((a, S.content(ri)) for a, ri in zip(alpha, r))


def spectral_vector(alpha, S: Tableau) -> tuple:
    return tuple(monomial(a, b) for a, b in spectral_exponents(alpha, S))


def sorting_sequence(alpha) -> list:
    """Indices i_1, ..., i_m with alpha.s_{i_1} ... s_{i_m} = alpha^+, m = inv(alpha)."""
    a = list(alpha)
    seq = []
    while True:
        for i in range(len(a) - 1):
            if a[i] < a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                seq.append(i + 1)
                break
        else:
            return seq


def r_alpha_word(alpha) -> HeckeWord:
    """R_alpha = (T_{i_1} ... T_{i_m})^{-1} for a minimal sorting sequence."""
    return HeckeWord.of(*sorting_sequence(alpha)).inverse()


def eta_partition_exponents(lam, S: Tableau) -> tuple:
    """(Sigma_1, Sigma_2) with eta(lam, S) = q^{Sigma_1} t^{Sigma_2}."""
    N = len(lam)
    s1 = sum(x * (x - 1) for x in lam) // 2
    s2 = sum(x * (N - i + S.content(i)) for i, x in enumerate(lam, start=1))
    return s1, s2


# ---------------------------------------------------------------------------
# nodes


@dataclass
class Node:
    alpha: tuple
    S: Tableau
    zeta: tuple
    R: HeckeWord
    M: VVPoly
    eta: tuple  # (a, b): eta = q^a t^b
    path: list = field(default_factory=list)

    @property
    def key(self):
        return (self.alpha, self.S.contents)

    @property
    def eta_scalar(self) -> Scalar:
        return monomial(*self.eta)

    @property
    def zeta_scalars(self) -> tuple:
        return tuple(monomial(a, b) for a, b in self.zeta)

    def leading_vector(self) -> dict:
        """Expected coefficient of x^alpha: eta * S tau(R_alpha)."""
        H = hecke_module(self.S.shape)
        v = H.apply_word({tableau_index(self.S): ONE}, self.R)
        e = self.eta_scalar
        return {k: x * e for k, x in v.items()}

    def to_json_obj(self):
        return {
            "alpha": list(self.alpha),
            "tableau": str(self.S),
            "contents": format_contents(self.S.contents),
            "zeta": [str(z) for z in self.zeta_scalars],
            "eta": str(self.eta_scalar),
            "R": str(self.R),
            "path": self.path,
            "M": self.M.to_json_obj(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _zeta_ratio(z, i, j):
    """zeta(j)/zeta(i) as an exponent pair (1-based indices)."""
    return (z[j - 1][0] - z[i - 1][0], z[j - 1][1] - z[i - 1][1])


class YangBaxterBuilder:
    """Memoized construction of M_{alpha,S} for fixed N and shape.

    ``strategy="canonical"`` uses the documented path: affine step whenever
    alpha_N > 0, otherwise an s_i step at the largest descent.  The
    ``"descents-first"`` strategy undoes the smallest descent first and uses
    the affine step only on nondecreasing labels; it is an independent route
    used for path-independence checks.  With ``point=(q0, t0)`` every step
    denominator is checked to be nonzero at that point.
    """

    def __init__(self, N: int, shape, strategy: str = "canonical", point=None,
                 max_nodes: int | None = None):
        self.shape = tuple(x for x in shape if x)
        if sum(self.shape) != N:
            raise ValueError(f"shape {self.shape} is not a partition of {N}")
        if strategy not in ("canonical", "descents-first"):
            raise ValueError(f"unknown strategy {strategy!r}")
        self.N = N
        self.strategy = strategy
        self.point = None if point is None else (Fraction(point[0]), Fraction(point[1]))
        self.H = hecke_module(self.shape)
        self.S0, self.S1 = extremal_tableaux(self.shape)
        self.store: dict = {}
        self.max_nodes = max_nodes

    # -- helpers
    def _check_denominator(self, ratio):
        if self.point is None:
            return
        q0, t0 = self.point
        if q0 ** ratio[0] * t0 ** ratio[1] == 1:
            raise NonGenericParameters(
                f"step denominator q^{ratio[0]} t^{ratio[1]} - 1 vanishes at q={q0}, t={t0}")

    def _step(self, M: VVPoly, i: int, ratio) -> VVPoly:
        self._check_denominator(ratio)
        c = (t - 1) / (monomial(*ratio) - 1)
        return apply_T(M, i) + M.scale(c)

    def _parent_tableau(self, S: Tableau):
        """Admissible reverse move S = P^(j) with P closer to S0."""
        cands = [j for j in range(1, self.N) if S.content(j + 1) - S.content(j) >= 2]
        if not cands:
            return None
        j = cands[0] if self.strategy == "canonical" else cands[-1]
        return j, exchange(S, j, allow_reverse=True)

    # -- construction
    def root(self, S: Tableau) -> Node:
        return self.build((0,) * self.N, S)

    def build(self, alpha, S=None) -> Node:
        alpha = tuple(alpha)
        if len(alpha) != self.N:
            raise ValueError(f"composition {alpha} does not have length {self.N}")
        if S is None:
            S = self.S0
        if S.shape != self.shape:
            raise ValueError(f"tableau {S} does not have shape {self.shape}")
        key = (alpha, S.contents)
        node = self.store.get(key)
        if node is None:
            node = self._build(alpha, S)
            if self.max_nodes is not None and len(self.store) >= self.max_nodes:
                raise MemoLimitExceeded(f"memo store is capped at {self.max_nodes} nodes")
            self.store[key] = node
        return node

    def _build(self, alpha, S) -> Node:
        N = self.N
        if not any(alpha):
            if S == self.S0:
                M = VVPoly.constant(N, self.shape, {tableau_index(S): ONE})
                return Node(alpha, S, spectral_exponents(alpha, S), HeckeWord(), M, (0, 0), [])
            j, P = self._parent_tableau(S)
            parent = self.build(alpha, P)
            ratio = (0, P.content(j + 1) - P.content(j))
            M = self._step(parent.M, j, ratio)
            return Node(alpha, S, spectral_exponents(alpha, S), HeckeWord(), M,
                        parent.eta, parent.path + [f"t{j}"])
        descents = [i for i in range(1, N) if alpha[i - 1] > alpha[i]]
        use_affine = alpha[-1] > 0 if self.strategy == "canonical" else not descents
        if use_affine:
            beta = phi_inverse(alpha)
            parent = self.build(beta, S)
            M = apply_w(parent.M).mul_x(N)
            m = rank_vector(beta)[0]
            eta = (parent.eta[0] + beta[0], parent.eta[1] + N - m + S.content(m))
            R = r_alpha_word(alpha)
            return Node(alpha, S, spectral_exponents(alpha, S), R, M, eta, parent.path + ["Phi"])
        i = descents[-1] if self.strategy == "canonical" else descents[0]
        beta = swap(alpha, i)
        parent = self.build(beta, S)
        M = self._step(parent.M, i, _zeta_ratio(parent.zeta, i, i + 1))
        return Node(alpha, S, spectral_exponents(alpha, S), r_alpha_word(alpha), M,
                    parent.eta, parent.path + [f"s{i}"])

    def nodes(self, degree: int):
        """All nodes (alpha, S) with |alpha| = degree."""
        return [self.build(a, S) for a in compositions(degree, self.N) for S in self.H.tableaux]

    # -- action of T_i in the Macdonald basis
    def t_action(self, alpha, S: Tableau, i: int) -> list:
        """M_{alpha,S} T_i as a list of (coefficient, alpha', S')."""
        alpha = tuple(alpha)
        N = self.N
        if not 1 <= i < N:
            raise IndexError(f"T_{i} undefined for N={N}")
        z = spectral_exponents(alpha, S)
        a, b = alpha[i - 1], alpha[i]
        if a < b:
            rho = monomial(*_zeta_ratio(z, i, i + 1))
            return [(ONE, swap(alpha, i), S), (-(t - 1) / (rho - 1), alpha, S)]
        if a > b:
            rho = monomial(*_zeta_ratio(z, i + 1, i))
            return [((1 - t * rho) * (t - rho) / (1 - rho) ** 2, swap(alpha, i), S),
                    (rho * (1 - t) / (1 - rho), alpha, S)]
        j = rank_vector(alpha)[i - 1]
        S2 = exchange(S, j)
        if S2 is REVERSED:
            rho = monomial(0, S.content(j) - S.content(j + 1))
            S2 = exchange(S, j, allow_reverse=True)
            return [((1 - t * rho) * (t - rho) / (1 - rho) ** 2, alpha, S2),
                    (rho * (1 - t) / (1 - rho), alpha, S)]
        if isinstance(S2, Blocked):
            return [(t if S2.reason == "same-row" else -ONE, alpha, S)]
        rho = monomial(0, S.content(j + 1) - S.content(j))
        return [(ONE, alpha, S2), (-(t - 1) / (rho - 1), alpha, S)]

    def step_down_T(self, node: Node, i: int) -> VVPoly:
        """M_{alpha,S} T_i assembled from the Macdonald basis."""
        out = VVPoly.zero(self.N, self.shape)
        for c, a2, S2 in self.t_action(node.alpha, node.S, i):
            out = out + self.build(a2, S2).M.scale(c)
        return out

    # -- checks
    def check_eigen(self, node: Node) -> bool:
        for i, z in enumerate(node.zeta_scalars, start=1):
            if apply_xi(node.M, i) != node.M.scale(z):
                return False
        return True

    def check_leading(self, node: Node) -> bool:
        """Leading coefficient eta S tau(R_alpha) and |>-triangularity."""
        if node.M.coeff(node.alpha) != node.leading_vector():
            return False
        return all(e == node.alpha or triangle_compare(node.alpha, e) == GREATER
                   for e in node.M.terms)


def build_macdonald(alpha, S: Tableau | None = None, shape=None, builder=None) -> Node:
    """One-shot construction; pass ``builder`` to share the memo store."""
    if builder is None:
        if shape is None:
            shape = S.shape if S is not None else (len(alpha),)
        builder = YangBaxterBuilder(len(alpha), shape)
    return builder.build(alpha, S)


def check_eta_closed_form(node: Node) -> bool:
    if not is_partition(node.alpha):
        raise ValueError("closed form applies to partitions only")
    return node.eta == eta_partition_exponents(node.alpha, node.S)


def intertwining_holds(alpha, shape) -> bool:
    """R_alpha omega = t^{N-m} phi_m R_{alpha Phi}, m = r_alpha(1), as matrices."""
    H = hecke_module(shape)
    N = H.N
    m = rank_vector(alpha)[0]
    lhs = H.word(r_alpha_word(alpha)) @ H.omega
    rhs = (H.phi(m) @ H.word(r_alpha_word(phi_step(alpha)))).scale(t ** (N - m))
    return lhs == rhs


# ---------------------------------------------------------------------------
# graph export


def graph_edges(shape, max_degree: int):
    """Nodes and labeled edges of the graph restricted to |alpha| <= max_degree."""
    shape = tuple(x for x in shape if x)
    N = sum(shape)
    tabs = hecke_module(shape).tableaux
    nodes, edges = [], []
    for alpha in all_compositions_upto(max_degree, N):
        r = rank_vector(alpha)
        for S in tabs:
            nodes.append((alpha, S))
            for i in range(1, N):
                if alpha[i - 1] < alpha[i]:
                    edges.append(((alpha, S), (swap(alpha, i), S), f"s{i}"))
                elif alpha[i - 1] == alpha[i]:
                    j = r[i - 1]
                    S2 = exchange(S, j)
                    if isinstance(S2, Tableau):
                        edges.append(((alpha, S), (alpha, S2), f"t{j}"))
            if sum(alpha) < max_degree:
                edges.append(((alpha, S), (phi_step(alpha), S), "Phi"))
    return nodes, edges


def export_graph(shape, max_degree: int) -> str:
    """DOT document of the graph with |alpha| <= max_degree."""
    nodes, edges = graph_edges(shape, max_degree)

    def label(n):
        alpha, S = n
        return '"(' + ",".join(map(str, alpha)) + " | " + format_contents(S.contents) + ')"'

    lines = ["digraph yang_baxter {"]
    lines += [f"  {label(n)};" for n in nodes]
    lines += [f'  {label(a)} -> {label(b)} [label="{lab}"];' for a, b, lab in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def specialize_check(node: Node, q0, t0) -> dict:
    """Evaluate all coefficients of M at a rational point (exact)."""
    return {e: {k: eval_point(x, q0, t0) for k, x in v.items()} for e, v in node.M.terms.items()}


__all__ = [
    "NonGenericParameters", "MemoLimitExceeded", "Node", "YangBaxterBuilder", "spectral_vector",
    "spectral_exponents", "sorting_sequence", "r_alpha_word",
    "eta_partition_exponents", "build_macdonald", "check_eta_closed_form",
    "intertwining_holds", "graph_edges", "export_graph", "specialize_check",
]
