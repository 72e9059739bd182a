"""The symmetric bilinear form on P_tau and its positivity region.

The form is defined by declaring the M_{alpha,S} mutually orthogonal with

    ||M_{alpha,S}||^2 = E(alpha,S)^{-1} ||M_{alpha^+,S}||^2

and the closed product for partitions.  ``Form`` turns this into Gram
matrices on the monomial (x) tableau basis so that the adjointness
hypotheses can be checked as exact matrix identities.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .combinatorics import k_stat, max_hook, rank_vector, sort_desc, transpose, triangle_sort_key
from .hecke import hecke_module
from .linalg import Matrix, SingularMatrix, vec_add, vec_mat, vec_scale
from .polyops import VVPoly, poly_operators
from .qt_field import (
    ONE,
    ZERO,
    DenominatorZeroAtPoint,
    Scalar,
    eval_point,
    monomial,
    q,
    t,
    u_factor,
)
from .tableaux import Tableau
from .yang_baxter import NonGenericParameters, YangBaxterBuilder

INSIDE, OUTSIDE, BOUNDARY = "inside", "outside", "boundary"


class InvalidParameters(ValueError):
    pass


class SingularAii(ArithmeticError):
    """A_{i,i} is not invertible on the requested graded piece."""


# ---------------------------------------------------------------------------
# closed forms


def qpoch(z: Scalar, n: int) -> Scalar:
    """(z; q)_n = prod_{k=0}^{n-1} (1 - z q^k)."""
    out = ONE
    for k in range(n):
        out = out * (1 - z * monomial(k, 0))
    return out


def qt_factorial(z: Scalar, lam) -> Scalar:
    """(z; q, t)_lam = prod_i (z t^{1-i}; q)_{lam_i}."""
    out = ONE
    for i, x in enumerate(lam, start=1):
        out = out * qpoch(z * monomial(0, 1 - i), x)
    return out


def hook_product(lam, z: Scalar) -> Scalar:
    """h_{q,t}(lam; z) = prod over cells of 1 - z q^{arm} t^{leg}."""
    lam = [x for x in lam if x]
    lt = transpose(lam)
    out = ONE
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            out = out * (1 - z * monomial(row - j, lt[j - 1] - i))
    return out


def e_product(alpha, S: Tableau) -> Scalar:
    """E(alpha,S) = prod_{i<j, alpha_i<alpha_j} u(q^{alpha_j-alpha_i} t^{c(r(j),S)-c(r(i),S)})."""
    r = rank_vector(alpha)
    out = ONE
    N = len(alpha)
    for i in range(N):
        for j in range(i + 1, N):
            if alpha[i] < alpha[j]:
                out = out * u_factor(monomial(alpha[j] - alpha[i],
                                              S.content(r[j]) - S.content(r[i])))
    return out


def _check_partition(lam):
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not a partition")


def norm_partition_vv(lam, S: Tableau) -> Scalar:
    """||M_{lam,S}||^2 for a partition lam."""
    _check_partition(lam)
    N = len(lam)
    H = hecke_module(S.shape)
    c = S.contents
    out = monomial(0, k_stat(lam)) * H.form0_diag[H.tableaux.index(S)]
    out = out / (1 - q) ** sum(lam)
    for i in range(N):
        out = out * qpoch(monomial(1, c[i]), lam[i])
    for i in range(N):
        for j in range(i + 1, N):
            d, n = c[i] - c[j], lam[i] - lam[j]
            if n:
                out = out * qpoch(monomial(1, d - 1), n) * qpoch(monomial(1, d + 1), n)
                out = out / qpoch(monomial(1, d), n) ** 2
    return out


def norm_partition_scalar(lam) -> Scalar:
    """t^{k(lam)} h(lam; q)/h(lam; qt) (q t^N; q, t)_lam / (1-q)^{|lam|}.

    The factorial starts at q t^N: its last factor for lam_m is
    1 - q^{lam_m} t^{N-m+1}, which is what the affine step requires
    (at N = 1 this gives ||x_1||^2 = 1).
    """
    _check_partition(lam)
    N = len(lam)
    out = monomial(0, k_stat(lam)) * hook_product(lam, q) / hook_product(lam, q * t)
    return out * qt_factorial(monomial(1, N), lam) / (1 - q) ** sum(lam)


def norm(alpha, S: Tableau) -> Scalar:
    """||M_{alpha,S}||^2 = ||M_{alpha^+,S}||^2 / E(alpha,S)."""
    return _norm(tuple(alpha), S)


@lru_cache(maxsize=None)
def _norm(alpha, S):
    return norm_partition_vv(sort_desc(alpha), S) / e_product(alpha, S)


# ---------------------------------------------------------------------------
# the form on P_tau


class Form:
    """Gram matrices and form evaluation for fixed N and shape."""

    def __init__(self, N: int, shape, builder: YangBaxterBuilder | None = None):
        self.N = N
        self.shape = tuple(x for x in shape if x)
        self.builder = builder or YangBaxterBuilder(N, self.shape)
        self.ops = poly_operators(N, self.shape)
        self.H = hecke_module(self.shape)
        self._gram: dict = {}

    def to_macdonald(self, f: VVPoly) -> dict:
        """Coefficients {(alpha, contents): c} with f = sum c M_{alpha,S}.

        Back-substitution in decreasing |> order: the x^alpha coefficient of
        M_{alpha,S} is eta(alpha,S) S tau(R_alpha), so the block for alpha is
        solved with tau(R_alpha)^{-1}.
        """
        out = {}
        rem = dict(f.terms)
        tabs = self.H.tableaux
        while rem:
            alpha = max(rem, key=triangle_sort_key)
            v = rem[alpha]
            Rinv = self.H.word(self.builder.build(alpha, tabs[0]).R.inverse())
            for k, c in vec_mat(v, Rinv).items():
                node = self.builder.build(alpha, tabs[k])
                c = c / node.eta_scalar
                out[(alpha, tabs[k].contents)] = c
                for e, w in node.M.terms.items():
                    r = rem.get(e)
                    r = vec_scale(w, -c) if r is None else vec_add(r, w, -c)
                    if r:
                        rem[e] = r
                    else:
                        rem.pop(e, None)
            if alpha in rem:
                raise ArithmeticError(f"back-substitution left a residue at x^{alpha}")
        return out

    def form_eval(self, f: VVPoly, g: VVPoly, point=None):
        """<f, g>; with ``point=(q0, t0)`` the exact rational value there."""
        cf = self.to_macdonald(f)
        cg = self.to_macdonald(g)
        tabs = {S.contents: S for S in self.H.tableaux}
        total = ZERO
        for key, x in cf.items():
            y = cg.get(key)
            if y is not None:
                total = total + x * y * norm(key[0], tabs[key[1]])
        if point is None:
            return total
        try:
            return eval_point(total, *point)
        except DenominatorZeroAtPoint as exc:
            raise NonGenericParameters(str(exc)) from None

    def gram(self, n: int) -> Matrix:
        """Gram matrix of <.,.> on the degree-n monomial (x) tableau basis."""
        G = self._gram.get(n)
        if G is not None:
            return G
        B = self.ops.basis(n)
        tabs = {S.contents: S for S in self.H.tableaux}
        keys = [(a, S.contents) for a in B.monomials for S in self.H.tableaux]
        kidx = {k: j for j, k in enumerate(keys)}
        C = []
        for r in range(B.size):
            coeffs = self.to_macdonald(B.element(r))
            C.append({kidx[k]: c for k, c in coeffs.items()})
        Cm = Matrix(B.size, B.size, C)
        D = Matrix.diag([norm(a, tabs[c]) for a, c in keys])
        G = Cm @ D @ Cm.transpose()
        self._gram[n] = G
        return G

    # -- hypotheses as matrix identities
    def self_adjoint(self, X: Matrix, n: int) -> bool:
        G = self.gram(n)
        return X @ G == G @ X.transpose()

    def bf2_4_holds(self, n: int) -> bool:
        """<f D_N, g> = (1-q) <f, x_N (g w* w)> for f in P_n, g in P_{n-1}."""
        if n < 1:
            raise ValueError("needs n >= 1")
        P = self.ops
        lhs = P.D(self.N, n) @ self.gram(n - 1)
        W = P.wstar(n - 1) @ P.w(n - 1) @ P.x(self.N, n - 1)
        rhs = (self.gram(n) @ W.transpose()).scale(1 - q)
        return lhs == rhs

    # -- reduction operators
    def reduction_operators(self, n: int):
        """A_{i,j}, B_{i,j} (1 <= i <= j <= N) as matrices on P_{n-1}."""
        if n < 1:
            raise ValueError("needs n >= 1")
        P, N, m = self.ops, self.N, n - 1
        A = {(N, N): (P.wstar(m) @ P.w(m)).scale(1 - q)}
        tinv = t.inverse()
        for k in range(N - 1, 0, -1):
            Tk = P.T(k, m)
            A[(k, k)] = (Tk @ A[(k + 1, k + 1)] @ Tk).scale(tinv)
            A[(k, k + 1)] = (Tk @ A[(k + 1, k + 1)]).scale((t - 1) * tinv)
            for j in range(k + 2, N + 1):
                A[(k, j)] = (Tk @ A[(k + 1, j)] @ Tk).scale(tinv)
        Binv = {}
        for k in range(1, N + 1):
            try:
                Binv[k] = A[(k, k)].inverse()
            except SingularMatrix:
                raise SingularAii(f"A_{k},{k} is singular on P_{m}") from None
        B = {}
        for k in range(N, 0, -1):
            B[(k, k)] = Binv[k]
            for mm in range(k + 1, N + 1):
                acc = Matrix(A[(k, k)].nrows, A[(k, k)].ncols)
                for j in range(k + 1, mm + 1):
                    acc = acc + Binv[k] @ A[(k, j)] @ B[(j, mm)]
                B[(k, mm)] = acc.scale(-1)
        return A, B

    def fdxg_holds(self, n: int) -> dict:
        """Check both reduction identities for f in P_n, g in P_{n-1}."""
        A, B = self.reduction_operators(n)
        P, N = self.ops, self.N
        Gn, Gm = self.gram(n), self.gram(n - 1)
        res = {}
        for i in range(1, N + 1):
            lhs = P.D(i, n) @ Gm
            rhs = Matrix(lhs.nrows, lhs.ncols)
            for j in range(i, N + 1):
                rhs = rhs + Gn @ (A[(i, j)] @ P.x(j, n - 1)).transpose()
            res[("A", i)] = lhs == rhs
            lhs = Gn @ P.x(i, n - 1).transpose()
            rhs = Matrix(lhs.nrows, lhs.ncols)
            for j in range(i, N + 1):
                rhs = rhs + P.D(j, n) @ Gm @ B[(i, j)].transpose()
            res[("B", i)] = lhs == rhs
        return res


# ---------------------------------------------------------------------------
# positivity


def positivity_classify(q0, t0, tau) -> str:
    """inside / outside / boundary of the positivity region, exactly.

    For dim V_tau >= 2 the region is q < min(t^h, t^-h) or q > max(t^h, t^-h)
    with h the maximal hook length.  For the one-dimensional shape (N) the
    sharper scalar region q < min(1, t^-N) or q > max(1, t^-N) is used.
    """
    q0, t0 = Fraction(q0), Fraction(t0)
    tau = tuple(x for x in tau if x)
    if q0 <= 0 or t0 <= 0:
        raise InvalidParameters("q and t must be positive")
    if q0 == 1:
        raise InvalidParameters("q = 1 is excluded")
    scalar = len(tau) == 1
    if not scalar and t0 == 1:
        raise InvalidParameters("t = 1 is excluded")
    h = max_hook(tau)
    if scalar:
        lo, hi = sorted((Fraction(1), t0 ** -h))
        if q0 == t0 ** -h:
            return BOUNDARY
    else:
        lo, hi = sorted((t0 ** h, t0 ** -h))
        if q0 in (lo, hi):
            return BOUNDARY
    return INSIDE if q0 < lo or q0 > hi else OUTSIDE


def region_boundary_csv(h: int, log10_t_range=(-2.0, 2.0), samples: int = 41) -> str:
    """Sampled boundary lines log q = h log t, log q = -h log t and q = 1."""
    if h < 1:
        raise ValueError("h must be >= 1")
    lo, hi = log10_t_range
    step = (hi - lo) / (samples - 1)
    lines = ["log10_q,log10_t,curve_id"]
    for curve, slope in ((f"q=t^{h}", h), (f"q=t^-{h}", -h)):
        for k in range(samples):
            lt = lo + k * step
            lines.append(f"{slope * lt + 0.0:.6g},{lt + 0.0:.6g},{curve}")
    for k in range(samples):
        lt = lo + k * step
        lines.append(f"0,{lt + 0.0:.6g},q=1")
    return "\n".join(lines) + "\n"


def norm_recursion_failures(shape, max_degree: int) -> list:
    """Labels where the closed norm breaks the s_i, tableau or Phi recursion.

    For every (alpha, S) with |alpha| <= max_degree:
    ||M_{alpha s_i}|| = u(rho) ||M_alpha|| when alpha_i < alpha_{i+1};
    ||M_{alpha,S^(j)}|| = u(t^{c(j+1)-c(j)}) ||M_{alpha,S}|| when alpha_i = alpha_{i+1};
    ||M_{alpha Phi}|| = (1 - q^{alpha_1+1} t^{c(r(1),S)})/(1-q) ||M_alpha||
    (all squared norms).  An empty list means every recursion holds.
    """
    from .combinatorics import all_compositions_upto, phi_step, swap
    from .tableaux import exchange

    H = hecke_module(shape)
    N = H.N
    bad = []
    for alpha in all_compositions_upto(max_degree, N):
        r = rank_vector(alpha)
        for S in H.tableaux:
            base = norm(alpha, S)
            for i in range(1, N):
                a, b = alpha[i - 1], alpha[i]
                if a < b:
                    rho = monomial(b - a, S.content(r[i]) - S.content(r[i - 1]))
                    if norm(swap(alpha, i), S) != u_factor(rho) * base:
                        bad.append(("s", alpha, S.contents, i))
                elif a == b:
                    j = r[i - 1]
                    S2 = exchange(S, j)
                    if isinstance(S2, Tableau):
                        rho = monomial(0, S.content(j + 1) - S.content(j))
                        if norm(alpha, S2) != u_factor(rho) * base:
                            bad.append(("tableau", alpha, S.contents, j))
            if sum(alpha) < max_degree:
                f = (1 - monomial(alpha[0] + 1, S.content(r[0]))) / (1 - q)
                if norm(phi_step(alpha), S) != f * base:
                    bad.append(("Phi", alpha, S.contents, 0))
    return bad


def norm_table(N: int, shape, max_degree: int, point=None) -> list:
    """[(alpha, S, value)] for |alpha| <= max_degree; evaluated if ``point``."""
    from .combinatorics import all_compositions_upto

    H = hecke_module(shape)
    rows = []
    for alpha in all_compositions_upto(max_degree, N):
        for S in H.tableaux:
            v = norm(alpha, S)
            if point is not None:
                try:
                    v = eval_point(v, *point)
                except DenominatorZeroAtPoint as exc:
                    raise NonGenericParameters(str(exc)) from None
            rows.append((alpha, S, v))
    return rows


__all__ = [
    "INSIDE", "OUTSIDE", "BOUNDARY", "InvalidParameters", "SingularAii",
    "qpoch", "qt_factorial", "hook_product", "e_product", "norm_partition_vv",
    "norm_partition_scalar", "norm", "Form", "positivity_classify",
    "region_boundary_csv", "norm_table", "norm_recursion_failures",
]
