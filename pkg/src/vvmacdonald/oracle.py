"""Independent constructions used to cross-check the graph.

``eigen_solve`` finds M_{alpha,S} as a joint eigenvector of the Cherednik
matrices on the graded component, with no reference to the graph steps.
"""
from __future__ import annotations

from .linalg import Matrix, vec_scale
from .polyops import VVPoly, poly_operators
from .qt_field import ONE, ZERO, monomial


class OracleFailure(ArithmeticError):
    pass


def eigen_solve(alpha, S, shape, normalize_to: dict | None = None) -> VVPoly:
    """Joint eigenvector of xi_1..xi_N with eigenvalues q^{alpha_i} t^{c(r(i),S)}.

    The combination X = sum 2^{i-1} xi_i has eigenvalue sum 2^{i-1} zeta(i),
    which separates spectral vectors, so its eigenspace is one-dimensional.
    ``normalize_to`` fixes the coefficient vector of x^alpha at its first
    nonzero entry; otherwise that entry is scaled to 1.
    """
    from .yang_baxter import spectral_exponents

    alpha = tuple(alpha)
    N = len(alpha)
    n = sum(alpha)
    P = poly_operators(N, shape)
    B = P.basis(n)
    lam = ZERO
    X = Matrix(B.size, B.size)
    for i, (a, b) in enumerate(spectral_exponents(alpha, S), start=1):
        X = X + P.xi(i, n).scale(2 ** (i - 1))
        lam = lam + monomial(a, b) * 2 ** (i - 1)
    null = (X - Matrix.identity(B.size, lam)).left_nullspace()
    if len(null) != 1:
        raise OracleFailure(f"eigenspace has dimension {len(null)}")
    v = null[0]
    lead = {k: v.get(B.index(alpha, k)) for k in range(B.dim_v)}
    lead = {k: x for k, x in lead.items() if x is not None}
    if not lead:
        raise OracleFailure(f"eigenvector has no x^{alpha} component")
    k0 = min(lead)
    target = ONE if normalize_to is None else normalize_to.get(k0)
    if target is None:
        raise OracleFailure("normalization component missing")
    return B.from_vector(vec_scale(v, target / lead[k0]))


__all__ = ["eigen_solve", "OracleFailure"]
