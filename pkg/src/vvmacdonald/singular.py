"""Singular polynomials on the boundary curves q = t^{+-h}.

A polynomial f is singular when f D_i = 0 for every i.  Two families are
certified here, both built symbolically in Q(q,t) and only then specialised:

* ``S1``: alpha = (1^{tau_l}, 0, ...), tableau S1, q = t^{h};
* ``S0``: alpha = (1^m, 0, ...), m = length of the last column, S0, q = t^{-h}.
"""
from __future__ import annotations

import json
from fractions import Fraction
from dataclasses import dataclass, field

from .bilinear_form import BOUNDARY, norm, positivity_classify
from .combinatorics import max_hook, transpose
from .hecke import hecke_module
from .polyops import VVPoly, apply_D, apply_T
from .qt_field import (
    IdenticallyZeroDenominator,
    Scalar,
    TScalar,
    monomial,
    q,
    substitute_q,
    t,
    u_factor,
)
from .tableaux import Tableau, extremal_tableaux
from .yang_baxter import YangBaxterBuilder


class SubstitutionPole(ArithmeticError):
    """A coefficient of M has a pole on the curve q = t^e."""


def _last_nonzero(alpha) -> int:
    return max((i for i, a in enumerate(alpha, start=1) if a), default=0)


def _builder(S: Tableau, builder=None) -> YangBaxterBuilder:
    if builder is not None:
        return builder
    return YangBaxterBuilder(S.N, S.shape)


def check_zero_diff(alpha, S: Tableau, builder=None) -> bool:
    """True iff M_{alpha,S} D_j = 0 for every j past the last nonzero part."""
    alpha = tuple(alpha)
    M = _builder(S, builder).build(alpha, S).M
    return all(apply_D(M, j).is_zero() for j in range(_last_nonzero(alpha) + 1, len(alpha) + 1))


def lemma_product(alpha, S: Tableau) -> Scalar:
    """t^{m-N} prod_{j=m}^{N-1} u(q t^{c(m,S) - c(j+1,S)})."""
    N, m = len(alpha), _last_nonzero(alpha)
    out = monomial(0, m - N)
    for j in range(m, N):
        out = out * u_factor(q * monomial(0, S.content(m) - S.content(j + 1)))
    return out


def iterated_u_identity(alpha, S: Tableau, builder=None):
    """Both sides of M_{alpha,S} D_m = c * M_{alpha^(N),S} D_N T_{N-1} ... T_m.

    Here m is the position of the trailing 1 and alpha^(N) moves it to the
    end.  Raises ``ValueError`` unless alpha = (alpha_1..alpha_{m-1}, 1, 0..)
    with alpha_i >= 1 for i <= m.
    """
    alpha = tuple(alpha)
    N, m = len(alpha), _last_nonzero(alpha)
    if m == 0 or alpha[m - 1] != 1 or any(a < 1 for a in alpha[:m]):
        raise ValueError(f"{alpha} does not have the form (a_1..a_(m-1), 1, 0..) with a_i >= 1")
    b = _builder(S, builder)
    lhs = apply_D(b.build(alpha, S).M, m)
    alpha_N = alpha[:m - 1] + (0,) * (N - m) + (1,)
    g = apply_D(b.build(alpha_N, S).M, N)
    for j in range(N - 1, m - 1, -1):
        g = apply_T(g, j)
    return lhs, g.scale(lemma_product(alpha, S))


# ---------------------------------------------------------------------------
# certificates


@dataclass
class SingularCertificate:
    shape: tuple
    alpha: tuple
    tableau: str
    exponent: int
    residuals: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return all(r.is_zero() for r in self.residuals)

    def to_json_obj(self):
        return {
            "shape": list(self.shape),
            "alpha": list(self.alpha),
            "tableau": self.tableau,
            "exponent": self.exponent,
            "residuals": [str(r) for r in self.residuals],
            "valid": self.valid,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def family_data(tau, family: str):
    """(alpha, S, e) of the designated singular pair for ``family``."""
    tau = tuple(x for x in tau if x)
    if hecke_module(tau).dim < 2:
        raise ValueError(f"shape {tau} has a one-dimensional module; no singular family")
    N, h = sum(tau), max_hook(tau)
    S0, S1 = extremal_tableaux(tau)
    if family == "S1":
        m, S, e = tau[-1], S1, h
    elif family == "S0":
        m, S, e = transpose(tau)[-1], S0, -h
    else:
        raise ValueError(f"unknown family {family!r}; expected 'S0' or 'S1'")
    return (1,) * m + (0,) * (N - m), S, e


def specialise(f: VVPoly, e: int) -> dict:
    """Coefficient-wise q = t^e; keys (exponent, k), values TScalar."""
    out = {}
    for ex, v in f.terms.items():
        for k, c in v.items():
            try:
                out[(ex, k)] = substitute_q(c, e)
            except IdenticallyZeroDenominator as err:
                raise SubstitutionPole(str(err)) from None
    return out


def _residual(f: VVPoly, e: int) -> TScalar:
    # sum of squares over a real field: zero iff every coefficient is zero
    total = TScalar(0)
    for c in specialise(f, e).values():
        total = total + c * c
    return total


def certify(tau, family: str, builder=None) -> SingularCertificate:
    alpha, S, e = family_data(tau, family)
    M = _builder(S, builder).build(alpha, S).M
    specialise(M, e)  # pole check on M itself
    res = [_residual(apply_D(M, i), e) for i in range(1, len(alpha) + 1)]
    return SingularCertificate(S.shape, alpha, family, e, res)


def certify_singular_S1(tau, builder=None) -> SingularCertificate:
    return certify(tau, "S1", builder)


def certify_singular_S0(tau, builder=None) -> SingularCertificate:
    return certify(tau, "S0", builder)


def generic_nonsingular(tau, family: str, builder=None) -> bool:
    """True iff some M D_i is nonzero in Q(q,t)."""
    alpha, S, _ = family_data(tau, family)
    M = _builder(S, builder).build(alpha, S).M
    return any(not apply_D(M, i).is_zero() for i in range(1, len(alpha) + 1))


def norm_vanishes(tau, family: str) -> bool:
    alpha, S, e = family_data(tau, family)
    return substitute_q(norm(alpha, S), e).is_zero()


def curve_on_boundary(tau, family: str, t_samples) -> bool:
    _, S, e = family_data(tau, family)
    return all(positivity_classify(Fraction(t0) ** e, t0, S.shape) == BOUNDARY for t0 in t_samples)


def vanishing_factor(tau, family: str) -> tuple:
    """(u factor, its numerator on the curve) for the factor that kills the product.

    S1 uses j = N - tau_1, S0 uses j = N - l.  Returns the specialised factor
    together with its closed numerator before specialisation.
    """
    alpha, S, e = family_data(tau, family)
    tau = S.shape
    N, m, l = len(alpha), _last_nonzero(alpha), len(tau)
    if family == "S1":
        j = N - tau[0]
        a = 2 - l - tau[0]
        numer = (t - q * monomial(0, a)) * (1 - q * monomial(0, a + 1))
    else:
        j = N - l
        a = tau[0] + l - 2
        numer = (t - q * monomial(0, a)) * (1 - q * monomial(0, a + 1))
    z = q * monomial(0, S.content(m) - S.content(j + 1))
    return u_factor(z), numer, (1 - z) ** 2, j, e


def factor_check(tau, family: str) -> bool:
    """The lemma product carries the expected numerator and vanishes on the curve."""
    u, numer, den, j, e = vanishing_factor(tau, family)
    alpha, S, _ = family_data(tau, family)
    m = _last_nonzero(alpha)
    return (m <= j < len(alpha) and u * den == numer
            and substitute_q(numer, e).is_zero()
            and substitute_q(lemma_product(alpha, S), e).is_zero())


__all__ = [
    "SubstitutionPole", "SingularCertificate", "check_zero_diff", "lemma_product",
    "iterated_u_identity", "family_data", "specialise", "certify",
    "certify_singular_S1", "certify_singular_S0", "generic_nonsingular",
    "norm_vanishes", "curve_on_boundary", "vanishing_factor", "factor_check",
]
