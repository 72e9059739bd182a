"""Vector-valued nonsymmetric Macdonald polynomials over Q(q, t).

Polynomials take values in the irreducible module V_tau of the Hecke
algebra of type A_{N-1}.  Everything is exact; coefficients live in Q(q,t).
"""
from .bilinear_form import (
    Form,
    norm,
    norm_partition_scalar,
    norm_partition_vv,
    positivity_classify,
    region_boundary_csv,
)
from .combinatorics import max_hook, rank_vector, shapes
from .hecke import hecke_module
from .polyops import VVPoly, apply_D, apply_T, apply_w, apply_xi, poly_operators
from .qt_field import Scalar, TScalar, eval_point, monomial, parse_scalar, q, t, u_factor
from .singular import certify, certify_singular_S0, certify_singular_S1
from .tableaux import Tableau, enumerate_rsyt, extremal_tableaux, parse_tableau
from .yang_baxter import NonGenericParameters, YangBaxterBuilder, build_macdonald

__version__ = "0.1.0"

__all__ = [
    "Form", "norm", "norm_partition_scalar", "norm_partition_vv", "positivity_classify",
    "region_boundary_csv", "max_hook", "rank_vector", "shapes", "hecke_module", "VVPoly",
    "apply_D", "apply_T", "apply_w", "apply_xi", "poly_operators", "Scalar", "TScalar",
    "eval_point", "monomial", "parse_scalar", "q", "t", "u_factor", "certify",
    "certify_singular_S0", "certify_singular_S1", "Tableau", "enumerate_rsyt",
    "extremal_tableaux", "parse_tableau", "NonGenericParameters", "YangBaxterBuilder",
    "build_macdonald",
]
