"""Vector-valued polynomials P_tau = P (x) V_tau and the operators on them.

``VVPoly`` stores ``{exponent tuple: {tableau index: Scalar}}``.  All operators
act on the right: ``apply_T(f, i)`` is ``f T_i``.  The Cherednik operators
``xi_i`` and Dunkl operators ``D_i`` are composed from ``T_i``, ``T_i^{-1}``
and the shift ``w`` exactly as they are defined; ``PolyOperators`` caches the
same operators as matrices on a graded component.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import compositions, triangle_sort_key
from .hecke import hecke_module
from .linalg import Matrix, vec_add, vec_mat, vec_scale
from .qt_field import ONE, ZERO, Scalar, _coerce, parse_scalar, q, t
from .tableaux import format_contents


class NotDivisible(ArithmeticError):
    """f(1 - xi_N) had a term free of x_N; cannot happen for valid input."""


def _shape(tau):
    return tuple(x for x in tau if x)


class VVPoly:
    """Element of P (x) V_tau.  Immutable by convention."""

    __slots__ = ("N", "shape", "terms")

    def __init__(self, N: int, shape, terms=None):
        self.N = N
        self.shape = _shape(shape)
        clean = {}
        for e, v in (terms or {}).items():
            if len(e) != N:
                raise ValueError(f"exponent {e} has length != {N}")
            v = {k: x for k, x in v.items() if not x.is_zero()}
            if v:
                clean[tuple(e)] = v
        self.terms = clean

    @classmethod
    def _raw(cls, N, shape, terms):
        obj = object.__new__(cls)
        obj.N, obj.shape, obj.terms = N, shape, terms
        return obj

    @classmethod
    def zero(cls, N, shape):
        return cls._raw(N, _shape(shape), {})

    @classmethod
    def monomial(cls, exponent, shape, k: int = 0, coeff=ONE):
        exponent = tuple(exponent)
        return cls(len(exponent), shape, {exponent: {k: _coerce(coeff)}})

    @classmethod
    def constant(cls, N, shape, vector: dict):
        return cls(N, shape, {(0,) * N: vector})

    # -- arithmetic
    def _like(self, terms):
        return VVPoly._raw(self.N, self.shape, terms)

    def __add__(self, other: "VVPoly") -> "VVPoly":
        out = dict(self.terms)
        for e, v in other.terms.items():
            w = out.get(e)
            w = v if w is None else vec_add(w, v)
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        return self._like(out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "VVPoly":
        c = _coerce(c)
        if c.is_zero():
            return self._like({})
        return self._like({e: vec_scale(v, c) for e, v in self.terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def mul_x(self, j: int) -> "VVPoly":
        """Multiplication by x_j (1-based)."""
        out = {}
        for e, v in self.terms.items():
            e2 = list(e)
            e2[j - 1] += 1
            out[tuple(e2)] = v
        return self._like(out)

    def map_vectors(self, f) -> "VVPoly":
        """Apply the linear map ``f`` on V_tau to every coefficient vector."""
        out = {}
        for e, v in self.terms.items():
            w = f(v)
            if w:
                out[e] = w
        return self._like(out)

    def map_scalars(self, f):
        """Coefficient-wise image under ``f`` (e.g. a specialization)."""
        return {e: {k: f(x) for k, x in v.items()} for e, v in self.terms.items()}

    # -- queries
    def __eq__(self, other):
        if not isinstance(other, VVPoly):
            return NotImplemented
        return self.N == other.N and self.shape == other.shape and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    def homogeneous_part(self, n: int) -> "VVPoly":
        return self._like({e: v for e, v in self.terms.items() if sum(e) == n})

    def coeff(self, exponent) -> dict:
        return self.terms.get(tuple(exponent), {})

    def leading_exponent(self):
        """The term exponent that is maximal for a linear extension of |>."""
        return max(self.terms, key=triangle_sort_key)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))

    # -- serialization
    def to_json_obj(self):
        tabs = hecke_module(self.shape).tableaux
        return [
            {
                "exponent": list(e),
                "coeffs": {format_contents(tabs[k].contents): str(x) for k, x in sorted(v.items())},
            }
            for e, v in self.sorted_terms()
        ]

    def to_json(self) -> str:
        return json.dumps({"N": self.N, "shape": list(self.shape), "terms": self.to_json_obj()})

    @classmethod
    def from_json(cls, text: str) -> "VVPoly":
        doc = json.loads(text)
        shape = tuple(doc["shape"])
        index = {format_contents(S.contents): k for k, S in enumerate(hecke_module(shape).tableaux)}
        terms = {}
        for item in doc["terms"]:
            terms[tuple(item["exponent"])] = {index[c]: parse_scalar(s) for c, s in item["coeffs"].items()}
        return cls(doc["N"], shape, terms)

    def __str__(self):
        if not self.terms:
            return "0"
        tabs = hecke_module(self.shape).tableaux
        parts = []
        for e, v in self.sorted_terms():
            mono = "*".join(
                f"x{j}" if a == 1 else f"x{j}^{a}" for j, a in enumerate(e, start=1) if a
            ) or "1"
            for k, x in sorted(v.items()):
                parts.append(f"({x})*{mono}@{format_contents(tabs[k].contents)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"VVPoly(N={self.N}, shape={self.shape}, nterms={len(self.terms)})"


# ---------------------------------------------------------------------------
# single operators


def _dd_terms(a, i):
    """(x^a - x^{a.s_i}) / (x_i - x_{i+1}) as a list of (exponent, sign)."""
    k, l = a[i - 1], a[i]
    if k == l:
        return []
    sign = 1 if k > l else -1
    lo, d = min(k, l), abs(k - l)
    out = []
    for j in range(d):
        e = list(a)
        e[i - 1] = lo + d - 1 - j
        e[i] = lo + j
        out.append((tuple(e), sign))
    return out


def _accumulate(out: dict, e, v: dict, c=ONE):
    w = out.get(e)
    w = vec_scale(v, c) if w is None else vec_add(w, v, c)
    if w:
        out[e] = w
    else:
        out.pop(e, None)


def apply_T(f: VVPoly, i: int) -> VVPoly:
    """(p (x) S) T_i = (1-t) x_{i+1} (p - p.s_i)/(x_i - x_{i+1}) (x) S + p(x.s_i) (x) S tau(T_i)."""
    if not 1 <= i < f.N:
        raise IndexError(f"T_{i} undefined for N={f.N}")
    Ti = hecke_module(f.shape).T(i)
    one_t = 1 - t
    out: dict = {}
    for a, v in f.terms.items():
        sa = list(a)
        sa[i - 1], sa[i] = sa[i], sa[i - 1]
        _accumulate(out, tuple(sa), vec_mat(v, Ti))
        for e, sgn in _dd_terms(a, i):
            e = list(e)
            e[i] += 1
            _accumulate(out, tuple(e), v, one_t if sgn > 0 else -one_t)
    return f._like(out)


def apply_T_inv(f: VVPoly, i: int) -> VVPoly:
    """T_i^{-1} = (1/t)(T_i + 1 - t)."""
    return (apply_T(f, i) + f.scale(1 - t)).scale(t.inverse())


def apply_w(f: VVPoly) -> VVPoly:
    """(p (x) S) w = p(q x_N, x_1, ..., x_{N-1}) (x) S tau(omega)."""
    om = hecke_module(f.shape).omega
    out = {}
    for a, v in f.terms.items():
        vv = vec_mat(v, om)
        if a[0]:
            vv = vec_scale(vv, q ** a[0])
        if vv:
            out[tuple(a[1:]) + (a[0],)] = vv
    return f._like(out)


def apply_word(f: VVPoly, letters) -> VVPoly:
    """Apply a sequence like ``[("T", 2), ("Tinv", 1), ("w",)]`` left to right."""
    for op in letters:
        if op[0] == "T":
            f = apply_T(f, op[1])
        elif op[0] == "Tinv":
            f = apply_T_inv(f, op[1])
        elif op[0] == "w":
            f = apply_w(f)
        else:
            raise ValueError(f"unknown letter {op}")
    return f


def xi_letters(N: int, i: int):
    return ([("Tinv", j) for j in range(i - 1, 0, -1)] + [("w",)]
            + [("T", j) for j in range(N - 1, i - 1, -1)])


def apply_xi(f: VVPoly, i: int) -> VVPoly:
    """xi_i = t^{i-N} T_{i-1}^{-1} ... T_1^{-1} w T_{N-1} ... T_i."""
    if not 1 <= i <= f.N:
        raise IndexError(f"xi_{i} undefined for N={f.N}")
    g = apply_word(f, xi_letters(f.N, i))
    return g.scale(t ** (i - f.N)) if i != f.N else g


def _divide_xN(f: VVPoly) -> VVPoly:
    out = {}
    for e, v in f.terms.items():
        if e[-1] == 0:
            raise NotDivisible(f"term x^{e} is not divisible by x_N")
        out[e[:-1] + (e[-1] - 1,)] = v
    return f._like(out)


def apply_D(f: VVPoly, i: int) -> VVPoly:
    """D_N = (1 - xi_N)/x_N and D_i = (1/t) T_i D_{i+1} T_i."""
    N = f.N
    if not 1 <= i <= N:
        raise IndexError(f"D_{i} undefined for N={N}")
    if i == N:
        return _divide_xN(f - apply_xi(f, N))
    g = apply_T(f, i)
    g = apply_D(g, i + 1)
    return apply_T(g, i).scale(t.inverse())


def apply_wstar(f: VVPoly) -> VVPoly:
    """w* = T_{N-1}^{-1} ... T_1^{-1} w T_{N-1} ... T_1."""
    N = f.N
    return apply_word(f, [("Tinv", j) for j in range(N - 1, 0, -1)] + [("w",)]
                      + [("T", j) for j in range(N - 1, 0, -1)])


# ---------------------------------------------------------------------------
# graded matrices


class GradedBasis:
    """Basis x^a (x) S of P_n (x) V_tau; monomials lex-descending, tableaux canonical."""

    def __init__(self, N: int, shape, n: int):
        self.N, self.shape, self.n = N, _shape(shape), n
        self.dim_v = hecke_module(self.shape).dim
        self.monomials = list(compositions(n, N)) if n >= 0 else []
        self.mindex = {m: j for j, m in enumerate(self.monomials)}
        self.size = len(self.monomials) * self.dim_v

    def index(self, exponent, k: int) -> int:
        return self.mindex[tuple(exponent)] * self.dim_v + k

    def label(self, idx: int):
        return self.monomials[idx // self.dim_v], idx % self.dim_v

    def element(self, idx: int) -> VVPoly:
        e, k = self.label(idx)
        return VVPoly.monomial(e, self.shape, k)

    def to_vector(self, f: VVPoly) -> dict:
        out = {}
        for e, v in f.terms.items():
            if sum(e) != self.n:
                raise ValueError(f"term x^{e} is not of degree {self.n}")
            base = self.mindex[e] * self.dim_v
            for k, x in v.items():
                out[base + k] = x
        return out

    def from_vector(self, vec: dict) -> VVPoly:
        terms: dict = {}
        for idx, x in vec.items():
            e, k = self.label(idx)
            terms.setdefault(e, {})[k] = x
        return VVPoly(self.N, self.shape, terms)


@dataclass
class OperatorMatrix:
    degree_in: int
    degree_out: int
    matrix: Matrix
    basis_in: GradedBasis
    basis_out: GradedBasis

    def apply(self, f: VVPoly) -> VVPoly:
        return self.basis_out.from_vector(vec_mat(self.basis_in.to_vector(f), self.matrix))


class PolyOperators:
    """Cached matrices of T_i, T_i^{-1}, w, xi_i, D_i, x_j, w* on graded pieces."""

    def __init__(self, N: int, shape):
        self.N = N
        self.shape = _shape(shape)
        if sum(self.shape) != N:
            raise ValueError(f"shape {self.shape} is not a partition of {N}")
        self._cache: dict = {}

    def basis(self, n: int) -> GradedBasis:
        key = ("basis", n)
        if key not in self._cache:
            self._cache[key] = GradedBasis(self.N, self.shape, n)
        return self._cache[key]

    def _from_action(self, n_in, n_out, action) -> Matrix:
        bi, bo = self.basis(n_in), self.basis(n_out)
        rows = [bo.to_vector(action(bi.element(r))) for r in range(bi.size)]
        return Matrix(bi.size, bo.size, rows)

    def _get(self, key, build):
        m = self._cache.get(key)
        if m is None:
            m = build()
            self._cache[key] = m
        return m

    def T(self, i: int, n: int) -> Matrix:
        return self._get(("T", i, n), lambda: self._from_action(n, n, lambda f: apply_T(f, i)))

    def T_inv(self, i: int, n: int) -> Matrix:
        def build():
            sz = self.basis(n).size
            return (self.T(i, n) + Matrix.identity(sz, 1 - t)).scale(t.inverse())
        return self._get(("Tinv", i, n), build)

    def w(self, n: int) -> Matrix:
        return self._get(("w", n), lambda: self._from_action(n, n, apply_w))

    def x(self, j: int, n: int) -> Matrix:
        """Multiplication by x_j, P_n -> P_{n+1}."""
        return self._get(("x", j, n), lambda: self._from_action(n, n + 1, lambda f: f.mul_x(j)))

    def xi(self, i: int, n: int) -> Matrix:
        def build():
            M = Matrix.identity(self.basis(n).size)
            for j in range(i - 1, 0, -1):
                M = M @ self.T_inv(j, n)
            M = M @ self.w(n)
            for j in range(self.N - 1, i - 1, -1):
                M = M @ self.T(j, n)
            return M.scale(t ** (i - self.N)) if i != self.N else M
        return self._get(("xi", i, n), build)

    def D(self, i: int, n: int) -> Matrix:
        """Dunkl operator D_i : P_n -> P_{n-1}."""
        def build():
            bi, bo = self.basis(n), self.basis(n - 1)
            if i == self.N:
                R = Matrix.identity(bi.size) - self.xi(self.N, n)
                rows = []
                for r in R.rows:
                    row = {}
                    for idx, x in r.items():
                        e, k = bi.label(idx)
                        if e[-1] == 0:
                            raise NotDivisible(f"term x^{e} is not divisible by x_N")
                        row[bo.index(e[:-1] + (e[-1] - 1,), k)] = x
                    rows.append(row)
                return Matrix(bi.size, bo.size, rows)
            return (self.T(i, n) @ self.D(i + 1, n) @ self.T(i, n - 1)).scale(t.inverse())
        if n == 0:
            return Matrix(self.basis(0).size, 0)
        return self._get(("D", i, n), build)

    def wstar(self, n: int) -> Matrix:
        def build():
            M = Matrix.identity(self.basis(n).size)
            for j in range(self.N - 1, 0, -1):
                M = M @ self.T_inv(j, n)
            M = M @ self.w(n)
            for j in range(self.N - 1, 0, -1):
                M = M @ self.T(j, n)
            return M
        return self._get(("wstar", n), build)

    def operator_matrix(self, op, n: int) -> OperatorMatrix:
        """``op`` is e.g. ``("T", 1)``, ``("Tinv", 2)``, ``("w",)``, ``("xi", 3)``,
        ``("D", 2)``, ``("x", 1)`` or ``("wstar",)``."""
        name, *args = op if isinstance(op, tuple) else (op,)
        shift = {"D": -1, "x": 1}.get(name, 0)
        table = {"T": self.T, "Tinv": self.T_inv, "w": self.w, "xi": self.xi,
                 "D": self.D, "x": self.x, "wstar": self.wstar}
        if name not in table:
            raise ValueError(f"unknown operator {name!r}")
        M = table[name](*args, n)
        return OperatorMatrix(n, n + shift, M, self.basis(n), self.basis(n + shift))


@lru_cache(maxsize=None)
def _ops(N: int, shape: tuple) -> PolyOperators:
    return PolyOperators(N, shape)


def poly_operators(N: int, shape) -> PolyOperators:
    """Shared :class:`PolyOperators` instance for (N, shape)."""
    return _ops(N, _shape(shape))


def operator_matrix(op, n: int, N: int, shape) -> OperatorMatrix:
    return poly_operators(N, shape).operator_matrix(op, n)


__all__ = [
    "VVPoly", "NotDivisible", "apply_T", "apply_T_inv", "apply_w", "apply_xi",
    "apply_D", "apply_wstar", "apply_word", "xi_letters", "GradedBasis",
    "OperatorMatrix", "PolyOperators", "poly_operators", "operator_matrix",
]
