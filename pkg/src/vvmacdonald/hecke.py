"""Seminormal representation of the Hecke algebra H_N(t) on V_tau.

The basis of V_tau is the list of RSYT of shape tau in canonical order.
Vectors are sparse dicts ``{tableau index: Scalar}`` and operators act on the
right, so ``v @ T(i)`` is ``v tau(T_i)`` and ``T(1) @ T(2)`` is ``tau(T_1 T_2)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .linalg import Matrix, vec_mat
from .qt_field import ONE, Scalar, monomial, t, u_factor
from .tableaux import exchange, enumerate_rsyt, format_contents, tableau_index


@dataclass(frozen=True)
class HeckeWord:
    """Product of generators T_i^{+-1}, read left to right."""

    letters: tuple = ()

    @classmethod
    def of(cls, *indices, inverse=False):
        e = -1 if inverse else 1
        return cls(tuple((i, e) for i in indices))

    def inverse(self) -> "HeckeWord":
        return HeckeWord(tuple((i, -e) for i, e in reversed(self.letters)))

    def __add__(self, other: "HeckeWord") -> "HeckeWord":
        return HeckeWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "I"
        return " ".join(f"T{i}" if e == 1 else f"T{i}^-1" for i, e in self.letters)


def omega_word(N: int) -> HeckeWord:
    return HeckeWord.of(*range(1, N))


class HeckeModule:
    """tau(T_i), tau(T_i)^{-1}, Jucys-Murphy elements and <.,.>_0 for one shape."""

    def __init__(self, tau):
        self.tableaux = enumerate_rsyt(tau)
        self.shape = self.tableaux[0].shape
        self.N = sum(self.shape)
        self.dim = len(self.tableaux)
        self._T = [None] + [self._build_T(i) for i in range(1, self.N)]
        self._Tinv = [None] + [
            (self._T[i] + Matrix.identity(self.dim, 1 - t)).scale(t.inverse())
            for i in range(1, self.N)
        ]

    def _build_T(self, i: int) -> Matrix:
        rows = []
        for k, S in enumerate(self.tableaux):
            dc = S.content(i) - S.content(i + 1)
            if dc == 1:
                rows.append({k: t})
            elif dc == -1:
                rows.append({k: -ONE})
            elif dc >= 2:
                k2 = tableau_index(exchange(S, i))
                rows.append({k2: ONE, k: (t - 1) / (1 - monomial(0, -dc))})
            else:
                # S = S'^(i) for S' with difference -dc >= 2; the 2x2 block in
                # (S', S) has row S' = [a, 1], and the quadratic relation
                # (trace t-1, determinant -t) fixes row S = [a*y + t, y].
                b = dc
                k2 = tableau_index(exchange(S, i, allow_reverse=True))
                a = (t - 1) / (1 - monomial(0, b))
                y = t - 1 - a
                x = a * y + t
                tb = monomial(0, b)
                x_ref = t * (tb * t - 1) * (tb / t - 1) / (tb - 1) ** 2
                y_ref = tb * (t - 1) / (tb - 1)
                if x != x_ref or y != y_ref:
                    raise AssertionError(f"case (4) mismatch at i={i}, S={S}")
                rows.append({k2: x, k: y})
        return Matrix(self.dim, self.dim, rows)

    # -- generators and words
    def T(self, i: int) -> Matrix:
        if not 1 <= i < self.N:
            raise IndexError(f"generator index {i} out of range for N={self.N}")
        return self._T[i]

    def T_inv(self, i: int) -> Matrix:
        if not 1 <= i < self.N:
            raise IndexError(f"generator index {i} out of range for N={self.N}")
        return self._Tinv[i]

    def word(self, w: HeckeWord) -> Matrix:
        M = Matrix.identity(self.dim)
        for i, e in w.letters:
            M = M @ (self.T(i) if e == 1 else self.T_inv(i))
        return M

    @cached_property
    def omega(self) -> Matrix:
        return self.word(omega_word(self.N))

    @cached_property
    def _phi(self):
        phis = [None] * (self.N + 1)
        phis[self.N] = Matrix.identity(self.dim)
        for i in range(self.N - 1, 0, -1):
            phis[i] = (self.T(i) @ phis[i + 1] @ self.T(i)).scale(t.inverse())
        return phis

    def phi(self, i: int) -> Matrix:
        """Jucys-Murphy element phi_i = (1/t) T_i phi_{i+1} T_i, phi_N = 1."""
        if not 1 <= i <= self.N:
            raise IndexError(f"index {i} out of range for N={self.N}")
        return self._phi[i]

    # -- vectors
    def basis(self, k: int) -> dict:
        return {k: ONE}

    def apply(self, v: dict, i: int) -> dict:
        return vec_mat(v, self.T(i))

    def apply_word(self, v: dict, w: HeckeWord) -> dict:
        for i, e in w.letters:
            v = vec_mat(v, self.T(i) if e == 1 else self.T_inv(i))
        return v

    def jm_apply(self, v: dict, i: int) -> dict:
        return vec_mat(v, self.phi(i))

    # -- form
    @cached_property
    def form0_diag(self) -> list:
        out = []
        for S in self.tableaux:
            c = S.contents
            val = ONE
            for i in range(self.N):
                for j in range(i + 1, self.N):
                    if c[j] - c[i] >= 2:
                        val = val * u_factor(monomial(0, c[i] - c[j]))
            out.append(val)
        return out

    def form0(self, v: dict, w: dict) -> Scalar:
        d = self.form0_diag
        total = Scalar(0)
        for k, x in v.items():
            y = w.get(k)
            if y is not None:
                total = total + x * y * d[k]
        return total

    @cached_property
    def gram0(self) -> Matrix:
        return Matrix.diag(self.form0_diag)

    # -- export
    def matrix_json(self, M: Matrix) -> str:
        doc = {
            "shape": list(self.shape),
            "order": [format_contents(S.contents) for S in self.tableaux],
            "matrix": [[str(x) for x in r] for r in M.to_dense()],
        }
        return json.dumps(doc)


@lru_cache(maxsize=None)
def _module(shape: tuple) -> HeckeModule:
    return HeckeModule(shape)


def hecke_module(tau) -> HeckeModule:
    """Cached :class:`HeckeModule` for the shape ``tau``."""
    return _module(tuple(x for x in tau if x))


def tau_apply(v: dict, tau, i: int) -> dict:
    return hecke_module(tau).apply(v, i)


def tau_apply_word(v: dict, tau, w: HeckeWord) -> dict:
    return hecke_module(tau).apply_word(v, w)


def jm_apply(v: dict, tau, i: int) -> dict:
    return hecke_module(tau).jm_apply(v, i)


def form0(v: dict, w: dict, tau) -> Scalar:
    return hecke_module(tau).form0(v, w)


__all__ = [
    "HeckeWord", "HeckeModule", "omega_word", "hecke_module", "tau_apply",
    "tau_apply_word", "jm_apply", "form0",
]
