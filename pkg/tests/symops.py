"""Direct sympy transcription of the operators on P (x) V."""
import sympy as sp

from conftest import Q, T, to_sympy
from vvmacdonald.hecke import hecke_module
from vvmacdonald.polyops import VVPoly


class SymOps:
    """Vectors are dicts {tableau index: sympy expression in x_1..x_N}.

    With ``point=(q0, t0)`` every scalar is evaluated there first, so the
    coefficients are rationals and the operators stay fast.
    """

    def __init__(self, shape, point=None):
        H = hecke_module(shape)
        self.N, self.dim = H.N, H.dim
        self.x = sp.symbols(f"x1:{self.N + 1}")
        self.sub = {} if point is None else {Q: sp.Rational(point[0]), T: sp.Rational(point[1])}
        self.q, self.t = Q.subs(self.sub), T.subs(self.sub)
        self.tau = {i: [[self.scalar(c) for c in r] for r in H.T(i).to_dense()] for i in range(1, self.N)}
        self.om = [[self.scalar(c) for c in r] for r in H.omega.to_dense()]

    def scalar(self, c):
        return to_sympy(c).subs(self.sub) if self.sub else to_sympy(c)

    def vec(self, f: VVPoly):
        return to_sym(f, self.x, self.scalar)

    def _mat(self, f, M):
        out = {}
        for k, p in f.items():
            for k2 in range(self.dim):
                if M[k][k2] != 0:
                    out[k2] = out.get(k2, 0) + p * M[k][k2]
        return out

    def T(self, f, i):
        x = self.x
        sw = {x[i - 1]: x[i], x[i]: x[i - 1]}
        fs = {k: p.subs(sw, simultaneous=True) for k, p in f.items()}
        out = self._mat(fs, self.tau[i])
        for k, p in f.items():
            dd = sp.cancel((p - fs[k]) / (x[i - 1] - x[i]))
            out[k] = out.get(k, 0) + (1 - self.t) * x[i] * dd
        return out

    def Tinv(self, f, i):
        g = self.T(f, i)
        return {k: (g.get(k, 0) + (1 - self.t) * f.get(k, 0)) / self.t for k in set(g) | set(f)}

    def w(self, f):
        x = self.x
        sub = {x[0]: self.q * x[-1], **{x[j]: x[j - 1] for j in range(1, self.N)}}
        return self._mat({k: p.subs(sub, simultaneous=True) for k, p in f.items()}, self.om)

    def xi(self, f, i):
        for j in range(i - 1, 0, -1):
            f = self.Tinv(f, j)
        f = self.w(f)
        for j in range(self.N - 1, i - 1, -1):
            f = self.T(f, j)
        return {k: self.t ** (i - self.N) * p for k, p in f.items()}

    def D_N(self, f):
        g = self.xi(f, self.N)
        return {k: sp.cancel((f.get(k, 0) - g.get(k, 0)) / self.x[-1]) for k in set(f) | set(g)}


    def D(self, f, i):
        """D_i = t^{-1} T_i D_{i+1} T_i, starting from D_N."""
        if i == self.N:
            return self.D_N(f)
        g = self.T(self.D(self.T(f, i), i + 1), i)
        return {k: p / self.t for k, p in g.items()}


def to_sym(f: VVPoly, x, scalar=to_sympy):
    out = {}
    for e, v in f.terms.items():
        mono = sp.Mul(*[xi ** a for xi, a in zip(x, e)])
        for k, c in v.items():
            out[k] = out.get(k, 0) + scalar(c) * mono
    return out


def same(a, b):
    return all(sp.simplify(sp.expand(a.get(k, 0) - b.get(k, 0))) == 0 for k in set(a) | set(b))
