"""Exact arithmetic in the rational function field Q(q, t).

A :class:`Scalar` is a reduced fraction ``num/den`` of integer polynomials in
``q`` and ``t``.  Laurent monomials such as ``t^-3`` are stored by moving the
monomial into the denominator, so both parts only ever carry nonnegative
exponents.  Polynomial multiplication and GCDs are delegated to FLINT's
``fmpz_mpoly``; :func:`gcd_reference` is an independent pure-Python
content/primitive-part GCD used as a cross-check (and as the backend when the
environment variable ``VVMAC_PURE_GCD`` is set).

Univariate specialisations ``q -> t^e`` land in :class:`TScalar`.
"""
from __future__ import annotations

import os
import re
from fractions import Fraction
from math import gcd as igcd

import flint

__all__ = [
    "QTFieldError",
    "DivisionByZero",
    "PoleAtOne",
    "IdenticallyZeroDenominator",
    "DenominatorZeroAtPoint",
    "QTPoly",
    "Scalar",
    "TScalar",
    "ZERO",
    "ONE",
    "q",
    "t",
    "monomial",
    "u_factor",
    "substitute_q",
    "eval_point",
    "is_generic_point",
    "parse_scalar",
    "gcd_reference",
]

_CTX = flint.fmpz_mpoly_ctx.get(("q", "t"), "deglex")
_Q, _T = _CTX.gens()
_P0 = _CTX.from_dict({})
_P1 = _CTX.from_dict({(0, 0): 1})

_PURE_GCD = bool(os.environ.get("VVMAC_PURE_GCD"))


class QTFieldError(ArithmeticError):
    pass


class DivisionByZero(QTFieldError, ZeroDivisionError):
    pass


class PoleAtOne(QTFieldError):
    pass


class IdenticallyZeroDenominator(QTFieldError):
    pass


class DenominatorZeroAtPoint(QTFieldError):
    pass


# ---------------------------------------------------------------------------
# reference GCD over Z[t][q]


def _zt_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _zt_add(a, b):
    n = max(len(a), len(b))
    return _zt_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _zt_neg(a):
    return [-c for c in a]


def _zt_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _zt_trim(out)


def _zt_content(a):
    g = 0
    for c in a:
        g = igcd(g, c)
    return g


def _zt_divexact(a, b):
    """Exact quotient a/b in Z[t]; raises if b does not divide a."""
    a = list(a)
    if not b:
        raise DivisionByZero("division by zero polynomial")
    db, lb = len(b) - 1, b[-1]
    out = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c == 0:
            continue
        if c % lb:
            raise ValueError("inexact division in Z[t]")
        m = c // lb
        out[k - db] = m
        for j, y in enumerate(b):
            a[k - db + j] -= m * y
    if any(a):
        raise ValueError("inexact division in Z[t]")
    return _zt_trim(out)


def _zt_prem(a, b):
    """Pseudo-remainder of a by b in Z[t]."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        lr, k = r[-1], len(r) - 1 - db
        r = [lb * c for c in r]
        for j, y in enumerate(b):
            r[k + j] -= lr * y
        r = _zt_trim(r)
    return r


def _zt_gcd(a, b):
    a, b = _zt_trim(a), _zt_trim(b)
    if not a:
        return _zt_normalize(b)
    if not b:
        return _zt_normalize(a)
    ca, cb = _zt_content(a), _zt_content(b)
    c = igcd(ca, cb)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _zt_prem(a, b)
        a = b
        if r:
            cr = _zt_content(r)
            b = [x // cr for x in r]
        else:
            b = []
    g = [c * x for x in a]
    return _zt_normalize(g)


def _zt_normalize(a):
    return _zt_neg(a) if a and a[-1] < 0 else list(a)


def _bi_from_terms(terms):
    """dict {(i, j): c} -> list over q-degree of Z[t] coefficient lists."""
    if not terms:
        return []
    dq = max(i for i, _ in terms)
    out = [[] for _ in range(dq + 1)]
    for (i, j), c in terms.items():
        row = out[i]
        if len(row) <= j:
            row.extend([0] * (j + 1 - len(row)))
        row[j] += c
    return [_zt_trim(r) for r in out]


def _bi_to_terms(p):
    return {(i, j): c for i, row in enumerate(p) for j, c in enumerate(row) if c}


def _bi_trim(p):
    p = [list(r) for r in p]
    while p and not p[-1]:
        p.pop()
    return p


def _bi_content(p):
    g = []
    for r in p:
        g = _zt_gcd(g, r)
        if len(g) == 1 and g[0] == 1:
            break
    return g


def _bi_prem(a, b):
    r = _bi_trim(a)
    db, lb = len(b) - 1, b[-1]
    while r and len(r) - 1 >= db:
        lr, k = r[-1], len(r) - 1 - db
        r = [_zt_mul(lb, c) for c in r]
        for j, y in enumerate(b):
            r[k + j] = _zt_add(r[k + j], _zt_neg(_zt_mul(lr, y)))
        r = _bi_trim(r)
    return r


def _bi_primitive(p):
    c = _bi_content(p)
    return c, [_zt_divexact(r, c) if r else [] for r in p]


def gcd_reference(a: dict, b: dict) -> dict:
    """GCD of two integer polynomials in (q, t), given as ``{(i, j): c}``.

    Works in Z[t][q] with content/primitive-part recursion and a primitive
    pseudo-remainder sequence.  The result has positive leading coefficient
    (highest q-degree, then highest t-degree).
    """
    A, B = _bi_trim(_bi_from_terms(a)), _bi_trim(_bi_from_terms(b))
    if not A:
        return _bi_to_terms(_bi_sign(B))
    if not B:
        return _bi_to_terms(_bi_sign(A))
    ca, A = _bi_primitive(A)
    cb, B = _bi_primitive(B)
    c = _zt_gcd(ca, cb)
    if len(A) < len(B):
        A, B = B, A
    while len(B) > 1:
        R = _bi_prem(A, B)
        A = B
        if not R:
            B = []
            break
        B = _bi_primitive(R)[1]
    if len(B) == 1:
        # nonzero constant in q: primitive part of the gcd is 1
        A = [[1]]
    else:
        A = _bi_primitive(A)[1]
    g = _bi_sign([_zt_mul(c, r) for r in A])
    return _bi_to_terms(g)


def _bi_sign(p):
    if p and p[-1] and p[-1][-1] < 0:
        return [_zt_neg(r) for r in p]
    return p


def _pgcd(a, b):
    if _PURE_GCD:
        return _CTX.from_dict(gcd_reference(_terms(a), _terms(b)) or {(0, 0): 1})
    return a.gcd(b)


# ---------------------------------------------------------------------------
# polynomial printing / ordering


def _terms(p) -> dict:
    return {(int(i), int(j)): int(c) for (i, j), c in p.to_dict().items()}


def _glex_key(m):
    # graded-lex, q before t
    return (m[0] + m[1], m[0], m[1])


def _monomial_str(i, j):
    parts = []
    if i:
        parts.append("q" if i == 1 else f"q^{i}")
    if j:
        parts.append("t" if j == 1 else f"t^{j}")
    return "*".join(parts)


def _poly_str(p) -> str:
    d = _terms(p)
    if not d:
        return "0"
    out = []
    for m in sorted(d, key=_glex_key):
        c = int(d[m])
        mon = _monomial_str(*m)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mon:
            body = mon if a == 1 else f"{a}*{mon}"
        else:
            body = str(a)
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


class QTPoly:
    """Integer polynomial in q, t (nonnegative exponents)."""

    __slots__ = ("_p",)

    def __init__(self, terms=None):
        if isinstance(terms, flint.fmpz_mpoly):
            self._p = terms
        elif terms is None:
            self._p = _P0
        elif isinstance(terms, int):
            self._p = _CTX.from_dict({(0, 0): terms}) if terms else _P0
        else:
            self._p = _CTX.from_dict({k: v for k, v in dict(terms).items() if v})

    @property
    def terms(self) -> dict:
        d = _terms(self._p)
        return {m: d[m] for m in sorted(d, key=_glex_key)}

    def is_zero(self):
        return self._p.is_zero()

    def degrees(self):
        d = _terms(self._p)
        if not d:
            return (-1, -1)
        return (max(m[0] for m in d), max(m[1] for m in d))

    def __add__(self, other):
        return QTPoly(self._p + _as_mpoly(other))

    __radd__ = __add__

    def __sub__(self, other):
        return QTPoly(self._p - _as_mpoly(other))

    def __rsub__(self, other):
        return QTPoly(_as_mpoly(other) - self._p)

    def __mul__(self, other):
        return QTPoly(self._p * _as_mpoly(other))

    __rmul__ = __mul__

    def __neg__(self):
        return QTPoly(-self._p)

    def __pow__(self, e):
        return QTPoly(self._p ** e)

    def __eq__(self, other):
        if isinstance(other, (QTPoly, int)):
            return self._p == _as_mpoly(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(_terms(self._p).items())))

    def gcd(self, other):
        return QTPoly(_pgcd(self._p, _as_mpoly(other)))

    def __str__(self):
        return _poly_str(self._p)

    def __repr__(self):
        return f"QTPoly({self})"


def _as_mpoly(x):
    if isinstance(x, QTPoly):
        return x._p
    if isinstance(x, flint.fmpz_mpoly):
        return x
    if isinstance(x, int):
        return _CTX.from_dict({(0, 0): x}) if x else _P0
    raise TypeError(f"cannot convert {type(x).__name__} to QTPoly")


# ---------------------------------------------------------------------------
# field elements


def _reduce(n, d):
    if d.is_zero():
        raise DivisionByZero("zero denominator")
    if n.is_zero():
        return _P0, _P1
    if not d.is_one():
        g = _pgcd(n, d)
        if not g.is_one():
            n = n / g
            d = d / g
        if d.leading_coefficient() < 0:
            n, d = -n, -d
    return n, d


class Scalar:
    """Element of Q(q, t) kept as a reduced fraction.

    Invariants: gcd(num, den) = 1, the deglex-leading coefficient of ``den``
    is positive, and zero is ``0/1``.  Instances are immutable.
    """

    __slots__ = ("_n", "_d", "_h")

    def __init__(self, num=0, den=1):
        n, d = _coerce_pair(num, den)
        self._n, self._d = _reduce(n, d)
        self._h = None

    @classmethod
    def _raw(cls, n, d):
        obj = object.__new__(cls)
        obj._n = n
        obj._d = d
        obj._h = None
        return obj

    # -- accessors
    @property
    def num(self) -> QTPoly:
        return QTPoly(self._n)

    @property
    def den(self) -> QTPoly:
        return QTPoly(self._d)

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_one(self) -> bool:
        return self._d.is_one() and self._n.is_one()

    def is_polynomial(self) -> bool:
        return self._d.is_one()

    # -- arithmetic
    def __add__(self, other):
        if not isinstance(other, Scalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if self._n.is_zero():
            return other
        if other._n.is_zero():
            return self
        d1, d2 = self._d, other._d
        if d1 == d2:
            n = self._n + other._n
            if d1.is_one():
                return Scalar._raw(n, d1)
            return Scalar._raw(*_reduce(n, d1))
        if d1.is_one():
            return Scalar._raw(self._n * d2 + other._n, d2)
        if d2.is_one():
            return Scalar._raw(self._n + other._n * d1, d1)
        g = _pgcd(d1, d2)
        if g.is_one():
            return Scalar._raw(*_reduce(self._n * d2 + other._n * d1, d1 * d2))
        e1, e2 = d1 / g, d2 / g
        n = self._n * e2 + other._n * e1
        return Scalar._raw(*_reduce(n, e1 * d2))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self._n, self._d)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if self._n.is_zero() or other._n.is_zero():
            return ZERO
        n1, d1, n2, d2 = self._n, self._d, other._n, other._d
        if d1.is_one() and d2.is_one():
            return Scalar._raw(n1 * n2, d1)
        if not d2.is_one():
            g = _pgcd(n1, d2)
            if not g.is_one():
                n1, d2 = n1 / g, d2 / g
        if not d1.is_one():
            g = _pgcd(n2, d1)
            if not g.is_one():
                n2, d1 = n2 / g, d1 / g
        n, d = n1 * n2, d1 * d2
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return Scalar._raw(n, d)

    __rmul__ = __mul__

    def inverse(self):
        if self._n.is_zero():
            raise DivisionByZero("inverse of zero")
        n, d = self._d, self._n
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return Scalar._raw(n, d)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by zero")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return ONE
        return Scalar._raw(self._n ** e, self._d ** e)

    # -- comparison
    def __eq__(self, other):
        if not isinstance(other, Scalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self._n == other._n and self._d == other._d

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._h is None:
            self._h = hash((tuple(sorted(_terms(self._n).items())),
                            tuple(sorted(_terms(self._d).items()))))
        return self._h

    def __bool__(self):
        return not self._n.is_zero()

    # -- printing
    def __str__(self):
        ns = _poly_str(self._n)
        if self._d.is_one():
            return ns
        ds = _poly_str(self._d)
        if len(self._n.to_dict()) > 1:
            ns = f"({ns})"
        if len(self._d.to_dict()) > 1 or "*" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"Scalar('{self}')"

    def __reduce__(self):
        return (parse_scalar, (str(self),))


def _coerce_pair(num, den):
    n = _to_frac_poly(num)
    d = _to_frac_poly(den)
    # (n0/n1) / (d0/d1) = n0*d1 / (n1*d0)
    return n[0] * d[1], n[1] * d[0]


def _to_frac_poly(x):
    if isinstance(x, Scalar):
        return x._n, x._d
    if isinstance(x, QTPoly):
        return x._p, _P1
    if isinstance(x, flint.fmpz_mpoly):
        return x, _P1
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, int):
        return _CTX.from_dict({(0, 0): x}) if x else _P0, _P1
    if isinstance(x, Fraction):
        return (_CTX.from_dict({(0, 0): x.numerator}) if x.numerator else _P0,
                _CTX.from_dict({(0, 0): x.denominator}))
    if isinstance(x, str):
        s = parse_scalar(x)
        return s._n, s._d
    raise TypeError(f"cannot convert {type(x).__name__} to Scalar")


_INT_CACHE: dict = {}


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        s = _INT_CACHE.get(x)
        if s is None:
            s = Scalar(x)
            if -64 <= x <= 64:
                _INT_CACHE[x] = s
        return s
    if isinstance(x, (Fraction, QTPoly)):
        return Scalar(x)
    return None


ZERO = Scalar._raw(_P0, _P1)
ONE = Scalar._raw(_P1, _P1)
q = Scalar._raw(_Q, _P1)
t = Scalar._raw(_T, _P1)


def monomial(a: int, b: int) -> Scalar:
    """The Laurent monomial q^a t^b."""
    ne = (max(a, 0), max(b, 0))
    de = (max(-a, 0), max(-b, 0))
    return Scalar._raw(_CTX.from_dict({ne: 1}), _CTX.from_dict({de: 1}))


def u_factor(z) -> Scalar:
    """(t - z)(1 - z t)/(1 - z)^2, invariant under z -> 1/z."""
    z = _coerce(z) if not isinstance(z, Scalar) else z
    if z == ONE:
        raise PoleAtOne("u(z) has a pole at z = 1")
    return (t - z) * (1 - z * t) / (1 - z) ** 2


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([qt])|(\*\*|[-+*/^()]))")


def _tokenize(s):
    pos, out = 0, []
    s = s.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad token in {s!r} at {pos}")
        num, var, op = m.groups()
        if num is not None:
            out.append(("n", int(num)))
        elif var is not None:
            out.append(("v", var))
        else:
            out.append(("o", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok != ("o", op):
            raise ValueError(f"expected {op!r}, got {tok[1]!r}")

    def expr(self):
        val = self.term()
        while self.peek() in (("o", "+"), ("o", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.factor()
        while self.peek() in (("o", "*"), ("o", "/")):
            op = self.take()[1]
            rhs = self.factor()
            val = val * rhs if op == "*" else val / rhs
        return val

    def factor(self):
        if self.peek() == ("o", "-"):
            self.take()
            return -self.factor()
        if self.peek() == ("o", "+"):
            self.take()
            return self.factor()
        base = self.atom()
        if self.peek() == ("o", "^"):
            self.take()
            sign = 1
            if self.peek() == ("o", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "n":
                raise ValueError("exponent must be an integer")
            return base ** (sign * val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "n":
            return _coerce(val)
        if kind == "v":
            return q if val == "q" else t
        if (kind, val) == ("o", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise ValueError(f"unexpected token {val!r}")


def parse_scalar(text: str) -> Scalar:
    """Parse an expression in q, t with integers, + - * / ^ and parentheses."""
    p = _Parser(text)
    val = p.expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input in {text!r}")
    return val


# ---------------------------------------------------------------------------
# univariate specialisations


def _upoly_str(p) -> str:
    coeffs = [int(c) for c in p.coeffs()]
    out = []
    for j, c in enumerate(coeffs):
        if not c:
            continue
        mon = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
        a = abs(c)
        body = str(a) if not mon else (mon if a == 1 else f"{a}*{mon}")
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(f" {'+' if c > 0 else '-'} {body}")
    return "".join(out) or "0"


class TScalar:
    """Element of Q(t): reduced fraction of integer polynomials in t."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = flint.fmpz_poly(num) if not isinstance(num, flint.fmpz_poly) else num
        den = flint.fmpz_poly([1]) if den is None else (
            flint.fmpz_poly(den) if not isinstance(den, flint.fmpz_poly) else den)
        if den.is_zero():
            raise IdenticallyZeroDenominator("denominator vanishes identically")
        if num.is_zero():
            den = flint.fmpz_poly([1])
        else:
            g = num.gcd(den)
            if g != 1:
                num = num // g
                den = den // g
            if den[den.degree()] < 0:
                num, den = -num, -den
        self.num, self.den = num, den

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, o):
        o = _tcoerce(o)
        return TScalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, o):
        o = _tcoerce(o)
        return TScalar(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o):
        o = _tcoerce(o)
        return TScalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _tcoerce(o)
        if o.is_zero():
            raise DivisionByZero("division by zero")
        return TScalar(self.num * o.den, self.den * o.num)

    def __neg__(self):
        return TScalar(-self.num, self.den)

    def __eq__(self, o):
        try:
            o = _tcoerce(o)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((str(self.num), str(self.den)))

    def __call__(self, t0) -> Fraction:
        t0 = Fraction(t0)
        n = sum(Fraction(int(c)) * t0 ** j for j, c in enumerate(self.num.coeffs()))
        d = sum(Fraction(int(c)) * t0 ** j for j, c in enumerate(self.den.coeffs()))
        if d == 0:
            raise DenominatorZeroAtPoint(f"denominator vanishes at t={t0}")
        return n / d

    def __str__(self):
        ns, ds = _upoly_str(self.num), _upoly_str(self.den)
        if ds == "1":
            return ns
        if len([c for c in self.num.coeffs() if c]) > 1:
            ns = f"({ns})"
        if len([c for c in self.den.coeffs() if c]) > 1 or "*" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"TScalar('{self}')"


def _tcoerce(o):
    if isinstance(o, TScalar):
        return o
    if isinstance(o, int):
        return TScalar([o])
    raise TypeError(f"cannot convert {type(o).__name__} to TScalar")


def _specialize(p, e):
    """Exponent map q^i t^j -> t^(e*i + j) on the coefficient dict."""
    out: dict = {}
    for (i, j), c in _terms(p).items():
        k = e * i + j
        out[k] = out.get(k, 0) + c
    return out


def substitute_q(a: Scalar, e: int) -> TScalar:
    """Specialise q = t^e; raises if the denominator vanishes on that curve."""
    n = _specialize(a._n, e)
    d = _specialize(a._d, e)
    keys = [k for k, c in list(n.items()) + list(d.items())]
    shift = -min(keys) if keys and min(keys) < 0 else 0

    def dense(m):
        if not m:
            return []
        top = max(m) + shift
        out = [0] * (top + 1)
        for k, c in m.items():
            out[k + shift] += c
        return out

    dn, dd = dense(n), dense(d)
    if not any(dd):
        raise IdenticallyZeroDenominator(f"denominator of {a} vanishes at q = t^{e}")
    return TScalar(flint.fmpz_poly(dn) if any(dn) else flint.fmpz_poly([]),
                   flint.fmpz_poly(dd))


def _eval_poly(p, q0: Fraction, t0: Fraction) -> Fraction:
    total = Fraction(0)
    for (i, j), c in _terms(p).items():
        total += c * q0 ** i * t0 ** j
    return total


def eval_point(a: Scalar, q0, t0) -> Fraction:
    """Exact value of ``a`` at the rational point (q0, t0)."""
    q0, t0 = Fraction(q0), Fraction(t0)
    d = _eval_poly(a._d, q0, t0)
    if d == 0:
        raise DenominatorZeroAtPoint(f"denominator of {a} vanishes at q={q0}, t={t0}")
    return _eval_poly(a._n, q0, t0) / d


def is_generic_point(q0, t0, a_max: int, b_max: int) -> bool:
    """True iff q0 != 1 and q0^a t0^b != 1 for 1 <= a <= a_max, |b| <= b_max,
    and t0^b != 1 for 1 <= |b| <= b_max."""
    q0, t0 = Fraction(q0), Fraction(t0)
    if q0 == 1 or q0 == 0 or t0 == 0:
        return False
    for b in range(1, b_max + 1):
        if t0 ** b == 1 or t0 ** -b == 1:
            return False
    for a in range(1, a_max + 1):
        qa = q0 ** a
        for b in range(-b_max, b_max + 1):
            if qa * t0 ** b == 1:
                return False
    return True
