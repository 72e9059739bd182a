import sympy as sp
from hypothesis import settings

from vvmacdonald.qt_field import Scalar

settings.register_profile("repo", max_examples=40, deadline=None)
settings.load_profile("repo")

Q, T = sp.symbols("q t")


def to_sympy(a: Scalar):
    """Independent parse of the printed form into sympy."""
    return sp.sympify(str(a).replace("^", "**"), locals={"q": Q, "t": T})


def sympy_equal(a: Scalar, expr) -> bool:
    return sp.simplify(to_sympy(a) - expr) == 0
