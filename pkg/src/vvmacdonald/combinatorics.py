"""Compositions, partitions and Ferrers-diagram statistics.

Compositions are plain tuples of nonnegative ints of fixed length N (trailing
zeros explicit).  Indices in docstrings are 1-based to match the usual
notation; the tuples themselves are 0-based.
"""
from __future__ import annotations

from math import factorial, prod

GREATER, LESS, EQUAL, INCOMPARABLE = "greater", "less", "equal", "incomparable"


class LengthMismatch(ValueError):
    pass


def parse_composition(text: str) -> tuple:
    """``"1,2,1,4"`` -> ``(1, 2, 1, 4)``."""
    parts = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    if not parts or any(p < 0 for p in parts):
        raise ValueError(f"not a composition: {text!r}")
    return parts


def format_composition(alpha) -> str:
    return ",".join(str(a) for a in alpha)


def sort_desc(alpha) -> tuple:
    """Nonincreasing rearrangement alpha^+."""
    return tuple(sorted(alpha, reverse=True))


def is_partition(alpha) -> bool:
    return all(alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1))


def rank_vector(alpha) -> tuple:
    """r_alpha(i) = #{j: alpha_j > alpha_i} + #{j <= i: alpha_j = alpha_i}.

    Values are 1-based ranks; the result is a permutation of 1..N.
    """
    out = []
    for i, a in enumerate(alpha):
        r = sum(1 for b in alpha if b > a) + sum(1 for b in alpha[: i + 1] if b == a)
        out.append(r)
    return tuple(out)


def inversion_number(alpha) -> int:
    n = len(alpha)
    return sum(1 for i in range(n) for j in range(i + 1, n) if alpha[i] < alpha[j])


def swap(alpha, i: int) -> tuple:
    """alpha.s_i for 1-based i (exchanges entries i and i+1)."""
    a = list(alpha)
    a[i - 1], a[i] = a[i], a[i - 1]
    return tuple(a)


def phi_step(alpha) -> tuple:
    """Affine map (a_1, ..., a_N) -> (a_2, ..., a_N, a_1 + 1)."""
    return tuple(alpha[1:]) + (alpha[0] + 1,)


def phi_inverse(alpha) -> tuple:
    if alpha[-1] < 1:
        raise ValueError("phi_inverse needs a positive last entry")
    return (alpha[-1] - 1,) + tuple(alpha[:-1])


def dominates(alpha, beta) -> bool:
    """alpha >= beta in dominance order (partial sums), equality allowed."""
    s = 0
    for a, b in zip(alpha, beta):
        s += a - b
        if s < 0:
            return False
    return True


def triangle_compare(alpha, beta) -> str:
    """Compare in the order: alpha |> beta iff |alpha| = |beta| and either
    alpha^+ strictly dominates beta^+, or alpha^+ = beta^+ and alpha strictly
    dominates beta."""
    if len(alpha) != len(beta):
        raise LengthMismatch(f"{alpha} and {beta} have different lengths")
    if tuple(alpha) == tuple(beta):
        return EQUAL
    if sum(alpha) != sum(beta):
        return INCOMPARABLE
    ap, bp = sort_desc(alpha), sort_desc(beta)
    if ap != bp:
        if dominates(ap, bp):
            return GREATER
        if dominates(bp, ap):
            return LESS
        return INCOMPARABLE
    if dominates(alpha, beta):
        return GREATER
    if dominates(beta, alpha):
        return LESS
    return INCOMPARABLE


def triangle_sort_key(alpha):
    """Key whose descending order is a linear extension of the triangle order."""
    return (sort_desc(alpha), tuple(alpha))


def compositions(n: int, N: int):
    """All compositions of n into N parts, lex-descending."""
    if N == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, N - 1):
            yield (first,) + rest


def partitions(n: int, N: int, max_part: int | None = None):
    """Partitions of n with at most N parts, padded to length N, lex-descending."""
    if max_part is None:
        max_part = n
    if N == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n, max_part), -1, -1):
        if first * N < n:
            break
        for rest in partitions(n - first, N - 1, first):
            yield (first,) + rest


def shapes(N: int):
    """Partitions of N with zero parts stripped."""
    for p in partitions(N, N):
        yield tuple(x for x in p if x)


def transpose(lam) -> tuple:
    lam = [x for x in lam if x]
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def arm(lam, i: int, j: int) -> int:
    """arm(lam; i, j) = lam_i - j (1-based cell)."""
    return lam[i - 1] - j


def leg(lam, i: int, j: int) -> int:
    """leg(lam; i, j) = lam'_j - i."""
    return transpose(lam)[j - 1] - i


def cells(lam):
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield (i, j)


def k_stat(lam) -> int:
    """k(lam) = sum (N - 2i + 1) lam_i over a length-N partition."""
    N = len(lam)
    return sum((N - 2 * i + 1) * x for i, x in enumerate(lam, start=1))


def hook_lengths(lam):
    lt = transpose(lam)
    return {(i, j): lam[i - 1] - j + lt[j - 1] - i + 1 for (i, j) in cells(lam)}


def max_hook(tau) -> int:
    tau = [x for x in tau if x]
    return tau[0] + len(tau) - 1


def shape_stats(tau) -> dict:
    """Length, transpose, maximal hook and arm/leg tables of a shape."""
    tau = tuple(x for x in tau if x)
    arms = {c: arm(tau, *c) for c in cells(tau)}
    legs = {c: leg(tau, *c) for c in cells(tau)}
    return {
        "length": len(tau),
        "transpose": transpose(tau),
        "max_hook": max_hook(tau),
        "arm": arms,
        "leg": legs,
    }


def count_rsyt(tau) -> int:
    """Number of standard fillings: N! / prod(hook lengths)."""
    tau = tuple(x for x in tau if x)
    return factorial(sum(tau)) // prod(hook_lengths(tau).values())


def monomials(n: int, N: int):
    """Exponent vectors of degree n in N variables, lex-descending."""
    return list(compositions(n, N))


def all_compositions_upto(max_deg: int, N: int):
    for n in range(max_deg + 1):
        yield from compositions(n, N)


__all__ = [
    "GREATER", "LESS", "EQUAL", "INCOMPARABLE", "LengthMismatch",
    "parse_composition", "format_composition", "sort_desc", "is_partition",
    "rank_vector", "inversion_number", "swap", "phi_step", "phi_inverse",
    "dominates", "triangle_compare", "triangle_sort_key", "compositions",
    "partitions", "shapes", "transpose", "arm", "leg", "cells", "k_stat",
    "hook_lengths", "max_hook", "shape_stats", "count_rsyt", "monomials",
]
