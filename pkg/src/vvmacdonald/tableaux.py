"""Reverse standard Young tableaux (RSYT).

A tableau of shape ``tau`` is filled with N, N-1, ..., 1 so that entries
decrease along rows and down columns; N always sits in cell (1, 1).  The
content vector ``[c(1,S), ..., c(N,S)]`` with ``c = col - row`` identifies
a tableau within its shape and is used as the serialization key.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import transpose


def _clean_shape(tau) -> tuple:
    tau = tuple(int(x) for x in tau if x)
    if not tau or any(tau[i] < tau[i + 1] for i in range(len(tau) - 1)):
        raise ValueError(f"not a partition shape: {tau}")
    return tau


@dataclass(frozen=True)
class Blocked:
    """Returned by :func:`exchange` when S^(i) is not an admissible move."""

    reason: str  # "same-row", "same-column" or "reversed"


SAME_ROW = Blocked("same-row")
SAME_COLUMN = Blocked("same-column")
REVERSED = Blocked("reversed")


class Tableau:
    """Immutable RSYT.  ``rows[r]`` lists the entries of row r + 1."""

    __slots__ = ("shape", "rows", "_pos", "contents", "inv")

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows if len(r))
        shape = tuple(len(r) for r in rows)
        _clean_shape(shape)
        N = sum(shape)
        pos = {}
        for i, r in enumerate(rows, start=1):
            for j, v in enumerate(r, start=1):
                pos[v] = (i, j)
        if sorted(pos) != list(range(1, N + 1)):
            raise ValueError(f"entries must be 1..{N}: {rows}")
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                if j + 1 < len(r) and r[j + 1] >= v:
                    raise ValueError(f"row {i + 1} is not decreasing: {rows}")
                if i + 1 < len(rows) and j < len(rows[i + 1]) and rows[i + 1][j] >= v:
                    raise ValueError(f"column {j + 1} is not decreasing: {rows}")
        self.shape = shape
        self.rows = rows
        self._pos = tuple(pos[v] for v in range(1, N + 1))
        self.contents = tuple(c - r for r, c in self._pos)
        cv = self.contents
        self.inv = sum(1 for i in range(N) for j in range(i + 1, N) if cv[i] >= cv[j] + 2)

    @property
    def N(self) -> int:
        return len(self.contents)

    def row(self, i: int) -> int:
        return self._pos[i - 1][0]

    def col(self, i: int) -> int:
        return self._pos[i - 1][1]

    def content(self, i: int) -> int:
        return self.contents[i - 1]

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return "|".join(",".join(str(v) for v in r) for r in self.rows)

    def __repr__(self):
        return f"Tableau('{self}')"


def content_vector(S: Tableau) -> tuple:
    return S.contents


def format_contents(cv) -> str:
    return "[" + ",".join(str(c) for c in cv) + "]"


def parse_tableau(text: str) -> Tableau:
    """Parse ``"7,6,5,2|4,3,1"``.

    Rows may be listed top row first or, as in French drawings, bottom row
    first; the reading that yields a valid RSYT is used.
    """
    rows = [tuple(int(x) for x in part.split(",") if x.strip()) for part in text.split("|")]
    try:
        return Tableau(rows)
    except ValueError:
        return Tableau(rows[::-1])


def from_contents(tau, cv) -> Tableau:
    """Rebuild the tableau of shape ``tau`` with content vector ``cv``."""
    tau = _clean_shape(tau)
    grid = [[0] * n for n in tau]
    used = [0] * len(tau)
    for v in range(len(cv), 0, -1):
        c = cv[v - 1]
        for r in range(len(tau)):
            if used[r] - r == c and used[r] < tau[r] and (r == 0 or used[r - 1] > used[r]):
                grid[r][used[r]] = v
                used[r] += 1
                break
        else:
            raise ValueError(f"content vector {cv} does not fit shape {tau}")
    return Tableau(grid)


@lru_cache(maxsize=None)
def _enumerate(tau: tuple) -> tuple:
    N = sum(tau)
    out = []

    def grow(fill, v):
        if v == 0:
            out.append(Tableau([row[:] for row in fill]))
            return
        for r in range(len(tau)):
            n = len(fill[r])
            if n < tau[r] and (r == 0 or len(fill[r - 1]) > n):
                fill[r].append(v)
                grow(fill, v - 1)
                fill[r].pop()

    grow([[] for _ in tau], N)
    out.sort(key=lambda S: S.contents, reverse=True)
    return tuple(out)


def enumerate_rsyt(tau) -> list:
    """All RSYT of shape ``tau`` in canonical order (content vectors, lex descending)."""
    return list(_enumerate(_clean_shape(tau)))


def tableau_index(S: Tableau) -> int:
    return _index_map(S.shape)[S.contents]


@lru_cache(maxsize=None)
def _index_map(tau: tuple) -> dict:
    return {S.contents: k for k, S in enumerate(_enumerate(tau))}


def exchange(S: Tableau, i: int, allow_reverse: bool = False):
    """S^(i), the tableau with i and i+1 swapped, or a :class:`Blocked` tag.

    The forward move requires c(i,S) - c(i+1,S) >= 2 and lowers inv by one.
    With ``allow_reverse`` the move with difference <= -2 is also performed.
    """
    if not 1 <= i < S.N:
        raise IndexError(f"index {i} out of range for N={S.N}")
    if S.row(i) == S.row(i + 1):
        return SAME_ROW
    if S.col(i) == S.col(i + 1):
        return SAME_COLUMN
    dc = S.content(i) - S.content(i + 1)
    if dc <= -2 and not allow_reverse:
        return REVERSED
    swap = {i: i + 1, i + 1: i}
    return Tableau([[swap.get(v, v) for v in r] for r in S.rows])


def extremal_tableaux(tau):
    """(S0, S1): N..1 entered column by column and row by row."""
    tau = _clean_shape(tau)
    N = sum(tau)
    grid = [[0] * n for n in tau]
    v = N
    for r in range(len(tau)):
        for c in range(tau[r]):
            grid[r][c] = v
            v -= 1
    s1 = Tableau(grid)
    grid = [[0] * n for n in tau]
    v = N
    for c, height in enumerate(transpose(tau)):
        for r in range(height):
            grid[r][c] = v
            v -= 1
    s0 = Tableau(grid)
    return s0, s1


def select_tableau(tau, selector) -> Tableau:
    """Resolve ``"S0"``, ``"S1"``, an index, a content vector or a row string."""
    tabs = enumerate_rsyt(tau)
    if isinstance(selector, Tableau):
        return selector
    if isinstance(selector, int):
        return tabs[selector]
    if isinstance(selector, (tuple, list)):
        return from_contents(tau, tuple(selector))
    s = str(selector).strip()
    if s.upper() in ("S0", "S1"):
        return extremal_tableaux(tau)[int(s[1])]
    if s.lstrip("-").isdigit():
        return tabs[int(s)]
    if s.startswith("["):
        return from_contents(tau, tuple(int(x) for x in s.strip("[]").split(",")))
    S = parse_tableau(s)
    if S.shape != _clean_shape(tau):
        raise ValueError(f"tableau {s} does not have shape {tau}")
    return S


__all__ = [
    "Tableau", "Blocked", "SAME_ROW", "SAME_COLUMN", "REVERSED",
    "content_vector", "format_contents", "parse_tableau", "from_contents",
    "enumerate_rsyt", "tableau_index", "exchange", "extremal_tableaux",
    "select_tableau",
]
