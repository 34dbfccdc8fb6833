"""Rectangle coverings of the staircase matrix T_n.

T_n is the n x n binary matrix with ones exactly on and below the
diagonal.  A rectangle is an all-ones submatrix, i.e. a pair
(row set, column set) with min(rows) >= max(cols); a covering must hit
every one-entry, and we track how many rectangles each row and column
meets (its valency).  The budget function

    f(r, s) = C(r+s-1, r-1) + C(r+s-2, r)

satisfies the Pascal recurrence f(r, s) = f(r-1, s) + f(r, s-1) from
the bases f(r, 1) = r, f(1, s) = s, and is the boundary of the
disjoint-split construction implemented here: slice off a top block,
cover the bottom-left cross block with one rectangle, recurse with one
budget unit fewer on each side.

Note f is NOT the true feasibility boundary: rectangles that straddle
a split and grab the next diagonal cell do better (T_5 has a (2,2)
covering even though f(2,2) = 4; see lcc.exact.staircase_feasible for
ground truth).  f still upper-bounds the budget needed for T_n, which
is all its asymptotic uses require.

Indices are 1-based throughout this module, matching the matrix view;
the JSON formats document this explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import InfeasibleBudgetError, MalformedInputError, PreconditionError
from .graphs import CliqueCovering, iter_bits

__all__ = [
    "Rectangle",
    "RectCovering",
    "RectReport",
    "ValencyBudget",
    "f_closed",
    "f_recurrence",
    "lrb_upper",
    "staircase_cover",
    "thirds_cover",
    "verify_rect_cover",
    "rect_to_clique_cover",
]


@lru_cache(maxsize=None)
def f_closed(r: int, s: int) -> int:
    """Closed form of the split construction's boundary at budgets (r, s)."""
    if r < 1 or s < 1:
        raise MalformedInputError("budgets must be >= 1")
    return math.comb(r + s - 1, r - 1) + math.comb(r + s - 2, r)


def f_recurrence(r: int, s: int) -> int:
    """Same value by dynamic programming from the two base rows."""
    if r < 1 or s < 1:
        raise MalformedInputError("budgets must be >= 1")
    table = [[0] * (s + 1) for _ in range(r + 1)]
    for i in range(1, r + 1):
        table[i][1] = i
    for j in range(1, s + 1):
        table[1][j] = j
    for i in range(2, r + 1):
        for j in range(2, s + 1):
            table[i][j] = table[i - 1][j] + table[i][j - 1]
    return table[r][s]


def lrb_upper(n: int) -> int:
    """Least r with n <= f(r, r): a symmetric budget sufficient for T_n.

    Upper bound on the true minimum (the split construction achieves
    it); exact minima at desk scale come from lcc.exact.
    """
    if n < 1:
        raise MalformedInputError("n must be >= 1")
    r = 1
    while f_closed(r, r) < n:
        r += 1
    return r


@dataclass(frozen=True)
class ValencyBudget:
    """Row and column valency budgets (both >= 1)."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise MalformedInputError("valency budgets must be >= 1")


def _strict_sorted(idx, n, what):
    t = tuple(idx)
    if not t:
        raise MalformedInputError(f"rectangle with empty {what}")
    for a, b in zip(t, t[1:]):
        if not a < b:
            raise MalformedInputError(f"rectangle {what} not strictly increasing")
    if t[0] < 1 or (n is not None and t[-1] > n):
        raise MalformedInputError(f"rectangle {what} out of range 1..{n}")
    return t


@dataclass(frozen=True)
class Rectangle:
    """Row and column index sets (1-based, strictly increasing tuples).

    Constructions emit contiguous ranges; certificates from elsewhere
    (e.g. set-pair families) may be arbitrary subsets, so the verifier
    accepts both.
    """

    rows: tuple
    cols: tuple

    @classmethod
    def from_ranges(cls, r1: int, r2: int, c1: int, c2: int) -> "Rectangle":
        return cls(tuple(range(r1, r2 + 1)), tuple(range(c1, c2 + 1)))

    @property
    def is_contiguous(self) -> bool:
        return (
            self.rows[-1] - self.rows[0] + 1 == len(self.rows)
            and self.cols[-1] - self.cols[0] + 1 == len(self.cols)
        )

    def legal_for_staircase(self) -> bool:
        return self.rows[0] >= self.cols[-1]


class RectCovering:
    """A list of rectangles intended to cover the ones of T_n."""

    __slots__ = ("n", "rects")

    def __init__(self, n: int, rects):
        if n < 0:
            raise MalformedInputError("matrix order must be >= 0")
        self.n = n
        checked = []
        for rect in rects:
            rows = _strict_sorted(rect.rows, n, "rows")
            cols = _strict_sorted(rect.cols, n, "cols")
            checked.append(Rectangle(rows, cols))
        self.rects = tuple(checked)

    def row_valencies(self):
        val = [0] * (self.n + 1)
        for rect in self.rects:
            for i in rect.rows:
                val[i] += 1
        return val[1:]

    def col_valencies(self):
        val = [0] * (self.n + 1)
        for rect in self.rects:
            for j in rect.cols:
                val[j] += 1
        return val[1:]

    def __len__(self):
        return len(self.rects)

    def to_json_obj(self):
        rects = []
        for rect in self.rects:
            if not rect.is_contiguous:
                raise MalformedInputError(
                    "JSON rectangle format only supports contiguous ranges"
                )
            rects.append(
                {
                    "rows": [rect.rows[0], rect.rows[-1]],
                    "cols": [rect.cols[0], rect.cols[-1]],
                }
            )
        rects.sort(key=lambda d: (d["rows"], d["cols"]))
        return {"n": self.n, "rects": rects}

    @classmethod
    def from_json_obj(cls, obj) -> "RectCovering":
        try:
            n = int(obj["n"])
            rects = [
                Rectangle.from_ranges(
                    int(d["rows"][0]), int(d["rows"][1]), int(d["cols"][0]), int(d["cols"][1])
                )
                for d in obj["rects"]
            ]
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise MalformedInputError(f"bad rectangle covering JSON: {exc}") from exc
        return cls(n, rects)


@dataclass(frozen=True)
class RectReport:
    valid: bool
    max_row_valency: int
    max_col_valency: int
    uncovered: tuple
    illegal_rects: tuple


def verify_rect_cover(c: RectCovering) -> RectReport:
    """Check legality (all-ones condition) and full coverage of T_n.

    Coverage is accumulated as one column bitmask per row, so arbitrary
    index sets and four-digit n both stay cheap.
    """
    n = c.n
    covered = [0] * (n + 1)
    illegal = []
    rowval = [0] * (n + 1)
    colval = [0] * (n + 1)
    for idx, rect in enumerate(c.rects):
        if not rect.legal_for_staircase():
            illegal.append(idx)
            continue
        colmask = 0
        for j in rect.cols:
            colmask |= 1 << j
            colval[j] += 1
        for i in rect.rows:
            covered[i] |= colmask
            rowval[i] += 1
    uncovered = []
    for i in range(1, n + 1):
        want = ((1 << (i + 1)) - 2)  # bits 1..i
        missing = want & ~covered[i]
        for j in iter_bits(missing):
            uncovered.append((i, j))
    return RectReport(
        valid=not illegal and not uncovered,
        max_row_valency=max(rowval, default=0),
        max_col_valency=max(colval, default=0),
        uncovered=tuple(uncovered),
        illegal_rects=tuple(illegal),
    )


def staircase_cover(n: int, budget) -> RectCovering:
    """Budget-respecting covering of T_n by the recurrence's split.

    ``budget`` is (r, s) (or anything with .r/.s attributes).  The
    recurrence made algorithmic: with one remaining row budget, cover
    each row by its own rectangle; with one column budget, each column;
    otherwise split off a top block of size t = min(f(r, s-1), n),
    cover the bottom-left cross block with a single rectangle, and
    recurse with (r, s-1) on the top and (r-1, s) on the bottom.
    Infeasible sizes (n > f(r, s)) are rejected up front.
    """
    r, s = _budget_pair(budget)
    if n < 1:
        raise MalformedInputError("n must be >= 1")
    limit = f_closed(r, s)
    if n > limit:
        raise InfeasibleBudgetError(
            f"the ({r},{s}) split construction covers T_n only up to n = {limit}",
            max_feasible=limit,
        )
    rects = []

    def build(base, size, rr, ss):
        if size == 0:
            return
        if rr == 1:
            for i in range(1, size + 1):
                rects.append(Rectangle.from_ranges(base + i, base + i, base + 1, base + i))
            return
        if ss == 1:
            for j in range(1, size + 1):
                rects.append(Rectangle.from_ranges(base + j, base + size, base + j, base + j))
            return
        t = min(f_closed(rr, ss - 1), size)
        if size - t > 0:
            rects.append(Rectangle.from_ranges(base + t + 1, base + size, base + 1, base + t))
        build(base, t, rr, ss - 1)
        build(base + t, size - t, rr - 1, ss)

    build(0, n, r, s)
    return RectCovering(n, rects)


def thirds_cover(n: int) -> RectCovering:
    """Covering of T_n by splitting into three near-equal blocks.

    Blocks A < B < C of sizes ceil(n/3), ceil((n-|A|)/2) and the rest
    give three cross rectangles BxA, CxA, CxB per level; each triangle
    recurses.  Every index meets at most two new rectangles per level
    plus its final 1x1 cell, so the valency grows like 2*log3(n).
    """
    if n < 1:
        raise MalformedInputError("n must be >= 1")
    rects = []

    def build(base, size):
        if size == 0:
            return
        if size == 1:
            rects.append(Rectangle.from_ranges(base + 1, base + 1, base + 1, base + 1))
            return
        a = -(-size // 3)
        b = -(-(size - a) // 2)
        c = size - a - b
        if b:
            rects.append(Rectangle.from_ranges(base + a + 1, base + a + b, base + 1, base + a))
        if c:
            rects.append(Rectangle.from_ranges(base + a + b + 1, base + size, base + 1, base + a))
            if b:
                rects.append(
                    Rectangle.from_ranges(base + a + b + 1, base + size, base + a + 1, base + a + b)
                )
        build(base, a)
        build(base + a, b)
        build(base + a + b, c)

    build(0, n)
    return RectCovering(n, rects)


def rect_to_clique_cover(n: int, c: RectCovering) -> CliqueCovering:
    """Lift a covering of T_n to a clique covering of the staircase join.

    Rectangle (R, C) becomes the clique {x_i : i in R} + {y_j : j in C}
    (legal since min R >= max C), and the two side cliques X and Y are
    appended; the result covers every edge with valency at most
    max(row valency, column valency) + 1.
    """
    from .generators import gen_k_nabla

    if c.n != n:
        raise MalformedInputError("covering order does not match n")
    report = verify_rect_cover(c)
    if not report.valid:
        raise PreconditionError(f"rectangle covering invalid: {report}", witness=report)
    host = gen_k_nabla(n)
    cliques = []
    for rect in c.rects:
        verts = [i - 1 for i in rect.rows] + [n + j - 1 for j in rect.cols]
        cliques.append(tuple(sorted(verts)))
    cliques.append(tuple(range(n)))
    cliques.append(tuple(range(n, 2 * n)))
    return CliqueCovering(host, sorted(cliques))


def _budget_pair(budget):
    if isinstance(budget, tuple):
        r, s = budget
    else:
        r, s = budget.r, budget.s
    if r < 1 or s < 1:
        raise MalformedInputError("valency budgets must be >= 1")
    return int(r), int(s)
