"""Skew-intersecting set-pair families and their rectangle-covering twins.

An (r, s) skew-intersecting family is an ordered list of pairs
(A_i, B_i) of finite sets with |A_i| <= r, |B_i| <= s, and
A_i meets B_j exactly when i >= j.  Reading A_i as "rectangles meeting
row i" and B_j as "rectangles meeting column j" of a staircase covering
makes the two notions interchangeable, so the maximum family size is
the staircase boundary f(r, s) = C(r+s-1, r-1) + C(r+s-2, r), and both
directions of the translation live here together with the verifier.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedInputError, PreconditionError
from .rectcover import RectCovering, Rectangle, f_closed, verify_rect_cover

__all__ = [
    "SetPairFamily",
    "FamilyReport",
    "covering_to_family",
    "family_to_covering",
    "verify_family",
]


class SetPairFamily:
    """Ordered pairs (A_i, B_i) of integer sets with bounds r, s."""

    __slots__ = ("pairs", "r", "s")

    def __init__(self, pairs, r: int, s: int):
        if r < 1 or s < 1:
            raise MalformedInputError("bounds r, s must be >= 1")
        self.pairs = tuple((frozenset(a), frozenset(b)) for a, b in pairs)
        self.r = int(r)
        self.s = int(s)

    def __len__(self):
        return len(self.pairs)

    def ground_set(self):
        out = set()
        for a, b in self.pairs:
            out |= a
            out |= b
        return out

    def to_json_obj(self):
        return {
            "r": self.r,
            "s": self.s,
            "pairs": [{"A": sorted(a), "B": sorted(b)} for a, b in self.pairs],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "SetPairFamily":
        try:
            pairs = [
                ([int(x) for x in d["A"]], [int(x) for x in d["B"]]) for d in obj["pairs"]
            ]
            return cls(pairs, int(obj["r"]), int(obj["s"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad family JSON: {exc}") from exc


@dataclass(frozen=True)
class FamilyReport:
    valid: bool
    size_violations: tuple  # indices i with |A_i| > r or |B_i| > s
    skew_violations: tuple  # pairs (i, j), 1-based, where condition (ii) fails
    over_capacity: bool  # |family| exceeds f(r, s)


def verify_family(f: SetPairFamily) -> FamilyReport:
    """Exhaustive check of the size and skew-intersection conditions.

    Also flags families larger than the proven maximum f(r, s); a
    family can only be over capacity if one of the two conditions
    breaks, so the flag is a consistency tripwire.
    """
    size_bad = []
    for i, (a, b) in enumerate(f.pairs, start=1):
        if len(a) > f.r or len(b) > f.s:
            size_bad.append(i)
    skew_bad = []
    k = len(f.pairs)
    for i in range(1, k + 1):
        a = f.pairs[i - 1][0]
        for j in range(1, k + 1):
            b = f.pairs[j - 1][1]
            meets = bool(a & b)
            if meets != (i >= j):
                skew_bad.append((i, j))
    over = k > f_closed(f.r, f.s)
    return FamilyReport(
        valid=not size_bad and not skew_bad and not over,
        size_violations=tuple(size_bad),
        skew_violations=tuple(skew_bad),
        over_capacity=over,
    )


def covering_to_family(c: RectCovering, budget) -> SetPairFamily:
    """Read a staircase covering as a skew-intersecting family.

    A_i collects the rectangles meeting row i, B_j those meeting column
    j; validity of the covering makes A_i meet B_j exactly at the ones
    of T_n.  The covering must respect the given (r, s) budget.
    """
    r, s = _pair(budget)
    report = verify_rect_cover(c)
    if not report.valid:
        raise PreconditionError(f"rectangle covering invalid: {report}", witness=report)
    if report.max_row_valency > r or report.max_col_valency > s:
        raise PreconditionError(
            f"covering valencies ({report.max_row_valency},{report.max_col_valency}) "
            f"exceed the ({r},{s}) budget"
        )
    n = c.n
    a_sets = [set() for _ in range(n + 1)]
    b_sets = [set() for _ in range(n + 1)]
    for idx, rect in enumerate(c.rects):
        for i in rect.rows:
            a_sets[i].add(idx)
        for j in rect.cols:
            b_sets[j].add(idx)
    pairs = [(a_sets[i], b_sets[i]) for i in range(1, n + 1)]
    return SetPairFamily(pairs, r, s)


def family_to_covering(f: SetPairFamily) -> RectCovering:
    """Read a skew-intersecting family as a staircase covering.

    Each ground element x becomes the rectangle
    (rows {i : x in A_i}, cols {j : x in B_j}); the skew condition makes
    it all-ones and the union covers every one of T_k.  Raises with the
    first offending (i, j) when the conditions fail.
    """
    report = verify_family(f)
    if report.size_violations or report.skew_violations:
        witness = report.skew_violations[0] if report.skew_violations else None
        raise PreconditionError(
            f"family violates the conditions: {report}", witness=witness
        )
    k = len(f.pairs)
    rows_of = {}
    cols_of = {}
    for i, (a, b) in enumerate(f.pairs, start=1):
        for x in a:
            rows_of.setdefault(x, []).append(i)
        for x in b:
            cols_of.setdefault(x, []).append(i)
    rects = []
    for x in sorted(set(rows_of) & set(cols_of)):
        rects.append(Rectangle(tuple(sorted(rows_of[x])), tuple(sorted(cols_of[x]))))
    return RectCovering(k, rects)


def _pair(budget):
    if isinstance(budget, tuple):
        r, s = budget
        return int(r), int(s)
    return int(budget.r), int(budget.s)
