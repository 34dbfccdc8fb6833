"""Linear interval graphs: models, normalization, and their coverings.

A linear interval model designates points on a line as vertices and a
set of intervals; two vertices are adjacent when some interval contains
both.  Only the set of points inside each interval matters, so
normalization canonicalizes a model to its maximal point runs: nested
or duplicate intervals are dropped, points are re-indexed 1..n, and
endpoints land on fixed off-point slots (opens at half-integers, closes
at quarter offsets, so no two brackets and no bracket/point ever
coincide).  The derived graph is exactly invariant under this rewrite
because the maximal runs are.

On a normalized model the greedy anchor decomposition (leftmost
interval, then the first interval opening after it closes, and so on)
splits the intervals into consecutive segments such that every vertex
lives in at most two segments.  Each segment's graph twin-reduces to a
staircase join of two t-cliques minus one vertex -- verified here
explicitly, never assumed -- which the staircase rectangle machinery
covers with logarithmic valency; lifting and uniting the segment
coverings costs at most a factor two.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .errors import MalformedInputError, PreconditionError
from .graphs import CliqueCovering, Graph, twin_lift, twin_reduce
from .rectcover import lrb_upper, rect_to_clique_cover, staircase_cover

__all__ = [
    "IntervalModel",
    "SegmentDecomposition",
    "normalize",
    "derived_graph",
    "segment_decompose",
    "interval_cover",
    "interval_lcc_lower",
    "knabla_minus_first_y",
]


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(str(x))  # decimal semantics: 0.1 -> 1/10
    if isinstance(x, str):
        return Fraction(x)
    raise MalformedInputError(f"cannot read coordinate {x!r}")


def _coord_json(fr: Fraction):
    if fr.denominator == 1:
        return int(fr)
    as_float = float(fr)
    if Fraction(str(as_float)) == fr:
        return as_float
    return f"{fr.numerator}/{fr.denominator}"


class IntervalModel:
    """Points (strictly increasing rationals) plus closed intervals."""

    __slots__ = ("points", "intervals")

    def __init__(self, points, intervals):
        pts = tuple(_to_fraction(p) for p in points)
        for a, b in zip(pts, pts[1:]):
            if not a < b:
                raise MalformedInputError("points must be strictly increasing")
        ivs = []
        for lo, hi in intervals:
            lo, hi = _to_fraction(lo), _to_fraction(hi)
            if not lo < hi:
                raise MalformedInputError(f"interval [{lo},{hi}] needs lo < hi")
            ivs.append((lo, hi))
        self.points = pts
        self.intervals = tuple(ivs)

    @property
    def n_points(self) -> int:
        return len(self.points)

    def runs(self):
        """Per interval: (first, last) covered point indices, or None."""
        out = []
        for lo, hi in self.intervals:
            s = bisect_left(self.points, lo)
            e = bisect_right(self.points, hi) - 1
            out.append((s, e) if s <= e else None)
        return out

    def maximal_runs(self):
        """Antichain of maximal covered runs with >= 2 points, sorted."""
        runs = sorted(
            {r for r in self.runs() if r is not None and r[1] > r[0]},
            key=lambda se: (se[0], -se[1]),
        )
        keep = []
        best_end = -1
        for s, e in runs:
            if e > best_end:
                keep.append((s, e))
                best_end = e
        return keep

    def __eq__(self, other):
        return (
            isinstance(other, IntervalModel)
            and self.points == other.points
            and self.intervals == other.intervals
        )

    def __hash__(self):
        return hash((self.points, self.intervals))

    def __repr__(self):
        return f"IntervalModel(points={len(self.points)}, intervals={len(self.intervals)})"

    def to_json_obj(self):
        return {
            "points": [_coord_json(p) for p in self.points],
            "intervals": [[_coord_json(lo), _coord_json(hi)] for lo, hi in self.intervals],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "IntervalModel":
        try:
            return cls(obj["points"], [(lo, hi) for lo, hi in obj["intervals"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad interval model JSON: {exc}") from exc


def normalize(m: IntervalModel) -> IntervalModel:
    """Canonical model with the same derived graph.

    Keeps exactly the maximal point runs (nested, duplicate and
    edgeless intervals vanish), renumbers points to 1..n, and puts the
    bracket of run (s, e) at s - 1/2 and e + 1/4 (1-based points).
    After this, consecutive opening brackets and consecutive closing
    brackets always have a point between them, distinct intervals never
    share a bracket position, and re-normalizing is the identity.
    """
    keep = m.maximal_runs()
    n = m.n_points
    points = tuple(Fraction(i) for i in range(1, n + 1))
    intervals = tuple(
        (Fraction(2 * (s + 1) - 1, 2), Fraction(4 * (e + 1) + 1, 4)) for s, e in keep
    )
    out = IntervalModel(points, intervals)
    if out.maximal_runs() != keep:
        raise AssertionError("normalization changed the maximal runs")
    return out


def is_normalized(m: IntervalModel) -> bool:
    return normalize(m) == m


def derived_graph(m: IntervalModel) -> Graph:
    """Graph on the point indices: adjacent iff a common interval.

    All intervals containing a point overlap there, so its closed
    neighborhood is the contiguous index range spanned by the earliest
    start and the latest end among them; adjacency masks come out in
    O(n) big-int operations.
    """
    n = m.n_points
    runs = [r for r in m.runs() if r is not None]
    max_end_at = [-1] * (n + 1)
    min_start_at = [n] * (n + 1)
    for s, e in runs:
        if e > max_end_at[s]:
            max_end_at[s] = e
        if s < min_start_at[e]:
            min_start_at[e] = s
    adj = [0] * n
    best_end = -1
    suffix_min_start = [n] * (n + 2)
    for v in range(n - 1, -1, -1):
        suffix_min_start[v] = min(suffix_min_start[v + 1], min_start_at[v])
    for v in range(n):
        if max_end_at[v] > best_end:
            best_end = max_end_at[v]
        if best_end >= v and suffix_min_start[v] <= v:
            lo, hi = suffix_min_start[v], best_end
            mask = ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)
            adj[v] = mask ^ (1 << v)
    return Graph.from_adj(adj)


@dataclass(frozen=True)
class SegmentDecomposition:
    """Greedy anchor decomposition of a normalized model.

    ``anchors[i]`` is the interval index of the i-th anchor; ``groups[i]``
    lists the intervals opening inside it (itself included);
    ``vertex_sets[i]`` is the contiguous point-index range they cover.
    """

    anchors: tuple
    groups: tuple
    vertex_sets: tuple


def segment_decompose(m: IntervalModel) -> SegmentDecomposition:
    """Anchors, their interval groups, and the segment vertex sets.

    Requires a normalized model.  Asserts the two disjointness
    properties that cap every vertex at two segments: an anchor's
    points avoid all vertex sets two or more steps away, and the
    non-anchor part of a segment avoids all other vertex sets entirely.
    """
    if not is_normalized(m):
        raise PreconditionError("model is not normalized; call normalize() first")
    runs = m.runs()  # normalized: all intervals are maximal runs, sorted
    k = len(runs)
    anchors = []
    groups = []
    vertex_sets = []
    idx = 0
    while idx < k:
        anchors.append(idx)
        s_a, e_a = runs[idx]
        group = [idx]
        j = idx + 1
        while j < k and runs[j][0] <= e_a:
            group.append(j)
            j += 1
        groups.append(tuple(group))
        last_end = runs[group[-1]][1]
        vertex_sets.append(tuple(range(s_a, last_end + 1)))
        idx = j
    dec = SegmentDecomposition(tuple(anchors), tuple(groups), tuple(vertex_sets))
    _assert_segment_disjointness(m, dec)
    return dec


def _assert_segment_disjointness(m: IntervalModel, dec: SegmentDecomposition):
    # Anchor points avoid every vertex set other than the previous and
    # own segment; the non-anchor tail avoids everything but the next.
    runs = m.runs()
    vsets = [set(vs) for vs in dec.vertex_sets]
    for i, anchor_idx in enumerate(dec.anchors):
        s_a, e_a = runs[anchor_idx]
        anchor_pts = set(range(s_a, e_a + 1))
        tail = vsets[i] - anchor_pts
        for j in range(len(dec.anchors)):
            if (j >= i + 1 or j <= i - 2) and anchor_pts & vsets[j]:
                raise AssertionError(f"anchor {i} meets vertex set {j}: decomposition bug")
            if (j >= i + 2 or j <= i - 1) and tail & vsets[j]:
                raise AssertionError(f"segment {i} tail meets vertex set {j}: decomposition bug")
    counts: dict = {}
    for vs in vsets:
        for v in vs:
            counts[v] = counts.get(v, 0) + 1
    if counts and max(counts.values()) > 2:
        raise AssertionError("a vertex lies in three segments: decomposition bug")


def knabla_minus_first_y(t: int) -> Graph:
    """Staircase join of two t-cliques with the first Y-vertex removed.

    This is the twin-free core every segment graph must reduce to; its
    vertices are relabeled 0..2t-2 in left-to-right order.
    """
    from .generators import gen_k_nabla

    full = gen_k_nabla(t)
    verts = [v for v in range(2 * t) if v != t]
    sub, _ = full.induced(verts)
    return sub


def interval_cover(m: IntervalModel) -> CliqueCovering:
    """Covering of the derived graph via per-segment staircase coverings.

    Each segment graph is twin-reduced and checked -- not assumed -- to
    be the left-to-right relabeling of a staircase join minus one
    vertex; an optimal-budget staircase covering of it is lifted back
    over the twin classes.  Vertices live in at most two segments, so
    the union at most doubles the per-segment valency
    (<= lrb_upper(t)+1).
    """
    m = normalize(m)
    g = derived_graph(m)
    dec = segment_decompose(m)
    all_cliques = set()
    for i, group in enumerate(dec.groups):
        verts = list(dec.vertex_sets[i])
        sub, back = g.induced(verts)
        reduced, classes = twin_reduce(sub)
        t = len(group)
        target = knabla_minus_first_y(t)
        if reduced != target:
            raise PreconditionError(
                f"segment {i} does not reduce to the staircase-join core "
                f"(t={t}): normalization gap",
                witness=i,
            )
        rho = lrb_upper(t)
        staircase = staircase_cover(t, (rho, rho))
        knabla_cov = rect_to_clique_cover(t, staircase)
        local_cliques = []
        for clique in knabla_cov.cliques:
            shifted = tuple(v if v < t else v - 1 for v in clique if v != t)
            if len(shifted) >= 2:
                local_cliques.append(shifted)
        red_cov = CliqueCovering(reduced, local_cliques)
        lifted = twin_lift(sub, red_cov, classes)
        for clique in lifted.cliques:
            all_cliques.add(tuple(back[v] for v in clique))
    return CliqueCovering(g, sorted(all_cliques))


def interval_lcc_lower(m: IntervalModel) -> int:
    """Certified lower bound on the covering valency of the derived graph.

    Requires a twin-free derived graph.  The largest segment embeds a
    staircase-join core on N = max group size anchors as an induced
    subgraph, so its exact value (N <= 5) or the asymptotic floor
    floor(log2(N)/2) bounds the whole graph from below; any graph with
    an edge needs at least 1.
    """
    m = normalize(m)
    g = derived_graph(m)
    reduced, _ = twin_reduce(g)
    if reduced.n != g.n:
        raise PreconditionError(
            "derived graph has twins; reduce them first (twin_reduce)"
        )
    if g.edge_count == 0:
        return 0
    dec = segment_decompose(m)
    big_n = max(len(group) for group in dec.groups)
    if big_n <= 5:
        from .exact import exact_lcc

        value = exact_lcc(knabla_minus_first_y(big_n)).value
    else:
        import math

        value = math.floor(math.log2(big_n) / 2)
    return max(1, value)
