"""Ground-truth oracles: exact covering valency and exact staircase rank.

Everything here is exhaustive search with certificates, intended for
desk-scale inputs.  A search either proves its answer or reports that
the node budget ran out -- never a silent approximation.  The hot loops
live in ``lcc._kernel`` (compiled when available, pure Python
otherwise).

Also hosts the numeric side of the counting lower bound for cobipartite
graphs (how large a valency the counting argument forces at a given
size) and a randomized witness search standing in for its
non-constructive proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import _kernel
from .errors import MalformedInputError, PreconditionError
from .graphs import CliqueCovering, Graph, alpha_local, iter_bits, lcc_bounds
from .rectcover import RectCovering, Rectangle, f_closed

__all__ = [
    "SearchBudget",
    "LccResult",
    "StaircaseResult",
    "exact_lcc",
    "exact_lrb_staircase",
    "staircase_feasible",
    "unrestricted_staircase_feasible",
    "cobipartite_lower_bound",
    "search_high_lcc_cobipartite",
    "brute_lcc_by_edge_partitions",
]

DEFAULT_MAX_NODES = 50_000_000


@dataclass(frozen=True)
class SearchBudget:
    """Node budget for exhaustive searches; ``time_hint`` is advisory.

    Budgets are polled at node expansion, so cancellation is
    deterministic: the same inputs always stop at the same tree node.
    """

    max_nodes: int = DEFAULT_MAX_NODES
    time_hint: float | None = None

    def __post_init__(self):
        if self.max_nodes < 1:
            raise MalformedInputError("max_nodes must be >= 1")


@dataclass(frozen=True)
class LccResult:
    """Outcome of the exact minimum-valency search.

    ``proved`` is True when ``value`` is the exact optimum and
    ``covering`` attains it; on budget exhaustion ``value`` is only the
    best known upper bound (the trivial one-clique-per-edge cover).
    """

    value: int
    covering: CliqueCovering
    proved: bool
    nodes: int = field(compare=False, default=0)


def _ordered_edges(g: Graph):
    """Branching order: non-increasing min endpoint degree, then lex."""
    deg = [g.degree(v) for v in range(g.n)]
    return sorted(g.edges, key=lambda e: (-min(deg[e[0]], deg[e[1]]), e))


def exact_lcc(g: Graph, budget: SearchBudget | None = None, *, use_lower_bound=True) -> LccResult:
    """Exact minimum covering valency with an attaining covering.

    Iterative deepening on the valency cap: for each cap k (from the
    degree/clique-number lower bound, or from 1 when
    ``use_lower_bound=False``), a complete DFS assigns edges in a fixed
    order, joining each into a compatible existing clique or opening a
    new one, pruning on per-vertex valency.  The first feasible cap is
    the exact value.  Intended for desk-scale graphs (n <= 14 or so);
    the worst case is exponential.
    """
    budget = budget or SearchBudget()
    if g.edge_count == 0:
        return LccResult(0, CliqueCovering(g, []), True, 0)
    lower = lcc_bounds(g)[0] if use_lower_bound else 1
    edges = _ordered_edges(g)
    cadj = [g.closed_mask(v) for v in range(g.n)]
    value, masks, proved, nodes = _kernel.lcc_search(
        g.n, edges, cadj, lower, budget.max_nodes
    )
    cliques = sorted(tuple(iter_bits(m)) for m in masks)
    return LccResult(value, CliqueCovering(g, cliques), proved, nodes)


@dataclass(frozen=True)
class StaircaseResult:
    """Outcome of a staircase feasibility search.

    ``feasible`` is None when the budget ran out before a proof.
    """

    feasible: bool | None
    covering: RectCovering | None
    nodes: int


def staircase_feasible(n: int, r: int, s: int, budget: SearchBudget | None = None) -> StaircaseResult:
    """Does T_n admit a covering with row budget r and column budget s?

    Exhaustive over contiguous rectangles.  For T_n any rectangle
    (R, C) sits inside the contiguous [min R..max R] x [min C..max C];
    the restriction is validated against ``unrestricted_staircase_feasible``
    at small n in the test suite, and the construction side
    (``staircase_cover``) shows feasibility is not lost up to the
    closed-form boundary.
    """
    budget = budget or SearchBudget()
    if n < 0 or r < 1 or s < 1:
        raise MalformedInputError("need n >= 0 and budgets >= 1")
    status, rects, nodes = _kernel.staircase_search(n, r, s, budget.max_nodes)
    if status is None:
        return StaircaseResult(None, None, nodes)
    if not status:
        return StaircaseResult(False, None, nodes)
    cover = RectCovering(n, [Rectangle.from_ranges(*t) for t in rects])
    return StaircaseResult(True, cover, nodes)


def exact_lrb_staircase(n: int, budget: SearchBudget | None = None) -> int:
    """Exact minimum symmetric budget k with T_n coverable at (k, k).

    Exhaustive region: n <= 7.  Searches k = 1, 2, ... and returns the
    first feasible cap; raises on budget exhaustion.
    """
    if not 1 <= n <= 7:
        raise PreconditionError("exhaustive staircase rank is limited to n <= 7")
    budget = budget or SearchBudget()
    k = 1
    while True:
        res = staircase_feasible(n, k, k, budget)
        if res.feasible is None:
            from .errors import BudgetExhaustedError

            raise BudgetExhaustedError(f"staircase search budget exhausted at k={k}", best=k)
        if res.feasible:
            return k
        k += 1


def unrestricted_staircase_feasible(n: int, r: int, s: int, max_nodes: int = 10_000_000):
    """Feasibility over *arbitrary* (non-contiguous) rectangles.

    Independent cross-check for the contiguity restriction; exponential
    in the number of subset rectangles, so keep n <= 8.  Returns
    True/False, or None if the node budget dies.
    """
    if n > 8:
        raise PreconditionError("unrestricted search is limited to n <= 8")
    if n == 0:
        return True
    rects = []  # (rowset mask over 1..n, colset mask, cellmask)
    for rowset in range(1, 1 << n):
        min_row = (rowset & -rowset).bit_length() - 1 + 1
        for colset in range(1, 1 << n):
            max_col = colset.bit_length() - 1 + 1
            if max_col > min_row:
                continue
            rects.append((rowset << 1, colset << 1))
    ncell = n * (n + 1) // 2

    def cell_index(i, j):
        return i * (i - 1) // 2 + j - 1

    cellmasks = []
    for rowset, colset in rects:
        cm = 0
        for i in iter_bits(rowset):
            for j in iter_bits(colset):
                cm |= 1 << cell_index(i, j)
        cellmasks.append(cm)
    full = (1 << ncell) - 1
    cands = [[] for _ in range(ncell)]
    for ridx, cm in enumerate(cellmasks):
        for cell in iter_bits(cm):
            cands[cell].append(ridx)

    rowval = [0] * (n + 1)
    colval = [0] * (n + 1)
    satrows = 0
    satcols = 0
    banned = bytearray(len(rects))
    nodes = 0

    class Exhausted(Exception):
        pass

    def usable(ridx):
        return (
            not banned[ridx]
            and not (rects[ridx][0] & satrows)
            and not (rects[ridx][1] & satcols)
        )

    def dfs(covered):
        nonlocal nodes, satrows, satcols
        if covered == full:
            return True
        nodes += 1
        if nodes > max_nodes:
            raise Exhausted
        best_list = None
        for cell in iter_bits(full & ~covered):
            lst = [ridx for ridx in cands[cell] if usable(ridx)]
            if not lst:
                return False
            if best_list is None or len(lst) < len(best_list):
                best_list = lst
                if len(lst) == 1:
                    break
        newly = []
        out = False
        for ridx in best_list:
            save = (satrows, satcols)
            for i in iter_bits(rects[ridx][0]):
                rowval[i] += 1
                if rowval[i] == r:
                    satrows |= 1 << i
            for j in iter_bits(rects[ridx][1]):
                colval[j] += 1
                if colval[j] == s:
                    satcols |= 1 << j
            if dfs(covered | cellmasks[ridx]):
                out = True
            for i in iter_bits(rects[ridx][0]):
                rowval[i] -= 1
            for j in iter_bits(rects[ridx][1]):
                colval[j] -= 1
            satrows, satcols = save
            if out:
                break
            banned[ridx] = 1
            newly.append(ridx)
        for ridx in newly:
            banned[ridx] = 0
        return out

    try:
        return dfs(0)
    except Exhausted:
        return None


def cobipartite_lower_bound(n: int) -> int:
    """Largest t the counting argument certifies at size n.

    Compares the 2^(n^2/4) labeled cobipartite graphs on n vertices
    against the number of t-label-set representations they could have:
    t is certified when

        n^2/4 > n*log2(t) + n*t*log2(e*n^2/(4t)),

    evaluated with a 1e-9 relative slack subtracted from the left side
    so floating error can never certify a bound the exact inequality
    does not support.  Returns the largest such t <= n^2/8, or 0.
    Any certified t guarantees a cobipartite graph on n vertices whose
    minimum covering valency exceeds t.
    """
    if n < 4 or n % 2:
        raise MalformedInputError("need even n >= 4")
    lhs = (n * n / 4.0) * (1.0 - 1e-9)

    def ok(t: int) -> bool:
        rhs = n * math.log2(t) + n * t * math.log2(math.e * n * n / (4.0 * t))
        return lhs > rhs

    hi_cap = n * n // 8
    if hi_cap < 1 or not ok(1):
        return 0
    # rhs is increasing in t on (0, n^2/4), so the predicate is monotone
    lo, hi = 1, 1
    while hi < hi_cap and ok(min(hi * 2, hi_cap)):
        hi = min(hi * 2, hi_cap)
    if hi == hi_cap and ok(hi_cap):
        return hi_cap
    lo = hi
    hi = min(hi * 2, hi_cap)
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


def search_high_lcc_cobipartite(
    n: int, target: int, seed: int, budget: SearchBudget | None = None, *, attempts: int = 64, p: float = 0.5
):
    """Randomized hunt for a cobipartite graph with covering valency >= target.

    Samples seeded random cobipartite graphs and re-verifies each
    candidate with the exact solver; returns the first graph whose
    proven exact value reaches ``target``, or None when the attempt or
    node budget runs out first.
    """
    from .generators import gen_random_cobipartite

    budget = budget or SearchBudget()
    if target <= 0:
        return gen_random_cobipartite(n, 0.0, seed)
    remaining = budget.max_nodes
    for i in range(attempts):
        g = gen_random_cobipartite(n, p, seed + i)
        res = exact_lcc(g, SearchBudget(max_nodes=remaining))
        remaining -= max(res.nodes, 1)
        if res.proved and res.value >= target:
            return g
        if remaining <= 0:
            return None
    return None


def brute_lcc_by_edge_partitions(g: Graph) -> int:
    """Independent tiny-graph oracle: best max-valency over edge partitions.

    Any covering shrinks to one where each edge belongs to exactly one
    clique and each clique is the union of its edges, so minimizing over
    set partitions of the edge set whose parts induce cliques gives the
    exact value.  Bell-number blowup: keep |E| <= 8.
    """
    edges = g.edges
    m = len(edges)
    if m == 0:
        return 0
    if m > 8:
        raise PreconditionError("edge-partition oracle limited to |E| <= 8")
    best = m + 1

    parts: list[list[int]] = []  # clique vertex masks per part

    def rec(i):
        nonlocal best
        if i == m:
            val = [0] * g.n
            for mask in parts:
                for v in iter_bits(mask):
                    val[v] += 1
            best = min(best, max(val))
            return
        u, v = edges[i]
        add = (1 << u) | (1 << v)
        for idx, mask in enumerate(parts):
            if g.is_clique_mask(mask | add):
                parts[idx] = mask | add
                rec(i + 1)
                parts[idx] = mask
        parts.append(add)
        rec(i + 1)
        parts.pop()

    rec(0)
    return best
