"""Pure-Python search kernels.

Same interface as the compiled twin in ``_speedups.pyx``; selected at
import time by ``lcc._kernel`` when the extension is unavailable or
``LCC_PURE_PYTHON`` is set.  Both kernels are exhaustive: they either
return a proven answer or report that the node budget ran out.

``lcc_search``       minimum covering valency by iterative deepening on
                     the valency cap; each edge, in the given order, is
                     either joined into a compatible existing clique or
                     opened as a new two-vertex clique.
``staircase_search`` existence of a rectangle covering of the staircase
                     matrix T_n with per-row/per-column budgets, over
                     contiguous rectangles.
"""

from __future__ import annotations

BACKEND = "pure"


class _Exhausted(Exception):
    pass


def lcc_search(n, edges, cadj, lower, max_nodes):
    """Exact minimum covering valency of the graph given by ``edges``.

    ``cadj`` holds closed-neighborhood bitmasks; ``edges`` fixes the
    branching order; the search starts its cap at ``lower`` (pass 1 to
    drop the external lower bound).  Returns
    ``(value, clique_masks, proved, nodes)``; when the budget dies first,
    ``value``/``clique_masks`` carry the trivial one-clique-per-edge
    cover and ``proved`` is False.
    """
    m = len(edges)
    if m == 0:
        return 0, [], True, 0

    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    delta = max(deg)

    compat = [cadj[u] & cadj[v] for u, v in edges]
    ebits = [(1 << u, 1 << v) for u, v in edges]

    nodes = 0
    solution = []

    def feasible(k):
        nonlocal nodes
        val = [0] * n
        cliques = []

        def dfs(i):
            nonlocal nodes
            if i == m:
                solution[:] = cliques
                return True
            nodes += 1
            if nodes > max_nodes:
                raise _Exhausted
            bu, bv = ebits[i]
            both = bu | bv
            for c in cliques:
                if c & bu and c & bv:
                    return dfs(i + 1)  # covered incidentally: skip dominates
            u, v = edges[i]
            comp = compat[i]
            tried = []
            for idx in range(len(cliques)):
                c = cliques[idx]
                if c & ~comp:
                    continue
                if c in tried:
                    continue
                tried.append(c)
                du = 0 if c & bu else 1
                dv = 0 if c & bv else 1
                if val[u] + du > k or val[v] + dv > k:
                    continue
                cliques[idx] = c | both
                val[u] += du
                val[v] += dv
                if dfs(i + 1):
                    return True
                cliques[idx] = c
                val[u] -= du
                val[v] -= dv
            if val[u] < k and val[v] < k:
                cliques.append(both)
                val[u] += 1
                val[v] += 1
                if dfs(i + 1):
                    return True
                cliques.pop()
                val[u] -= 1
                val[v] -= 1
            return False

        return dfs(0)

    start = max(1, lower)
    try:
        for k in range(start, delta + 1):
            if feasible(k):
                return k, list(solution), True, nodes
    except _Exhausted:
        trivial = [bu | bv for bu, bv in ebits]
        return delta, trivial, False, nodes
    # unreachable: k = delta always admits the one-clique-per-edge cover
    trivial = [bu | bv for bu, bv in ebits]
    return delta, trivial, True, nodes


def _enumerate_rects(n):
    """All contiguous rectangles of T_n: 1 <= c1 <= c2 <= r1 <= r2 <= n."""
    rects = []
    for c1 in range(1, n + 1):
        for c2 in range(c1, n + 1):
            for r1 in range(c2, n + 1):
                for r2 in range(r1, n + 1):
                    rects.append((r1, r2, c1, c2))
    return rects


def _cell_index(i, j):
    # cells of the lower triangle, row-major: (i, j), 1 <= j <= i
    return i * (i - 1) // 2 + j - 1


def staircase_search(n, r, s, max_nodes, want_cover=True):
    """Search for a covering of T_n with row budget r, column budget s.

    Contiguous rectangles only.  Returns ``(status, rects, nodes)`` with
    status True (found; ``rects`` lists (r1, r2, c1, c2) tuples), False
    (proved infeasible) or None (budget exhausted).  Branches on the
    uncovered cell with the fewest usable rectangles; within a branch
    node, earlier-tried alternatives are banned in the subtree, so no
    covering is enumerated twice.
    """
    if n == 0:
        return True, [], 0
    rects = _enumerate_rects(n)
    nrect = len(rects)
    ncell = n * (n + 1) // 2
    full = (1 << ncell) - 1

    cellmask = []
    rowmask = []
    colmask = []
    for r1, r2, c1, c2 in rects:
        cm = 0
        for i in range(r1, r2 + 1):
            for j in range(c1, c2 + 1):
                cm |= 1 << _cell_index(i, j)
        cellmask.append(cm)
        rowmask.append(((1 << (r2 + 1)) - 1) ^ ((1 << r1) - 1))
        colmask.append(((1 << (c2 + 1)) - 1) ^ ((1 << c1) - 1))

    cands = [[] for _ in range(ncell)]
    for ridx, cm in enumerate(cellmask):
        for cell in _iter_cells(cm):
            cands[cell].append(ridx)

    rowval = [0] * (n + 1)
    colval = [0] * (n + 1)
    satrows = 0
    satcols = 0
    banned = bytearray(nrect)
    chosen = []
    nodes = 0

    def usable(ridx):
        return not banned[ridx] and not (rowmask[ridx] & satrows) and not (colmask[ridx] & satcols)

    def dfs(covered):
        nonlocal nodes, satrows, satcols
        if covered == full:
            return True
        nodes += 1
        if nodes > max_nodes:
            raise _Exhausted
        # most-constrained uncovered cell
        best_cell = -1
        best_list = None
        rest = full & ~covered
        for cell in _iter_cells(rest):
            lst = [ridx for ridx in cands[cell] if usable(ridx)]
            if not lst:
                return False
            if best_list is None or len(lst) < len(best_list):
                best_cell, best_list = cell, lst
                if len(lst) == 1:
                    break
        newly_banned = []
        result = False
        for ridx in best_list:
            # apply
            save_sr, save_sc = satrows, satcols
            for i in _span(rects[ridx][0], rects[ridx][1]):
                rowval[i] += 1
                if rowval[i] == r:
                    satrows |= 1 << i
            for j in _span(rects[ridx][2], rects[ridx][3]):
                colval[j] += 1
                if colval[j] == s:
                    satcols |= 1 << j
            chosen.append(ridx)
            if dfs(covered | cellmask[ridx]):
                result = True
            # undo
            if not result:
                chosen.pop()
            for i in _span(rects[ridx][0], rects[ridx][1]):
                rowval[i] -= 1
            for j in _span(rects[ridx][2], rects[ridx][3]):
                colval[j] -= 1
            satrows, satcols = save_sr, save_sc
            if result:
                break
            banned[ridx] = 1
            newly_banned.append(ridx)
        for ridx in newly_banned:
            banned[ridx] = 0
        return result

    try:
        found = dfs(0)
    except _Exhausted:
        return None, [], nodes
    if found:
        out = [rects[ridx] for ridx in chosen] if want_cover else []
        return True, out, nodes
    return False, [], nodes


def _span(a, b):
    return range(a, b + 1)


def _iter_cells(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
