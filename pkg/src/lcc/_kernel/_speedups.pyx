# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Semantics mirror ``_pure.py`` exactly (same branching order, same ban
rule, same budget accounting); the parity test suite checks the two
backends against each other.  Inputs outside the compiled limits
(n > 62 vertices for the covering search, n > 15 for the staircase
search) are delegated to the pure backend.
"""

import numpy as np

BACKEND = "cython"

_LCC_MAXN = 62
_ST_MAXN = 15


# ---------------------------------------------------------------- lcc search

cdef class _LccState:
    cdef int n, m, k, ncliq, nsol
    cdef long long nodes, max_nodes
    cdef unsigned long long[::1] compat, bu, bv, cliq, sol
    cdef int[::1] eu, ev
    cdef unsigned char[::1] val

    def __init__(self, int n, int m):
        self.n = n
        self.m = m
        self.compat = np.zeros(m, dtype=np.uint64)
        self.bu = np.zeros(m, dtype=np.uint64)
        self.bv = np.zeros(m, dtype=np.uint64)
        self.eu = np.zeros(m, dtype=np.intc)
        self.ev = np.zeros(m, dtype=np.intc)
        self.cliq = np.zeros(m + 1, dtype=np.uint64)
        self.sol = np.zeros(m + 1, dtype=np.uint64)
        self.val = np.zeros(n, dtype=np.uint8)
        self.ncliq = 0
        self.nsol = 0
        self.nodes = 0
        self.max_nodes = 0


cdef int _lcc_dfs(_LccState s, int i):
    # 1 = found (snapshot in s.sol), 0 = exhausted subtree, -1 = budget
    cdef int idx, j, du, dv, u, v, r
    cdef bint dup
    cdef unsigned long long c, both, comp
    if i == s.m:
        for idx in range(s.ncliq):
            s.sol[idx] = s.cliq[idx]
        s.nsol = s.ncliq
        return 1
    s.nodes += 1
    if s.nodes > s.max_nodes:
        return -1
    for idx in range(s.ncliq):
        c = s.cliq[idx]
        if (c & s.bu[i]) and (c & s.bv[i]):
            return _lcc_dfs(s, i + 1)
    both = s.bu[i] | s.bv[i]
    u = s.eu[i]
    v = s.ev[i]
    comp = s.compat[i]
    for idx in range(s.ncliq):
        c = s.cliq[idx]
        if c & ~comp:
            continue
        dup = False
        for j in range(idx):
            if s.cliq[j] == c and not (s.cliq[j] & ~comp):
                dup = True
                break
        if dup:
            continue
        du = 0 if (c & s.bu[i]) else 1
        dv = 0 if (c & s.bv[i]) else 1
        if s.val[u] + du > s.k or s.val[v] + dv > s.k:
            continue
        s.cliq[idx] = c | both
        s.val[u] += du
        s.val[v] += dv
        r = _lcc_dfs(s, i + 1)
        s.cliq[idx] = c
        s.val[u] -= du
        s.val[v] -= dv
        if r != 0:
            return r
    if s.val[u] < s.k and s.val[v] < s.k:
        s.cliq[s.ncliq] = both
        s.ncliq += 1
        s.val[u] += 1
        s.val[v] += 1
        r = _lcc_dfs(s, i + 1)
        s.ncliq -= 1
        s.val[u] -= 1
        s.val[v] -= 1
        if r != 0:
            return r
    return 0


def lcc_search(n, edges, cadj, lower, max_nodes):
    """See ``_pure.lcc_search``."""
    if n > _LCC_MAXN:
        from . import _pure
        return _pure.lcc_search(n, edges, cadj, lower, max_nodes)
    m = len(edges)
    if m == 0:
        return 0, [], True, 0

    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    delta = max(deg)

    cdef _LccState s = _LccState(n, m)
    cdef int i
    for i, (u, v) in enumerate(edges):
        s.eu[i] = u
        s.ev[i] = v
        s.bu[i] = 1 << u
        s.bv[i] = 1 << v
        s.compat[i] = cadj[u] & cadj[v]

    total = 0
    remaining = max_nodes
    for k in range(max(1, lower), delta + 1):
        s.k = k
        s.ncliq = 0
        s.nodes = 0
        s.max_nodes = remaining
        for i in range(n):
            s.val[i] = 0
        r = _lcc_dfs(s, 0)
        total += s.nodes
        remaining -= s.nodes
        if r == 1:
            return k, [int(s.sol[i]) for i in range(s.nsol)], True, total
        if r == -1:
            trivial = [(1 << u) | (1 << v) for u, v in edges]
            return delta, trivial, False, total
    trivial = [(1 << u) | (1 << v) for u, v in edges]
    return delta, trivial, True, total


# ---------------------------------------------------------- staircase search

cdef class _StState:
    cdef int n, r, s, ncell, nrect, nchosen, nban
    cdef long long nodes, max_nodes
    cdef unsigned long long full0, full1
    cdef unsigned int satrows, satcols
    cdef unsigned long long[::1] cm0, cm1
    cdef unsigned int[::1] rowmask, colmask
    cdef short[::1] rr1, rr2, cc1, cc2
    cdef signed char[::1] rowval, colval
    cdef unsigned char[::1] banned
    cdef int[::1] cand_off, cand_arr, chosen, banstack

    def __init__(self, int n, rects, cands, int r, int s):
        cdef int nrect = len(rects)
        cdef int ncell = n * (n + 1) // 2
        self.n = n
        self.r = r
        self.s = s
        self.ncell = ncell
        self.nrect = nrect
        self.cm0 = np.zeros(nrect, dtype=np.uint64)
        self.cm1 = np.zeros(nrect, dtype=np.uint64)
        self.rowmask = np.zeros(nrect, dtype=np.uint32)
        self.colmask = np.zeros(nrect, dtype=np.uint32)
        self.rr1 = np.zeros(nrect, dtype=np.int16)
        self.rr2 = np.zeros(nrect, dtype=np.int16)
        self.cc1 = np.zeros(nrect, dtype=np.int16)
        self.cc2 = np.zeros(nrect, dtype=np.int16)
        self.rowval = np.zeros(n + 1, dtype=np.int8)
        self.colval = np.zeros(n + 1, dtype=np.int8)
        self.banned = np.zeros(nrect, dtype=np.uint8)
        self.chosen = np.zeros(ncell + nrect + 1, dtype=np.intc)
        self.banstack = np.zeros(nrect * (ncell + 1), dtype=np.intc)
        off = [0]
        flat = []
        for cell in range(ncell):
            flat.extend(cands[cell])
            off.append(len(flat))
        self.cand_off = np.asarray(off, dtype=np.intc)
        self.cand_arr = np.asarray(flat if flat else [0], dtype=np.intc)
        for idx, (r1, r2, c1, c2) in enumerate(rects):
            cm = 0
            for i in range(r1, r2 + 1):
                for j in range(c1, c2 + 1):
                    cm |= 1 << (i * (i - 1) // 2 + j - 1)
            self.cm0[idx] = cm & 0xFFFFFFFFFFFFFFFF
            self.cm1[idx] = cm >> 64
            self.rowmask[idx] = (((1 << (r2 + 1)) - 1) ^ ((1 << r1) - 1))
            self.colmask[idx] = (((1 << (c2 + 1)) - 1) ^ ((1 << c1) - 1))
            self.rr1[idx] = r1
            self.rr2[idx] = r2
            self.cc1[idx] = c1
            self.cc2[idx] = c2
        full = (1 << ncell) - 1
        self.full0 = full & 0xFFFFFFFFFFFFFFFF
        self.full1 = full >> 64
        self.satrows = 0
        self.satcols = 0
        self.nchosen = 0
        self.nban = 0
        self.nodes = 0
        self.max_nodes = 0


cdef inline bint _st_usable(_StState s, int rid):
    return (
        s.banned[rid] == 0
        and (s.rowmask[rid] & s.satrows) == 0
        and (s.colmask[rid] & s.satcols) == 0
    )


cdef int _st_dfs(_StState s, unsigned long long cov0, unsigned long long cov1):
    cdef int cell, t, rid, cnt, best_cell, best_cnt, i, j, r2, ban_base
    cdef unsigned int save_sr, save_sc
    if cov0 == s.full0 and cov1 == s.full1:
        return 1
    s.nodes += 1
    if s.nodes > s.max_nodes:
        return -1
    best_cell = -1
    best_cnt = s.nrect + 1
    for cell in range(s.ncell):
        if cell < 64:
            if (cov0 >> cell) & 1:
                continue
        elif (cov1 >> (cell - 64)) & 1:
            continue
        cnt = 0
        for t in range(s.cand_off[cell], s.cand_off[cell + 1]):
            if _st_usable(s, s.cand_arr[t]):
                cnt += 1
        if cnt == 0:
            return 0
        if cnt < best_cnt:
            best_cnt = cnt
            best_cell = cell
            if cnt == 1:
                break
    ban_base = s.nban
    cdef int result = 0
    for t in range(s.cand_off[best_cell], s.cand_off[best_cell + 1]):
        rid = s.cand_arr[t]
        if not _st_usable(s, rid):
            continue
        save_sr = s.satrows
        save_sc = s.satcols
        for i in range(s.rr1[rid], s.rr2[rid] + 1):
            s.rowval[i] += 1
            if s.rowval[i] == s.r:
                s.satrows |= 1u << i
        for j in range(s.cc1[rid], s.cc2[rid] + 1):
            s.colval[j] += 1
            if s.colval[j] == s.s:
                s.satcols |= 1u << j
        s.chosen[s.nchosen] = rid
        s.nchosen += 1
        r2 = _st_dfs(s, cov0 | s.cm0[rid], cov1 | s.cm1[rid])
        if r2 != 1:
            s.nchosen -= 1
        for i in range(s.rr1[rid], s.rr2[rid] + 1):
            s.rowval[i] -= 1
        for j in range(s.cc1[rid], s.cc2[rid] + 1):
            s.colval[j] -= 1
        s.satrows = save_sr
        s.satcols = save_sc
        if r2 != 0:
            result = r2
            break
        s.banned[rid] = 1
        s.banstack[s.nban] = rid
        s.nban += 1
    for t in range(ban_base, s.nban):
        s.banned[s.banstack[t]] = 0
    s.nban = ban_base
    return result


def staircase_search(n, r, s, max_nodes, want_cover=True):
    """See ``_pure.staircase_search``."""
    if n > _ST_MAXN:
        from . import _pure
        return _pure.staircase_search(n, r, s, max_nodes, want_cover)
    if n == 0:
        return True, [], 0
    rects = []
    for c1 in range(1, n + 1):
        for c2 in range(c1, n + 1):
            for r1 in range(c2, n + 1):
                for rr2 in range(r1, n + 1):
                    rects.append((r1, rr2, c1, c2))
    ncell = n * (n + 1) // 2
    cands = [[] for _ in range(ncell)]
    for ridx, (r1, rr2, c1, c2) in enumerate(rects):
        for i in range(r1, rr2 + 1):
            for j in range(c1, c2 + 1):
                cands[i * (i - 1) // 2 + j - 1].append(ridx)
    cdef _StState st = _StState(n, rects, cands, r, s)
    st.max_nodes = max_nodes
    res = _st_dfs(st, 0, 0)
    if res == -1:
        return None, [], int(st.nodes)
    if res == 0:
        return False, [], int(st.nodes)
    out = [rects[st.chosen[i]] for i in range(st.nchosen)] if want_cover else []
    return True, out, int(st.nodes)
