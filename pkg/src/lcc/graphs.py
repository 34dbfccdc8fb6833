"""Graph and clique-covering data model.

A clique covering of a graph is a family of cliques whose union contains
every edge; the valency of a vertex is the number of cliques of the
family containing it.  This module holds the universal input object
(``Graph``), the universal certificate object (``CliqueCovering``), the
verifiers and valency accounting for both, the reduction moves that
shrink a covering without raising its valency, twin reduction/lifting,
set intersection representations and their Kneser-embedding check, and
the degree/clique-number bounds on the minimum covering valency.

Vertices are dense integers ``0..n-1``.  Adjacency is kept as one Python
int bitmask per vertex, which makes clique checks, neighborhood
restrictions and coverage accounting O(n/word) per operation and lets
the same code scale from 6-vertex exhaustive sweeps to the 10^4-vertex
graphs derived from interval models.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import MalformedInputError, PreconditionError

__all__ = [
    "Graph",
    "CliqueCovering",
    "IntersectionRepresentation",
    "CoveringReport",
    "verify_covering",
    "reduce_covering",
    "covering_to_representation",
    "representation_to_covering",
    "make_injective",
    "twin_reduce",
    "twin_lift",
    "is_claw_free",
    "alpha_local",
    "max_clique_number",
    "independence_number_of_mask",
    "lcc_bounds",
    "kneser_embedding_check",
    "iter_bits",
    "popcount",
]


def popcount(x: int) -> int:
    return x.bit_count()


def iter_bits(mask: int):
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as per-vertex adjacency bitmasks; the sorted pair
    list is materialized lazily (large derived graphs never need it).
    No loops, no parallel edges.
    """

    __slots__ = ("n", "adj", "_edges", "_m")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise MalformedInputError("vertex count must be >= 0")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedInputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise MalformedInputError(f"loop at vertex {u}")
            if not (adj[u] >> v) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                m += 1
        self.n = n
        self.adj = tuple(adj)
        self._edges = None
        self._m = m

    @classmethod
    def from_adj(cls, adj) -> "Graph":
        """Build from adjacency bitmasks (trusted: symmetric, loop-free)."""
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        g._edges = None
        g._m = sum(popcount(a) for a in adj) // 2
        return g

    @property
    def edges(self):
        """Sorted tuple of edges as (u, v) pairs with u < v."""
        if self._edges is None:
            out = []
            for u in range(self.n):
                high = self.adj[u] >> (u + 1)
                for off in iter_bits(high):
                    out.append((u, u + 1 + off))
            self._edges = tuple(out)
        return self._edges

    @property
    def edge_count(self) -> int:
        return self._m

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def max_degree(self) -> int:
        return max((popcount(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors_mask(self, v: int) -> int:
        return self.adj[v]

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def is_clique_mask(self, mask: int) -> bool:
        """True iff the vertices of ``mask`` are pairwise adjacent."""
        for v in iter_bits(mask):
            if mask & ~(self.adj[v] | (1 << v)):
                return False
        return True

    def induced(self, vertices):
        """Induced subgraph on ``vertices`` (sorted); returns (Graph, list).

        The list maps new indices to the original vertex ids.
        """
        verts = sorted(vertices)
        pos = {v: i for i, v in enumerate(verts)}
        sub_mask = 0
        for v in verts:
            sub_mask |= 1 << v
        adj = []
        for v in verts:
            row = 0
            for w in iter_bits(self.adj[v] & sub_mask):
                row |= 1 << pos[w]
            adj.append(row)
        return Graph.from_adj(adj), verts

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

    def to_json_obj(self):
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_obj(cls, obj) -> "Graph":
        try:
            n = int(obj["n"])
            edges = [(int(u), int(v)) for u, v in obj["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad graph JSON: {exc}") from exc
        for u, v in edges:
            if not u < v:
                raise MalformedInputError(f"graph JSON edge [{u},{v}] must have u < v")
        return cls(n, edges)

    def to_dot(self) -> str:
        lines = ["graph {"]
        for v in range(self.n):
            lines.append(f"  {v};")
        for u, v in self.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _check_clique_shape(n: int, clique) -> tuple:
    """Validate a strictly increasing in-range vertex tuple."""
    tup = tuple(clique)
    for a, b in zip(tup, tup[1:]):
        if not a < b:
            raise MalformedInputError(f"clique {tup} is not strictly increasing")
    if tup and not (0 <= tup[0] and tup[-1] < n):
        raise MalformedInputError(f"clique {tup} out of range for n={n}")
    return tup


class CliqueCovering:
    """A list of cliques over a host graph, with valency accounting.

    Construction checks only the *shape* (sorted, in-range vertex
    lists); whether each list really is a clique and every edge is
    covered is the verifier's job.  Singleton cliques are allowed but
    never cover an edge.
    """

    __slots__ = ("host", "cliques", "_masks")

    def __init__(self, host: Graph, cliques):
        self.host = host
        self.cliques = tuple(_check_clique_shape(host.n, c) for c in cliques)
        self._masks = None

    @property
    def masks(self):
        if self._masks is None:
            out = []
            for c in self.cliques:
                m = 0
                for v in c:
                    m |= 1 << v
                out.append(m)
            self._masks = tuple(out)
        return self._masks

    def valencies(self):
        val = [0] * self.host.n
        for c in self.cliques:
            for v in c:
                val[v] += 1
        return val

    def max_valency(self) -> int:
        return max(self.valencies(), default=0)

    def __len__(self):
        return len(self.cliques)

    def __repr__(self):
        return f"CliqueCovering(k={len(self.cliques)}, max_valency={self.max_valency()})"

    def to_json_obj(self):
        return {"cliques": sorted([list(c) for c in self.cliques])}

    @classmethod
    def from_json_obj(cls, host: Graph, obj) -> "CliqueCovering":
        try:
            cliques = [tuple(int(v) for v in c) for c in obj["cliques"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad covering JSON: {exc}") from exc
        return cls(host, cliques)


@dataclass(frozen=True)
class CoveringReport:
    valid: bool
    max_valency: int
    uncovered_edges: tuple
    non_clique_indices: tuple


def verify_covering(g: Graph, c: CliqueCovering) -> CoveringReport:
    """Check that ``c`` is a valid clique covering of ``g``.

    Valid means: every listed clique induces a complete subgraph of
    ``g`` and every edge of ``g`` lies in at least one clique.
    ``max_valency`` counts all memberships, singletons included.
    """
    if c.host is not g and c.host != g:
        raise MalformedInputError("covering host does not match graph")
    bad = []
    covered = [0] * g.n
    val = [0] * g.n
    for idx, mask in enumerate(c.masks):
        is_cl = True
        for v in iter_bits(mask):
            val[v] += 1
            if mask & ~(g.adj[v] | (1 << v)):
                is_cl = False
        if not is_cl:
            bad.append(idx)
            continue
        if popcount(mask) >= 2:
            for v in iter_bits(mask):
                covered[v] |= mask & ~(1 << v)
    uncovered = []
    for u in range(g.n):
        missing = g.adj[u] & ~covered[u]
        for off in iter_bits(missing >> (u + 1)):
            uncovered.append((u, u + 1 + off))
    return CoveringReport(
        valid=not bad and not uncovered,
        max_valency=max(val, default=0),
        uncovered_edges=tuple(uncovered),
        non_clique_indices=tuple(bad),
    )


def reduce_covering(g: Graph, c: CliqueCovering) -> CliqueCovering:
    """Shrink a valid covering without ever raising a valency.

    Two move families, applied to a fixpoint in deterministic order:

    * drop moves (scanned first, lexicographic by clique index then
      vertex): remove a vertex from a clique when all its edges inside
      that clique are covered elsewhere; cliques reduced to size <= 1
      cover nothing and are deleted;
    * merge moves (lexicographic by clique index pair): replace two
      cliques by their union when the union is itself a clique -- the
      shared vertices lose one membership, nobody gains one.

    The union-merge subsumes the pairwise-edge merge that motivates it
    and is equally valency-safe.
    """
    rep = verify_covering(g, c)
    if not rep.valid:
        raise PreconditionError(f"input covering invalid: {rep}", witness=rep)

    masks = [m for m in c.masks if popcount(m) >= 2]
    # cover_count[e] tracked per ordered pair via dict of edge -> count
    count: dict = {}
    for m in masks:
        vs = list(iter_bits(m))
        for i, u in enumerate(vs):
            for v in vs[i + 1 :]:
                count[(u, v)] = count.get((u, v), 0) + 1

    def _drop_once() -> bool:
        for idx, m in enumerate(masks):
            for v in iter_bits(m):
                rest = m & ~(1 << v)
                ok = True
                for w in iter_bits(rest):
                    e = (v, w) if v < w else (w, v)
                    if count[e] < 2:
                        ok = False
                        break
                if ok:
                    for w in iter_bits(rest):
                        e = (v, w) if v < w else (w, v)
                        count[e] -= 1
                    if popcount(rest) >= 2:
                        masks[idx] = rest
                    else:
                        del masks[idx]
                    return True
        return False

    def _merge_once() -> bool:
        for i in range(len(masks)):
            for j in range(i + 1, len(masks)):
                union = masks[i] | masks[j]
                if union == masks[i] or union == masks[j]:
                    continue
                if g.is_clique_mask(union):
                    extra = union & ~masks[i]
                    old = list(iter_bits(masks[i]))
                    for v in iter_bits(extra):
                        for w in old:
                            e = (v, w) if v < w else (w, v)
                            count[e] = count.get(e, 0) + 1
                    masks[i] = union
                    gone = list(iter_bits(masks[j]))
                    for a_i, u in enumerate(gone):
                        for v in gone[a_i + 1 :]:
                            count[(u, v)] -= 1
                    del masks[j]
                    return True
        return False

    while True:
        if _drop_once():
            continue
        if _merge_once():
            continue
        break

    cliques = sorted(tuple(iter_bits(m)) for m in masks)
    out = CliqueCovering(g, cliques)
    return out


class IntersectionRepresentation:
    """Assignment of label sets to vertices with adjacency == intersection.

    ``labels`` is the size of the label universe ``0..labels-1``;
    ``sets`` holds one frozenset per vertex.
    """

    __slots__ = ("labels", "sets")

    def __init__(self, labels: int, sets):
        self.labels = int(labels)
        self.sets = tuple(frozenset(s) for s in sets)
        for s in self.sets:
            for x in s:
                if not 0 <= x < self.labels:
                    raise MalformedInputError(f"label {x} out of range 0..{self.labels - 1}")

    def max_set_size(self) -> int:
        return max((len(s) for s in self.sets), default=0)

    def is_injective(self) -> bool:
        return len(set(self.sets)) == len(self.sets)

    def check_against(self, g: Graph):
        """Return None if the intersection invariant holds, else the
        first offending vertex pair."""
        if len(self.sets) != g.n:
            raise MalformedInputError("representation size does not match graph")
        for u in range(g.n):
            for v in range(u + 1, g.n):
                meets = bool(self.sets[u] & self.sets[v])
                if meets != g.has_edge(u, v):
                    return (u, v)
        return None

    def to_json_obj(self):
        return {"labels": self.labels, "sets": [sorted(s) for s in self.sets]}

    @classmethod
    def from_json_obj(cls, obj) -> "IntersectionRepresentation":
        try:
            return cls(int(obj["labels"]), [[int(x) for x in s] for s in obj["sets"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad representation JSON: {exc}") from exc


def covering_to_representation(c: CliqueCovering) -> IntersectionRepresentation:
    """Label each vertex with the indices of the cliques containing it.

    Requires a valid covering; isolated vertices receive empty sets.
    The maximum set size equals the covering's maximum valency.
    """
    rep = verify_covering(c.host, c)
    if not rep.valid:
        raise PreconditionError(f"covering invalid: {rep}", witness=rep)
    sets = [set() for _ in range(c.host.n)]
    for idx, clique in enumerate(c.cliques):
        for v in clique:
            sets[v].add(idx)
    return IntersectionRepresentation(len(c.cliques), sets)


def representation_to_covering(g: Graph, r: IntersectionRepresentation) -> CliqueCovering:
    """One clique per label: the vertices whose sets contain it.

    Labels supported by fewer than two vertices yield singleton cliques
    and are dropped.  Raises with the offending pair if the intersection
    invariant fails for ``g``.
    """
    offender = r.check_against(g)
    if offender is not None:
        raise PreconditionError(
            f"intersection invariant violated at vertex pair {offender}", witness=offender
        )
    support: dict = {}
    for v, s in enumerate(r.sets):
        for lab in s:
            support.setdefault(lab, []).append(v)
    cliques = sorted(tuple(vs) for vs in support.values() if len(vs) >= 2)
    return CliqueCovering(g, cliques)


def make_injective(r: IntersectionRepresentation) -> IntersectionRepresentation:
    """Make the assignment injective by giving every vertex one fresh label.

    No-op when already injective; otherwise each set grows by exactly
    one, so a k-representation becomes an injective (k+1)-representation
    and no new intersections appear.
    """
    if r.is_injective():
        return r
    fresh = r.labels
    sets = [set(s) | {fresh + v} for v, s in enumerate(r.sets)]
    return IntersectionRepresentation(fresh + len(sets), sets)


def twin_reduce(g: Graph):
    """Collapse twin classes; returns (reduced graph, classes).

    Twins are adjacent vertices whose neighborhoods agree outside the
    pair, i.e. vertices with equal closed neighborhoods; this is an
    equivalence whose classes are cliques.  The reduced graph is induced
    on the smallest vertex of each class, relabeled densely, and
    ``classes[i]`` lists the original vertices behind reduced vertex i.
    """
    groups: dict = {}
    for v in range(g.n):
        groups.setdefault(g.closed_mask(v), []).append(v)
    classes = sorted(groups.values())
    reps = [cls[0] for cls in classes]
    reduced, _ = g.induced(reps)
    return reduced, tuple(tuple(cls) for cls in classes)


def twin_lift(host: Graph, c_reduced: CliqueCovering, classes) -> CliqueCovering:
    """Expand a covering of the twin-reduced graph back to ``host``.

    Every vertex of a reduced clique is substituted by its class.  A
    class of size >= 2 whose reduced vertex lies in no clique still has
    internal edges to cover, so its class clique is appended; in all
    other cases the maximum valency is preserved exactly.
    """
    seen = [False] * host.n
    total = 0
    for cls in classes:
        for v in cls:
            if not (0 <= v < host.n) or seen[v]:
                raise MalformedInputError("classes do not partition the host vertices")
            seen[v] = True
            total += 1
    if total != host.n:
        raise MalformedInputError("classes do not partition the host vertices")
    if len(classes) != c_reduced.host.n:
        raise MalformedInputError("class count does not match reduced graph")

    lifted = []
    covered_class = [False] * len(classes)
    for clique in c_reduced.cliques:
        big = []
        for v in clique:
            covered_class[v] = True
            big.extend(classes[v])
        lifted.append(tuple(sorted(big)))
    for i, cls in enumerate(classes):
        if len(cls) >= 2 and not covered_class[i]:
            lifted.append(tuple(sorted(cls)))
    return CliqueCovering(host, sorted(lifted))


def is_claw_free(g: Graph):
    """Test for induced K_{1,3}; returns (flag, witness).

    The witness is (center, (a, b, c)) with a, b, c pairwise
    non-adjacent neighbours of the center, or None when claw-free.
    A claw at v is a triangle in the complement of G[N(v)]; dense
    neighborhoods are checked with one boolean matrix product each.
    """
    import numpy as np

    n = g.n
    if n == 0:
        return True, None
    A = np.zeros((n, n), dtype=bool)
    for v in range(n):
        row = g.adj[v]
        for w in iter_bits(row):
            A[v, w] = True
    C = ~A
    np.fill_diagonal(C, False)
    for v in range(n):
        nb = np.flatnonzero(A[v])
        if nb.size < 3:
            continue
        M = C[np.ix_(nb, nb)]
        P = (M.astype(np.uint16) @ M.astype(np.uint16)) * M
        hits = np.argwhere(P)
        if hits.size:
            a_i, b_i = hits[0]
            a, b = int(nb[a_i]), int(nb[b_i])
            row = M[a_i] & M[b_i]
            c = int(nb[int(np.flatnonzero(row)[0])])
            trio = tuple(sorted((a, b, c)))
            return False, (v, trio)
    return True, None


def independence_number_of_mask(g: Graph, mask: int) -> int:
    """Exact independence number of the induced subgraph on ``mask``.

    Plain branch on the lowest vertex; exponential worst case, intended
    for desk-scale inputs (neighborhoods, n <= ~30).
    """
    if mask == 0:
        return 0
    low = mask & -mask
    v = low.bit_length() - 1
    without = independence_number_of_mask(g, mask ^ low)
    with_v = 1 + independence_number_of_mask(g, mask & ~g.closed_mask(v))
    return max(without, with_v)


def alpha_local(g: Graph) -> int:
    """Largest independent set inside a single vertex's neighborhood.

    Equals the maximum t with an induced K_{1,t}.  Exponential in the
    neighborhood size; desk scale only.
    """
    best = 0
    for v in range(g.n):
        d = g.degree(v)
        if d <= best:
            continue
        best = max(best, independence_number_of_mask(g, g.adj[v]))
    return best


def max_clique_number(g: Graph) -> int:
    """Exact clique number by branch and bound (desk scale)."""
    best = 0

    def rec(mask: int, size: int):
        nonlocal best
        if size + popcount(mask) <= best:
            return
        if mask == 0:
            best = max(best, size)
            return
        low = mask & -mask
        v = low.bit_length() - 1
        rec(mask & g.adj[v], size + 1)
        rec(mask ^ low, size)

    rec((1 << g.n) - 1, 0)
    return best


def lcc_bounds(g: Graph):
    """(lower, upper) bounds on the minimum covering valency.

    lower = max(ceil(Delta/(omega-1)), alpha_local); upper = Delta.
    Edgeless graphs get (0, 0).  Clique number exactly, so desk scale.
    """
    delta = g.max_degree()
    if g.edge_count == 0:
        return (0, 0)
    omega = max_clique_number(g)
    lower = max(math.ceil(delta / (omega - 1)), alpha_local(g))
    return (lower, delta)


def kneser_embedding_check(g: Graph, r: IntersectionRepresentation) -> bool:
    """Certify that the padded sets embed complement(g) into a Kneser graph.

    Requires an injective representation; sets are padded to the common
    size k with fresh labels (one private block per vertex), and the
    check is that distinct vertices get disjoint k-sets exactly when
    they are non-adjacent, i.e. adjacent in the complement.
    """
    if len(r.sets) != g.n:
        raise MalformedInputError("representation size does not match graph")
    if not r.is_injective():
        raise PreconditionError("representation is not injective")
    k = max(1, r.max_set_size())
    fresh = r.labels
    padded = []
    for s in r.sets:
        s = set(s)
        while len(s) < k:
            s.add(fresh)
            fresh += 1
        padded.append(frozenset(s))
    if len(set(padded)) != len(padded):
        return False
    for u, v in combinations(range(g.n), 2):
        disjoint = not (padded[u] & padded[v])
        if disjoint == g.has_edge(u, v):
            return False
    return True
