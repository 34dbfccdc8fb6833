"""Deterministic and seeded generators for the graph families under study.

Every family that a theorem speaks about gets a constructor here so the
pipelines and solvers have reproducible test beds: the staircase join
of two cliques, its bipartite skeleton, complete multipartite graphs,
Kneser graphs, line graphs of hypergraphs, seeded random cobipartite
graphs and seeded random linear interval models.  Seeded generators are
pure functions of their arguments: equal seeds give identical outputs
across runs and platforms.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import MalformedInputError
from .graphs import Graph

__all__ = [
    "gen_k_nabla",
    "gen_staircase_bipartite",
    "gen_complete_multipartite",
    "gen_kneser",
    "gen_line_graph",
    "gen_random_cobipartite",
    "gen_random_multigraph",
    "gen_random_linear_interval",
    "knabla_interval_model",
    "complement",
]


def gen_k_nabla(n: int) -> Graph:
    """Staircase join of two n-cliques.

    Vertices 0..n-1 form the clique X, n..2n-1 the clique Y, and x_i is
    adjacent to y_0..y_i (0-indexed), i.e. cross adjacency follows the
    lower-triangular all-ones pattern.
    """
    if n < 1:
        raise MalformedInputError("n must be >= 1")
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            edges.append((i, j))
            edges.append((n + i, n + j))
    for i in range(n):
        for j in range(i + 1):
            edges.append((i, n + j))
    return Graph(2 * n, edges)


def gen_staircase_bipartite(n: int) -> Graph:
    """Bipartite skeleton of the staircase join: x_i ~ y_j iff j <= i."""
    if n < 1:
        raise MalformedInputError("n must be >= 1")
    edges = [(i, n + j) for i in range(n) for j in range(i + 1)]
    return Graph(2 * n, edges)


def gen_complete_multipartite(part_sizes) -> Graph:
    """Complete multipartite graph with the given part sizes."""
    sizes = list(part_sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise MalformedInputError("part sizes must be positive")
    n = sum(sizes)
    part = []
    for p, s in enumerate(sizes):
        part.extend([p] * s)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]
    ]
    return Graph(n, edges)


def gen_kneser(n: int, k: int) -> Graph:
    """Kneser graph: k-subsets of {1..n}, adjacent iff disjoint."""
    from itertools import combinations

    if k < 1 or n < 2 * k:
        raise MalformedInputError("need n >= 2k >= 2")
    subsets = [frozenset(c) for c in combinations(range(n), k)]
    edges = [
        (i, j)
        for i in range(len(subsets))
        for j in range(i + 1, len(subsets))
        if not subsets[i] & subsets[j]
    ]
    return Graph(len(subsets), edges)


def gen_line_graph(hyperedges) -> Graph:
    """Line graph of a hypergraph given as a list of edges.

    One vertex per hyperedge, in input order; two vertices are adjacent
    iff their hyperedges intersect.  Duplicate hyperedges are allowed
    (parallel edges of a multigraph become twins here).
    """
    hs = [frozenset(e) for e in hyperedges]
    edges = [
        (i, j) for i in range(len(hs)) for j in range(i + 1, len(hs)) if hs[i] & hs[j]
    ]
    return Graph(len(hs), edges)


def gen_random_cobipartite(n: int, p: float, seed: int) -> Graph:
    """Two cliques of sizes ceil(n/2), floor(n/2); independent cross edges.

    Each pair between the cliques is an edge with probability ``p``.
    """
    if n < 1:
        raise MalformedInputError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise MalformedInputError("p must be in [0, 1]")
    rng = random.Random(seed)
    a = (n + 1) // 2
    edges = []
    for u in range(a):
        for v in range(u + 1, a):
            edges.append((u, v))
    for u in range(a, n):
        for v in range(u + 1, n):
            edges.append((u, v))
    for u in range(a):
        for v in range(a, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges)


def gen_random_multigraph(n_vertices: int, n_edges: int, seed: int):
    """Loop-free random multigraph as a hyperedge list (for line graphs)."""
    if n_vertices < 2 or n_edges < 1:
        raise MalformedInputError("need >= 2 vertices and >= 1 edge")
    rng = random.Random(seed)
    out = []
    for _ in range(n_edges):
        u = rng.randrange(n_vertices)
        v = rng.randrange(n_vertices - 1)
        if v >= u:
            v += 1
        out.append((min(u, v), max(u, v)))
    return out


def gen_random_linear_interval(n_points: int, n_intervals: int, seed: int):
    """Seeded interval model: points 1..n, intervals at off-point slots.

    Interval endpoints sit strictly between points (half/quarter integer
    slots), so endpoint/point collisions cannot occur.  The raw model
    may contain nested intervals; ``lcc.intervals.normalize`` cleans it
    up without changing the derived graph.
    """
    from .intervals import IntervalModel

    if n_points < 1 or n_intervals < 1:
        raise MalformedInputError("need >= 1 point and >= 1 interval")
    rng = random.Random(seed)
    points = tuple(Fraction(i) for i in range(1, n_points + 1))
    intervals = []
    for _ in range(n_intervals):
        a = rng.randrange(1, n_points + 1)
        b = rng.randrange(a, n_points + 1)
        intervals.append((Fraction(2 * a - 1, 2), Fraction(4 * b + 1, 4)))
    return IntervalModel(points, tuple(intervals))


def knabla_interval_model(n: int):
    """Canonical interval presentation of the staircase join.

    Points 1..2n; interval i (1-indexed) spans points i..n+i, matching
    the defining picture of the family.
    """
    from .intervals import IntervalModel

    if n < 1:
        raise MalformedInputError("n must be >= 1")
    points = tuple(Fraction(i) for i in range(1, 2 * n + 1))
    intervals = tuple(
        (Fraction(2 * i - 1, 2), Fraction(4 * (n + i) + 1, 4)) for i in range(1, n + 1)
    )
    return IntervalModel(points, intervals)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    adj = [full & ~(g.adj[v] | (1 << v)) for v in range(g.n)]
    return Graph.from_adj(adj)
