"""Local clique coverings of graphs.

Covering valency machinery around one theme: covering the edges of a
graph by cliques so that no vertex lies in more than k of them.  The
package provides exact desk-scale solvers with certificates,
constructive coverings for claw-free and linear interval graphs, the
staircase-matrix rectangle calculus behind them, and the equivalent
skew-intersecting set-pair families.
"""

from .graphs import (
    CliqueCovering,
    Graph,
    IntersectionRepresentation,
    alpha_local,
    covering_to_representation,
    is_claw_free,
    kneser_embedding_check,
    lcc_bounds,
    make_injective,
    reduce_covering,
    representation_to_covering,
    twin_lift,
    twin_reduce,
    verify_covering,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "CliqueCovering",
    "IntersectionRepresentation",
    "verify_covering",
    "reduce_covering",
    "covering_to_representation",
    "representation_to_covering",
    "make_injective",
    "twin_reduce",
    "twin_lift",
    "is_claw_free",
    "alpha_local",
    "lcc_bounds",
    "kneser_embedding_check",
    "__version__",
]
