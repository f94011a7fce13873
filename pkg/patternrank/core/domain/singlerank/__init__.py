"""SingleRank domain - co-occurrence graph and weighted PageRank."""

from patternrank.core.domain.singlerank.graph import (
    DEFAULT_DAMPING,
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    DEFAULT_WINDOW,
    CooccurrenceGraph,
    WordScores,
    build_graph,
    edge_weight,
    member_words,
    score_candidates,
    weighted_pagerank,
)

__all__ = [
    "DEFAULT_DAMPING",
    "DEFAULT_MAX_ITER",
    "DEFAULT_TOL",
    "DEFAULT_WINDOW",
    "CooccurrenceGraph",
    "WordScores",
    "build_graph",
    "edge_weight",
    "member_words",
    "score_candidates",
    "weighted_pagerank",
]
