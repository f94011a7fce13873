"""
SingleRank - FUNCTIONAL CORE

Word co-occurrence graph over NOUN/ADJ tokens, weighted PageRank over it, and
phrase scoring by summed word scores. The graph is a ``networkx.Graph`` whose
edges carry an integer ``weight`` attribute; the PageRank iteration itself
runs on numpy arrays over the sorted node list so results do not depend on
insertion order.
"""

import re
from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx
import numpy as np

from patternrank.core.domain.pattern.models import Candidate
from patternrank.core.domain.ranker.models import RankedKeyphrase
from patternrank.core.domain.ranker.similarity import rank_scored
from patternrank.core.domain.textpipe.models import CoarseTag, TaggedDocument
from patternrank.core.exceptions import ConfigError, EmptyGraph

DEFAULT_WINDOW = 10
DEFAULT_DAMPING = 0.85
DEFAULT_TOL = 1e-6
DEFAULT_MAX_ITER = 100

GRAPH_TAGS = frozenset({CoarseTag.NOUN, CoarseTag.ADJ})
_MEMBER_SPLIT = re.compile(r"[\s\-]+")

CooccurrenceGraph = nx.Graph


@dataclass(frozen=True)
class WordScores:
    """PageRank score per graph word."""

    scores: dict[str, float]
    iterations: int
    converged: bool

    def get(self, word: str) -> float:
        return self.scores.get(word, 0.0)


def build_graph(doc: TaggedDocument, window: int = DEFAULT_WINDOW) -> CooccurrenceGraph:
    """
    Pure function: co-occurrence graph of a document.

    Tokens i < j are linked when both are NOUN/ADJ and j - i < window, counted
    over original token positions; pairs of the same word add no edge.
    """
    if window < 2:
        raise ConfigError("window must be >= 2", field="window")

    graph = nx.Graph()
    eligible = [
        (position, token.surface.lower())
        for position, (token, tag) in enumerate(doc.tokens)
        if tag.coarse in GRAPH_TAGS
    ]
    graph.add_nodes_from(word for _, word in eligible)
    for index, (position, word) in enumerate(eligible):
        for other_position, other in eligible[index + 1 :]:
            if other_position - position >= window:
                break
            if other == word:
                continue
            if graph.has_edge(word, other):
                graph[word][other]["weight"] += 1
            else:
                graph.add_edge(word, other, weight=1)
    return graph


def edge_weight(graph: CooccurrenceGraph, a: str, b: str) -> int:
    """Weight of the undirected edge (a, b), 0 when absent."""
    data = graph.get_edge_data(a, b)
    return int(data["weight"]) if data else 0


def weighted_pagerank(
    graph: CooccurrenceGraph,
    damping: float = DEFAULT_DAMPING,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> WordScores:
    """
    Pure function: s(v) = (1 - d) + d * sum_u w(u, v) / W(u) * s(u).

    Starts from all ones and stops once the largest absolute change is below
    ``tol`` or after ``max_iter`` iterations. Isolated nodes keep 1 - d.

    Raises:
        EmptyGraph: if the graph has no nodes
        ConfigError: if damping is outside (0, 1) or tol is not positive
    """
    if graph.number_of_nodes() == 0:
        raise EmptyGraph()
    if not 0.0 < damping < 1.0:
        raise ConfigError("damping must be in (0, 1)", field="damping")
    if tol <= 0.0:
        raise ConfigError("tol must be > 0", field="tol")

    nodes = sorted(graph.nodes)
    index = {node: i for i, node in enumerate(nodes)}
    sources: list[int] = []
    targets: list[int] = []
    weights: list[float] = []
    for a, b, weight in graph.edges(data="weight"):
        for u, v in ((a, b), (b, a)):
            sources.append(index[u])
            targets.append(index[v])
            weights.append(float(weight))

    size = len(nodes)
    src = np.asarray(sources, dtype=np.intp)
    dst = np.asarray(targets, dtype=np.intp)
    w = np.asarray(weights, dtype=np.float64)
    strength = np.bincount(src, weights=w, minlength=size)
    # every source has at least its own edge, so strength[src] > 0
    transfer = w / strength[src] if w.size else w

    scores = np.ones(size, dtype=np.float64)
    iterations = 0
    converged = False
    while iterations < max_iter:
        iterations += 1
        updated = (1.0 - damping) + damping * np.bincount(
            dst, weights=transfer * scores[src], minlength=size
        )
        delta = float(np.max(np.abs(updated - scores)))
        scores = updated
        if delta < tol:
            converged = True
            break

    return WordScores(
        scores={node: float(scores[index[node]]) for node in nodes},
        iterations=iterations,
        converged=converged,
    )


def member_words(phrase: str) -> list[str]:
    """Words of a normalized phrase, split on whitespace and hyphens."""
    return [word for word in _MEMBER_SPLIT.split(phrase) if word]


def score_candidates(
    candidates: Sequence[Candidate], scores: WordScores
) -> list[RankedKeyphrase]:
    """
    Pure function: score each candidate by the sum of its member word scores.

    Words missing from the graph contribute 0. Ordering matches cosine
    ranking; scores are raw sums and are not clamped.
    """
    return rank_scored(
        [
            (candidate, sum(scores.get(word) for word in member_words(candidate.normalized)))
            for candidate in candidates
        ]
    )
