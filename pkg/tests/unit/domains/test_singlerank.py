"""
Unit tests for the SingleRank co-occurrence graph and weighted PageRank.
"""

import random

import networkx as nx
import numpy as np
import pytest

from patternrank.core.domain.pattern.models import Candidate
from patternrank.core.domain.singlerank.graph import (
    WordScores,
    build_graph,
    edge_weight,
    member_words,
    score_candidates,
    weighted_pagerank,
)
from patternrank.core.exceptions import ConfigError, EmptyGraph
from tests.helpers import tagged_doc


def dense_pagerank(graph: nx.Graph, damping: float, iterations: int = 5000) -> dict[str, float]:
    """Oracle: plain power iteration on the dense transition matrix."""
    nodes = sorted(graph.nodes)
    weights = nx.to_numpy_array(graph, nodelist=nodes, weight="weight")
    strength = weights.sum(axis=1)
    transition = np.divide(
        weights, strength[:, None], out=np.zeros_like(weights), where=strength[:, None] > 0
    )
    scores = np.ones(len(nodes))
    for _ in range(iterations):
        updated = (1 - damping) + damping * transition.T @ scores
        if np.max(np.abs(updated - scores)) < 1e-15:
            scores = updated
            break
        scores = updated
    return dict(zip(nodes, scores.tolist(), strict=True))


def random_graph(rng: random.Random) -> nx.Graph:
    graph = nx.Graph()
    size = rng.randint(1, 30)
    graph.add_nodes_from(f"n{i:02d}" for i in range(size))
    density = rng.uniform(0.05, 0.5)
    for i in range(size):
        for j in range(i + 1, size):
            if rng.random() < density:
                graph.add_edge(f"n{i:02d}", f"n{j:02d}", weight=rng.randint(1, 5))
    return graph


class TestBuildGraph:
    """Test cases for co-occurrence graph construction."""

    def test_adjacent_words_with_window_two(self):
        doc = tagged_doc([("fast", "JJ"), ("neural", "JJ"), ("networks", "NNS")])

        graph = build_graph(doc, window=2)

        assert sorted(graph.nodes) == ["fast", "networks", "neural"]
        assert edge_weight(graph, "fast", "neural") == 1
        assert edge_weight(graph, "neural", "networks") == 1
        assert edge_weight(graph, "fast", "networks") == 0

    def test_window_counts_original_positions(self):
        doc = tagged_doc([("grid", "NN"), ("of", "IN"), ("computing", "NN")])

        assert edge_weight(build_graph(doc, window=2), "grid", "computing") == 0
        assert edge_weight(build_graph(doc, window=3), "grid", "computing") == 1

    def test_repeated_cooccurrence_accumulates(self):
        doc = tagged_doc(
            [("grid", "NN"), ("computing", "NN"), ("and", "CC"), ("grid", "NN"), ("computing", "NN")]
        )

        graph = build_graph(doc, window=2)

        assert edge_weight(graph, "grid", "computing") == 2
        assert edge_weight(graph, "computing", "grid") == 2

    def test_no_self_loops(self):
        doc = tagged_doc([("Grid", "NN"), ("grid", "NN")])

        graph = build_graph(doc)

        assert list(graph.nodes) == ["grid"]
        assert nx.number_of_selfloops(graph) == 0

    def test_only_nouns_and_adjectives(self):
        doc = tagged_doc([("the", "DT"), ("proposed", "VBN"), ("method", "NN")])

        assert list(build_graph(doc).nodes) == ["method"]

    @pytest.mark.parametrize("window", [1, 0])
    def test_window_too_small(self, window):
        with pytest.raises(ConfigError):
            build_graph(tagged_doc([("grid", "NN")]), window=window)


class TestWeightedPagerank:
    """Test cases for the PageRank solver."""

    def test_two_connected_nodes(self):
        graph = nx.Graph()
        graph.add_edge("a", "b", weight=3)

        result = weighted_pagerank(graph)

        assert result.scores == pytest.approx({"a": 1.0, "b": 1.0})
        assert result.converged

    def test_star_center_beats_leaves(self):
        graph = nx.Graph()
        for leaf in ("b", "c", "d", "e"):
            graph.add_edge("a", leaf, weight=1)

        result = weighted_pagerank(graph)

        assert all(result.get("a") > result.get(leaf) for leaf in "bcde")
        assert sum(result.scores.values()) == pytest.approx(5.0, abs=1e-5)

    def test_isolated_node(self):
        graph = nx.Graph()
        graph.add_node("alone")

        assert weighted_pagerank(graph, damping=0.85).get("alone") == pytest.approx(0.15)

    def test_empty_graph(self):
        with pytest.raises(EmptyGraph):
            weighted_pagerank(nx.Graph())

    @pytest.mark.parametrize("damping", [0.0, 1.0, -0.5, 1.5])
    def test_invalid_damping(self, damping):
        graph = nx.Graph()
        graph.add_node("a")

        with pytest.raises(ConfigError):
            weighted_pagerank(graph, damping=damping)

    def test_invalid_tol(self):
        graph = nx.Graph()
        graph.add_node("a")

        with pytest.raises(ConfigError):
            weighted_pagerank(graph, tol=0.0)

    def test_max_iter_bounds_iterations(self):
        graph = nx.path_graph(["a", "b", "c", "d"])
        nx.set_edge_attributes(graph, 1, "weight")

        result = weighted_pagerank(graph, tol=1e-15, max_iter=3)

        assert result.iterations == 3
        assert not result.converged

    def test_dense_oracle_agreement(self):
        """Solver matches dense power iteration on random weighted graphs."""
        rng = random.Random(17)
        for _ in range(100):
            graph = random_graph(rng)
            damping = rng.uniform(0.5, 0.95)

            result = weighted_pagerank(graph, damping=damping, tol=1e-13, max_iter=5000)
            expected = dense_pagerank(graph, damping)

            assert result.converged
            for node, score in expected.items():
                assert abs(result.get(node) - score) <= 1e-8
                assert result.get(node) > 0

    def test_insertion_order_does_not_matter(self):
        rng = random.Random(4)
        graph = random_graph(rng)
        reordered = nx.Graph()
        reordered.add_nodes_from(reversed(sorted(graph.nodes)))
        reordered.add_edges_from(reversed(list(graph.edges(data=True))))

        assert weighted_pagerank(reordered).scores == pytest.approx(
            weighted_pagerank(graph).scores, abs=1e-12
        )


class TestScoreCandidates:
    """Test cases for phrase scoring."""

    def test_member_words(self):
        assert member_words("state-of-the-art systems") == ["state", "of", "the", "art", "systems"]

    def test_sum_of_word_scores(self):
        scores = WordScores({"a": 1.0, "b": 0.5, "c": 1.2}, iterations=1, converged=True)
        candidates = [Candidate("c", ((2, 3),)), Candidate("a b", ((0, 2),))]

        ranked = score_candidates(candidates, scores)

        assert [(r.phrase, r.score) for r in ranked] == [
            ("a b", pytest.approx(1.5)),
            ("c", pytest.approx(1.2)),
        ]

    def test_single_word(self):
        scores = WordScores({"a": 1.3}, iterations=1, converged=True)

        [ranked] = score_candidates([Candidate("a", ((0, 1),))], scores)

        assert ranked.score == pytest.approx(1.3)

    def test_missing_words_score_zero_and_rank_last(self):
        scores = WordScores({"a": 0.2}, iterations=1, converged=True)
        candidates = [Candidate("zz", ((0, 1),)), Candidate("a", ((1, 2),))]

        ranked = score_candidates(candidates, scores)

        assert [r.phrase for r in ranked] == ["a", "zz"]
        assert ranked[1].score == 0.0

    def test_deterministic(self):
        doc = tagged_doc(
            [("fast", "JJ"), ("neural", "JJ"), ("networks", "NNS"), ("improve", "VBP"), ("grid", "NN")]
        )
        first = weighted_pagerank(build_graph(doc))
        second = weighted_pagerank(build_graph(doc))

        assert first == second
