"""
Unit tests for cosine ranking and the reference trigram embedding.
"""

import math
import random
from collections import Counter

import numpy as np
import pytest

from patternrank.core.domain.pattern.models import Candidate
from patternrank.core.domain.ranker.models import EmbeddingVector
from patternrank.core.domain.ranker.reference import bucket, char_trigrams, trigram_vector
from patternrank.core.domain.ranker.similarity import (
    cosine,
    rank_by_similarity,
    rank_scored,
    top_n,
)
from patternrank.core.exceptions import DimensionMismatch, InvalidN, ZeroVector


def _candidate(form: str, position: int) -> Candidate:
    return Candidate(form, ((position, position + 1),))


def _random_vector(rng: random.Random, dim: int) -> EmbeddingVector:
    values = [rng.gauss(0.0, 1.0) for _ in range(dim)]
    if not any(values):
        values[0] = 1.0
    return EmbeddingVector.of(values)


class TestEmbeddingVector:
    """Test cases for the vector value type."""

    def test_read_only(self):
        vector = EmbeddingVector.of([1.0, 2.0])

        with pytest.raises(ValueError):
            vector.values[0] = 5.0

    @pytest.mark.parametrize("values", [[], [float("nan")], [1.0, float("inf")]])
    def test_invalid_values_rejected(self, values):
        with pytest.raises(ValueError):
            EmbeddingVector.of(values)

    def test_equality_by_value(self):
        assert EmbeddingVector.of([1, 2]) == EmbeddingVector.of([1.0, 2.0])
        assert hash(EmbeddingVector.of([1, 2])) == hash(EmbeddingVector.of([1.0, 2.0]))


class TestCosine:
    """Test cases for cosine similarity."""

    def test_known_value(self):
        score = cosine(EmbeddingVector.of([1, 2, 3]), EmbeddingVector.of([4, 5, 6]))

        assert score == pytest.approx(0.974631846, abs=1e-9)

    def test_orthogonal_and_opposite(self):
        assert cosine(EmbeddingVector.of([1, 0]), EmbeddingVector.of([0, 1])) == 0.0
        assert cosine(EmbeddingVector.of([1, 1]), EmbeddingVector.of([-2, -2])) == pytest.approx(-1.0)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            cosine(EmbeddingVector.of([1, 0]), EmbeddingVector.of([1, 0, 0]))

    def test_zero_vector(self):
        with pytest.raises(ZeroVector):
            cosine(EmbeddingVector.of([0, 0]), EmbeddingVector.of([1, 0]))

    def test_bounds_and_identity_property(self):
        rng = random.Random(1)
        for _ in range(500):
            dim = rng.randint(1, 16)
            u = _random_vector(rng, dim)
            v = _random_vector(rng, dim)

            assert -1.0 <= cosine(u, v) <= 1.0
            assert cosine(u, u) == pytest.approx(1.0, abs=1e-12)
            assert cosine(u, v) == pytest.approx(cosine(v, u), abs=1e-12)


class TestRanking:
    """Test cases for ordering and the top-N cut."""

    def test_sorted_by_score_with_dense_ranks(self):
        ranked = rank_scored(
            [(_candidate("b", 1), 0.2), (_candidate("a", 0), 0.9), (_candidate("c", 2), 0.5)]
        )

        assert [r.phrase for r in ranked] == ["a", "c", "b"]
        assert [r.rank for r in ranked] == [1, 2, 3]

    def test_ties_break_on_position_then_form(self):
        ranked = rank_scored(
            [
                (_candidate("zeta", 0), 0.5),
                (Candidate("beta", ((3, 4),)), 0.5),
                (Candidate("alpha", ((3, 5),)), 0.5),
            ]
        )

        assert [r.phrase for r in ranked] == ["zeta", "alpha", "beta"]

    def test_empty_candidates(self):
        assert rank_by_similarity(EmbeddingVector.of([1.0]), [], []) == []

    def test_vector_count_must_match(self):
        with pytest.raises(ValueError):
            rank_by_similarity(EmbeddingVector.of([1.0]), [_candidate("a", 0)], [])

    def test_scale_invariance_property(self):
        """Positive rescaling of any vector leaves the ordering unchanged."""
        rng = random.Random(2)
        for _ in range(500):
            dim = rng.randint(2, 8)
            doc = _random_vector(rng, dim)
            candidates = [_candidate(f"c{i}", i) for i in range(rng.randint(1, 8))]
            vectors = [_random_vector(rng, dim) for _ in candidates]
            scaled = [vector.scaled(rng.uniform(0.1, 100.0)) for vector in vectors]

            original = rank_by_similarity(doc, candidates, vectors)
            rescaled = rank_by_similarity(doc.scaled(rng.uniform(0.1, 100.0)), candidates, scaled)

            assert [r.phrase for r in rescaled] == [r.phrase for r in original]
            for left, right in zip(original, rescaled, strict=True):
                assert -1.0 <= right.score <= 1.0
                assert left.score == pytest.approx(right.score, abs=1e-9)

    def test_permutation_invariance_property(self):
        """Input order of candidates never changes the ranked output."""
        rng = random.Random(3)
        for _ in range(500):
            dim = rng.randint(2, 8)
            doc = _random_vector(rng, dim)
            pairs = [(_candidate(f"c{i}", i), _random_vector(rng, dim)) for i in range(rng.randint(1, 8))]
            # duplicated vectors force ties
            if len(pairs) > 1 and rng.random() < 0.5:
                pairs[-1] = (pairs[-1][0], pairs[0][1])
            shuffled = pairs[:]
            rng.shuffle(shuffled)

            original = rank_by_similarity(doc, [c for c, _ in pairs], [v for _, v in pairs])
            permuted = rank_by_similarity(doc, [c for c, _ in shuffled], [v for _, v in shuffled])

            assert permuted == original

    def test_top_n(self):
        ranked = rank_scored([(_candidate(f"c{i}", i), 1.0 - i / 10) for i in range(5)])

        assert [r.phrase for r in top_n(ranked, 2)] == ["c0", "c1"]
        assert len(top_n(ranked, 50)) == 5

    @pytest.mark.parametrize("n", [0, -3])
    def test_top_n_invalid(self, n):
        with pytest.raises(InvalidN):
            top_n([], n)


class TestTrigramVector:
    """Test cases for the reference trigram embedding."""

    def test_char_trigrams(self):
        assert char_trigrams("AbcD") == ["abc", "bcd"]
        assert char_trigrams("ab") == ["ab"]
        assert char_trigrams("") == []

    def test_single_trigram_is_unit_bucket(self):
        vector = trigram_vector("abc", dim=256, seed=0)

        assert np.count_nonzero(vector.values) == 1
        assert vector.values.max() == 1.0

    @pytest.mark.parametrize("text", ["ai", "X"])
    def test_short_text_hashes_as_one_gram(self, text):
        vector = trigram_vector(text, dim=256, seed=0)

        assert np.count_nonzero(vector.values) == 1
        assert vector.values[bucket(text.lower(), 256, 0)] == 1.0
        assert cosine(vector, vector) == pytest.approx(1.0)

    def test_repeated_text_matches_explicit_enumeration(self):
        counts = Counter(bucket(gram, 256, 0) for gram in ["abc", "bca", "cab", "abc"])
        norm = math.sqrt(sum(c * c for c in counts.values()))
        expected = counts[bucket("abc", 256, 0)] / norm

        score = cosine(trigram_vector("abcabc", 256, 0), trigram_vector("abc", 256, 0))

        assert score == pytest.approx(expected, abs=1e-12)

    def test_empty_text_is_zero_vector(self):
        vector = trigram_vector("", dim=64, seed=0)

        assert not vector.values.any()
        with pytest.raises(ZeroVector):
            cosine(vector, trigram_vector("grid", dim=64, seed=0))

    def test_deterministic_and_seeded(self):
        assert trigram_vector("grid computing", 128, 7) == trigram_vector("grid computing", 128, 7)
        assert trigram_vector("grid computing", 128, 7) != trigram_vector("grid computing", 128, 8)

    def test_dimension_floor(self):
        with pytest.raises(ValueError):
            trigram_vector("grid", dim=8, seed=0)

    def test_shared_trigrams_rank_higher(self):
        doc = trigram_vector("grid computing systems share computing resources", 256, 0)
        candidates = [_candidate("banana", 0), _candidate("grid computing", 1)]
        vectors = [trigram_vector(c.normalized, 256, 0) for c in candidates]

        ranked = rank_by_similarity(doc, candidates, vectors)

        assert ranked[0].phrase == "grid computing"
