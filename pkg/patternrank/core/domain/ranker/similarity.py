"""
Similarity Ranking - FUNCTIONAL CORE

Cosine similarity, deterministic ordering of scored candidates and the top-N
cut. Ordering is score descending, then earlier first occurrence, then the
normalized form, so the input order of candidates never matters.
"""

from collections.abc import Sequence

import numpy as np

from patternrank.core.domain.pattern.models import Candidate
from patternrank.core.domain.ranker.models import EmbeddingVector, RankedKeyphrase
from patternrank.core.exceptions import DimensionMismatch, InvalidN, ZeroVector


def cosine(u: EmbeddingVector, v: EmbeddingVector) -> float:
    """
    Cosine similarity clamped to [-1, 1].

    Raises:
        DimensionMismatch: if the vectors differ in dimension
        ZeroVector: if either vector is all zeros
    """
    if u.dim != v.dim:
        raise DimensionMismatch(u.dim, v.dim)
    norm_u = float(np.linalg.norm(u.values))
    norm_v = float(np.linalg.norm(v.values))
    if norm_u == 0.0 or norm_v == 0.0:
        raise ZeroVector()
    value = float(np.dot(u.values, v.values)) / (norm_u * norm_v)
    return min(1.0, max(-1.0, value))


def ordering_key(candidate: Candidate, score: float) -> tuple[float, int, str]:
    return (-score, candidate.first_occurrence, candidate.normalized)


def rank_scored(scored: Sequence[tuple[Candidate, float]]) -> list[RankedKeyphrase]:
    """Sort (candidate, score) pairs and assign ranks 1..K."""
    ordered = sorted(scored, key=lambda pair: ordering_key(*pair))
    return [
        RankedKeyphrase(candidate=candidate, score=score, rank=rank)
        for rank, (candidate, score) in enumerate(ordered, start=1)
    ]


def rank_by_similarity(
    doc_vector: EmbeddingVector,
    candidates: Sequence[Candidate],
    vectors: Sequence[EmbeddingVector],
) -> list[RankedKeyphrase]:
    """
    Pure function: rank candidates by cosine similarity to the document.

    ``vectors[i]`` is the embedding of ``candidates[i].normalized``.
    """
    if len(candidates) != len(vectors):
        raise ValueError("Need exactly one vector per candidate")
    return rank_scored(
        [
            (candidate, cosine(doc_vector, vector))
            for candidate, vector in zip(candidates, vectors, strict=True)
        ]
    )


def top_n(ranked: Sequence[RankedKeyphrase], n: int) -> list[RankedKeyphrase]:
    """
    First ``min(n, len(ranked))`` entries, order preserved.

    Raises:
        InvalidN: if n < 1
    """
    if n < 1:
        raise InvalidN(n)
    return list(ranked[:n])
