"""Ranker domain - embedding vectors, cosine ranking and the reference embedding."""

from patternrank.core.domain.ranker.models import EmbeddingVector, RankedKeyphrase
from patternrank.core.domain.ranker.reference import (
    MIN_REFERENCE_DIM,
    char_trigrams,
    trigram_vector,
)
from patternrank.core.domain.ranker.similarity import (
    cosine,
    ordering_key,
    rank_by_similarity,
    rank_scored,
    top_n,
)

__all__ = [
    "MIN_REFERENCE_DIM",
    "EmbeddingVector",
    "RankedKeyphrase",
    "char_trigrams",
    "cosine",
    "ordering_key",
    "rank_by_similarity",
    "rank_scored",
    "top_n",
    "trigram_vector",
]
