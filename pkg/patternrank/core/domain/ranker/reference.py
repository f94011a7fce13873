"""
Reference embedding - hashed character trigrams.

Deterministic and offline: the lowercased text is cut into character
trigrams, each trigram is hashed into one of ``dim`` buckets with a keyed
BLAKE2b digest, and the count vector is L2-normalized. Texts shorter than
three characters hash as a single gram; the empty text embeds to all zeros.
"""

import hashlib
from collections import Counter

import numpy as np

from patternrank.core.domain.ranker.models import EmbeddingVector

MIN_REFERENCE_DIM = 16
GRAM_SIZE = 3


def char_trigrams(text: str) -> list[str]:
    lowered = text.lower()
    if not lowered:
        return []
    if len(lowered) < GRAM_SIZE:
        return [lowered]
    return [lowered[i : i + GRAM_SIZE] for i in range(len(lowered) - GRAM_SIZE + 1)]


def bucket(gram: str, dim: int, seed: int) -> int:
    digest = hashlib.blake2b(
        gram.encode("utf-8"), digest_size=8, key=str(seed).encode("ascii")
    ).digest()
    return int.from_bytes(digest, "big") % dim


def trigram_vector(text: str, dim: int, seed: int) -> EmbeddingVector:
    """Pure function: the reference embedding of one text."""
    if dim < MIN_REFERENCE_DIM:
        raise ValueError(f"Reference embedder needs dim >= {MIN_REFERENCE_DIM}")
    values = np.zeros(dim, dtype=np.float64)
    for gram, count in Counter(char_trigrams(text)).items():
        values[bucket(gram, dim, seed)] += count
    norm = np.linalg.norm(values)
    if norm > 0:
        values /= norm
    return EmbeddingVector(values)
