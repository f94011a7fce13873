"""Embedding backends - HTTP service, stdio subprocess, precomputed file, reference hash."""

from patternrank.adapter.outbound.embedding.http_backend import HttpEmbeddingBackend
from patternrank.adapter.outbound.embedding.precomputed_backend import (
    PrecomputedEmbeddingBackend,
)
from patternrank.adapter.outbound.embedding.reference_backend import (
    ReferenceEmbeddingBackend,
    reference_embedder,
)
from patternrank.adapter.outbound.embedding.stdio_backend import StdioEmbeddingBackend

__all__ = [
    "HttpEmbeddingBackend",
    "PrecomputedEmbeddingBackend",
    "ReferenceEmbeddingBackend",
    "StdioEmbeddingBackend",
    "reference_embedder",
]
