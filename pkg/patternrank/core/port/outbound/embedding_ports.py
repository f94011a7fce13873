"""
Embedding Ports - Interfaces for Imperative Shell

The pretrained language model sits behind this interface; the ranker only
ever sees vectors.
"""

from typing import Protocol

from patternrank.core.domain.ranker.models import EmbeddingVector


class EmbeddingBackend(Protocol):
    """
    Port for turning texts into fixed-dimension vectors.

    Implementations return exactly one vector per input text, all of the same
    dimension, and are deterministic for identical inputs within a session.
    Failures are raised as ``BackendFailure`` carrying the failed batch.
    """

    @property
    def name(self) -> str:
        """Short backend identifier used in logs and metric labels."""
        ...

    @property
    def dim(self) -> int | None:
        """Vector dimension; None until a remote backend has answered once."""
        ...

    @property
    def max_chars(self) -> int | None:
        """Longest document text the backend should be given, if limited."""
        ...

    @property
    def supports_concurrency(self) -> bool:
        """Whether several ``embed_batch`` calls may be in flight at once."""
        ...

    async def embed_batch(self, texts: list[str]) -> list[EmbeddingVector]:
        """
        Embed a batch of texts.

        Args:
            texts: Texts to embed, in order

        Returns:
            One vector per text, in the same order
        """
        ...

    async def aclose(self) -> None:
        """Release connections or subprocesses held by the backend."""
        ...
