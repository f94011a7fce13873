"""Reference Embedding Adapter - offline, deterministic hashed-trigram vectors."""

from patternrank.core.domain.ranker.models import EmbeddingVector
from patternrank.core.domain.ranker.reference import MIN_REFERENCE_DIM, trigram_vector
from patternrank.core.exceptions import ConfigError


class ReferenceEmbeddingBackend:
    name = "reference"
    supports_concurrency = True
    max_chars: int | None = None

    def __init__(self, dim: int = 256, seed: int = 0) -> None:
        if dim < MIN_REFERENCE_DIM:
            raise ConfigError(
                f"reference backend needs dim >= {MIN_REFERENCE_DIM}, got {dim}",
                field="backend",
            )
        self._dim = dim
        self.seed = seed

    @property
    def dim(self) -> int:
        return self._dim

    async def embed_batch(self, texts: list[str]) -> list[EmbeddingVector]:
        return [trigram_vector(text, self._dim, self.seed) for text in texts]

    async def aclose(self) -> None:
        return None


def reference_embedder(dim: int, seed: int) -> ReferenceEmbeddingBackend:
    """Build the reference backend."""
    return ReferenceEmbeddingBackend(dim=dim, seed=seed)
