"""
Corpus Ports - Interfaces for Imperative Shell

Reading corpora and tagger models from storage.
"""

from typing import Protocol

from patternrank.core.domain.evaluation.models import GoldDocument
from patternrank.core.domain.textpipe.models import (
    SourceDocument,
    TaggedDocument,
    TaggedSentence,
    TaggerModel,
)


class CorpusPort(Protocol):
    """Port for loading documents and gold standards."""

    async def load_gold(self, path: str) -> list[GoldDocument]:
        """
        Load an evaluation corpus (Inspec directory or JSONL file).

        Args:
            path: Corpus location

        Returns:
            Gold documents in corpus order
        """
        ...

    async def load_documents(self, path: str) -> list[SourceDocument]:
        """
        Load raw documents for extraction (plain text or JSONL).

        Args:
            path: Input location

        Returns:
            Documents in input order
        """
        ...

    async def load_tagged_documents(self, path: str) -> list[TaggedDocument]:
        """
        Load pre-tagged documents from a CoNLL-U file.

        Args:
            path: CoNLL-U file

        Returns:
            Tagged documents in file order
        """
        ...

    async def load_training_sentences(self, path: str) -> list[TaggedSentence]:
        """
        Load tagger training sentences from a CoNLL-U file.

        Args:
            path: CoNLL-U file

        Returns:
            Sentences as (word, penn tag) pairs
        """
        ...


class TaggerModelPort(Protocol):
    """Port for persisting trained tagger models."""

    async def save(self, model: TaggerModel, path: str) -> None:
        """Write a model so that ``load`` returns an identical one."""
        ...

    async def load(self, path: str) -> TaggerModel:
        """Read a model written by ``save``."""
        ...
