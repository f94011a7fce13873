"""
Custom Exception Classes

Domain-level errors raised by the functional core and the adapters. Every
error carries the process exit code the CLI reports for it, plus structured
details for logging.
"""

from typing import Any

EXIT_CONFIG = 2
EXIT_BACKEND = 3
EXIT_IO = 4


class PatternRankError(Exception):
    """
    Base exception class for domain-specific errors.

    It provides a consistent interface for error handling across the package:
    a human-readable message, the exit code the CLI should return and a
    details mapping that ends up in the structured log entry.
    """

    def __init__(
        self,
        message: str,
        exit_code: int = EXIT_CONFIG,
        details: dict[str, Any] | None = None,
    ) -> None:
        """
        Initialize domain exception.

        Args:
            message: Human-readable error message
            exit_code: Process exit code reported by the CLI
            details: Additional error details
        """
        super().__init__(message)
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}


class ConfigError(PatternRankError):
    """Exception raised when run configuration is invalid."""

    def __init__(self, message: str, field: str | None = None) -> None:
        details = {"field": field} if field else {}
        super().__init__(message, exit_code=EXIT_CONFIG, details=details)


# textpipe


class EmptyCorpus(PatternRankError):
    """Tagger training was given no sentences."""

    def __init__(self) -> None:
        super().__init__("Training corpus is empty")


class MalformedConllu(PatternRankError):
    """A CoNLL-U token line does not have ten tab-separated columns."""

    def __init__(self, line_number: int, columns: int) -> None:
        super().__init__(
            f"Malformed CoNLL-U at line {line_number}: expected 10 columns, got {columns}",
            exit_code=EXIT_IO,
            details={"line_number": line_number, "columns": columns},
        )
        self.line_number = line_number


# pattern


class ParseError(PatternRankError):
    """Pattern source does not follow the pattern grammar."""

    def __init__(self, position: int, expected: str) -> None:
        super().__init__(
            f"Pattern parse error at position {position}: expected {expected}",
            details={"position": position, "expected": expected},
        )
        self.position = position
        self.expected = expected


class UnknownTag(PatternRankError):
    """Pattern references a tag outside the coarse alphabet."""

    def __init__(self, name: str) -> None:
        super().__init__(f"Unknown tag in pattern: {name}", details={"name": name})
        self.name = name


class InvalidRange(PatternRankError):
    """N-gram range is empty or starts below one."""

    def __init__(self, min_n: int, max_n: int) -> None:
        super().__init__(
            f"Invalid n-gram range [{min_n}, {max_n}]",
            details={"min_n": min_n, "max_n": max_n},
        )


# ranker


class DimensionMismatch(PatternRankError):
    """Two vectors of different dimension were compared."""

    def __init__(self, left: int, right: int) -> None:
        super().__init__(
            f"Vector dimensions differ: {left} != {right}",
            details={"left": left, "right": right},
        )


class ZeroVector(PatternRankError):
    """Cosine similarity is undefined for an all-zero vector."""

    def __init__(self) -> None:
        super().__init__("Cosine similarity of a zero vector is undefined")


class InvalidN(PatternRankError):
    """A top-N cut-off below one was requested."""

    def __init__(self, n: int) -> None:
        super().__init__(f"N must be >= 1, got {n}", details={"n": n})


class BackendFailure(PatternRankError):
    """The embedding backend failed to embed a batch."""

    def __init__(self, cause: str, batch: list[str] | None = None) -> None:
        batch = batch or []
        super().__init__(
            f"Embedding backend failure: {cause}",
            exit_code=EXIT_BACKEND,
            details={"cause": cause, "batch_size": len(batch)},
        )
        self.cause = cause
        self.batch = batch


class MissingEmbedding(BackendFailure):
    """Precomputed embeddings have no vector for a requested text."""

    def __init__(self, text: str, batch: list[str] | None = None) -> None:
        super().__init__(f"MissingEmbedding for {text!r}", batch)
        self.text = text


# singlerank


class EmptyGraph(PatternRankError):
    """PageRank was run on a graph without nodes."""

    def __init__(self) -> None:
        super().__init__("Co-occurrence graph has no nodes")


# evaluation


class MissingGold(PatternRankError):
    """A corpus document has no gold keyphrases."""

    def __init__(self, doc_id: str) -> None:
        super().__init__(
            f"No gold keyphrases for document '{doc_id}'",
            exit_code=EXIT_IO,
            details={"doc_id": doc_id},
        )
        self.doc_id = doc_id


class DuplicateDocument(PatternRankError):
    """Two corpus documents share an id."""

    def __init__(self, doc_id: str) -> None:
        super().__init__(
            f"Duplicate document id '{doc_id}' in corpus",
            exit_code=EXIT_IO,
            details={"doc_id": doc_id},
        )
        self.doc_id = doc_id


class MalformedLine(PatternRankError):
    """A JSONL corpus line is not a valid document record."""

    def __init__(self, line_number: int, reason: str) -> None:
        super().__init__(
            f"Malformed corpus line {line_number}: {reason}",
            exit_code=EXIT_IO,
            details={"line_number": line_number, "reason": reason},
        )
        self.line_number = line_number


class EmptyGold(PatternRankError):
    """Metrics were requested against an empty gold set."""

    def __init__(self) -> None:
        super().__init__("Gold keyphrase set is empty")


class CorpusIoError(PatternRankError):
    """Reading or writing a file failed."""

    def __init__(self, path: str, reason: str) -> None:
        super().__init__(
            f"I/O error on {path}: {reason}",
            exit_code=EXIT_IO,
            details={"path": path, "reason": reason},
        )
        self.path = path


class ExtractionError(PatternRankError):
    """Extraction failed for one document; wraps the original error."""

    def __init__(self, doc_id: str, cause: Exception) -> None:
        exit_code = cause.exit_code if isinstance(cause, PatternRankError) else EXIT_IO
        super().__init__(
            f"Extraction failed for document '{doc_id}': {cause}",
            exit_code=exit_code,
            details={"doc_id": doc_id, "error_type": type(cause).__name__},
        )
        self.doc_id = doc_id
        self.cause = cause
