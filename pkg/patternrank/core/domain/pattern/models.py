"""Pattern Models - pattern AST nodes and candidate keyphrases."""

from dataclasses import dataclass
from enum import Enum
from typing import Union

from patternrank.core.domain.textpipe.models import CoarseTag


@dataclass(frozen=True)
class Literal:
    """Matches exactly one token with the given coarse tag."""

    tag: CoarseTag


@dataclass(frozen=True)
class Wildcard:
    """Matches exactly one token with any coarse tag, HYPH included."""


@dataclass(frozen=True)
class Concat:
    children: tuple["PatternAst", ...]

    def __post_init__(self) -> None:
        if not self.children:
            raise ValueError("Concat needs at least one child")


@dataclass(frozen=True)
class Alternation:
    children: tuple["PatternAst", ...]

    def __post_init__(self) -> None:
        if not self.children:
            raise ValueError("Alternation needs at least one child")


@dataclass(frozen=True)
class Repeat:
    """``child`` repeated between ``min`` and ``max`` times; ``max=None`` is unbounded."""

    child: "PatternAst"
    min: int
    max: int | None

    def __post_init__(self) -> None:
        if self.min < 0:
            raise ValueError("Repeat min must be >= 0")
        if self.max is not None and self.min > self.max:
            raise ValueError("Repeat min must be <= max")


PatternAst = Union[Literal, Wildcard, Concat, Alternation, Repeat]


class BuiltinPattern(str, Enum):
    """Patterns shipped with the toolkit."""

    PATTERNRANK_POS = "PATTERNRANK_POS"
    NOUN_PHRASE = "NOUN_PHRASE"


BUILTIN_SOURCES: dict[BuiltinPattern, str] = {
    BuiltinPattern.PATTERNRANK_POS: (
        "(({.*}{HYPH}{.*}){NOUN}*)|(({VBG}|{VBN})?{ADJ}*{NOUN}+)"
    ),
    BuiltinPattern.NOUN_PHRASE: "{ADJ}*{NOUN}+",
}


Span = tuple[int, int]


@dataclass(frozen=True)
class Candidate:
    """
    A normalized candidate keyphrase.

    ``occurrences`` are token index spans (start inclusive, end exclusive),
    sorted and non-overlapping.
    """

    normalized: str
    occurrences: tuple[Span, ...]

    def __post_init__(self) -> None:
        if not self.normalized:
            raise ValueError("Candidate text must be non-empty")
        if not self.occurrences:
            raise ValueError("Candidate needs at least one occurrence")

    @property
    def count(self) -> int:
        return len(self.occurrences)

    @property
    def first_occurrence(self) -> int:
        return self.occurrences[0][0]
