"""Textpipe Models - tokens, tags, tagged documents and the tagger model."""

from dataclasses import dataclass, field
from enum import Enum


class CoarseTag(str, Enum):
    """Six-symbol alphabet that POS patterns are matched over."""

    NOUN = "NOUN"
    ADJ = "ADJ"
    VBG = "VBG"
    VBN = "VBN"
    HYPH = "HYPH"
    OTHER = "OTHER"


HYPHEN = "-"
HYPH_TAG = "HYPH"


def coarse_of(penn: str) -> CoarseTag:
    """Canonical Penn-to-coarse mapping; total over all strings."""
    if penn.startswith("NN"):
        return CoarseTag.NOUN
    if penn.startswith("JJ"):
        return CoarseTag.ADJ
    if penn == "VBG":
        return CoarseTag.VBG
    if penn == "VBN":
        return CoarseTag.VBN
    if penn == HYPH_TAG:
        return CoarseTag.HYPH
    return CoarseTag.OTHER


@dataclass(frozen=True)
class Token:
    """A slice of the source text; offsets are 0-based, end-exclusive."""

    surface: str
    start: int
    end: int
    is_hyphen: bool = False

    def __post_init__(self) -> None:
        if self.start >= self.end:
            raise ValueError("Token start must be before end")
        if self.end - self.start != len(self.surface):
            raise ValueError("Token offsets must span the surface")

    @classmethod
    def at(cls, surface: str, start: int) -> "Token":
        """Build a token from its surface and start offset."""
        return cls(
            surface=surface,
            start=start,
            end=start + len(surface),
            is_hyphen=surface == HYPHEN,
        )


@dataclass(frozen=True)
class PosTag:
    """Penn-style tag with its derived coarse class."""

    penn: str
    coarse: CoarseTag

    @classmethod
    def from_penn(cls, penn: str) -> "PosTag":
        return cls(penn=penn, coarse=coarse_of(penn))


@dataclass(frozen=True)
class TaggedDocument:
    """A document whose tokens each carry exactly one tag."""

    doc_id: str
    text: str
    tokens: tuple[tuple[Token, PosTag], ...] = ()

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def surfaces(self) -> list[str]:
        return [token.surface for token, _ in self.tokens]

    @property
    def coarse_tags(self) -> list[CoarseTag]:
        return [tag.coarse for _, tag in self.tokens]


# A training sentence: (word, penn tag) pairs.
TaggedSentence = list[tuple[str, str]]


@dataclass(frozen=True)
class TaggerModel:
    """
    Averaged-perceptron weights.

    ``weights`` maps feature string to a mapping of penn tag to weight. The
    model is never mutated after training or loading.
    """

    weights: dict[str, dict[str, float]]
    tagset: frozenset[str]
    iterations_trained: int
    seed: int
    classes: tuple[str, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        # sorted once so argmax tie-breaking does not depend on set order
        object.__setattr__(self, "classes", tuple(sorted(self.tagset)))


@dataclass(frozen=True)
class SourceDocument:
    """Raw input document before tokenization."""

    doc_id: str
    text: str
