"""
Candidate Extraction - FUNCTIONAL CORE

Pattern candidates use a leftmost-longest, non-overlapping scan; n-gram
candidates enumerate every token window in a range. Both normalize spans the
same way (lowercase, single spaces, no spaces around hyphens) and merge spans
sharing a normalized form into one Candidate, ordered by first occurrence.
"""

from collections.abc import Iterable, Sequence

from patternrank.core.domain.pattern.matcher import Matcher
from patternrank.core.domain.pattern.models import Candidate, Span
from patternrank.core.domain.textpipe.models import CoarseTag, TaggedDocument
from patternrank.core.exceptions import InvalidRange


def _is_hyphen(doc: TaggedDocument, index: int) -> bool:
    token, tag = doc.tokens[index]
    return token.is_hyphen or tag.coarse is CoarseTag.HYPH


def normalize_span(doc: TaggedDocument, start: int, end: int) -> str:
    """Lowercased surface of tokens [start, end), hyphens re-joined."""
    parts: list[str] = []
    previous_hyphen = True
    for index in range(start, end):
        hyphen = _is_hyphen(doc, index)
        if parts and not (hyphen or previous_hyphen):
            parts.append(" ")
        parts.append(" ".join(doc.tokens[index][0].surface.lower().split()))
        previous_hyphen = hyphen
    return "".join(parts)


def merge_spans(doc: TaggedDocument, spans: Iterable[Span]) -> list[Candidate]:
    """
    Group spans by normalized form.

    Spans must arrive in increasing start order; a span overlapping the last
    kept occurrence of the same form is dropped.
    """
    grouped: dict[str, list[Span]] = {}
    for start, end in spans:
        form = normalize_span(doc, start, end)
        if not form:
            continue
        occurrences = grouped.setdefault(form, [])
        if occurrences and occurrences[-1][1] > start:
            continue
        occurrences.append((start, end))
    # dicts keep insertion order, which is first-occurrence order here
    return [
        Candidate(normalized=form, occurrences=tuple(occurrences))
        for form, occurrences in grouped.items()
    ]


def match_spans(tags: Sequence[CoarseTag], matcher: Matcher) -> list[Span]:
    """Leftmost-longest non-overlapping spans accepted by ``matcher``."""
    spans: list[Span] = []
    position = 0
    while position < len(tags):
        end = matcher.longest_match(tags, position)
        if end is None:
            position += 1
        else:
            spans.append((position, end))
            position = end
    return spans


def extract_candidates(doc: TaggedDocument, matcher: Matcher) -> list[Candidate]:
    """Pure function: pattern-matched candidates of a tagged document."""
    return merge_spans(doc, match_spans(doc.coarse_tags, matcher))


def _is_punctuation(surface: str) -> bool:
    return not any(ch.isalnum() for ch in surface)


def select_ngrams(
    doc: TaggedDocument,
    min_n: int,
    max_n: int,
    stopwords: Iterable[str] = (),
) -> list[Candidate]:
    """
    Pure function: n-gram candidates, the KeyBERT-style baseline mode.

    An n-gram is kept when its first and last tokens are not stopwords
    (compared lowercase) and none of its tokens is punctuation-only.

    Raises:
        InvalidRange: if min_n < 1 or min_n > max_n
    """
    if min_n < 1 or min_n > max_n:
        raise InvalidRange(min_n, max_n)

    stop = {word.lower() for word in stopwords}
    surfaces = [surface.lower() for surface in doc.surfaces]
    punctuation = [_is_punctuation(surface) for surface in surfaces]

    def spans() -> Iterable[Span]:
        for start in range(len(surfaces)):
            for size in range(min_n, max_n + 1):
                end = start + size
                if end > len(surfaces):
                    break
                if any(punctuation[start:end]):
                    break
                if surfaces[start] in stop or surfaces[end - 1] in stop:
                    continue
                yield start, end

    return merge_spans(doc, spans())
