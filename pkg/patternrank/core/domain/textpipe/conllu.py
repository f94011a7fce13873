"""
CoNLL-U ingestion - pre-tagged input path.

The XPOS column carries Penn-style tags. Documents are delimited by
``# newdoc id = <id>`` comments; sentences before the first such comment form
a document with a positional id. Character offsets are synthesized by joining
forms with single spaces, except that no space is placed around HYPH tokens.
"""

import conllu

from patternrank.core.domain.textpipe.models import (
    HYPH_TAG,
    CoarseTag,
    PosTag,
    TaggedDocument,
    TaggedSentence,
    Token,
)
from patternrank.core.exceptions import MalformedConllu

CONLLU_COLUMNS = 10
NEWDOC_KEYS = ("newdoc id", "newdoc")


def _validate_columns(content: str) -> None:
    for line_number, line in enumerate(content.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        columns = len(line.rstrip("\r\n").split("\t"))
        if columns != CONLLU_COLUMNS:
            raise MalformedConllu(line_number, columns)


def _parse_sentences(content: str) -> list[conllu.TokenList]:
    _validate_columns(content)
    if not content.strip():
        return []
    return conllu.parse(content)


def _word_rows(sentence: conllu.TokenList) -> list[tuple[str, str]]:
    # multiword ranges ("1-2") and empty nodes ("1.1") have non-int ids
    return [
        (token["form"], token["xpos"] or "_")
        for token in sentence
        if isinstance(token["id"], int)
    ]


def load_conllu_sentences(content: str) -> list[TaggedSentence]:
    """Sentence-level view of a CoNLL-U file, as (form, xpos) pairs."""
    return [rows for rows in map(_word_rows, _parse_sentences(content)) if rows]


def _build_document(doc_id: str, rows: list[tuple[str, str]]) -> TaggedDocument:
    tokens: list[tuple[Token, PosTag]] = []
    parts: list[str] = []
    position = 0
    previous_hyph = True  # no leading space
    for form, xpos in rows:
        tag = PosTag.from_penn(xpos)
        is_hyph = tag.coarse is CoarseTag.HYPH or xpos == HYPH_TAG
        if not (previous_hyph or is_hyph):
            parts.append(" ")
            position += 1
        tokens.append((Token.at(form, position), tag))
        parts.append(form)
        position += len(form)
        previous_hyph = is_hyph
    return TaggedDocument(doc_id=doc_id, text="".join(parts), tokens=tuple(tokens))


def load_conllu(content: str) -> list[TaggedDocument]:
    """
    Reconstruct tagged documents from CoNLL-U content.

    Raises:
        MalformedConllu: on a token line without ten tab-separated columns
    """
    groups: list[tuple[str, list[tuple[str, str]]]] = []
    for sentence in _parse_sentences(content):
        doc_id = next(
            (str(sentence.metadata[key]) for key in NEWDOC_KEYS if sentence.metadata.get(key)),
            None,
        )
        if doc_id is not None or not groups:
            groups.append((doc_id or f"doc-{len(groups) + 1}", []))
        groups[-1][1].extend(_word_rows(sentence))
    return [_build_document(doc_id, rows) for doc_id, rows in groups]
