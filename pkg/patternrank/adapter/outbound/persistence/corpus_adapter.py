"""
Corpus Adapter - IMPERATIVE SHELL

Reads evaluation corpora, extraction inputs and tagger training data from
disk. All file I/O for corpora is isolated here.

Inspec layout: every ``<name>.abstr`` file (searched recursively) holds one
abstract; its gold keyphrases are the union of the sibling ``<name>.contr``
(controlled) and ``<name>.uncontr`` (uncontrolled) files. Key entries are
separated by ";" or line breaks; a line break followed by indentation is a
soft wrap inside one entry.
"""

import json
import re
from pathlib import Path
from typing import TypeVar

import structlog
from pydantic import ValidationError

from patternrank.adapter.outbound.persistence.schemas import DocumentRecord, GoldRecord
from patternrank.core.domain.evaluation.calculations import normalize_gold
from patternrank.core.domain.evaluation.models import GoldDocument
from patternrank.core.domain.textpipe.conllu import load_conllu, load_conllu_sentences
from patternrank.core.domain.textpipe.models import (
    SourceDocument,
    TaggedDocument,
    TaggedSentence,
)
from patternrank.core.exceptions import CorpusIoError, MalformedLine, MissingGold

logger = structlog.get_logger(__name__)

ABSTRACT_SUFFIX = ".abstr"
KEY_SUFFIXES = (".contr", ".uncontr")
JSONL_SUFFIXES = (".jsonl", ".ndjson")

_SOFT_WRAP = re.compile(r"\r?\n[ \t]+")
_KEY_SEPARATORS = re.compile(r"[;\r\n]+")


def read_text(path: Path) -> str:
    """
    Read a UTF-8 file.

    Raises:
        CorpusIoError: if the file cannot be read or decoded
    """
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise CorpusIoError(str(path), str(e)) from e


def split_keyphrases(content: str) -> list[str]:
    """Split an Inspec key file into its raw entries."""
    return [entry for entry in _KEY_SEPARATORS.split(_SOFT_WRAP.sub(" ", content)) if entry.strip()]


def load_inspec(dir_path: str) -> list[GoldDocument]:
    """
    Load an Inspec-style directory.

    Raises:
        MissingGold: if an abstract has no key file or only empty ones
        CorpusIoError: if a file cannot be read
    """
    root = Path(dir_path)
    if not root.is_dir():
        raise CorpusIoError(dir_path, "not a directory")

    documents: list[GoldDocument] = []
    for abstract in sorted(root.rglob(f"*{ABSTRACT_SUFFIX}")):
        doc_id = abstract.relative_to(root).with_suffix("").as_posix()
        key_files = [abstract.with_suffix(suffix) for suffix in KEY_SUFFIXES]
        existing = [path for path in key_files if path.is_file()]
        if not existing:
            raise MissingGold(doc_id)
        keys = [entry for path in existing for entry in split_keyphrases(read_text(path))]
        documents.append(
            GoldDocument(
                doc_id=doc_id,
                text=" ".join(read_text(abstract).split()),
                gold=normalize_gold(keys),
            )
        )
    logger.info("Inspec corpus loaded", path=dir_path, documents=len(documents))
    return documents


RecordT = TypeVar("RecordT", bound=DocumentRecord)


def _jsonl_records(path: str, model: type[RecordT]) -> list[RecordT]:
    records: list[RecordT] = []
    for line_number, line in enumerate(read_text(Path(path)).splitlines(), start=1):
        if not line.strip():
            continue
        try:
            payload = json.loads(line)
        except json.JSONDecodeError as e:
            raise MalformedLine(line_number, f"invalid JSON: {e.msg}") from e
        try:
            records.append(model.model_validate(payload))
        except ValidationError as e:
            fields = ", ".join(".".join(map(str, err["loc"])) or "record" for err in e.errors())
            raise MalformedLine(line_number, f"invalid fields: {fields}") from e
    return records


def load_jsonl(path: str) -> list[GoldDocument]:
    """
    Load a JSONL gold corpus: {"id", "text", "keyphrases": [...]} per line.

    Raises:
        MalformedLine: on invalid JSON or a missing/mistyped field
        MissingGold: if a record's keyphrases normalize to nothing
    """
    documents = [
        GoldDocument(
            doc_id=record.id,
            text=record.text,
            gold=normalize_gold(record.keyphrases),
        )
        for record in _jsonl_records(path, GoldRecord)
    ]
    logger.info("JSONL corpus loaded", path=path, documents=len(documents))
    return documents


def load_documents_jsonl(path: str) -> list[SourceDocument]:
    """Load extraction input records {"id", "text"}; other fields are ignored."""
    return [
        SourceDocument(doc_id=record.id, text=record.text)
        for record in _jsonl_records(path, DocumentRecord)
    ]


def load_text_document(path: str) -> SourceDocument:
    """A plain-text file is one document whose id is the file stem."""
    file_path = Path(path)
    return SourceDocument(doc_id=file_path.stem, text=read_text(file_path))


def is_jsonl(path: str) -> bool:
    return Path(path).suffix.lower() in JSONL_SUFFIXES


class CorpusFileAdapter:
    """
    File-system implementation of the corpus port.

    Directories are read as Inspec, ``.jsonl`` files as JSONL, anything else
    as a single plain-text document.
    """

    async def load_gold(self, path: str) -> list[GoldDocument]:
        if Path(path).is_dir():
            return load_inspec(path)
        return load_jsonl(path)

    async def load_documents(self, path: str) -> list[SourceDocument]:
        if is_jsonl(path):
            return load_documents_jsonl(path)
        return [load_text_document(path)]

    async def load_tagged_documents(self, path: str) -> list[TaggedDocument]:
        return load_conllu(read_text(Path(path)))

    async def load_training_sentences(self, path: str) -> list[TaggedSentence]:
        return load_conllu_sentences(read_text(Path(path)))
