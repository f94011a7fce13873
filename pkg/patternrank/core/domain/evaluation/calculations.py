"""
Pure Evaluation Functions - FUNCTIONAL CORE

Exact and partial (unigram) matching, per-document scoring at several N and
macro-averaging over a corpus.
"""

from collections.abc import Callable, Iterable, Sequence

from patternrank.core.domain.evaluation.models import (
    PRF,
    Cell,
    EvalReport,
    GoldDocument,
    Regime,
)
from patternrank.core.exceptions import DuplicateDocument, EmptyGold, ExtractionError, InvalidN

Extractor = Callable[[GoldDocument, int], Sequence[str]]

DEFAULT_N_VALUES = (5, 10, 20)


def normalize_keyphrase(phrase: str) -> str:
    """Lowercase and collapse internal whitespace."""
    return " ".join(phrase.lower().split())


def normalize_gold(phrases: Iterable[str]) -> frozenset[str]:
    """Normalized, deduplicated gold set; blank entries are dropped."""
    return frozenset(form for form in map(normalize_keyphrase, phrases) if form)


def dedupe_extracted(phrases: Iterable[str]) -> list[str]:
    """Normalize extracted phrases, keeping the first occurrence of each."""
    seen: dict[str, None] = {}
    for phrase in phrases:
        form = normalize_keyphrase(phrase)
        if form:
            seen.setdefault(form, None)
    return list(seen)


def unigrams(phrases: Iterable[str]) -> set[str]:
    """Whitespace-split words; hyphenated forms stay whole."""
    return {word for phrase in phrases for word in phrase.split()}


def _prf(true_positives: int, extracted: int, gold: int) -> PRF:
    precision = true_positives / extracted if extracted else 0.0
    recall = true_positives / gold
    return PRF.from_pr(precision, recall)


def prf_exact(extracted_top_n: Sequence[str], gold: frozenset[str] | set[str]) -> PRF:
    """
    Pure function: exact string matching.

    Precision divides by the number of phrases returned, not by N.

    Raises:
        EmptyGold: if the gold set is empty
    """
    if not gold:
        raise EmptyGold()
    extracted = set(extracted_top_n)
    return _prf(len(extracted & gold), len(extracted), len(gold))


def prf_partial(extracted_top_n: Sequence[str], gold: frozenset[str] | set[str]) -> PRF:
    """
    Pure function: matching on the unigram sets of both sides.

    Raises:
        EmptyGold: if the gold set is empty
    """
    if not gold:
        raise EmptyGold()
    extracted = unigrams(extracted_top_n)
    gold_words = unigrams(gold)
    return _prf(len(extracted & gold_words), len(extracted), len(gold_words))


def validate_n_values(n_values: Iterable[int]) -> tuple[int, ...]:
    """Sorted unique N values; each must be >= 1 and at least one is needed."""
    values = tuple(sorted(set(n_values)))
    if not values:
        raise InvalidN(0)
    for n in values:
        if n < 1:
            raise InvalidN(n)
    return values


def score_document(
    extracted: Sequence[str], gold: frozenset[str], n_values: Sequence[int]
) -> dict[Cell, PRF]:
    """Exact, partial and average scores for each top-N prefix of ``extracted``."""
    ranked = dedupe_extracted(extracted)
    cells: dict[Cell, PRF] = {}
    for n in n_values:
        prefix = ranked[:n]
        exact = prf_exact(prefix, gold)
        partial = prf_partial(prefix, gold)
        cells[(Regime.EXACT, n)] = exact
        cells[(Regime.PARTIAL, n)] = partial
        cells[(Regime.AVERAGE, n)] = PRF.mean([exact, partial])
    return cells


def require_unique_ids(corpus: Iterable[GoldDocument]) -> None:
    """Raise DuplicateDocument on the first repeated doc_id."""
    seen: set[str] = set()
    for doc in corpus:
        if doc.doc_id in seen:
            raise DuplicateDocument(doc.doc_id)
        seen.add(doc.doc_id)


def build_report(
    extractor_name: str,
    n_values: Iterable[int],
    results: Sequence[tuple[GoldDocument, Sequence[str]]],
) -> EvalReport:
    """
    Pure function: assemble a report from (document, extracted phrases) pairs.

    Macro cells are the arithmetic mean of the per-document cells; an empty
    corpus yields all-zero macro cells.

    Raises:
        DuplicateDocument: if two documents share a doc_id
    """
    values = validate_n_values(n_values)
    require_unique_ids(doc for doc, _ in results)
    scored = [
        (doc.doc_id, score_document(extracted, doc.gold, values)) for doc, extracted in results
    ]
    per_document = dict(scored)
    macro = {
        (regime, n): PRF.mean([scores[(regime, n)] for _, scores in scored])
        for regime in Regime
        for n in values
    }
    return EvalReport(
        extractor_name=extractor_name,
        n_values=values,
        per_document=per_document,
        macro=macro,
    )


def evaluate(
    corpus: Sequence[GoldDocument],
    extractor: Extractor,
    n_values: Iterable[int] = DEFAULT_N_VALUES,
    extractor_name: str = "extractor",
) -> EvalReport:
    """
    Run ``extractor`` once per document, asking for max(N) phrases, and score
    every top-N prefix.

    Raises:
        ExtractionError: wrapping any extractor failure, with the document id
        DuplicateDocument: if two corpus documents share an id
    """
    values = validate_n_values(n_values)
    require_unique_ids(corpus)
    top = max(values)
    results: list[tuple[GoldDocument, Sequence[str]]] = []
    for doc in corpus:
        try:
            results.append((doc, list(extractor(doc, top))))
        except Exception as e:
            raise ExtractionError(doc.doc_id, e) from e
    return build_report(extractor_name, values, results)
