"""
Evaluation Use Cases - ORCHESTRATION LAYER

Runs extraction over a gold corpus, requesting max(N) phrases per document
once, and reduces the results to a report with the pure evaluation core.
"""

from collections.abc import Iterable, Mapping

from patternrank.core.application.extraction.use_cases import (
    ExtractKeyphrasesUseCase,
    InputDocument,
)
from patternrank.core.domain.evaluation.calculations import (
    DEFAULT_N_VALUES,
    build_report,
    require_unique_ids,
    validate_n_values,
)
from patternrank.core.domain.evaluation.models import EvalReport, GoldDocument
from patternrank.core.domain.textpipe.models import SourceDocument, TaggedDocument
from patternrank.core.exceptions import CorpusIoError


class EvaluateCorpusUseCase:
    """Use case: score one extractor against a gold corpus."""

    def __init__(self, extraction: ExtractKeyphrasesUseCase):
        self.extraction = extraction

    async def execute(
        self,
        corpus: list[GoldDocument],
        n_values: Iterable[int] = DEFAULT_N_VALUES,
        tagged: Mapping[str, TaggedDocument] | None = None,
    ) -> EvalReport:
        """
        Execute the evaluation.

        Args:
            corpus: Gold documents
            n_values: Cut-offs to score at
            tagged: Pre-tagged documents by id, used instead of the tagger

        Returns:
            Report with per-document and macro-averaged scores

        Raises:
            CorpusIoError: if pre-tagged input lacks a corpus document
            DuplicateDocument: if two corpus documents share an id
        """
        values = validate_n_values(n_values)
        require_unique_ids(corpus)
        documents: list[InputDocument] = []
        for doc in corpus:
            if tagged is None:
                documents.append(SourceDocument(doc_id=doc.doc_id, text=doc.text))
            elif doc.doc_id in tagged:
                documents.append(tagged[doc.doc_id])
            else:
                raise CorpusIoError("conllu input", f"no tagged document for '{doc.doc_id}'")

        extracted = await self.extraction.execute(documents, max(values))
        return build_report(
            self.extraction.extractor.name,
            values,
            [(doc, result.phrases) for doc, result in zip(corpus, extracted, strict=True)],
        )
