"""Textpipe domain - tokenization, POS tagging and CoNLL-U ingestion."""

from patternrank.core.domain.textpipe.conllu import load_conllu, load_conllu_sentences
from patternrank.core.domain.textpipe.models import (
    CoarseTag,
    PosTag,
    SourceDocument,
    TaggedDocument,
    TaggedSentence,
    TaggerModel,
    Token,
    coarse_of,
)
from patternrank.core.domain.textpipe.tagger import (
    deserialize_model,
    evaluate_tagger,
    serialize_model,
    tag,
    tag_text,
    train_tagger,
)
from patternrank.core.domain.textpipe.tokenizer import tokenize

__all__ = [
    "CoarseTag",
    "PosTag",
    "SourceDocument",
    "TaggedDocument",
    "TaggedSentence",
    "TaggerModel",
    "Token",
    "coarse_of",
    "deserialize_model",
    "evaluate_tagger",
    "load_conllu",
    "load_conllu_sentences",
    "serialize_model",
    "tag",
    "tag_text",
    "tokenize",
    "train_tagger",
]
