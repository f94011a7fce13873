"""
Averaged Perceptron POS Tagger - FUNCTIONAL CORE

Greedy left-to-right tagger in the style of the classic averaged perceptron:
each position is classified from sparse string features, the previous
predictions feed the history features, and the final weights are the average
of every intermediate weight vector. Training, tagging and (de)serialization
are deterministic for fixed inputs.
"""

import json
import random
import re
from collections import defaultdict
from collections.abc import Iterator, Sequence

from patternrank.core.domain.textpipe.models import (
    HYPH_TAG,
    HYPHEN,
    PosTag,
    TaggedDocument,
    TaggedSentence,
    TaggerModel,
    Token,
)
from patternrank.core.domain.textpipe.tokenizer import tokenize
from patternrank.core.exceptions import ConfigError, EmptyCorpus

MODEL_FORMAT_VERSION = 1

START = ("-START-", "-START2-")
END = ("-END-", "-END2-")
SENTENCE_BREAK = "."

_SHAPE_RUNS = re.compile(r"(.)\1+")


def word_shape(word: str) -> str:
    """Collapse a word to its character-class shape, e.g. "Grid-3" -> "Xx-d"."""
    shape = "".join(
        "X" if ch.isupper() else "x" if ch.islower() else "d" if ch.isdigit() else ch
        for ch in word
    )
    return _SHAPE_RUNS.sub(r"\1", shape)


def _features(
    i: int, word: str, context: Sequence[str], prev: str, prev2: str
) -> list[str]:
    # context is padded with two START words on the left and two END on the right
    lower = word.lower()
    return [
        "bias",
        f"w={lower}",
        f"suf1={lower[-1:]}",
        f"suf2={lower[-2:]}",
        f"suf3={lower[-3:]}",
        f"shape={word_shape(word)}",
        f"t-1={prev}",
        f"t-2={prev2}",
        f"t-1,t-2={prev},{prev2}",
        f"w-1={context[i + 1].lower()}",
        f"w+1={context[i + 3].lower()}",
    ]


def _context(words: Sequence[str]) -> list[str]:
    return [*START, *words, *END]


def _predict(
    weights: dict[str, dict[str, float]], classes: Sequence[str], features: list[str]
) -> str:
    scores: dict[str, float] = defaultdict(float)
    for feature in features:
        for label, weight in weights.get(feature, {}).items():
            scores[label] += weight
    return max(classes, key=lambda label: (scores[label], label))


def _walk(words: Sequence[str]) -> Iterator[tuple[int, str, list[str]]]:
    """Yield (index, word, context) for a sequence; the caller tracks history."""
    context = _context(words)
    for i, word in enumerate(words):
        yield i, word, context


class _Trainer:
    """Mutable training state; discarded once the averaged model is built."""

    def __init__(self, classes: Sequence[str]) -> None:
        self.classes = list(classes)
        self.weights: dict[str, dict[str, float]] = {}
        self._totals: dict[tuple[str, str], float] = defaultdict(float)
        self._tstamps: dict[tuple[str, str], int] = defaultdict(int)
        self.instances = 0

    def predict(self, features: list[str]) -> str:
        return _predict(self.weights, self.classes, features)

    def update(self, truth: str, guess: str, features: list[str]) -> None:
        self.instances += 1
        if truth == guess:
            return
        for feature in features:
            row = self.weights.setdefault(feature, {})
            self._update_feature(truth, feature, row.get(truth, 0.0), 1.0)
            self._update_feature(guess, feature, row.get(guess, 0.0), -1.0)

    def _update_feature(self, label: str, feature: str, weight: float, value: float) -> None:
        param = (feature, label)
        self._totals[param] += (self.instances - self._tstamps[param]) * weight
        self._tstamps[param] = self.instances
        self.weights[feature][label] = weight + value

    def averaged(self) -> dict[str, dict[str, float]]:
        averaged: dict[str, dict[str, float]] = {}
        for feature, row in self.weights.items():
            new_row: dict[str, float] = {}
            for label, weight in row.items():
                param = (feature, label)
                total = self._totals[param] + (self.instances - self._tstamps[param]) * weight
                value = total / self.instances
                if value:
                    new_row[label] = value
            if new_row:
                averaged[feature] = new_row
        return averaged


def train_tagger(
    corpus: Sequence[TaggedSentence], iterations: int = 5, seed: int = 0
) -> TaggerModel:
    """
    Pure function: train an averaged perceptron on tagged sentences.

    Sentences are visited in a seeded shuffled order each iteration, so the
    resulting model is identical for identical (corpus, iterations, seed).

    Raises:
        EmptyCorpus: if the corpus has no tokens
    """
    sentences = [list(sentence) for sentence in corpus if sentence]
    if not sentences:
        raise EmptyCorpus()
    if iterations < 1:
        raise ConfigError("iterations must be >= 1", field="iterations")

    tagset = sorted({penn for sentence in sentences for _, penn in sentence})
    trainer = _Trainer(tagset)
    rng = random.Random(seed)

    for _ in range(iterations):
        for sentence in sentences:
            words = [word for word, _ in sentence]
            prev, prev2 = START
            for (i, word, context), (_, truth) in zip(_walk(words), sentence, strict=True):
                if word == HYPHEN:
                    guess = HYPH_TAG
                else:
                    features = _features(i, word, context, prev, prev2)
                    guess = trainer.predict(features)
                    trainer.update(truth, guess, features)
                prev, prev2 = (START if word == SENTENCE_BREAK else (guess, prev))
        rng.shuffle(sentences)

    return TaggerModel(
        weights=trainer.averaged(),
        tagset=frozenset(tagset),
        iterations_trained=iterations,
        seed=seed,
    )


def tag_words(words: Sequence[str], model: TaggerModel) -> list[str]:
    """Pure function: greedy tagging of a word sequence."""
    tags: list[str] = []
    prev, prev2 = START
    for i, word, context in _walk(words):
        if word == HYPHEN:
            guess = HYPH_TAG
        else:
            guess = _predict(model.weights, model.classes, _features(i, word, context, prev, prev2))
        tags.append(guess)
        prev, prev2 = (START if word == SENTENCE_BREAK else (guess, prev))
    return tags


def _text_from_tokens(tokens: Sequence[Token]) -> str:
    parts: list[str] = []
    position = 0
    for token in tokens:
        parts.append(" " * (token.start - position))
        parts.append(token.surface)
        position = token.end
    return "".join(parts)


def tag(
    tokens: Sequence[Token],
    model: TaggerModel,
    doc_id: str = "",
    text: str | None = None,
) -> TaggedDocument:
    """
    Pure function: assign one penn tag per token.

    Hyphen tokens are always HYPH, regardless of model weights. When ``text``
    is omitted it is rebuilt from the token offsets.
    """
    penn_tags = tag_words([token.surface for token in tokens], model)
    pairs = tuple(
        (token, PosTag.from_penn(HYPH_TAG if token.is_hyphen else penn))
        for token, penn in zip(tokens, penn_tags, strict=True)
    )
    return TaggedDocument(
        doc_id=doc_id,
        text=text if text is not None else _text_from_tokens(tokens),
        tokens=pairs,
    )


def tag_text(text: str, model: TaggerModel, doc_id: str = "") -> TaggedDocument:
    """Tokenize and tag raw text in one step."""
    return tag(tokenize(text), model, doc_id=doc_id, text=text)


def evaluate_tagger(model: TaggerModel, sentences: Sequence[TaggedSentence]) -> float:
    """Token-level accuracy of ``model`` on gold-tagged sentences."""
    correct = total = 0
    for sentence in sentences:
        predicted = tag_words([word for word, _ in sentence], model)
        correct += sum(guess == gold for guess, (_, gold) in zip(predicted, sentence, strict=True))
        total += len(sentence)
    return correct / total if total else 0.0


def serialize_model(model: TaggerModel) -> str:
    """Versioned, sorted-key JSON; identical models give identical bytes."""
    payload = {
        "version": MODEL_FORMAT_VERSION,
        "tagset": sorted(model.tagset),
        "weights": model.weights,
        "seed": model.seed,
        "iterations_trained": model.iterations_trained,
    }
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def deserialize_model(content: str) -> TaggerModel:
    """
    Inverse of ``serialize_model``; float weights round-trip bit-exactly.

    Raises:
        ConfigError: if the content is not a tagger model of a known version
    """
    try:
        payload = json.loads(content)
        version = payload["version"]
        if version != MODEL_FORMAT_VERSION:
            raise ConfigError(f"Unsupported tagger model version: {version}", field="version")
        if not payload["tagset"]:
            raise ConfigError("Tagger model has an empty tagset", field="tagset")
        return TaggerModel(
            weights={
                feature: {label: float(weight) for label, weight in row.items()}
                for feature, row in payload["weights"].items()
            },
            tagset=frozenset(payload["tagset"]),
            iterations_trained=int(payload["iterations_trained"]),
            seed=int(payload["seed"]),
        )
    except (ValueError, KeyError, TypeError, AttributeError) as e:
        raise ConfigError(f"Invalid tagger model: {e}", field="tagger_model")
