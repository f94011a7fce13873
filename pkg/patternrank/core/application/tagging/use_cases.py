"""
Tagging Use Cases - ORCHESTRATION LAYER

Train the averaged-perceptron tagger from a CoNLL-U corpus and store it.
"""

import asyncio
from dataclasses import dataclass

from patternrank.core.domain.textpipe.models import TaggerModel
from patternrank.core.domain.textpipe.tagger import evaluate_tagger, train_tagger
from patternrank.core.port.outbound.corpus_ports import CorpusPort, TaggerModelPort


@dataclass(frozen=True)
class TrainingResult:
    model: TaggerModel
    sentences: int
    tokens: int
    accuracy: float


class TrainTaggerUseCase:
    """Use case: train, self-evaluate and persist a tagger model."""

    def __init__(self, corpus_port: CorpusPort, model_port: TaggerModelPort):
        self.corpus_port = corpus_port
        self.model_port = model_port

    async def execute(
        self, corpus_path: str, out_path: str, iterations: int = 5, seed: int = 0
    ) -> TrainingResult:
        """
        Train on ``corpus_path`` and write the model to ``out_path``.

        Accuracy is measured on the training sentences themselves.
        """
        sentences = await self.corpus_port.load_training_sentences(corpus_path)
        model = await asyncio.to_thread(train_tagger, sentences, iterations, seed)
        accuracy = await asyncio.to_thread(evaluate_tagger, model, sentences)
        await self.model_port.save(model, out_path)
        return TrainingResult(
            model=model,
            sentences=len(sentences),
            tokens=sum(len(sentence) for sentence in sentences),
            accuracy=accuracy,
        )
