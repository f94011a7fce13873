"""
Test helpers - document builders and the handcrafted tagging corpus.
"""

import random
from collections.abc import Mapping, Sequence

from patternrank.core.domain.pattern.models import (
    Alternation,
    Concat,
    Literal,
    PatternAst,
    Repeat,
    Wildcard,
)
from patternrank.core.domain.textpipe.models import (
    CoarseTag,
    PosTag,
    TaggedDocument,
    TaggedSentence,
    Token,
)

# Penn tag used to stand in for each coarse tag.
PENN_FOR: dict[CoarseTag, str] = {
    CoarseTag.NOUN: "NN",
    CoarseTag.ADJ: "JJ",
    CoarseTag.VBG: "VBG",
    CoarseTag.VBN: "VBN",
    CoarseTag.HYPH: "HYPH",
    CoarseTag.OTHER: "DT",
}


def tagged_doc(pairs: Sequence[tuple[str, str]], doc_id: str = "doc") -> TaggedDocument:
    """Document from (surface, penn) pairs, surfaces separated by one space."""
    tokens: list[tuple[Token, PosTag]] = []
    position = 0
    for surface, penn in pairs:
        tokens.append((Token.at(surface, position), PosTag.from_penn(penn)))
        position += len(surface) + 1
    text = " ".join(surface for surface, _ in pairs)
    return TaggedDocument(doc_id=doc_id, text=text, tokens=tuple(tokens))


def coarse_doc(tags: Sequence[CoarseTag], doc_id: str = "doc") -> TaggedDocument:
    """Document whose i-th token is ``w<i>`` (or "-" for HYPH) tagged ``tags[i]``."""
    return tagged_doc(
        [("-" if tag is CoarseTag.HYPH else f"w{i}", PENN_FOR[tag]) for i, tag in enumerate(tags)],
        doc_id,
    )


def conllu_text(documents: Mapping[str, Sequence[TaggedSentence]]) -> str:
    """Render sentences as CoNLL-U with one ``# newdoc id`` block per document."""
    lines: list[str] = []
    for doc_id, sentences in documents.items():
        for index, sentence in enumerate(sentences):
            if index == 0:
                lines.append(f"# newdoc id = {doc_id}")
            for position, (form, xpos) in enumerate(sentence, start=1):
                lines.append(f"{position}\t{form}\t_\t_\t{xpos}\t_\t_\t_\t_\t_")
            lines.append("")
    return "\n".join(lines) + "\n"


def _sentence(text: str) -> TaggedSentence:
    """Parse "word/TAG word/TAG ..." into a training sentence."""
    pairs = []
    for item in text.split():
        word, _, penn = item.rpartition("/")
        pairs.append((word, penn))
    return pairs


TRAINING_SENTENCES: list[TaggedSentence] = [
    _sentence(line)
    for line in (
        "fast/JJ neural/JJ networks/NNS learn/VBP quickly/RB ./.",
        "the/DT fast/JJ neural/JJ networks/NNS improve/VBP grid/NN computing/NN ./.",
        "neural/JJ networks/NNS solve/VBP hard/JJ problems/NNS ./.",
        "we/PRP study/VBP fast/JJ algorithms/NNS for/IN grid/NN computing/NN ./.",
        "grid/NN computing/NN systems/NNS share/VBP resources/NNS ./.",
        "the/DT control/NN system/NN uses/VBZ fuzzy/JJ logic/NN ./.",
        "fuzzy/JJ logic/NN controls/VBZ the/DT robot/NN ./.",
        "a/DT new/JJ method/NN is/VBZ proposed/VBN ./.",
        "the/DT proposed/VBN method/NN outperforms/VBZ existing/VBG methods/NNS ./.",
        "existing/VBG methods/NNS are/VBP slow/JJ ./.",
        "the/DT results/NNS show/VBP large/JJ improvements/NNS ./.",
        "large/JJ networks/NNS need/VBP fast/JJ hardware/NN ./.",
        "distributed/VBN systems/NNS use/VBP grid/NN computing/NN ./.",
        "the/DT robot/NN learns/VBZ new/JJ tasks/NNS ./.",
        "we/PRP propose/VBP a/DT fast/JJ neural/JJ network/NN ./.",
        "the/DT network/NN is/VBZ trained/VBN on/IN large/JJ data/NNS ./.",
        "fast/JJ neural/JJ networks/NNS ./.",
        "hard/JJ problems/NNS need/VBP new/JJ methods/NNS ./.",
        "the/DT data/NNS show/VBP slow/JJ convergence/NN ./.",
        "a/DT robot/NN uses/VBZ fuzzy/JJ control/NN ./.",
    )
]


def ast_ends(
    node: PatternAst,
    tags: Sequence[CoarseTag],
    start: int,
    memo: dict[tuple[int, int], frozenset[int]] | None = None,
) -> frozenset[int]:
    """Oracle: every end index e such that tags[start:e] is in the language of ``node``."""
    memo = {} if memo is None else memo
    key = (id(node), start)
    if key not in memo:
        memo[key] = frozenset(_interpret(node, tags, start, memo))
    return memo[key]


def _interpret(
    node: PatternAst,
    tags: Sequence[CoarseTag],
    start: int,
    memo: dict[tuple[int, int], frozenset[int]],
) -> set[int]:
    match node:
        case Literal(tag=expected):
            return {start + 1} if start < len(tags) and tags[start] is expected else set()
        case Wildcard():
            return {start + 1} if start < len(tags) else set()
        case Concat(children=children):
            frontier = {start}
            for child in children:
                frontier = {end for position in frontier for end in ast_ends(child, tags, position, memo)}
            return frontier
        case Alternation(children=children):
            return {end for child in children for end in ast_ends(child, tags, start, memo)}
        case Repeat(child=child, min=low, max=high):
            # beyond low + len(tags) + 1 rounds no new position is reachable
            cap = high if high is not None else low + len(tags) + 1
            results: set[int] = set()
            frontier = {start}
            for count in range(cap + 1):
                if count >= low:
                    results |= frontier
                if count == cap:
                    break
                frontier = {end for position in frontier for end in ast_ends(child, tags, position, memo)}
            return results
    raise TypeError(node)


def oracle_accepts(node: PatternAst, tags: Sequence[CoarseTag]) -> bool:
    return bool(tags) and len(tags) in ast_ends(node, tags, 0)


def oracle_spans(node: PatternAst, tags: Sequence[CoarseTag]) -> list[tuple[int, int]]:
    """Brute-force leftmost-longest scan over all sub-spans."""
    spans: list[tuple[int, int]] = []
    position = 0
    while position < len(tags):
        ends = [end for end in ast_ends(node, tags, position) if end > position]
        if ends:
            spans.append((position, max(ends)))
            position = max(ends)
        else:
            position += 1
    return spans


def random_ast(rng: random.Random, depth: int = 4) -> PatternAst:
    """Random pattern AST; Concat and Alternation always get two or more children."""
    if depth <= 1 or rng.random() < 0.3:
        if rng.random() < 0.2:
            return Wildcard()
        return Literal(rng.choice(list(CoarseTag)))
    kind = rng.choice(("concat", "alternation", "repeat"))
    if kind == "repeat":
        low, high = rng.choice(QUANTIFIER_BOUNDS)
        return Repeat(random_ast(rng, depth - 1), low, high)
    children = tuple(random_ast(rng, depth - 1) for _ in range(rng.randint(2, 3)))
    return Concat(children) if kind == "concat" else Alternation(children)


QUANTIFIER_BOUNDS: list[tuple[int, int | None]] = [(0, 1), (0, None), (1, None)]


# Vocabulary for generated abstracts. "uses", "models" and "controls" occur
# both as plural nouns and as verbs; "control" both as noun and as verb.
_VOCABULARY: dict[str, tuple[str, ...]] = {
    "DT": ("the", "a", "this", "each", "every"),
    "VBN": ("proposed", "trained", "distributed", "weighted", "labeled"),
    "JJ": ("fast", "neural", "large", "robust", "novel", "sparse", "fuzzy", "linear"),
    "NN": ("network", "system", "method", "grid", "control", "graph", "signal", "logic"),
    "NNS": ("networks", "systems", "methods", "grids", "models", "uses", "controls", "graphs"),
    "VBZ": ("improves", "uses", "controls", "reduces", "supports", "models", "extends"),
    "IN": ("of", "for", "in", "with", "on"),
    "VBG": ("computing", "learning", "processing", "clustering"),
}


def _noun_phrase(rng: random.Random, determiner: bool) -> TaggedSentence:
    tags = ["DT"] if determiner else []
    if rng.random() < 0.2:
        tags.append("VBN")
    tags += ["JJ"] * rng.randint(0, 2)
    if rng.random() < 0.15:
        tags.append("VBG")
    tags += ["NN"] * rng.randint(0, 1)
    tags.append(rng.choice(("NN", "NNS")))
    return [(rng.choice(_VOCABULARY[penn]), penn) for penn in tags]


def generated_corpus(size: int, seed: int = 0) -> list[TaggedSentence]:
    """Seeded Penn-tagged abstract sentences from a small phrase grammar."""
    rng = random.Random(seed)
    corpus: list[TaggedSentence] = []
    for _ in range(size):
        sentence = _noun_phrase(rng, determiner=rng.random() < 0.7)
        sentence.append((rng.choice(_VOCABULARY["VBZ"]), "VBZ"))
        sentence += _noun_phrase(rng, determiner=True)
        if rng.random() < 0.5:
            sentence.append((rng.choice(_VOCABULARY["IN"]), "IN"))
            sentence += _noun_phrase(rng, determiner=True)
        if rng.random() < 0.2:
            sentence += [("to", "TO"), ("control", "VB")]
            sentence += _noun_phrase(rng, determiner=True)
        sentence.append((".", "."))
        corpus.append(sentence)
    return corpus
