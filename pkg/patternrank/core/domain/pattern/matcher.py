"""
Pattern Matcher - Thompson-style NFA over coarse tags.

States are integers; each state has labelled edges (a coarse tag, or ``None``
for the wildcard) and epsilon edges. The compiled ``Matcher`` is immutable and
can be shared between concurrent workers.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from patternrank.core.domain.pattern.models import (
    Alternation,
    Concat,
    Literal,
    PatternAst,
    Repeat,
    Wildcard,
)
from patternrank.core.domain.textpipe.models import CoarseTag

# Edge label matching any tag.
ANY: None = None

Label = CoarseTag | None


@dataclass(frozen=True)
class Matcher:
    """Compiled NFA; see ``compile_pattern``."""

    edges: tuple[tuple[tuple[Label, int], ...], ...]
    epsilon: tuple[tuple[int, ...], ...]
    start: int
    accepting: frozenset[int]

    def closure(self, states: set[int]) -> frozenset[int]:
        stack = list(states)
        seen = set(states)
        while stack:
            state = stack.pop()
            for target in self.epsilon[state]:
                if target not in seen:
                    seen.add(target)
                    stack.append(target)
        return frozenset(seen)

    def step(self, states: frozenset[int], tag: CoarseTag) -> frozenset[int]:
        moved = {
            target
            for state in states
            for label, target in self.edges[state]
            if label is ANY or label == tag
        }
        return self.closure(moved) if moved else frozenset()

    def longest_match(self, tags: Sequence[CoarseTag], start: int) -> int | None:
        """
        End index (exclusive) of the longest non-empty accepted span at ``start``.

        Returns None when no span of at least one token starting at ``start``
        is accepted.
        """
        current = self.closure({self.start})
        best: int | None = None
        for position in range(start, len(tags)):
            current = self.step(current, tags[position])
            if not current:
                break
            if current & self.accepting:
                best = position + 1
        return best

    def accepts(self, tags: Sequence[CoarseTag]) -> bool:
        """Whole-sequence acceptance; the empty sequence is always rejected."""
        if not tags:
            return False
        current = self.closure({self.start})
        for tag in tags:
            current = self.step(current, tag)
            if not current:
                return False
        return bool(current & self.accepting)


class _Builder:
    """Mutable construction state, frozen into a Matcher at the end."""

    def __init__(self) -> None:
        self.edges: list[list[tuple[Label, int]]] = []
        self.epsilon: list[list[int]] = []

    def new_state(self) -> int:
        self.edges.append([])
        self.epsilon.append([])
        return len(self.edges) - 1

    def link(self, source: int, target: int) -> None:
        self.epsilon[source].append(target)

    def build(self, node: PatternAst) -> tuple[int, int]:
        """Return the (entry, exit) states of a fragment for ``node``."""
        match node:
            case Literal(tag=tag):
                return self._single(tag)
            case Wildcard():
                return self._single(ANY)
            case Concat(children=children):
                entry, exit_ = self.build(children[0])
                for child in children[1:]:
                    child_entry, child_exit = self.build(child)
                    self.link(exit_, child_entry)
                    exit_ = child_exit
                return entry, exit_
            case Alternation(children=children):
                entry, exit_ = self.new_state(), self.new_state()
                for child in children:
                    child_entry, child_exit = self.build(child)
                    self.link(entry, child_entry)
                    self.link(child_exit, exit_)
                return entry, exit_
            case Repeat():
                return self._repeat(node)
        raise TypeError(f"Not a pattern node: {node!r}")

    def _single(self, label: Label) -> tuple[int, int]:
        entry, exit_ = self.new_state(), self.new_state()
        self.edges[entry].append((label, exit_))
        return entry, exit_

    def _repeat(self, node: Repeat) -> tuple[int, int]:
        entry = exit_ = self.new_state()
        for _ in range(node.min):
            child_entry, child_exit = self.build(node.child)
            self.link(exit_, child_entry)
            exit_ = child_exit
        if node.max is None:
            # loop: exit -> child -> exit
            child_entry, child_exit = self.build(node.child)
            tail = self.new_state()
            self.link(exit_, child_entry)
            self.link(exit_, tail)
            self.link(child_exit, child_entry)
            self.link(child_exit, tail)
            return entry, tail
        tail = self.new_state()
        for _ in range(node.max - node.min):
            child_entry, child_exit = self.build(node.child)
            self.link(exit_, child_entry)
            self.link(exit_, tail)
            exit_ = child_exit
        self.link(exit_, tail)
        return entry, tail


def compile_pattern(ast: PatternAst) -> Matcher:
    """Pure function: compile a pattern AST to an immutable NFA."""
    builder = _Builder()
    start, accept = builder.build(ast)
    return Matcher(
        edges=tuple(tuple(row) for row in builder.edges),
        epsilon=tuple(tuple(row) for row in builder.epsilon),
        start=start,
        accepting=frozenset({accept}),
    )


def accepts(matcher: Matcher, tags: Sequence[CoarseTag]) -> bool:
    """True iff ``matcher`` accepts the whole non-empty tag sequence."""
    return matcher.accepts(tags)
