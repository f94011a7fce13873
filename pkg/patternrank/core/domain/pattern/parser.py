"""
POS pattern parser.

Grammar (whitespace between elements is ignored)::

    expr    := concat ("|" concat)*
    concat  := postfix+
    postfix := (atom | group) ("?" | "*" | "+")?
    atom    := "{" TAG "}" | "{.*}"
    group   := "(" expr ")"

TAG is one of the coarse tags. Positions in errors are 0-based offsets into
the source string.
"""

from patternrank.core.domain.pattern.models import (
    BUILTIN_SOURCES,
    Alternation,
    BuiltinPattern,
    Concat,
    Literal,
    PatternAst,
    Repeat,
    Wildcard,
)
from patternrank.core.domain.textpipe.models import CoarseTag
from patternrank.core.exceptions import ParseError, UnknownTag

_QUANTIFIERS: dict[str, tuple[int, int | None]] = {
    "?": (0, 1),
    "*": (0, None),
    "+": (1, None),
}
_WILDCARD = ".*"


class _Parser:
    def __init__(self, source: str) -> None:
        self.source = source
        self.pos = 0

    def peek(self) -> str | None:
        self._skip_whitespace()
        return self.source[self.pos] if self.pos < len(self.source) else None

    def _skip_whitespace(self) -> None:
        while self.pos < len(self.source) and self.source[self.pos].isspace():
            self.pos += 1

    def expect(self, char: str) -> None:
        if self.peek() != char:
            raise ParseError(self.pos, repr(char).replace("'", '"'))
        self.pos += 1

    def parse(self) -> PatternAst:
        node = self.expr()
        if self.peek() is not None:
            raise ParseError(self.pos, "end of pattern")
        return node

    def expr(self) -> PatternAst:
        branches = [self.concat()]
        while self.peek() == "|":
            self.pos += 1
            branches.append(self.concat())
        return branches[0] if len(branches) == 1 else Alternation(tuple(branches))

    def concat(self) -> PatternAst:
        parts: list[PatternAst] = []
        while self.peek() in ("{", "("):
            parts.append(self.postfix())
        if not parts:
            raise ParseError(self.pos, '"{" or "("')
        return parts[0] if len(parts) == 1 else Concat(tuple(parts))

    def postfix(self) -> PatternAst:
        node = self.group() if self.peek() == "(" else self.atom()
        quantifier = self.peek()
        if quantifier is not None and quantifier in _QUANTIFIERS:
            self.pos += 1
            low, high = _QUANTIFIERS[quantifier]
            node = Repeat(node, low, high)
        return node

    def group(self) -> PatternAst:
        self.expect("(")
        node = self.expr()
        self.expect(")")
        return node

    def atom(self) -> PatternAst:
        self.expect("{")
        self._skip_whitespace()
        if self.source.startswith(_WILDCARD, self.pos):
            self.pos += len(_WILDCARD)
            node: PatternAst = Wildcard()
        else:
            start = self.pos
            while self.pos < len(self.source) and (
                self.source[self.pos].isalnum() or self.source[self.pos] == "_"
            ):
                self.pos += 1
            name = self.source[start : self.pos]
            if not name:
                raise ParseError(self.pos, "tag name")
            if name not in CoarseTag.__members__:
                raise UnknownTag(name)
            node = Literal(CoarseTag[name])
        self.expect("}")
        return node


def parse_pattern(source: str) -> PatternAst:
    """
    Parse a POS-pattern expression into its AST.

    Raises:
        ParseError: on malformed input
        UnknownTag: for tags outside the coarse alphabet
    """
    return _Parser(source).parse()


def _needs_group(node: PatternAst, parent: PatternAst) -> bool:
    if isinstance(parent, Repeat):
        return not isinstance(node, Literal | Wildcard)
    if isinstance(parent, Concat):
        return isinstance(node, Concat | Alternation)
    return isinstance(node, Alternation)


def _format_child(node: PatternAst, parent: PatternAst) -> str:
    text = format_pattern(node)
    return f"({text})" if _needs_group(node, parent) else text


def format_pattern(ast: PatternAst) -> str:
    """Pretty-print an AST so that it reparses to a structurally equal AST."""
    match ast:
        case Literal(tag=tag):
            return f"{{{tag.value}}}"
        case Wildcard():
            return "{.*}"
        case Concat(children=children):
            return "".join(_format_child(child, ast) for child in children)
        case Alternation(children=children):
            return "|".join(_format_child(child, ast) for child in children)
        case Repeat(child=child, min=low, max=high):
            for symbol, bounds in _QUANTIFIERS.items():
                if bounds == (low, high):
                    return _format_child(child, ast) + symbol
            raise ValueError(f"Repeat bounds ({low}, {high}) have no pattern syntax")
    raise TypeError(f"Not a pattern node: {ast!r}")


def builtin_pattern(name: BuiltinPattern | str) -> PatternAst:
    """Return the parsed AST of a builtin pattern."""
    return parse_pattern(BUILTIN_SOURCES[BuiltinPattern(name)])
