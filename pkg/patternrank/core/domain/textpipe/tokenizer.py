"""
Rule-based Unicode tokenizer.

Word characters form tokens, decimal numbers stay whole ("3.5", "1,000") and
every other non-space character is a token of its own, so a hyphen joining
two words ("state-of-the-art") always comes out as a standalone "-" token.
"""

import re

from patternrank.core.domain.textpipe.models import Token

_TOKEN_RE = re.compile(r"\d+(?:[.,]\d+)+|\w+|[^\w\s]")


def tokenize(text: str) -> list[Token]:
    """
    Pure function: split text into tokens with character offsets.

    Every non-whitespace character of ``text`` belongs to exactly one token,
    and tokens come out in increasing offset order.
    """
    return [Token.at(match.group(), match.start()) for match in _TOKEN_RE.finditer(text)]
