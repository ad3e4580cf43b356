"""Whitespace tokenization with character offsets into the original text."""

from __future__ import annotations

import re
from dataclasses import dataclass

_TOKEN_RE = re.compile(r"\S+")


@dataclass(frozen=True)
class Token:
    text: str  # lowercased
    start: int
    end: int


TokenSeq = tuple[Token, ...]


def tokenize(utterance: str) -> TokenSeq:
    """Split on Unicode whitespace runs, lowercasing token text.

    Offsets point into the original string, so the input can be reconstructed
    from the spans plus the whitespace between them.
    """
    return tuple(Token(m.group().lower(), m.start(), m.end()) for m in _TOKEN_RE.finditer(utterance))
