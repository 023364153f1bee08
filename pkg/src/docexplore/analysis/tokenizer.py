"""Deterministic word tokenization shared by segmentation, chunking and matching."""
from __future__ import annotations

import re
from dataclasses import dataclass

POS_NOUN = "NOUN"
POS_VERB = "VERB"
POS_ADJ = "ADJ"
POS_OTHER = "OTHER"

POS_TAGS = (POS_NOUN, POS_VERB, POS_ADJ, POS_OTHER)

# A token is a run of letters/digits glued together by hyphens
# ("Typ-2-Diabetes" stays one token, bare hyphens never become tokens).
_TOKEN_RE = re.compile(r"[^\W_]+(?:-+[^\W_]+)*", re.UNICODE)


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    pos: str
    token_index: int


def token_spans(text: str) -> list[tuple[int, int]]:
    """Character (start, end) spans of all tokens in reading order."""
    return [m.span() for m in _TOKEN_RE.finditer(text)]


def token_surfaces(text: str) -> list[str]:
    return [m.group() for m in _TOKEN_RE.finditer(text)]


def count_tokens(text: str) -> int:
    return sum(1 for _ in _TOKEN_RE.finditer(text))


def tokenize(text: str) -> list[Token]:
    """Split text into tokens with surface case preserved.

    Lemma defaults to the surface and the tag to OTHER until a lexicon
    is applied (see pipeline.lemmatize_and_tag).
    """
    return [
        Token(surface=m.group(), lemma=m.group(), pos=POS_OTHER, token_index=i)
        for i, m in enumerate(_TOKEN_RE.finditer(text))
    ]
