"""Source corpus units and word-based filtering/truncation helpers."""

from __future__ import annotations

import re
from dataclasses import dataclass

_WORD_RE = re.compile(r"\S+")


def word_count(text: str) -> int:
    """Number of maximal non-whitespace runs."""
    return len(_WORD_RE.findall(text))


def truncate_words(text: str, max_words: int) -> str:
    """Keep the prefix up to the end of the max_words-th word, preserving
    original whitespace inside the kept region."""
    count = 0
    end = len(text)
    for m in _WORD_RE.finditer(text):
        count += 1
        if count == max_words:
            end = m.end()
            break
    return text[:end]


@dataclass(frozen=True)
class SourceUnit:
    id: str
    path: str
    text: str

    @property
    def word_count(self):
        return word_count(self.text)

    def truncated(self, max_words):
        return SourceUnit(self.id, self.path, truncate_words(self.text, max_words))
