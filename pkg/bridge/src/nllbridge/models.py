"""Model backends for the bridge.

A model needs two things: a deterministic tokenizer and per-token
negative log-likelihoods in nats.  ``IdentityModel`` assigns every token
the same probability 1/V, so each nll is exactly ln(V); it needs no
weights and exists so the wire protocol can be exercised hermetically.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

_TOKEN_RE = re.compile(r"\S+")

DEFAULT_VOCAB_SIZE = 256
DEFAULT_CONTEXT_LENGTH = 8192


@dataclass(frozen=True)
class NllResult:
    tokens: list
    nll: list
    truncated: bool


class IdentityModel:
    """Uniform distribution over a fixed-size vocabulary."""

    def __init__(self, vocab_size=DEFAULT_VOCAB_SIZE,
                 context_length=DEFAULT_CONTEXT_LENGTH):
        if vocab_size < 2:
            raise ValueError(f"vocab_size must be >= 2, got {vocab_size}")
        if context_length < 1:
            raise ValueError(f"context_length must be >= 1, got {context_length}")
        self.vocab_size = vocab_size
        self.context_length = context_length
        self.model_id = f"identity-v{vocab_size}"
        self._nll = math.log(vocab_size)

    def tokenize(self, text):
        # whitespace runs carry no tokens; all-whitespace text is one token
        return _TOKEN_RE.findall(text) or [text]

    def score(self, text):
        tokens = self.tokenize(text)
        truncated = len(tokens) > self.context_length
        if truncated:
            tokens = tokens[: self.context_length]
        return NllResult(tokens, [self._nll] * len(tokens), truncated)
