"""Deterministic n-gram likelihood provider over Java lexer tokens.

A desk-scale stand-in for a fine-tuned code model: order-n token model
with additive (Laplace) smoothing over the corpus vocabulary plus an
unknown-token symbol.  P(t | ctx) = (count(ctx,t) + alpha) /
(count(ctx) + alpha * V), e.g. alpha=1, vocab {a,b,UNK}, context counts
a:3 b:1 gives P(a) = 4/7.
"""

from __future__ import annotations

import math
from collections import Counter

from ..javasrc import lexer as lx
from .scores import LikelihoodProfile

UNK = "\x00UNK"
BOS = "\x00BOS"

DEFAULT_ORDER = 3
DEFAULT_ALPHA = 0.1


def lex_tokens(text):
    """Lexical token texts of a source string, excluding EOF."""
    return [t.text for t in lx.lex(text) if t.kind != lx.EOF]


class NgramSurrogate:
    """order-n lexical language model; train once, query concurrently."""

    name = "ngram-surrogate"

    def __init__(self, corpus_texts, order=DEFAULT_ORDER, alpha=DEFAULT_ALPHA):
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        if alpha <= 0:
            raise ValueError(f"alpha must be > 0, got {alpha}")
        corpus_texts = list(corpus_texts)
        if not corpus_texts:
            raise ValueError("corpus must be non-empty")
        self.order = order
        self.alpha = alpha
        vocab = set()
        self.ngram_counts = Counter()
        self.context_counts = Counter()
        for text in corpus_texts:
            toks = lex_tokens(text)
            vocab.update(toks)
            padded = [BOS] * (order - 1) + toks
            for i in range(order - 1, len(padded)):
                ctx = tuple(padded[i - order + 1:i])
                self.ngram_counts[ctx + (padded[i],)] += 1
                self.context_counts[ctx] += 1
        self.vocab = vocab
        # UNK is always a vocab member for smoothing purposes
        self.vocab_size = len(vocab) + 1
        self.model_id = f"ngram{order}-a{alpha}-v{self.vocab_size}"

    def _norm(self, tok):
        return tok if tok in self.vocab else UNK

    def token_nll(self, tokens):
        """Per-token negative log-likelihoods for a token-text sequence."""
        normed = [self._norm(t) for t in tokens]
        padded = [BOS] * (self.order - 1) + normed
        out = []
        a, av = self.alpha, self.alpha * self.vocab_size
        for i in range(self.order - 1, len(padded)):
            ctx = tuple(padded[i - self.order + 1:i])
            num = self.ngram_counts.get(ctx + (padded[i],), 0) + a
            den = self.context_counts.get(ctx, 0) + av
            out.append(-math.log(num / den))
        return out

    def profile(self, text, sample_id=""):
        tokens = lex_tokens(text)
        if not tokens:
            raise ValueError("text produced no tokens")
        return LikelihoodProfile(sample_id, tokens, self.token_nll(tokens))

    def _best_next(self):
        cached = getattr(self, "_best_next_map", None)
        if cached is None:
            cached = {}
            for key, count in self.ngram_counts.items():
                ctx, tok = key[:-1], key[-1]
                cur = cached.get(ctx)
                # deterministic: higher count wins, ties by token text
                if cur is None or (count, tok) > (cur[1], cur[0]):
                    cached[ctx] = (tok, count)
            self._best_next_map = cached
        return cached

    def greedy_continuation(self, tokens):
        """Most likely next token for each position (teacher-forced), used
        for token-level completion accuracy."""
        best_next = self._best_next()
        normed = [self._norm(t) for t in tokens]
        padded = [BOS] * (self.order - 1) + normed
        preds = []
        for i in range(self.order - 1, len(padded)):
            ctx = tuple(padded[i - self.order + 1:i])
            hit = best_next.get(ctx)
            preds.append(hit[0] if hit is not None else UNK)
        return preds


def surrogate_train(corpus, order=DEFAULT_ORDER, alpha=DEFAULT_ALPHA):
    """Train the n-gram provider from SourceUnits (or plain strings)."""
    texts = [u if isinstance(u, str) else u.text for u in corpus]
    return NgramSurrogate(texts, order=order, alpha=alpha)
