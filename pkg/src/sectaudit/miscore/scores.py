"""Per-sample membership scores from token negative log-likelihoods.

All three scores follow the same convention: lower value means more
member-like.  Consumers that need the opposite orientation flip once at
the AUC boundary, nowhere else.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass

LOSS = "LOSS"
MIN_K = "MIN_K"
ZLIB = "ZLIB"

DEFAULT_K = 0.2
ZLIB_LEVEL = 6


@dataclass(frozen=True)
class LikelihoodProfile:
    sample_id: str
    tokens: tuple
    nll: tuple

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "nll", tuple(float(v) for v in self.nll))
        if len(self.tokens) != len(self.nll):
            raise ValueError("tokens and nll must have equal length")
        if not self.tokens:
            raise ValueError("profile must contain at least one token")
        for v in self.nll:
            if not math.isfinite(v) or v < 0:
                raise ValueError(f"nll values must be finite and >= 0, got {v}")


@dataclass(frozen=True)
class MembershipScore:
    sample_id: str
    method: str
    value: float


def score_loss(profile):
    """Mean token negative log-likelihood."""
    value = sum(profile.nll) / len(profile.nll)
    return MembershipScore(profile.sample_id, LOSS, value)


def score_min_k(profile, k=DEFAULT_K):
    """Mean nll over the m = max(1, floor(k*n)) least-likely tokens.
    Ties broken toward earlier token positions."""
    if not 0 < k <= 1:
        raise ValueError(f"k must be in (0, 1], got {k}")
    n = len(profile.nll)
    m = max(1, math.floor(k * n))
    picked = sorted(range(n), key=lambda i: (-profile.nll[i], i))[:m]
    # summing in positional order keeps MIN_K(k=1) bit-equal to LOSS
    value = sum(profile.nll[i] for i in sorted(picked)) / m
    return MembershipScore(profile.sample_id, MIN_K, value)


def compressed_len(raw_text):
    """Byte length of the complete zlib stream (header + checksum) of the
    sample at compression level 6."""
    if isinstance(raw_text, str):
        raw_text = raw_text.encode("utf-8")
    if not raw_text:
        raise ValueError("raw_text must be non-empty")
    return len(zlib.compress(raw_text, ZLIB_LEVEL))


def score_zlib(profile, raw_text):
    """Mean nll divided by the compressed byte length of the sample."""
    value = score_loss(profile).value / compressed_len(raw_text)
    return MembershipScore(profile.sample_id, ZLIB, value)
