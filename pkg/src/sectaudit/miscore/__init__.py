"""Membership-inference scoring: LOSS / MIN_K / ZLIB over token
likelihoods, plus the surrogate and remote likelihood providers."""

from .remote import RemoteProvider, RemoteProviderError
from .scores import (
    DEFAULT_K,
    LOSS,
    MIN_K,
    ZLIB,
    ZLIB_LEVEL,
    LikelihoodProfile,
    MembershipScore,
    compressed_len,
    score_loss,
    score_min_k,
    score_zlib,
)
from .surrogate import NgramSurrogate, lex_tokens, surrogate_train

__all__ = [
    "DEFAULT_K", "LOSS", "MIN_K", "ZLIB", "ZLIB_LEVEL",
    "LikelihoodProfile", "MembershipScore", "NgramSurrogate",
    "RemoteProvider", "RemoteProviderError", "compressed_len", "lex_tokens",
    "score_loss", "score_min_k", "score_zlib", "surrogate_train",
]
