"""Semantics-preserving Java source rewrites (23 rules) and the engine
that applies them."""

from .base import Rule, RewriteContext, render_with
from .engine import (
    ALL_RULES,
    RULE_IDS,
    RULES_BY_ID,
    InternalRewriteError,
    TransformOutcome,
    applicable,
    apply_all,
    apply_rule,
    get_rule,
    rule_order_for_corpus,
    site_count,
)

__all__ = [
    "ALL_RULES", "RULE_IDS", "RULES_BY_ID", "InternalRewriteError",
    "Rule", "RewriteContext", "TransformOutcome", "applicable", "apply_all",
    "apply_rule", "get_rule", "render_with", "rule_order_for_corpus",
    "site_count",
]
