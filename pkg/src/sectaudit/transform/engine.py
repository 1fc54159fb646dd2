"""Applying rewrite rules to source files: the rule registry, single-rule
application, and the all-rules pipeline ordering."""

from __future__ import annotations

from dataclasses import dataclass

from ..javasrc import parse
from .base import RewriteContext, render_with
from .rename import RenameVariable
from . import rules as _r

ALL_RULES = [
    RenameVariable(),
    _r.For2While(),
    _r.While2For(),
    _r.Do2While(),
    _r.IfElseIf2IfElse(),
    _r.IfElse2IfElseIf(),
    _r.Switch2If(),
    _r.Unary2Add(),
    _r.Add2Equal(),
    _r.DivideVarDecl(),
    _r.MergeVarDecl(),
    _r.SwapStatement(),
    _r.ModifyConstant(),
    _r.ReverseIf(),
    _r.If2CondExp(),
    _r.CondExp2If(),
    _r.InfixDividing(),
    _r.DividePrePostFix(),
    _r.DividingComposedIf(),
    _r.LoopIfContinue2Else(),
    _r.SwitchEqualExp(),
    _r.SwitchStringEqual(),
    _r.SwitchRelation(),
]

RULES_BY_ID = {rule.id: rule for rule in ALL_RULES}
RULE_IDS = sorted(RULES_BY_ID)


def get_rule(rule_id):
    try:
        return RULES_BY_ID[rule_id]
    except KeyError:
        raise KeyError(f"unknown rule id {rule_id!r}") from None


class InternalRewriteError(Exception):
    """A rewrite produced text that no longer parses cleanly."""


@dataclass(frozen=True)
class TransformOutcome:
    rule_id: int
    applied: bool
    site_count: int
    text: str
    seed: int


def apply_rule(tree, rule_id, seed=0):
    """Apply one rule everywhere it matches.  Returns a TransformOutcome;
    when no site matches the text comes back byte-identical."""
    rule = get_rule(rule_id)
    ctx = RewriteContext(tree, seed)
    text = render_with(rule, tree, ctx)
    if ctx.sites == 0:
        return TransformOutcome(rule_id, False, 0, tree.text, seed)
    new_tree = parse(text)
    if new_tree.error_count > tree.error_count:
        raise InternalRewriteError(
            f"rule {rule_id} ({rule.name}) broke the parse: "
            f"{new_tree.error_count} error regions (was {tree.error_count})")
    return TransformOutcome(rule_id, True, ctx.sites, text, seed)


def site_count(tree, rule_id, seed=0):
    """Number of sites the rule would rewrite, without validating output."""
    rule = get_rule(rule_id)
    ctx = RewriteContext(tree, seed)
    render_with(rule, tree, ctx)
    return ctx.sites


def applicable(tree, rule_id, seed=0):
    return site_count(tree, rule_id, seed) > 0


def rule_order_for_corpus(trees, rule_ids=None, seed=0):
    """Pipeline order for applying every rule across a corpus: rules sorted
    by how many files they match, fewest first (ties by rule id); rules
    matching nothing are dropped."""
    if rule_ids is None:
        rule_ids = RULE_IDS
    counts = {rid: 0 for rid in rule_ids}
    for tree in trees:
        for rid in rule_ids:
            if applicable(tree, rid, seed):
                counts[rid] += 1
    return [rid for rid in sorted(rule_ids, key=lambda r: (counts[r], r))
            if counts[rid] > 0]


def apply_all(tree, seed=0, order=None):
    """Apply every matching rule in sequence on the evolving tree.

    When ``order`` is given (from ``rule_order_for_corpus``) it is used
    as-is; otherwise the order is computed from this one file.  Returns
    (final_text, outcomes).
    """
    if order is None:
        order = rule_order_for_corpus([tree], seed=seed)
    outcomes = []
    cur = tree
    for rid in order:
        outcome = apply_rule(cur, rid, seed)
        outcomes.append(outcome)
        if outcome.applied:
            cur = parse(outcome.text)
    return cur.text, outcomes
