"""Differential testing: run a method before and after a rewrite on the
same random inputs and compare outcomes (value or trap code)."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..javasrc import parse
from ..transform import apply_rule
from .interp import UNSUPPORTED, Interpreter, Trap, observable

INT_MIN, INT_MAX = -2**31, 2**31 - 1

# small pool keeps collisions likely, which exercises the equality rules
STRING_POOL = ["", "a", "b", "ab", "ba", "hello", "abc", "xyz"]

_INT_BOUNDARIES = [INT_MIN, -1, 0, 1, INT_MAX]


@dataclass
class DiffReport:
    rule_id: int
    method: str
    trials: int
    matches: int = 0
    mismatches: int = 0
    skipped: int = 0
    site_count: int = 0
    applied: bool = False
    failures: list = field(default_factory=list)  # (args, got_a, got_b)

    @property
    def clean(self):
        return self.applied and self.mismatches == 0


def param_kinds(method):
    """Abstract argument kinds for a method's parameters, or None if a
    parameter type is outside the generator's vocabulary."""
    kinds = []
    for p in method.params:
        t = p.type
        if t.kind == "prim_type" and t.name in ("int", "long"):
            kinds.append("int")
        elif t.kind == "prim_type" and t.name == "boolean":
            kinds.append("boolean")
        elif t.kind == "class_type" and [x.text for x in t.tokens()] == ["String"]:
            kinds.append("string")
        elif (t.kind == "array_type" and t.dims == 1
              and t.base.kind == "prim_type" and t.base.name == "int"):
            kinds.append("int[]")
        else:
            return None
    return kinds


def pick_entry(tree, name=None):
    """The method to drive: by name, else the first body-bearing method
    with generatable parameters."""
    for node in tree.root.walk():
        if node.kind != "method" or node.is_ctor or node.body is None:
            continue
        if name is not None and node.name_tok.text != name:
            continue
        if param_kinds(node) is not None:
            return node
    return None


def gen_args(kinds, rng):
    args = []
    for kind in kinds:
        if kind == "int":
            if rng.random() < 0.2:
                args.append(rng.choice(_INT_BOUNDARIES))
            else:
                args.append(rng.randint(-100, 100))
        elif kind == "boolean":
            args.append(rng.random() < 0.5)
        elif kind == "string":
            args.append(rng.choice(STRING_POOL))
        else:  # int[]
            n = rng.randint(0, 8)
            args.append([rng.randint(-100, 100) for _ in range(n)])
    return args


def _run(tree, method_name, args, step_limit):
    interp = Interpreter(tree, step_limit=step_limit)
    try:
        value = interp.call(method_name, [interp.inject(a) for a in args])
    except Trap as t:
        return (t.code, None)
    return ("ok", observable(value))


def differential_test(source, rule_id, trials=100, seed=7, method=None,
                      step_limit=1_000_000):
    """Apply a rule to ``source`` and compare the entry method's behavior
    over ``trials`` seeded random inputs.

    Trials where either side traps Unsupported count as skipped, not
    mismatched; everything else must agree on (status, value).
    """
    tree = parse(source)
    entry = pick_entry(tree, method)
    if entry is None:
        raise ValueError("no runnable entry method found")
    name = entry.name_tok.text
    outcome = apply_rule(tree, rule_id, seed=seed)
    report = DiffReport(rule_id=rule_id, method=name, trials=trials,
                        site_count=outcome.site_count, applied=outcome.applied)
    if not outcome.applied:
        return report
    new_tree = parse(outcome.text)
    kinds = param_kinds(entry)
    rng = random.Random(seed)
    for _ in range(trials):
        args = gen_args(kinds, rng)
        got_a = _run(tree, name, args, step_limit)
        got_b = _run(new_tree, name, args, step_limit)
        if UNSUPPORTED in (got_a[0], got_b[0]):
            report.skipped += 1
        elif got_a == got_b:
            report.matches += 1
        else:
            report.mismatches += 1
            if len(report.failures) < 10:
                report.failures.append((args, got_a, got_b))
    return report
