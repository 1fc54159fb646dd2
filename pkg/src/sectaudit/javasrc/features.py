"""AST-derived confounder features for the causal model."""

from __future__ import annotations

from dataclasses import dataclass, asdict

from . import lexer as lx
from .tree import Node, SyntaxTree


@dataclass(frozen=True)
class CodeFeatures:
    nloc: int
    token_count: int
    ast_levels: int
    ast_nodes: int
    identifier_count: int
    ast_error_count: int
    code_complexity: int

    def as_dict(self):
        return asdict(self)


_DECISION_KINDS = {"if", "for", "foreach", "while", "do", "catch", "ternary"}


def extract_features(tree: SyntaxTree) -> CodeFeatures:
    """Feature vector of one compilation unit.

    Cyclomatic complexity is counted per unit: one per method/constructor
    plus one per decision point (if, loops, case label, catch, ternary,
    and each && / || operator).
    """
    root = tree.root
    ast_nodes = 0
    levels = 0
    decision = 0
    methods = 0
    stack = [(root, 1)]
    while stack:
        node, depth = stack.pop()
        ast_nodes += 1
        levels = max(levels, depth)
        kind = node.kind
        if kind in _DECISION_KINDS:
            decision += 1
        elif kind == "case_label":
            if node.fields.get("expr") is not None:  # default: is not a branch
                decision += 1
        elif kind == "binary" and node.fields.get("op") in ("&&", "||"):
            decision += 1
        elif kind == "method":
            methods += 1
        for part in node.parts:
            if isinstance(part, Node):
                stack.append((part, depth + 1))

    token_count = 0
    identifier_count = 0
    for tok in tree.all_tokens:
        if tok.kind == lx.EOF:
            continue
        token_count += 1
        if tok.kind == lx.IDENT:
            identifier_count += 1

    complexity = methods + decision
    return CodeFeatures(
        nloc=_count_nloc(tree.text),
        token_count=token_count,
        ast_levels=levels,
        ast_nodes=ast_nodes,
        identifier_count=identifier_count,
        ast_error_count=tree.error_count,
        code_complexity=complexity,
    )


def _count_nloc(text):
    """Non-blank, non-comment-only lines."""
    # Blank out comment bytes, preserving newlines, then count lines that
    # still hold any non-whitespace character.
    chars = list(text)
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == '"' or ch == "'":
            quote = ch
            i += 1
            while i < n:
                if text[i] == "\\":
                    i += 2
                    continue
                if text[i] == quote or text[i] == "\n":
                    i += 1
                    break
                i += 1
        elif text.startswith("//", i):
            j = text.find("\n", i)
            j = n if j < 0 else j
            for k in range(i, j):
                chars[k] = " "
            i = j
        elif text.startswith("/*", i):
            j = text.find("*/", i + 2)
            j = n if j < 0 else j + 2
            for k in range(i, j):
                if chars[k] != "\n":
                    chars[k] = " "
            i = j
        else:
            i += 1
    stripped = "".join(chars)
    return sum(1 for line in stripped.split("\n") if line.strip())
