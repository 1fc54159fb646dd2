"""Shared machinery for the rewrite rules: the render-with-rewrites engine,
fresh-name generation, and expression purity checks.

Rules rewrite during a single recursive render of the tree.  A rule gets a
chance to replace any node with text; replacement text is built from
recursive renders of the kept children, so nested sites are rewritten in
the same pass.  Replacement text must include the node's leading trivia
(use ``leading(node)``), keeping all off-site bytes untouched.
"""

from __future__ import annotations

import random

from ..javasrc import lexer as lx
from ..javasrc.lexer import Token
from ..javasrc.tree import Node

_BASE36 = "0123456789abcdefghijklmnopqrstuvwxyz"

LOOP_KINDS = frozenset(["for", "foreach", "while", "do"])


def base36(n):
    if n == 0:
        return "0"
    out = []
    while n:
        n, r = divmod(n, 36)
        out.append(_BASE36[r])
    return "".join(reversed(out))


def first_token(item):
    while isinstance(item, Node):
        item = item.parts[0]
    return item


def leading(node):
    """Leading trivia of a node (the first token's trivia)."""
    return first_token(node).trivia


class FreshNames:
    """Seeded generator of identifiers not colliding with anything in the
    file or with Java keywords."""

    def __init__(self, tree, seed):
        self.taken = {t.text for t in tree.all_tokens
                      if t.kind in (lx.IDENT, lx.KEYWORD, lx.BOOL_NULL_LIT)}
        self.taken |= lx.KEYWORDS
        self.rng = random.Random(seed)

    def draw(self, prefix="v_"):
        while True:
            name = prefix + base36(self.rng.getrandbits(30))
            if name not in self.taken:
                self.taken.add(name)
                return name


class RewriteContext:
    def __init__(self, tree, seed):
        self.tree = tree
        self.seed = seed
        self.sites = 0
        self.fresh = FreshNames(tree, seed)
        self._parents = None

    @property
    def parents(self):
        if self._parents is None:
            parents = {}
            for node in self.tree.root.walk():
                for part in node.parts:
                    if isinstance(part, Node):
                        parents[id(part)] = node
            self._parents = parents
        return self._parents

    def parent_of(self, node):
        return self.parents.get(id(node))

    def ancestors(self, node):
        cur = self.parent_of(node)
        while cur is not None:
            yield cur
            cur = self.parent_of(cur)

    def indent_of(self, node):
        """Whitespace prefix of the line the node starts on ('' if the node
        does not start a line)."""
        tok = first_token(node)
        if tok.start < 0:
            return ""
        text = self.tree.text
        i = tok.start
        j = text.rfind("\n", 0, i)
        prefix = text[j + 1:i]
        return prefix if prefix.strip() == "" else ""


class Rule:
    """Base class: one semantics-preserving rewrite rule."""

    id = 0
    name = ""
    level = ""

    def prepare(self, tree, ctx):
        pass

    def try_rewrite(self, node, ctx, render):
        """Return replacement text (with leading trivia) or None."""
        return None

    def rewrite_token(self, tok, ctx):
        """Token-level hook (used by renaming); return text or None."""
        return None


def render_with(rule, tree, ctx):
    def render(item):
        if isinstance(item, Token):
            replaced = rule.rewrite_token(item, ctx)
            if replaced is not None:
                return replaced
            return item.trivia + item.text
        out = rule.try_rewrite(item, ctx, render)
        if out is not None:
            return out
        return "".join(render(p) for p in item.parts)

    rule.prepare(tree, ctx)
    return render(tree.root)


def expr_text(node, render):
    """Rendered expression text without leading whitespace."""
    return render(node).strip()


def sans_lead(node, render):
    """Rendered text without the node's original leading trivia."""
    out = render(node)
    lead = leading(node)
    if lead and out.startswith(lead):
        return out[len(lead):]
    return out.lstrip()


_PURE_KINDS = frozenset([
    "name", "literal", "paren", "binary", "instanceof", "ternary", "cast",
    "field_access", "array_access",
])


def side_effect_free(node):
    """Conservative purity check: no calls, allocations, assignments, or
    increments anywhere below."""
    if isinstance(node, Token):
        return True
    if node.kind in ("unary", "postfix"):
        if node.fields.get("op") in ("++", "--"):
            return False
        return all(side_effect_free(p) for p in node.parts)
    if node.kind not in _PURE_KINDS:
        return False
    return all(side_effect_free(p) for p in node.parts)


def expr_idents(node, out=None):
    """Identifier tokens appearing anywhere in an expression subtree.
    Over-approximates reads (member names and cast types included), which
    is the safe direction for dependence checks."""
    if out is None:
        out = set()
    stack = [node]
    while stack:
        item = stack.pop()
        if isinstance(item, Token):
            if item.kind == lx.IDENT:
                out.add(item.text)
        else:
            stack.extend(item.parts)
    return out


def contains_kind(node, kinds, stop_kinds=frozenset()):
    """True if a node of one of ``kinds`` occurs below ``node`` without an
    intervening node of ``stop_kinds``."""
    if node.kind in kinds:
        return True
    stack = [p for p in node.parts if isinstance(p, Node)]
    while stack:
        cur = stack.pop()
        if cur.kind in kinds:
            return True
        if cur.kind in stop_kinds:
            continue
        stack.extend(p for p in cur.parts if isinstance(p, Node))
    return False


def block_stmts(stmt):
    if stmt.kind == "block":
        return stmt.stmts
    return [stmt]
