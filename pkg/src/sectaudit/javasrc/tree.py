"""Concrete syntax tree: nodes own an ordered list of parts (child nodes
and tokens); printing is plain concatenation, so unmodified trees print
byte-identically to their source."""

from __future__ import annotations

from .lexer import Token


class Node:
    """A CST node.  ``parts`` holds children in source order; ``fields``
    names the interesting ones for rule code (also reachable as
    attributes)."""

    def __init__(self, kind, parts, **fields):
        self.kind = kind
        self.parts = parts
        self.fields = fields

    def __getattr__(self, name):
        fields = object.__getattribute__(self, "fields")
        if name in fields:
            return fields[name]
        raise AttributeError(name)

    def tokens(self):
        """All tokens under this node, in order."""
        out = []
        stack = [self]
        while stack:
            item = stack.pop()
            if isinstance(item, Token):
                out.append(item)
            else:
                stack.extend(reversed(item.parts))
        return out

    def walk(self):
        """Yield this node and every descendant node, pre-order."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            for part in reversed(node.parts):
                if isinstance(part, Node):
                    stack.append(part)

    @property
    def span(self):
        toks = [t for t in self.tokens() if t.start >= 0]
        if not toks:
            return (0, 0)
        return (toks[0].start, toks[-1].end)

    def __repr__(self):
        return f"Node({self.kind!r}, {len(self.parts)} parts)"


class SyntaxTree:
    """Parse result: root node plus the original text and token stream."""

    def __init__(self, root, text, tokens, error_count):
        self.root = root
        self.text = text
        self.all_tokens = tokens
        self.error_count = error_count

    def walk(self):
        return self.root.walk()


def node_text(item):
    """Source text of a node or token, including inner trivia but not the
    leading trivia of its first token."""
    if isinstance(item, Token):
        return item.text
    out = []
    first = True
    for tok in item.tokens():
        out.append(tok.text if first else tok.trivia + tok.text)
        first = False
    return "".join(out)


def print_tree(tree):
    """Render a tree back to source.  For trees straight out of ``parse``
    this is byte-identical to the input."""
    root = tree.root if isinstance(tree, SyntaxTree) else tree
    return "".join(t.trivia + t.text for t in root.tokens())


def structurally_equal(a, b):
    """Compare two nodes ignoring trivia and token positions."""
    if isinstance(a, Token) or isinstance(b, Token):
        if not (isinstance(a, Token) and isinstance(b, Token)):
            return False
        return a.kind == b.kind and a.text == b.text
    if a.kind != b.kind or len(a.parts) != len(b.parts):
        return False
    return all(structurally_equal(x, y) for x, y in zip(a.parts, b.parts))
