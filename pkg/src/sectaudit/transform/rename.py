"""Rule 1: rename local variables and formal parameters.

Scope-aware: each symbol (parameter, local, for-init variable, for-each
variable, catch parameter) gets one fresh name applied to its declaration
and every in-scope use.  Fields, methods, and types are never touched.
Symbols whose name also appears in raw token regions the parser does not
structure (annotations, anonymous class bodies, lambda parameter lists)
are skipped rather than risk a capture.
"""

from __future__ import annotations

from ..javasrc import lexer as lx
from ..javasrc.lexer import Token
from ..javasrc.tree import Node
from .base import Rule

# Node kinds whose token content is type-ish or raw: identifiers inside are
# never variable reads.
_OPAQUE_KINDS = frozenset([
    "prim_type", "class_type", "array_type", "type_args", "type_params",
    "annotation", "qname", "package", "import", "wildcard",
])


class _Symbol:
    __slots__ = ("name", "decl_tok", "uses", "blocked")

    def __init__(self, name, decl_tok):
        self.name = name
        self.decl_tok = decl_tok
        self.uses = [decl_tok]
        self.blocked = False


class _Analysis:
    def __init__(self):
        self.symbols = []
        self.raw_names = set()

    def run(self, root):
        self._visit(root, [])
        raw = self.raw_names
        return [s for s in self.symbols if not s.blocked and s.name not in raw]

    # scopes: list of dicts (innermost last)

    def _declare(self, scopes, name_tok):
        sym = _Symbol(name_tok.text, name_tok)
        self.symbols.append(sym)
        scopes[-1][name_tok.text] = sym
        return sym

    def _lookup(self, scopes, name):
        for scope in reversed(scopes):
            if name in scope:
                return scope[name]
        return None

    def _visit(self, node, scopes):
        kind = node.kind
        if kind in _OPAQUE_KINDS:
            self._collect_raw(node)
            return
        if kind == "method":
            inner = scopes + [{}]
            for p in node.params:
                self._visit_type_only(p, inner)
                self._declare(inner, p.name_tok)
            if node.body is not None:
                self._visit(node.body, inner)
            return
        if kind == "block":
            inner = scopes + [{}]
            for stmt in node.stmts:
                self._visit(stmt, inner)
            return
        if kind == "local_var":
            self._visit_type_only(node, scopes)
            for decl in node.declarators:
                if decl.init is not None:
                    self._visit(decl.init, scopes)
                if scopes:
                    self._declare(scopes, decl.name_tok)
            return
        if kind == "for":
            inner = scopes + [{}]
            for part in node.parts:
                if isinstance(part, Node):
                    self._visit(part, inner)
            return
        if kind == "foreach":
            inner = scopes + [{}]
            self._visit_type_only(node.var, inner)
            self._declare(inner, node.var.name_tok)
            self._visit(node.iterable, inner)
            self._visit(node.body, inner)
            return
        if kind == "switch":
            self._visit(node.scrutinee, scopes)
            inner = scopes + [{}]
            for group in node.groups:
                self._visit(group, inner)
            return
        if kind == "catch":
            inner = scopes + [{}]
            self._visit_type_only(node, inner)
            self._declare(inner, node.name_tok)
            self._visit(node.body, inner)
            return
        if kind == "name":
            tok = node.tok
            if tok.kind == lx.IDENT and scopes:
                sym = self._lookup(scopes, tok.text)
                if sym is not None:
                    sym.uses.append(tok)
            return
        if kind == "field_access":
            self._visit_or_raw(node.recv, scopes)
            return
        if kind == "call":
            if node.recv is not None:
                self._visit_or_raw(node.recv, scopes)
            for arg in node.args:
                self._visit(arg, scopes)
            return
        if kind == "method_ref":
            self._visit_or_raw(node.recv, scopes)
            return
        if kind == "lambda":
            # raw parameter tokens: block symbols sharing those names
            self._collect_raw(node, skip_nodes=True)
            for part in node.parts:
                if isinstance(part, Node):
                    self._visit(part, scopes)
            return
        if kind == "labeled":
            self._visit(node.stmt, scopes)
            return
        if kind in ("error_stmt", "error_member"):
            self._collect_raw(node)
            return
        # default: recurse into node children, collect raw identifiers from
        # loose tokens (anonymous class bodies, enum constant args, ...)
        for part in node.parts:
            if isinstance(part, Node):
                self._visit(part, scopes)
            elif part.kind == lx.IDENT and kind in (
                    "new_object", "enum_const", "try", "class"):
                self.raw_names.add(part.text)

    def _visit_or_raw(self, item, scopes):
        if isinstance(item, Node):
            self._visit(item, scopes)

    def _visit_type_only(self, node, scopes):
        for part in node.parts:
            if isinstance(part, Node) and part.kind in _OPAQUE_KINDS:
                self._collect_raw(part)

    def _collect_raw(self, node, skip_nodes=False):
        stack = [node]
        while stack:
            item = stack.pop()
            if isinstance(item, Token):
                if item.kind == lx.IDENT:
                    self.raw_names.add(item.text)
            elif not skip_nodes or item is node:
                stack.extend(item.parts)


class RenameVariable(Rule):
    id = 1
    name = "RenameVariable"
    level = "Naming"

    def prepare(self, tree, ctx):
        symbols = _Analysis().run(tree.root)
        rename = {}
        for sym in symbols:
            fresh = ctx.fresh.draw()
            for tok in sym.uses:
                rename[tok.index] = fresh
        ctx.rename_map = rename
        ctx.sites = len(symbols)

    def rewrite_token(self, tok, ctx):
        new = getattr(ctx, "rename_map", {}).get(tok.index)
        if new is None:
            return None
        return tok.trivia + new
