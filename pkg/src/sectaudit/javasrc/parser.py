"""Recursive-descent parser for Java 8 source.

Produces a lossless concrete syntax tree (see tree.py).  Syntactically
invalid regions become error nodes with the offending tokens attached, so
parsing never fails on malformed input; the error-node count is surfaced
through ``SyntaxTree.error_count``.

The lexer emits ``>`` only as a lone token; ``_merged_op`` reassembles
``>>``, ``>>>``, ``>=``, ``>>=`` and ``>>>=`` when (and only when) the
expression grammar asks for them.
"""

from __future__ import annotations

from . import lexer as lx
from .lexer import Token
from .tree import Node, SyntaxTree

PRIMITIVES = frozenset(
    ["boolean", "byte", "short", "int", "long", "char", "float", "double", "void"]
)

MODIFIER_KWS = frozenset(
    ["public", "protected", "private", "static", "final", "abstract", "native",
     "synchronized", "transient", "volatile", "strictfp", "default"]
)

_ASSIGN_OPS = frozenset(["=", "+=", "-=", "*=", "/=", "&=", "|=", "^=", "%=", "<<="])


class ParseError(Exception):
    pass


def parse(text):
    """Parse Java source into a SyntaxTree.

    Rejects non-str / non-UTF-8 input; never raises on malformed Java.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")  # raises UnicodeDecodeError on bad input
    if not isinstance(text, str):
        raise TypeError("parse() expects str or UTF-8 bytes")
    if text == "":
        raise ValueError("parse() requires non-empty input")
    tokens = lex(text)
    p = _Parser(tokens)
    root = p.compilation_unit()
    lex_errors = sum(1 for t in tokens if t.kind == lx.ERROR)
    return SyntaxTree(root, text, tokens, p.error_count + lex_errors)


def lex(text):
    return lx.lex(text)


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.pos = 0
        self.error_count = 0

    # ---- token plumbing -------------------------------------------------

    def peek(self, off=0):
        i = min(self.pos + off, len(self.toks) - 1)
        return self.toks[i]

    def at_eof(self):
        return self.peek().kind == lx.EOF

    def advance(self):
        tok = self.toks[self.pos]
        if self.pos < len(self.toks) - 1:
            self.pos += 1
        return tok

    def expect_op(self, text):
        tok = self.peek()
        if tok.is_op(text):
            return self.advance()
        raise ParseError(f"expected {text!r}, found {tok.text!r}")

    def expect_kw(self, text):
        tok = self.peek()
        if tok.is_kw(text):
            return self.advance()
        raise ParseError(f"expected {text!r}, found {tok.text!r}")

    def expect_ident(self):
        tok = self.peek()
        if tok.kind == lx.IDENT:
            return self.advance()
        raise ParseError(f"expected identifier, found {tok.text!r}")

    def accept_op(self, text):
        if self.peek().is_op(text):
            return self.advance()
        return None

    def accept_kw(self, text):
        if self.peek().is_kw(text):
            return self.advance()
        return None

    def _merged_op(self):
        """Longest operator formed by the next tokens, merging adjacent
        '>' / '=' tokens that have no trivia between them."""
        tok = self.peek()
        if tok.kind != lx.OP:
            return None, 0
        if tok.text != ">":
            return tok.text, 1
        text = ">"
        count = 1
        while True:
            nxt = self.peek(count)
            if nxt.kind == lx.OP and nxt.trivia == "" and (
                (nxt.text == ">" and text in (">", ">>")) or
                (nxt.text == "=" and text in (">", ">>", ">>>"))
            ):
                text += nxt.text
                count += 1
                if text.endswith("="):
                    break
            else:
                break
        return text, count

    def _take_merged(self, count):
        return [self.advance() for _ in range(count)]

    # ---- error recovery -------------------------------------------------

    def error_node(self, kind, stop_at_close_brace=True):
        """Consume tokens up to a likely statement/member boundary."""
        self.error_count += 1
        parts = []
        depth = 0
        if not parts and self.at_eof():
            # nothing to attach; still record the error
            return Node(kind, parts)
        while not self.at_eof():
            tok = self.peek()
            if depth == 0 and tok.is_op("}") and stop_at_close_brace:
                break
            parts.append(self.advance())
            if tok.kind == lx.OP:
                if tok.text in "([{":
                    depth += 1
                elif tok.text in ")]}":
                    depth -= 1
                    if depth < 0:
                        depth = 0
                elif tok.text == ";" and depth == 0:
                    break
        if not parts and not self.at_eof():
            parts.append(self.advance())
        return Node(kind, parts)

    # ---- compilation unit ----------------------------------------------

    def compilation_unit(self):
        parts = []
        types = []
        if self.peek().is_kw("package") or (
            self.peek().is_op("@") and self._annotated_package_ahead()
        ):
            parts.append(self.package_decl())
        while self.peek().is_kw("import"):
            parts.append(self.import_decl())
        while not self.at_eof():
            if self.peek().is_op(";"):
                parts.append(Node("empty", [self.advance()]))
                continue
            start = self.pos
            try:
                decl = self.type_decl()
            except ParseError:
                self.pos = start
                decl = self.error_node("error_member")
                if not decl.parts:
                    # stuck on a '}' at top level: consume it
                    if not self.at_eof():
                        decl.parts.append(self.advance())
            parts.append(decl)
            if decl.kind == "class":
                types.append(decl)
        parts.append(self.advance())  # EOF token
        return Node("unit", parts, types=types)

    def _annotated_package_ahead(self):
        i = 0
        while True:
            if not self.peek(i).is_op("@"):
                break
            i += 1
            if self.peek(i).kind != lx.IDENT:
                return False
            i += 1
            while self.peek(i).is_op("."):
                i += 2
            if self.peek(i).is_op("("):
                depth = 0
                while True:
                    t = self.peek(i)
                    if t.kind == lx.EOF:
                        return False
                    if t.is_op("("):
                        depth += 1
                    elif t.is_op(")"):
                        depth -= 1
                        if depth == 0:
                            i += 1
                            break
                    i += 1
        return self.peek(i).is_kw("package")

    def package_decl(self):
        parts = []
        while self.peek().is_op("@"):
            parts.append(self.annotation())
        parts.append(self.expect_kw("package"))
        parts.append(self.qualified_name_tokens())
        parts.append(self.expect_op(";"))
        return Node("package", parts)

    def import_decl(self):
        parts = [self.expect_kw("import")]
        if self.peek().is_kw("static"):
            parts.append(self.advance())
        parts.append(self.qualified_name_tokens())
        if self.peek().is_op("."):
            parts.append(self.advance())
            parts.append(self.expect_op("*"))
        parts.append(self.expect_op(";"))
        return Node("import", parts)

    def qualified_name_tokens(self):
        parts = [self.expect_ident()]
        while self.peek().is_op(".") and self.peek(1).kind == lx.IDENT:
            parts.append(self.advance())
            parts.append(self.advance())
        return Node("qname", parts)

    # ---- declarations ---------------------------------------------------

    def annotation(self):
        parts = [self.expect_op("@")]
        if self.peek().is_kw("interface"):
            # annotation type declaration handled by caller via type_decl
            raise ParseError("annotation type declaration")
        parts.append(self.qualified_name_tokens())
        if self.peek().is_op("("):
            parts.extend(self.balanced("(", ")"))
        return Node("annotation", parts)

    def balanced(self, open_text, close_text):
        """Consume a balanced token run including delimiters."""
        out = [self.expect_op(open_text)]
        depth = 1
        while depth > 0:
            if self.at_eof():
                raise ParseError(f"unbalanced {open_text!r}")
            tok = self.advance()
            out.append(tok)
            if tok.is_op(open_text):
                depth += 1
            elif tok.is_op(close_text):
                depth -= 1
        return out

    def modifiers(self):
        parts = []
        while True:
            tok = self.peek()
            if tok.kind == lx.KEYWORD and tok.text in MODIFIER_KWS:
                parts.append(self.advance())
            elif tok.is_op("@") and not self.peek(1).is_kw("interface"):
                parts.append(self.annotation())
            else:
                break
        return parts

    def type_decl(self):
        parts = self.modifiers()
        tok = self.peek()
        if tok.is_op("@") and self.peek(1).is_kw("interface"):
            parts.append(self.advance())
            kind_tok = self.advance()
        elif tok.kind == lx.KEYWORD and tok.text in ("class", "interface", "enum"):
            kind_tok = self.advance()
        else:
            raise ParseError(f"expected type declaration, found {tok.text!r}")
        parts.append(kind_tok)
        name_tok = self.expect_ident()
        parts.append(name_tok)
        if self.peek().is_op("<"):
            parts.append(self.type_params())
        while self.peek().kind == lx.KEYWORD and self.peek().text in ("extends", "implements"):
            parts.append(self.advance())
            parts.append(self.parse_type())
            while self.accept_op(","):
                parts.append(self.toks[self.pos - 1])
                parts.append(self.parse_type())
        members = []
        parts.append(self.expect_op("{"))
        if kind_tok.text == "enum":
            self._enum_constants(parts)
        while not self.peek().is_op("}") and not self.at_eof():
            member = self.class_member(name_tok.text)
            parts.append(member)
            members.append(member)
        parts.append(self.expect_op("}"))
        return Node("class", parts, name_tok=name_tok, kind_tok=kind_tok, members=members)

    def _enum_constants(self, parts):
        while self.peek().kind == lx.IDENT:
            cparts = []
            while self.peek().is_op("@"):
                cparts.append(self.annotation())
            cparts.append(self.expect_ident())
            if self.peek().is_op("("):
                cparts.extend(self.balanced("(", ")"))
            if self.peek().is_op("{"):
                cparts.extend(self.balanced("{", "}"))
            parts.append(Node("enum_const", cparts))
            if self.peek().is_op(","):
                parts.append(self.advance())
            else:
                break
        if self.peek().is_op(";"):
            parts.append(self.advance())

    def type_params(self):
        parts = [self.expect_op("<")]
        depth = 1
        while depth > 0:
            if self.at_eof():
                raise ParseError("unterminated type parameters")
            tok = self.advance()
            parts.append(tok)
            if tok.is_op("<"):
                depth += 1
            elif tok.is_op(">"):
                depth -= 1
            elif tok.is_op("(") or tok.is_op("{") or tok.is_op(";"):
                raise ParseError("malformed type parameters")
        return Node("type_params", parts)

    def class_member(self, class_name):
        start = self.pos
        try:
            return self._class_member_inner(class_name)
        except ParseError:
            self.pos = start
            return self.error_node("error_member")

    def _class_member_inner(self, class_name):
        mods = self.modifiers()
        tok = self.peek()
        if tok.is_op("{"):
            # instance/static initializer
            return Node("initializer", mods + [self.block()])
        if (tok.kind == lx.KEYWORD and tok.text in ("class", "interface", "enum")) or (
            tok.is_op("@") and self.peek(1).is_kw("interface")
        ):
            decl = self.type_decl()
            decl.parts[:0] = mods
            return decl
        if self.peek().is_op("<"):
            mods.append(self.type_params())
            tok = self.peek()
        if tok.kind == lx.IDENT and tok.text == class_name and self.peek(1).is_op("("):
            name_tok = self.advance()
            return self._method_rest(mods, None, name_tok, is_ctor=True)
        ret_type = self.parse_type()
        name_tok = self.expect_ident()
        if self.peek().is_op("("):
            return self._method_rest(mods, ret_type, name_tok, is_ctor=False)
        return self._field_rest(mods, ret_type, name_tok)

    def _method_rest(self, mods, ret_type, name_tok, is_ctor):
        parts = list(mods)
        if ret_type is not None:
            parts.append(ret_type)
        parts.append(name_tok)
        parts.append(self.expect_op("("))
        params = []
        if not self.peek().is_op(")"):
            while True:
                param = self.param()
                params.append(param)
                parts.append(param)
                if self.peek().is_op(","):
                    parts.append(self.advance())
                else:
                    break
        parts.append(self.expect_op(")"))
        while self.peek().is_op("["):
            parts.append(self.advance())
            parts.append(self.expect_op("]"))
        if self.peek().is_kw("throws"):
            parts.append(self.advance())
            parts.append(self.parse_type())
            while self.peek().is_op(","):
                parts.append(self.advance())
                parts.append(self.parse_type())
        body = None
        if self.peek().is_op("{"):
            body = self.block()
            parts.append(body)
        elif self.peek().is_kw("default"):
            parts.append(self.advance())
            parts.append(self.expression())
            parts.append(self.expect_op(";"))
        else:
            parts.append(self.expect_op(";"))
        return Node("method", parts, name_tok=name_tok, ret_type=ret_type,
                    params=params, body=body, is_ctor=is_ctor)

    def param(self):
        parts = []
        while True:
            if self.peek().is_kw("final"):
                parts.append(self.advance())
            elif self.peek().is_op("@"):
                parts.append(self.annotation())
            else:
                break
        ptype = self.parse_type()
        parts.append(ptype)
        if self.peek().is_op("..."):
            parts.append(self.advance())
        name_tok = self.expect_ident()
        parts.append(name_tok)
        while self.peek().is_op("["):
            parts.append(self.advance())
            parts.append(self.expect_op("]"))
        return Node("param", parts, type=ptype, name_tok=name_tok)

    def _field_rest(self, mods, ftype, first_name):
        parts = list(mods)
        parts.append(ftype)
        declarators = []
        decl = self._declarator_rest(first_name)
        declarators.append(decl)
        parts.append(decl)
        while self.peek().is_op(","):
            parts.append(self.advance())
            decl = self.declarator()
            declarators.append(decl)
            parts.append(decl)
        parts.append(self.expect_op(";"))
        return Node("field", parts, type=ftype, declarators=declarators)

    def declarator(self):
        name_tok = self.expect_ident()
        return self._declarator_rest(name_tok)

    def _declarator_rest(self, name_tok):
        parts = [name_tok]
        dims = 0
        while self.peek().is_op("["):
            parts.append(self.advance())
            parts.append(self.expect_op("]"))
            dims += 1
        init = None
        if self.peek().is_op("="):
            parts.append(self.advance())
            init = self.variable_init()
            parts.append(init)
        return Node("declarator", parts, name_tok=name_tok, init=init, dims=dims)

    def variable_init(self):
        if self.peek().is_op("{"):
            return self.array_init()
        return self.expression()

    def array_init(self):
        parts = [self.expect_op("{")]
        items = []
        while not self.peek().is_op("}"):
            if self.at_eof():
                raise ParseError("unterminated array initializer")
            item = self.variable_init()
            items.append(item)
            parts.append(item)
            if self.peek().is_op(","):
                parts.append(self.advance())
            else:
                break
        parts.append(self.expect_op("}"))
        return Node("array_init", parts, items=items)

    # ---- types ----------------------------------------------------------

    def parse_type(self):
        tok = self.peek()
        if tok.kind == lx.KEYWORD and tok.text in PRIMITIVES:
            parts = [self.advance()]
            base = Node("prim_type", parts, name=tok.text)
        elif tok.kind == lx.IDENT:
            parts = [self.advance()]
            if self.peek().is_op("<"):
                parts.append(self.type_args())
            while self.peek().is_op(".") and self.peek(1).kind == lx.IDENT:
                parts.append(self.advance())
                parts.append(self.advance())
                if self.peek().is_op("<"):
                    parts.append(self.type_args())
            base = Node("class_type", parts)
        else:
            raise ParseError(f"expected type, found {tok.text!r}")
        dims = 0
        dim_parts = []
        while self.peek().is_op("[") and self.peek(1).is_op("]"):
            dim_parts.append(self.advance())
            dim_parts.append(self.advance())
            dims += 1
        if dims:
            return Node("array_type", [base] + dim_parts, base=base, dims=dims)
        return base

    def type_args(self):
        parts = [self.expect_op("<")]
        if self.peek().is_op(">"):  # diamond
            parts.append(self.advance())
            return Node("type_args", parts)
        while True:
            if self.peek().is_op("?"):
                wparts = [self.advance()]
                if self.peek().kind == lx.KEYWORD and self.peek().text in ("extends", "super"):
                    wparts.append(self.advance())
                    wparts.append(self.parse_type())
                parts.append(Node("wildcard", wparts))
            else:
                parts.append(self.parse_type())
            if self.peek().is_op(","):
                parts.append(self.advance())
            else:
                break
        parts.append(self.expect_op(">"))
        return Node("type_args", parts)

    # ---- statements -----------------------------------------------------

    def block(self):
        parts = [self.expect_op("{")]
        stmts = []
        while not self.peek().is_op("}"):
            if self.at_eof():
                raise ParseError("unterminated block")
            stmt = self.statement()
            stmts.append(stmt)
            parts.append(stmt)
        parts.append(self.expect_op("}"))
        return Node("block", parts, stmts=stmts)

    def statement(self):
        start = self.pos
        try:
            return self._statement_inner()
        except ParseError:
            self.pos = start
            return self.error_node("error_stmt")

    def _statement_inner(self):
        tok = self.peek()
        if tok.is_op("{"):
            return self.block()
        if tok.is_op(";"):
            return Node("empty", [self.advance()])
        if tok.kind == lx.KEYWORD:
            handler = {
                "if": self.if_stmt, "while": self.while_stmt, "do": self.do_stmt,
                "for": self.for_stmt, "switch": self.switch_stmt,
                "return": self.return_stmt, "break": self.break_stmt,
                "continue": self.continue_stmt, "throw": self.throw_stmt,
                "try": self.try_stmt, "synchronized": self.sync_stmt,
                "assert": self.assert_stmt,
            }.get(tok.text)
            if handler is not None:
                return handler()
            if tok.text in ("class", "interface", "enum") or tok.text in MODIFIER_KWS:
                start = self.pos
                try:
                    return Node("local_class", [self.type_decl()])
                except ParseError:
                    self.pos = start
        if tok.kind == lx.IDENT and self.peek(1).is_op(":"):
            label = self.advance()
            colon = self.advance()
            stmt = self.statement()
            return Node("labeled", [label, colon, stmt], label_tok=label, stmt=stmt)
        local = self.try_local_var()
        if local is not None:
            return local
        expr = self.expression()
        semi = self.expect_op(";")
        return Node("expr_stmt", [expr, semi], expr=expr)

    def try_local_var(self):
        start = self.pos
        try:
            node = self._local_var_inner()
        except ParseError:
            self.pos = start
            return None
        return node

    def _local_var_inner(self, need_semi=True):
        mods = []
        while self.peek().is_kw("final") or self.peek().is_op("@"):
            if self.peek().is_kw("final"):
                mods.append(self.advance())
            else:
                mods.append(self.annotation())
        vtype = self.parse_type()
        if self.peek().kind != lx.IDENT:
            raise ParseError("not a declaration")
        name_tok = self.advance()
        nxt = self.peek()
        if not (nxt.is_op("=") or nxt.is_op(";") or nxt.is_op(",") or nxt.is_op("[")):
            raise ParseError("not a declaration")
        parts = list(mods) + [vtype]
        declarators = []
        decl = self._declarator_rest(name_tok)
        declarators.append(decl)
        parts.append(decl)
        while self.peek().is_op(","):
            parts.append(self.advance())
            decl = self.declarator()
            declarators.append(decl)
            parts.append(decl)
        if need_semi:
            parts.append(self.expect_op(";"))
        return Node("local_var", parts, type=vtype, declarators=declarators, mods=mods)

    def paren_expr(self):
        lp = self.expect_op("(")
        expr = self.expression()
        rp = self.expect_op(")")
        return lp, expr, rp

    def if_stmt(self):
        kw = self.expect_kw("if")
        lp, cond, rp = self.paren_expr()
        then = self.statement()
        parts = [kw, lp, cond, rp, then]
        else_ = None
        if self.peek().is_kw("else"):
            parts.append(self.advance())
            else_ = self.statement()
            parts.append(else_)
        return Node("if", parts, cond=cond, then=then, else_=else_)

    def while_stmt(self):
        kw = self.expect_kw("while")
        lp, cond, rp = self.paren_expr()
        body = self.statement()
        return Node("while", [kw, lp, cond, rp, body], cond=cond, body=body)

    def do_stmt(self):
        kw = self.expect_kw("do")
        body = self.statement()
        wkw = self.expect_kw("while")
        lp, cond, rp = self.paren_expr()
        semi = self.expect_op(";")
        return Node("do", [kw, body, wkw, lp, cond, rp, semi], cond=cond, body=body)

    def for_stmt(self):
        kw = self.expect_kw("for")
        lp = self.expect_op("(")
        # try for-each
        start = self.pos
        try:
            inner = self._local_var_foreach()
        except ParseError:
            self.pos = start
            inner = None
        if inner is not None:
            var_node, colon = inner
            iterable = self.expression()
            rp = self.expect_op(")")
            body = self.statement()
            return Node("foreach", [kw, lp, var_node, colon, iterable, rp, body],
                        var=var_node, iterable=iterable, body=body)
        parts = [kw, lp]
        init = None
        if not self.peek().is_op(";"):
            init = self.try_local_var_no_semi()
            if init is None:
                exprs = [self.expression()]
                eparts = [exprs[0]]
                while self.peek().is_op(","):
                    eparts.append(self.advance())
                    e = self.expression()
                    exprs.append(e)
                    eparts.append(e)
                init = Node("expr_list", eparts, exprs=exprs)
            parts.append(init)
        semi1 = self.expect_op(";")
        parts.append(semi1)
        cond = None
        if not self.peek().is_op(";"):
            cond = self.expression()
            parts.append(cond)
        semi2 = self.expect_op(";")
        parts.append(semi2)
        update = []
        if not self.peek().is_op(")"):
            e = self.expression()
            update.append(e)
            parts.append(e)
            while self.peek().is_op(","):
                parts.append(self.advance())
                e = self.expression()
                update.append(e)
                parts.append(e)
        rp = self.expect_op(")")
        parts.append(rp)
        body = self.statement()
        parts.append(body)
        return Node("for", parts, init=init, cond=cond, update=update, body=body)

    def try_local_var_no_semi(self):
        start = self.pos
        try:
            node = self._local_var_inner(need_semi=False)
        except ParseError:
            self.pos = start
            return None
        if not self.peek().is_op(";"):
            self.pos = start
            return None
        return node

    def _local_var_foreach(self):
        mods = []
        while self.peek().is_kw("final") or self.peek().is_op("@"):
            if self.peek().is_kw("final"):
                mods.append(self.advance())
            else:
                mods.append(self.annotation())
        vtype = self.parse_type()
        if self.peek().kind != lx.IDENT:
            raise ParseError("not a for-each")
        name_tok = self.advance()
        if not self.peek().is_op(":"):
            raise ParseError("not a for-each")
        colon = self.advance()
        var_node = Node("foreach_var", mods + [vtype, name_tok],
                        type=vtype, name_tok=name_tok)
        return var_node, colon

    def switch_stmt(self):
        kw = self.expect_kw("switch")
        lp, scrutinee, rp = self.paren_expr()
        parts = [kw, lp, scrutinee, rp, self.expect_op("{")]
        groups = []
        while not self.peek().is_op("}"):
            if self.at_eof():
                raise ParseError("unterminated switch")
            group = self.switch_group()
            groups.append(group)
            parts.append(group)
        parts.append(self.expect_op("}"))
        return Node("switch", parts, scrutinee=scrutinee, groups=groups)

    def switch_group(self):
        labels = []
        parts = []
        while True:
            tok = self.peek()
            if tok.is_kw("case"):
                lparts = [self.advance()]
                expr = self.expression()
                lparts.append(expr)
                lparts.append(self.expect_op(":"))
                label = Node("case_label", lparts, expr=expr)
            elif tok.is_kw("default"):
                lparts = [self.advance(), self.expect_op(":")]
                label = Node("case_label", lparts, expr=None)
            else:
                break
            labels.append(label)
            parts.append(label)
        if not labels:
            raise ParseError("expected case label")
        stmts = []
        while not (self.peek().is_op("}") or self.peek().is_kw("case")
                   or self.peek().is_kw("default")):
            if self.at_eof():
                raise ParseError("unterminated switch group")
            stmt = self.statement()
            stmts.append(stmt)
            parts.append(stmt)
        return Node("switch_group", parts, labels=labels, stmts=stmts)

    def return_stmt(self):
        kw = self.expect_kw("return")
        parts = [kw]
        expr = None
        if not self.peek().is_op(";"):
            expr = self.expression()
            parts.append(expr)
        parts.append(self.expect_op(";"))
        return Node("return", parts, expr=expr)

    def break_stmt(self):
        kw = self.expect_kw("break")
        parts = [kw]
        label = None
        if self.peek().kind == lx.IDENT:
            label = self.advance()
            parts.append(label)
        parts.append(self.expect_op(";"))
        return Node("break", parts, label=label)

    def continue_stmt(self):
        kw = self.expect_kw("continue")
        parts = [kw]
        label = None
        if self.peek().kind == lx.IDENT:
            label = self.advance()
            parts.append(label)
        parts.append(self.expect_op(";"))
        return Node("continue", parts, label=label)

    def throw_stmt(self):
        kw = self.expect_kw("throw")
        expr = self.expression()
        semi = self.expect_op(";")
        return Node("throw", [kw, expr, semi], expr=expr)

    def try_stmt(self):
        parts = [self.expect_kw("try")]
        if self.peek().is_op("("):
            parts.extend(self.balanced("(", ")"))
        body = self.block()
        parts.append(body)
        while self.peek().is_kw("catch"):
            cparts = [self.advance(), self.expect_op("(")]
            while True:
                if self.peek().is_kw("final"):
                    cparts.append(self.advance())
                cparts.append(self.parse_type())
                if self.peek().is_op("|"):
                    cparts.append(self.advance())
                else:
                    break
            cname = self.expect_ident()
            cparts.append(cname)
            cparts.append(self.expect_op(")"))
            cbody = self.block()
            cparts.append(cbody)
            parts.append(Node("catch", cparts, body=cbody, name_tok=cname))
        if self.peek().is_kw("finally"):
            parts.append(self.advance())
            parts.append(self.block())
        return Node("try", parts, body=body)

    def sync_stmt(self):
        kw = self.expect_kw("synchronized")
        lp, expr, rp = self.paren_expr()
        body = self.block()
        return Node("sync", [kw, lp, expr, rp, body], expr=expr, body=body)

    def assert_stmt(self):
        parts = [self.expect_kw("assert"), self.expression()]
        if self.peek().is_op(":"):
            parts.append(self.advance())
            parts.append(self.expression())
        parts.append(self.expect_op(";"))
        return Node("assert", parts)

    # ---- expressions ----------------------------------------------------

    def expression(self):
        lam = self.try_lambda()
        if lam is not None:
            return lam
        left = self.ternary()
        op_text, count = self._merged_op()
        if op_text in _ASSIGN_OPS or op_text in (">>=", ">>>="):
            op_toks = self._take_merged(count)
            value = self.expression()
            return Node("assign", [left, *op_toks, value],
                        target=left, op=op_text, value=value)
        return left

    def try_lambda(self):
        tok = self.peek()
        if tok.kind == lx.IDENT and self.peek(1).is_op("->"):
            name = self.advance()
            arrow = self.advance()
            body = self.lambda_body()
            return Node("lambda", [name, arrow, body], body=body)
        if tok.is_op("("):
            # scan to matching ')': lambda iff followed by '->'
            i = 0
            depth = 0
            while True:
                t = self.peek(i)
                if t.kind == lx.EOF:
                    return None
                if t.is_op("("):
                    depth += 1
                elif t.is_op(")"):
                    depth -= 1
                    if depth == 0:
                        break
                i += 1
            if not self.peek(i + 1).is_op("->"):
                return None
            parts = self._take_merged(i + 1)  # params incl parens
            arrow = self.advance()
            parts.append(arrow)
            body = self.lambda_body()
            parts.append(body)
            return Node("lambda", parts, body=body)
        return None

    def lambda_body(self):
        if self.peek().is_op("{"):
            return self.block()
        return self.expression()

    def ternary(self):
        cond = self.binary(0)
        if self.peek().is_op("?"):
            q = self.advance()
            then = self.expression()
            colon = self.expect_op(":")
            else_ = self.expression()
            return Node("ternary", [cond, q, then, colon, else_],
                        cond=cond, then=then, else_=else_)
        return cond

    _BIN_LEVELS = [
        ["||"],
        ["&&"],
        ["|"],
        ["^"],
        ["&"],
        ["==", "!="],
        ["<", ">", "<=", ">=", "instanceof"],
        ["<<", ">>", ">>>"],
        ["+", "-"],
        ["*", "/", "%"],
    ]

    def binary(self, level):
        if level >= len(self._BIN_LEVELS):
            return self.unary()
        ops = self._BIN_LEVELS[level]
        left = self.binary(level + 1)
        while True:
            tok = self.peek()
            if tok.is_kw("instanceof") and "instanceof" in ops:
                kw = self.advance()
                rtype = self.parse_type()
                left = Node("instanceof", [left, kw, rtype], left=left, type=rtype)
                continue
            op_text, count = self._merged_op()
            if op_text not in ops or op_text is None:
                break
            if op_text in ("<", ">") and self.peek(count).is_op("="):
                # never true for '<' ('<=' is single-lexed); '>' '=' with
                # trivia between would have merged already -- keep as-is
                pass
            op_toks = self._take_merged(count)
            right = self.binary(level + 1)
            left = Node("binary", [left, *op_toks, right],
                        left=left, op=op_text, right=right)
        return left

    def unary(self):
        tok = self.peek()
        if tok.kind == lx.OP and tok.text in ("+", "-", "!", "~", "++", "--"):
            op = self.advance()
            operand = self.unary()
            return Node("unary", [op, operand], op=tok.text, operand=operand)
        if tok.is_op("("):
            cast = self.try_cast()
            if cast is not None:
                return cast
        return self.postfix()

    def try_cast(self):
        start = self.pos
        lp = self.advance()
        try:
            ctype = self.parse_type()
            rp = self.expect_op(")")
        except ParseError:
            self.pos = start
            return None
        nxt = self.peek()
        primitive = ctype.kind == "prim_type" or (
            ctype.kind == "array_type" and ctype.base.kind == "prim_type")
        ok = False
        if nxt.kind in (lx.IDENT, lx.INT_LIT, lx.FLOAT_LIT, lx.CHAR_LIT,
                        lx.STRING_LIT, lx.BOOL_NULL_LIT):
            ok = True
        elif nxt.is_op("(") or nxt.is_kw("new") or nxt.is_kw("this") or nxt.is_kw("super"):
            ok = True
        elif primitive and nxt.kind == lx.OP and nxt.text in ("-", "+", "~", "!"):
            ok = True
        if not ok:
            self.pos = start
            return None
        operand = self.unary()
        return Node("cast", [lp, ctype, rp, operand], type=ctype, operand=operand)

    def postfix(self):
        expr = self.primary()
        while True:
            tok = self.peek()
            if tok.is_op("."):
                if self.peek(1).kind == lx.IDENT:
                    dot = self.advance()
                    name = self.advance()
                    if self.peek().is_op("("):
                        args, aparts = self.arg_list()
                        expr = Node("call", [expr, dot, name, *aparts],
                                    recv=expr, name_tok=name, args=args)
                    else:
                        expr = Node("field_access", [expr, dot, name],
                                    recv=expr, name_tok=name)
                elif self.peek(1).kind == lx.KEYWORD and self.peek(1).text in (
                        "class", "this", "new", "super"):
                    dot = self.advance()
                    kw = self.advance()
                    if kw.text == "new":
                        inner = self.new_rest(kw, qualifier=expr, dot=dot)
                        expr = inner
                    else:
                        expr = Node("field_access", [expr, dot, kw],
                                    recv=expr, name_tok=kw)
                elif self.peek(1).is_op("<"):
                    # explicit generic method invocation: Receiver.<T>m(...)
                    dot = self.advance()
                    targs = self.type_args()
                    name = self.expect_ident()
                    args, aparts = self.arg_list()
                    expr = Node("call", [expr, dot, targs, name, *aparts],
                                recv=expr, name_tok=name, args=args)
                else:
                    raise ParseError("bad member access")
            elif tok.is_op("["):
                lb = self.advance()
                index = self.expression()
                rb = self.expect_op("]")
                expr = Node("array_access", [expr, lb, index, rb],
                            arr=expr, index=index)
            elif tok.is_op("++") or tok.is_op("--"):
                op = self.advance()
                expr = Node("postfix", [expr, op], operand=expr, op=tok.text)
            elif tok.is_op("::"):
                sep = self.advance()
                if self.peek().is_kw("new"):
                    name = self.advance()
                else:
                    name = self.expect_ident()
                expr = Node("method_ref", [expr, sep, name], recv=expr, name_tok=name)
            else:
                break
        return expr

    def arg_list(self):
        parts = [self.expect_op("(")]
        args = []
        if not self.peek().is_op(")"):
            while True:
                arg = self.expression()
                args.append(arg)
                parts.append(arg)
                if self.peek().is_op(","):
                    parts.append(self.advance())
                else:
                    break
        parts.append(self.expect_op(")"))
        return args, parts

    def primary(self):
        tok = self.peek()
        if tok.kind in (lx.INT_LIT, lx.FLOAT_LIT, lx.CHAR_LIT, lx.STRING_LIT,
                        lx.BOOL_NULL_LIT):
            return Node("literal", [self.advance()], tok=tok)
        if tok.kind == lx.IDENT:
            name = self.advance()
            if self.peek().is_op("("):
                args, aparts = self.arg_list()
                return Node("call", [name, *aparts], recv=None, name_tok=name, args=args)
            return Node("name", [name], tok=name)
        if tok.is_kw("this"):
            kw = self.advance()
            if self.peek().is_op("("):
                args, aparts = self.arg_list()
                return Node("call", [kw, *aparts], recv=None, name_tok=kw, args=args)
            return Node("name", [kw], tok=kw)
        if tok.is_kw("super"):
            kw = self.advance()
            if self.peek().is_op("("):
                args, aparts = self.arg_list()
                return Node("call", [kw, *aparts], recv=None, name_tok=kw, args=args)
            return Node("name", [kw], tok=kw)
        if tok.is_op("("):
            lp = self.advance()
            inner = self.expression()
            rp = self.expect_op(")")
            return Node("paren", [lp, inner, rp], inner=inner)
        if tok.is_kw("new"):
            kw = self.advance()
            return self.new_rest(kw)
        if tok.kind == lx.KEYWORD and tok.text in PRIMITIVES:
            # primitive class literal: int.class
            ptype = self.parse_type()
            if self.peek().is_op(".") and self.peek(1).is_kw("class"):
                dot = self.advance()
                cls = self.advance()
                return Node("field_access", [ptype, dot, cls],
                            recv=ptype, name_tok=cls)
            raise ParseError("unexpected primitive type in expression")
        raise ParseError(f"unexpected token {tok.text!r} in expression")

    def new_rest(self, kw, qualifier=None, dot=None):
        parts = []
        if qualifier is not None:
            parts.extend([qualifier, dot])
        parts.append(kw)
        ntype = self.parse_type()
        parts.append(ntype)
        if self.peek().is_op("["):
            dim_exprs = []
            while self.peek().is_op("["):
                parts.append(self.advance())
                if not self.peek().is_op("]"):
                    e = self.expression()
                    dim_exprs.append(e)
                    parts.append(e)
                parts.append(self.expect_op("]"))
            init = None
            if self.peek().is_op("{"):
                init = self.array_init()
                parts.append(init)
            return Node("new_array", parts, type=ntype, dim_exprs=dim_exprs, init=init)
        if ntype.kind == "array_type":
            init = None
            if self.peek().is_op("{"):
                init = self.array_init()
                parts.append(init)
            return Node("new_array", parts, type=ntype, dim_exprs=[], init=init)
        args, aparts = self.arg_list()
        parts.extend(aparts)
        body = None
        if self.peek().is_op("{"):
            # anonymous class body: consume as raw balanced tokens
            parts.extend(self.balanced("{", "}"))
        return Node("new_object", parts, type=ntype, args=args, body=body)
