"""Rules 2-23: statement- and expression-level rewrites.

Each rule is deliberately conservative: a site only qualifies when the
rewrite is equivalence-preserving without whole-program reasoning.  All
sites are rewritten in a single recursive render pass (see base.py), so a
replacement built from ``render(child)`` picks up rewrites of nested sites
automatically.
"""

from __future__ import annotations

from ..javasrc import lexer as lx
from ..javasrc.lexer import Token
from ..javasrc.tree import Node
from .base import (
    LOOP_KINDS,
    Rule,
    block_stmts,
    contains_kind,
    expr_idents,
    expr_text,
    leading,
    sans_lead,
    side_effect_free,
)

_ARITH_OPS = frozenset(["+", "-", "*", "/", "%"])

# operand kinds that swap safely around a comparison without re-parenting
_SWAP_SAFE_KINDS = frozenset(["name", "literal", "paren", "field_access",
                              "array_access"])


def _braced(stmt, render):
    """Branch/body as a braced block."""
    if stmt.kind == "block":
        return " " + sans_lead(stmt, render)
    return " { " + sans_lead(stmt, render).strip() + " }"


def _body_inner(body, render):
    """Statements inside a loop/branch body, rendered without braces."""
    if body.kind == "block":
        return "".join(render(s) for s in body.stmts)
    return render(body)


def _has_loose_jump(node, kinds):
    """A break/continue that would bind outside this statement's body.
    ``kinds`` is {'continue'}, {'break'} or both; nested loops capture both,
    a nested switch captures break only."""
    found = [False]

    def walk(item, in_loop, in_switch):
        if isinstance(item, Token):
            return
        if item.kind in LOOP_KINDS:
            for p in item.parts:
                walk(p, True, in_switch)
            return
        if item.kind == "switch":
            for p in item.parts:
                walk(p, in_loop, True)
            return
        if item.kind in ("continue", "break"):
            if item.kind in kinds:
                if item.fields.get("label") is not None:
                    found[0] = True
                elif item.kind == "continue" and not in_loop:
                    found[0] = True
                elif item.kind == "break" and not (in_loop or in_switch):
                    found[0] = True
            return
        for p in item.parts:
            walk(p, in_loop, in_switch)

    walk(node, False, False)
    return found[0]


def _decl_names(local_var):
    return [d.name_tok.text for d in local_var.declarators]


class For2While(Rule):
    id = 2
    name = "For2While"
    level = "Statement"

    def _is_site(self, node, ctx):
        if node.kind != "for":
            return False
        if _has_loose_jump(node.body, {"continue"}):
            return False
        init = node.init
        if init is not None and init.kind == "local_var":
            parent = ctx.parent_of(node)
            holder = node
            while parent is not None and parent.kind not in ("block", "switch_group"):
                holder = parent
                parent = ctx.parent_of(parent)
            if parent is None:
                return False
            stmts = parent.stmts
            try:
                idx = stmts.index(holder)
            except ValueError:
                return False
            names = set(_decl_names(init))
            for later in stmts[idx + 1:]:
                for tok in later.tokens():
                    if tok.kind == lx.IDENT and tok.text in names:
                        return False
        return True

    def try_rewrite(self, node, ctx, render):
        if not self._is_site(node, ctx):
            return None
        ctx.sites += 1
        indent = ctx.indent_of(node)
        lines = []
        init = node.init
        if init is not None:
            if init.kind == "local_var":
                lines.append(expr_text(init, render) + ";")
            else:  # expr_list
                for e in init.exprs:
                    lines.append(expr_text(e, render) + ";")
        cond = expr_text(node.cond, render) if node.cond is not None else "true"
        body = _body_inner(node.body, render)
        updates = "".join(
            f"\n{indent}    {expr_text(e, render)};" for e in node.update)
        loop = f"while ({cond}) {{{body}{updates}\n{indent}}}"
        lines.append(loop)
        sep = f"\n{indent}"
        return leading(node) + sep.join(lines)


class While2For(Rule):
    id = 3
    name = "While2For"
    level = "Statement"

    def try_rewrite(self, node, ctx, render):
        if node.kind != "while":
            return None
        ctx.sites += 1
        cond = expr_text(node.cond, render)
        return leading(node) + f"for (; {cond}; ){render(node.body)}"


class Do2While(Rule):
    id = 4
    name = "Do2While"
    level = "Statement"

    def try_rewrite(self, node, ctx, render):
        if node.kind != "do":
            return None
        if contains_kind(node.body, {"local_var"}):
            return None
        if _has_loose_jump(node.body, {"break", "continue"}):
            return None
        ctx.sites += 1
        indent = ctx.indent_of(node)
        cond = expr_text(node.cond, render)
        body = render(node.body)
        if node.body.kind == "block":
            first = body.lstrip()
            second = " " + body.lstrip()
        else:
            first = body.strip()
            second = " { " + body.strip() + " }"
        return leading(node) + f"{first}\n{indent}while ({cond}){second}"


class IfElseIf2IfElse(Rule):
    id = 5
    name = "IfElseIf2IfElse"
    level = "Statement"

    def try_rewrite(self, node, ctx, render):
        if node.kind != "if" or node.else_ is None or node.else_.kind != "if":
            return None
        ctx.sites += 1
        cond = expr_text(node.cond, render)
        inner = render(node.else_).strip()
        return (leading(node) + f"if ({cond}){render(node.then)}"
                + f" else {{ {inner} }}")


class IfElse2IfElseIf(Rule):
    id = 6
    name = "IfElse2IfElseIf"
    level = "Statement"

    def try_rewrite(self, node, ctx, render):
        if node.kind != "if" or node.else_ is None:
            return None
        els = node.else_
        if els.kind != "block" or len(els.stmts) != 1 or els.stmts[0].kind != "if":
            return None
        ctx.sites += 1
        cond = expr_text(node.cond, render)
        inner = render(els.stmts[0]).strip()
        return leading(node) + f"if ({cond}){render(node.then)} else {inner}"


class Switch2If(Rule):
    id = 7
    name = "Switch2If"
    level = "Statement"

    def _is_site(self, node):
        if node.kind != "switch":
            return False
        s = node.scrutinee
        if s.kind not in ("name", "literal"):
            return False
        if not node.groups:
            return False
        default_count = 0
        for group in node.groups:
            for label in group.labels:
                if label.expr is None:
                    default_count += 1
                elif not side_effect_free(label.expr):
                    return False
            if not group.stmts:
                return False  # fall-through to next group
            last = group.stmts[-1]
            if not (last.kind == "return"
                    or (last.kind == "break" and last.label is None)):
                return False
            for stmt in group.stmts[:-1]:
                if _has_loose_jump(stmt, {"break"}):
                    return False
                if stmt.kind == "break":
                    return False
            if contains_kind(Node("x", list(group.stmts)), {"local_var"}):
                return False  # case-local declarations share the switch scope
        return default_count <= 1

    def try_rewrite(self, node, ctx, render):
        if not self._is_site(node):
            return None
        ctx.sites += 1
        indent = ctx.indent_of(node)
        s_text = expr_text(node.scrutinee, render)
        string_switch = all(
            label.expr is not None
            and label.expr.kind == "literal"
            and label.expr.tok.kind == lx.STRING_LIT
            for group in node.groups for label in group.labels
            if label.expr is not None
        ) and any(label.expr is not None
                  for g in node.groups for label in g.labels)

        def compare(expr):
            lit = expr_text(expr, render)
            if string_switch:
                return f"{s_text}.equals({lit})"
            return f"{s_text} == {lit}"

        def group_body(group):
            stmts = group.stmts
            if stmts and stmts[-1].kind == "break":
                stmts = stmts[:-1]
            return "".join(render(st) for st in stmts)

        branches = []
        default_group = None
        for group in node.groups:
            exprs = [lab.expr for lab in group.labels if lab.expr is not None]
            if len(exprs) < len(group.labels):
                default_group = group
                if not exprs:
                    continue
            cond = " || ".join(compare(e) for e in exprs)
            branches.append((cond, group))
        out = []
        for i, (cond, group) in enumerate(branches):
            kw = "if" if i == 0 else "} else if"
            out.append(f"{kw} ({cond}) {{{group_body(group)}\n{indent}")
        if default_group is not None:
            if branches:
                out.append(f"}} else {{{group_body(default_group)}\n{indent}")
            else:
                out.append(f"{{{group_body(default_group)}\n{indent}")
        out.append("}")
        return leading(node) + "".join(out)


class Unary2Add(Rule):
    id = 8
    name = "Unary2Add"
    level = "Expression"

    def try_rewrite(self, node, ctx, render):
        if node.kind != "expr_stmt":
            return None
        expr = node.expr
        if expr.kind not in ("unary", "postfix") or expr.op not in ("++", "--"):
            return None
        ctx.sites += 1
        target = expr_text(expr.operand, render)
        op = "+" if expr.op == "++" else "-"
        return leading(node) + f"{target} {op}= 1;"


class Add2Equal(Rule):
    id = 9
    name = "Add2Equal"
    level = "Expression"

    @staticmethod
    def _safe_target(target):
        if target.kind == "name":
            return True
        if target.kind == "array_access":
            return (target.arr.kind == "name"
                    and side_effect_free(target.index))
        if target.kind == "field_access":
            return target.recv.kind == "name"
        return False

    def try_rewrite(self, node, ctx, render):
        if node.kind != "expr_stmt":
            return None
        expr = node.expr
        if expr.kind != "assign" or expr.op != "+=":
            return None
        if not self._safe_target(expr.target):
            return None
        ctx.sites += 1
        t = expr_text(expr.target, render)
        v = expr_text(expr.value, render)
        return leading(node) + f"{t} = {t} + ({v});"


class DivideVarDecl(Rule):
    id = 10
    name = "DivideVarDecl"
    level = "Expression"

    def try_rewrite(self, node, ctx, render):
        if node.kind != "local_var" or len(node.declarators) < 2:
            return None
        parent = ctx.parent_of(node)
        if parent is None or parent.kind not in ("block", "switch_group"):
            return None
        if any(not isinstance(m, Token) for m in node.mods):
            return None  # annotated locals kept as-is
        ctx.sites += 1
        indent = ctx.indent_of(node)
        mods = "".join(m.text + " " for m in node.mods
                       if isinstance(m, Token))
        vtype = expr_text(node.type, render)
        lines = [f"{mods}{vtype} {expr_text(d, render)};"
                 for d in node.declarators]
        return leading(node) + f"\n{indent}".join(lines)


class MergeVarDecl(Rule):
    id = 11
    name = "MergeVarDecl"
    level = "Expression"

    @staticmethod
    def _decl_key(stmt):
        if stmt.kind != "local_var":
            return None
        if any(not isinstance(m, Token) for m in stmt.mods):
            return None  # annotated locals kept as-is
        toks = [m.text for m in stmt.mods]
        toks.extend(t.text for t in stmt.type.tokens())
        return " ".join(toks)

    def _runs(self, stmts):
        runs = []
        i = 0
        while i < len(stmts):
            key = self._decl_key(stmts[i])
            if key is None:
                i += 1
                continue
            j = i + 1
            while j < len(stmts) and self._decl_key(stmts[j]) == key:
                j += 1
            if j - i >= 2:
                runs.append((i, j))
            i = j
        return runs

    def try_rewrite(self, node, ctx, render):
        if node.kind not in ("block", "switch_group"):
            return None
        stmts = node.stmts
        runs = self._runs(stmts)
        if not runs:
            return None
        ctx.sites += len(runs)
        run_start = {i: j for i, j in runs}
        in_run = {k for i, j in runs for k in range(i, j)}
        out = []
        for part in node.parts:
            if isinstance(part, Token):
                out.append(part.trivia + part.text)
                continue
            if part.kind == "case_label" or part not in stmts:
                out.append(render(part))
                continue
            idx = stmts.index(part)
            if idx in run_start:
                j = run_start[idx]
                first = stmts[idx]
                mods = "".join(m.text + " " for m in first.mods
                               if isinstance(m, Token))
                vtype = expr_text(first.type, render)
                decls = ", ".join(
                    expr_text(d, render)
                    for s in stmts[idx:j] for d in s.declarators)
                out.append(leading(first) + f"{mods}{vtype} {decls};")
            elif idx in in_run:
                continue
            else:
                out.append(render(part))
        return "".join(out)


class SwapStatement(Rule):
    id = 12
    name = "SwapStatement"
    level = "Statement"

    @staticmethod
    def _rw_sets(stmt):
        """(writes, reads) or None if the statement is not swap-safe."""
        if stmt.kind == "local_var":
            writes = set(_decl_names(stmt))
            reads = set()
            for d in stmt.declarators:
                if d.init is not None:
                    if not side_effect_free(d.init):
                        return None
                    expr_idents(d.init, reads)
            return writes, reads
        if stmt.kind == "expr_stmt" and stmt.expr.kind == "assign":
            a = stmt.expr
            if a.op != "=" or a.target.kind != "name":
                return None
            if not side_effect_free(a.value):
                return None
            return {a.target.tok.text}, expr_idents(a.value)
        return None

    def _pairs(self, stmts):
        pairs = []
        i = 0
        while i + 1 < len(stmts):
            rw1 = self._rw_sets(stmts[i])
            rw2 = self._rw_sets(stmts[i + 1])
            if rw1 is not None and rw2 is not None:
                w1, r1 = rw1
                w2, r2 = rw2
                if not (w1 & (r2 | w2)) and not (w2 & (r1 | w1)):
                    pairs.append(i)
                    i += 2
                    continue
            i += 1
        return pairs

    def try_rewrite(self, node, ctx, render):
        if node.kind not in ("block", "switch_group"):
            return None
        stmts = node.stmts
        pairs = self._pairs(stmts)
        if not pairs:
            return None
        ctx.sites += len(pairs)
        first_of_pair = set(pairs)
        second_of_pair = {i + 1 for i in pairs}
        out = []
        for part in node.parts:
            if isinstance(part, Token):
                out.append(part.trivia + part.text)
                continue
            if part not in stmts:
                out.append(render(part))
                continue
            idx = stmts.index(part)
            if idx in first_of_pair:
                nxt = stmts[idx + 1]
                out.append(leading(part) + sans_lead(nxt, render))
            elif idx in second_of_pair:
                prev = stmts[idx - 1]
                out.append(leading(part) + sans_lead(prev, render))
            else:
                out.append(render(part))
        return "".join(out)


class ModifyConstant(Rule):
    id = 13
    name = "ModifyConstant"
    level = "Expression"

    _INT_EXTREMES = {"2147483647", "2147483648"}
    _LONG_EXTREMES = {"9223372036854775807", "9223372036854775808"}

    def _is_site(self, node, ctx):
        if node.kind != "literal" or node.tok.kind != lx.INT_LIT:
            return False
        text = node.tok.text
        digits = text.rstrip("lL")
        if not digits.isdigit():
            return False  # hex/binary/underscored left alone
        if len(digits) > 1 and digits.startswith("0"):
            return False  # octal
        if text != digits:  # long literal
            if digits in self._LONG_EXTREMES:
                return False
        elif digits in self._INT_EXTREMES:
            return False
        for anc in ctx.ancestors(node):
            if anc.kind in ("case_label", "new_array", "array_type"):
                return False
            if anc.kind in ("block", "method", "class"):
                break
        return True

    def try_rewrite(self, node, ctx, render):
        if not self._is_site(node, ctx):
            return None
        ctx.sites += 1
        text = node.tok.text
        return leading(node) + f"(({text} - 1) + 1)"


class ReverseIf(Rule):
    id = 14
    name = "ReverseIf"
    level = "Statement"

    def try_rewrite(self, node, ctx, render):
        if node.kind != "if" or node.else_ is None:
            return None
        ctx.sites += 1
        cond = expr_text(node.cond, render)
        then_b = _braced(node.then, render)
        else_b = _braced(node.else_, render)
        return leading(node) + f"if (!({cond})){else_b} else{then_b}"


def _single_assign(branch):
    """If the branch is exactly one plain assignment, return the assign node."""
    stmts = block_stmts(branch)
    if len(stmts) != 1:
        return None
    stmt = stmts[0]
    if stmt.kind != "expr_stmt" or stmt.expr.kind != "assign":
        return None
    if stmt.expr.op != "=":
        return None
    return stmt.expr


def _target_key(node):
    return " ".join(t.text for t in node.tokens())


class If2CondExp(Rule):
    id = 15
    name = "If2CondExp"
    level = "Statement"

    def try_rewrite(self, node, ctx, render):
        if node.kind != "if" or node.else_ is None or node.else_.kind == "if":
            return None
        a1 = _single_assign(node.then)
        a2 = _single_assign(node.else_)
        if a1 is None or a2 is None:
            return None
        if _target_key(a1.target) != _target_key(a2.target):
            return None
        if not side_effect_free(a1.target):
            return None
        ctx.sites += 1
        cond = expr_text(node.cond, render)
        t = expr_text(a1.target, render)
        v1 = expr_text(a1.value, render)
        v2 = expr_text(a2.value, render)
        return leading(node) + f"{t} = ({cond}) ? {v1} : {v2};"


class CondExp2If(Rule):
    id = 16
    name = "ConfExp2If"
    level = "Statement"

    def try_rewrite(self, node, ctx, render):
        if node.kind != "expr_stmt":
            return None
        expr = node.expr
        if expr.kind != "assign" or expr.op != "=" or expr.value.kind != "ternary":
            return None
        if not side_effect_free(expr.target):
            return None
        ctx.sites += 1
        indent = ctx.indent_of(node)
        tern = expr.value
        t = expr_text(expr.target, render)
        cond = expr_text(tern.cond, render)
        v1 = expr_text(tern.then, render)
        v2 = expr_text(tern.else_, render)
        return (leading(node)
                + f"if ({cond}) {{\n{indent}    {t} = {v1};\n{indent}}}"
                + f" else {{\n{indent}    {t} = {v2};\n{indent}}}")


class InfixDividing(Rule):
    id = 17
    name = "InfixDividing"
    level = "Expression"

    @staticmethod
    def _decl_type_ok(node):
        t = node.type
        if t.kind == "prim_type":
            return True
        if t.kind == "class_type":
            toks = t.tokens()
            return len(toks) == 1 and toks[0].text == "String"
        return False

    def _spine(self, expr):
        """Left-assoc chain [e0, op1, e1, op2, e2, ...] of arithmetic ops."""
        if expr.kind != "binary" or expr.op not in _ARITH_OPS:
            return None
        chain = [expr.right]
        ops = [expr.op]
        cur = expr.left
        while cur.kind == "binary" and cur.op in _ARITH_OPS:
            chain.append(cur.right)
            ops.append(cur.op)
            cur = cur.left
        if len(ops) < 2:
            return None
        chain.append(cur)
        return list(reversed(chain)), list(reversed(ops))

    def try_rewrite(self, node, ctx, render):
        if node.kind != "local_var" or len(node.declarators) != 1:
            return None
        parent = ctx.parent_of(node)
        if parent is None or parent.kind not in ("block", "switch_group"):
            return None
        if not self._decl_type_ok(node):
            return None
        if any(not isinstance(m, Token) for m in node.mods):
            return None
        decl = node.declarators[0]
        if decl.init is None or decl.dims:
            return None
        spine = self._spine(decl.init)
        if spine is None:
            return None
        ctx.sites += 1
        operands, ops = spine
        indent = ctx.indent_of(node)
        vtype = expr_text(node.type, render)
        mods = "".join(m.text + " " for m in node.mods if isinstance(m, Token))
        lines = []
        acc = expr_text(operands[0], render)
        for i, op in enumerate(ops):
            rhs = expr_text(operands[i + 1], render)
            if i < len(ops) - 1:
                tmp = ctx.fresh.draw()
                lines.append(f"{vtype} {tmp} = {acc} {op} {rhs};")
                acc = tmp
            else:
                lines.append(
                    f"{mods}{vtype} {decl.name_tok.text} = {acc} {op} {rhs};")
        return leading(node) + f"\n{indent}".join(lines)


class DividePrePostFix(Rule):
    id = 18
    name = "DividePrePostFix"
    level = "Expression"

    @staticmethod
    def _incdec(expr):
        if expr.kind in ("unary", "postfix") and expr.op in ("++", "--"):
            if expr.operand.kind == "name":
                return expr.operand.tok.text, expr.op, expr.kind == "unary"
        return None

    def try_rewrite(self, node, ctx, render):
        if node.kind != "expr_stmt":
            y = self._try_decl(node)
            if y is None:
                return None
            head, x, op, prefix = y
        else:
            expr = node.expr
            if expr.kind != "assign" or expr.op != "=" or expr.target.kind != "name":
                return None
            inc = self._incdec(expr.value)
            if inc is None:
                return None
            x, op, prefix = inc
            yname = expr.target.tok.text
            if yname == x:
                return None
            head = f"{yname} ="
        ctx.sites += 1
        indent = ctx.indent_of(node)
        step = "+" if op == "++" else "-"
        bump = f"{x} = {x} {step} 1;"
        grab = f"{head} {x};"
        if prefix:
            return leading(node) + f"{bump}\n{indent}{grab}"
        return leading(node) + f"{grab}\n{indent}{bump}"

    def _try_decl(self, node):
        if node.kind != "local_var" or len(node.declarators) != 1 or node.mods:
            return None
        decl = node.declarators[0]
        if decl.init is None or decl.dims:
            return None
        inc = self._incdec(decl.init)
        if inc is None:
            return None
        x, op, prefix = inc
        if decl.name_tok.text == x:
            return None
        toks = " ".join(t.text for t in node.type.tokens())
        return f"{toks} {decl.name_tok.text} =", x, op, prefix


class DividingComposedIf(Rule):
    id = 19
    name = "DividingComposedIf"
    level = "Statement"

    def try_rewrite(self, node, ctx, render):
        if node.kind != "if" or node.else_ is not None:
            return None
        cond = node.cond
        if cond.kind != "binary" or cond.op != "&&":
            return None
        ctx.sites += 1
        conjuncts = []
        cur = cond
        while cur.kind == "binary" and cur.op == "&&":
            conjuncts.append(cur.right)
            cur = cur.left
        conjuncts.append(cur)
        conjuncts.reverse()
        body = _braced(node.then, render).lstrip()
        text = f"if ({expr_text(conjuncts[-1], render)}) {body}"
        for c in reversed(conjuncts[:-1]):
            text = f"if ({expr_text(c, render)}) {{ {text} }}"
        return leading(node) + text


class LoopIfContinue2Else(Rule):
    id = 20
    name = "LoopIfContinue2Else"
    level = "Statement"

    @staticmethod
    def _guard(body):
        """First-statement 'if (c) continue;' of a loop body block."""
        if body.kind != "block" or not body.stmts:
            return None
        first = body.stmts[0]
        if first.kind != "if" or first.else_ is not None:
            return None
        then = block_stmts(first.then)
        if len(then) != 1 or then[0].kind != "continue" or then[0].label is not None:
            return None
        return first

    def try_rewrite(self, node, ctx, render):
        if node.kind not in LOOP_KINDS:
            return None
        body = node.fields.get("body")
        if body is None:
            return None
        guard = self._guard(body)
        if guard is None:
            return None
        ctx.sites += 1
        indent = ctx.indent_of(node)
        inner = indent + "    "
        cond = expr_text(guard.cond, render)
        rest = "".join(render(s) for s in body.stmts[1:])
        new_body = f" {{\n{inner}if (!({cond})) {{{rest}\n{inner}}}\n{indent}}}"
        out = []
        for part in node.parts:
            if part is body:
                out.append(new_body)
            elif isinstance(part, Token):
                out.append(part.trivia + part.text)
            else:
                out.append(render(part))
        return "".join(out)


class SwitchEqualExp(Rule):
    id = 21
    name = "SwitchEqualExp"
    level = "Expression"

    _OPS = frozenset(["==", "!="])

    def try_rewrite(self, node, ctx, render):
        if node.kind != "binary" or node.op not in self._OPS:
            return None
        if node.left.kind not in _SWAP_SAFE_KINDS:
            return None
        if node.right.kind not in _SWAP_SAFE_KINDS:
            return None
        if not (side_effect_free(node.left) and side_effect_free(node.right)):
            return None
        ctx.sites += 1
        lhs = expr_text(node.left, render)
        rhs = expr_text(node.right, render)
        return leading(node) + f"{rhs} {node.op} {lhs}"


class SwitchStringEqual(Rule):
    id = 22
    name = "SwitchStringEqual"
    level = "Expression"

    def try_rewrite(self, node, ctx, render):
        if node.kind != "call" or node.recv is None:
            return None
        if node.name_tok.text != "equals" or len(node.args) != 1:
            return None
        arg = node.args[0]
        if not (arg.kind == "literal" and arg.tok.kind == lx.STRING_LIT):
            return None
        recv = node.recv
        if recv.kind == "literal" and recv.tok.kind == lx.STRING_LIT:
            return None  # already literal-receiver form
        ctx.sites += 1
        lit = arg.tok.text
        return leading(node) + f"{lit}.equals({expr_text(recv, render)})"


class SwitchRelation(Rule):
    id = 23
    name = "SwitchRelation"
    level = "Expression"

    _MIRROR = {"<": ">", "<=": ">=", ">": "<", ">=": "<="}

    def try_rewrite(self, node, ctx, render):
        if node.kind != "binary" or node.op not in self._MIRROR:
            return None
        for side in (node.left, node.right):
            if not side_effect_free(side):
                return None
            if side.kind == "binary" and side.op not in _ARITH_OPS:
                return None
            if side.kind in ("instanceof", "ternary"):
                return None
        ctx.sites += 1
        lhs = expr_text(node.left, render)
        rhs = expr_text(node.right, render)
        return leading(node) + f"{rhs} {self._MIRROR[node.op]} {lhs}"
