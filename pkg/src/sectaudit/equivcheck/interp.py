"""Deterministic interpreter for a Java subset, used to check that a
rewritten program behaves like the original.

Supported: int / long / boolean / String / int[] values, the usual
arithmetic, comparison, logical and bitwise operators with Java's
two's-complement wraparound and truncating division, control flow
(if/while/do/for/for-each/switch/break/continue/return), local variables,
and calls to other methods of the same class plus a few library statics
(Math.abs/max/min, String.equals/length/...).  Anything else traps as
``Unsupported``; division by zero, bad array indexing and runaway loops
trap with their own codes, so differential runs compare trap codes too.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..javasrc import lexer as lx
from ..javasrc import parse
from ..javasrc.lexer import Token
from ..javasrc.tree import Node

INT_MIN, INT_MAX = -2**31, 2**31 - 1
LONG_MIN, LONG_MAX = -2**63, 2**63 - 1

OK = "ok"
DIV_BY_ZERO = "DivByZero"
INDEX_OUT_OF_BOUNDS = "IndexOutOfBounds"
STEP_LIMIT = "StepLimit"
UNSUPPORTED = "Unsupported"


def wrap32(v):
    return (v + 2**31) % 2**32 - 2**31


def wrap64(v):
    return (v + 2**63) % 2**64 - 2**63


class JInt:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = wrap32(v)

    def __repr__(self):
        return f"JInt({self.v})"


class JLong:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = wrap64(v)

    def __repr__(self):
        return f"JLong({self.v})"


class JArray:
    """int[] backed by a Python list of plain ints."""

    __slots__ = ("items",)

    def __init__(self, items):
        self.items = list(items)

    def __repr__(self):
        return f"JArray({self.items})"


class Trap(Exception):
    def __init__(self, code, detail=""):
        super().__init__(detail or code)
        self.code = code


class _Return(Exception):
    def __init__(self, value):
        self.value = value


class _Break(Exception):
    pass


class _Continue(Exception):
    pass


@dataclass(frozen=True)
class ExecResult:
    status: str          # "ok" or a trap code
    value: object = None # observable value (plain python) when status == ok
    steps: int = 0

    @property
    def ok(self):
        return self.status == OK


def observable(value):
    """Strip interpreter wrappers for comparison/reporting."""
    if isinstance(value, (JInt, JLong)):
        return value.v
    if isinstance(value, JArray):
        return list(value.items)
    return value


def run_method(source_or_tree, method_name, args, step_limit=1_000_000):
    """Parse (if needed), find the method, run it with the given argument
    values (plain python ints/bools/strs/lists), and report the outcome."""
    tree = source_or_tree if not isinstance(source_or_tree, str) else parse(source_or_tree)
    interp = Interpreter(tree, step_limit=step_limit)
    try:
        value = interp.call(method_name, [interp.inject(a) for a in args])
    except Trap as t:
        return ExecResult(t.code, None, interp.steps)
    return ExecResult(OK, observable(value), interp.steps)


def _unescape(text):
    """Java string literal (with quotes) to a python str."""
    body = text[1:-1]
    out = []
    i = 0
    while i < len(body):
        c = body[i]
        if c != "\\":
            out.append(c)
            i += 1
            continue
        i += 1
        e = body[i]
        simple = {"n": "\n", "t": "\t", "r": "\r", "b": "\b", "f": "\f",
                  "'": "'", '"': '"', "\\": "\\", "0": "\0"}
        if e in simple:
            out.append(simple[e])
            i += 1
        elif e == "u":
            out.append(chr(int(body[i + 1:i + 5], 16)))
            i += 5
        else:
            raise Trap(UNSUPPORTED, f"escape \\{e}")
    return "".join(out)


def _jstr(value):
    """Java's string conversion for the + operator."""
    if isinstance(value, (JInt, JLong)):
        return str(value.v)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return value
    if value is None:
        return "null"
    raise Trap(UNSUPPORTED, "string conversion")


class Interpreter:
    def __init__(self, tree, step_limit=1_000_000):
        self.step_limit = step_limit
        self.steps = 0
        self.methods = {}
        for node in tree.root.walk():
            if node.kind == "method" and not node.is_ctor and node.body is not None:
                self.methods.setdefault(node.name_tok.text, node)

    # ---- entry ----------------------------------------------------------

    def inject(self, value):
        """Python test value to interpreter value (ints become JInt)."""
        if isinstance(value, bool):
            return value
        if isinstance(value, int):
            if INT_MIN <= value <= INT_MAX:
                return JInt(value)
            return JLong(value)
        if isinstance(value, str) or value is None:
            return value
        if isinstance(value, list):
            return JArray(wrap32(v) for v in value)
        raise Trap(UNSUPPORTED, f"argument {value!r}")

    def call(self, name, arg_values):
        method = self.methods.get(name)
        if method is None:
            raise Trap(UNSUPPORTED, f"method {name}")
        if len(arg_values) != len(method.params):
            raise Trap(UNSUPPORTED, "arity")
        env = [dict(zip((p.name_tok.text for p in method.params), arg_values))]
        try:
            self.exec_block(method.body, env)
        except _Return as r:
            return r.value
        return None

    # ---- bookkeeping ----------------------------------------------------

    def tick(self):
        self.steps += 1
        if self.steps > self.step_limit:
            raise Trap(STEP_LIMIT)

    @staticmethod
    def lookup(env, name):
        for scope in reversed(env):
            if name in scope:
                return scope
        return None

    # ---- statements -----------------------------------------------------

    def exec_block(self, block, env):
        env.append({})
        try:
            for stmt in block.stmts:
                self.exec_stmt(stmt, env)
        finally:
            env.pop()

    def exec_stmt(self, stmt, env):
        self.tick()
        kind = stmt.kind
        if kind == "block":
            self.exec_block(stmt, env)
        elif kind == "empty":
            pass
        elif kind == "expr_stmt":
            self.eval(stmt.expr, env)
        elif kind == "local_var":
            self.exec_local_var(stmt, env)
        elif kind == "if":
            if self.truthy(stmt.cond, env):
                self.exec_stmt(stmt.then, env)
            elif stmt.else_ is not None:
                self.exec_stmt(stmt.else_, env)
        elif kind == "while":
            while self.truthy(stmt.cond, env):
                self.tick()
                try:
                    self.exec_stmt(stmt.body, env)
                except _Break:
                    break
                except _Continue:
                    continue
        elif kind == "do":
            while True:
                self.tick()
                try:
                    self.exec_stmt(stmt.body, env)
                except _Break:
                    break
                except _Continue:
                    pass
                if not self.truthy(stmt.cond, env):
                    break
        elif kind == "for":
            self.exec_for(stmt, env)
        elif kind == "foreach":
            self.exec_foreach(stmt, env)
        elif kind == "switch":
            self.exec_switch(stmt, env)
        elif kind == "return":
            raise _Return(None if stmt.expr is None
                          else self.eval(stmt.expr, env))
        elif kind == "break":
            if stmt.label is not None:
                raise Trap(UNSUPPORTED, "labeled break")
            raise _Break()
        elif kind == "continue":
            if stmt.label is not None:
                raise Trap(UNSUPPORTED, "labeled continue")
            raise _Continue()
        else:
            raise Trap(UNSUPPORTED, f"statement {kind}")

    def exec_local_var(self, stmt, env):
        for decl in stmt.declarators:
            value = None
            if decl.init is not None:
                value = self.eval_init(decl.init, env)
                value = self.coerce_to_decl(stmt.type, decl, value)
            name = decl.name_tok.text
            env[-1][name] = value

    def eval_init(self, init, env):
        if init.kind == "array_init":
            vals = []
            for item in init.items:
                v = self.eval_init(item, env)
                if not isinstance(v, JInt):
                    raise Trap(UNSUPPORTED, "array initializer element")
                vals.append(v.v)
            return JArray(vals)
        return self.eval(init, env)

    def coerce_to_decl(self, vtype, decl, value):
        """Widen int literals/values to long for 'long x = ...'."""
        if vtype.kind == "prim_type" and not decl.dims:
            if vtype.name == "long" and isinstance(value, JInt):
                return JLong(value.v)
            if vtype.name == "int" and isinstance(value, JLong):
                raise Trap(UNSUPPORTED, "narrowing initializer")
        return value

    def exec_for(self, stmt, env):
        env.append({})
        try:
            init = stmt.init
            if init is not None:
                if init.kind == "local_var":
                    self.exec_local_var(init, env)
                else:
                    for e in init.exprs:
                        self.eval(e, env)
            while stmt.cond is None or self.truthy(stmt.cond, env):
                self.tick()
                try:
                    self.exec_stmt(stmt.body, env)
                except _Break:
                    break
                except _Continue:
                    pass
                for e in stmt.update:
                    self.eval(e, env)
        finally:
            env.pop()

    def exec_foreach(self, stmt, env):
        arr = self.eval(stmt.iterable, env)
        if not isinstance(arr, JArray):
            raise Trap(UNSUPPORTED, "for-each over non-array")
        name = stmt.var.name_tok.text
        for item in list(arr.items):
            self.tick()
            env.append({name: JInt(item)})
            try:
                self.exec_stmt(stmt.body, env)
            except _Break:
                env.pop()
                break
            except _Continue:
                env.pop()
                continue
            env.pop()

    def exec_switch(self, stmt, env):
        scrutinee = self.eval(stmt.scrutinee, env)
        if isinstance(scrutinee, (JInt, JLong)):
            key = scrutinee.v
        elif isinstance(scrutinee, str):
            key = scrutinee
        else:
            raise Trap(UNSUPPORTED, "switch scrutinee")
        match = None
        default = None
        for gi, group in enumerate(stmt.groups):
            for label in group.labels:
                if label.expr is None:
                    if default is None:
                        default = gi
                    continue
                lv = self.eval(label.expr, env)
                lk = lv.v if isinstance(lv, (JInt, JLong)) else lv
                if match is None and lk == key:
                    match = gi
            if match is not None:
                break
        start = match if match is not None else default
        if start is None:
            return
        env.append({})
        try:
            for group in stmt.groups[start:]:
                for s in group.stmts:
                    self.exec_stmt(s, env)
        except _Break:
            pass
        finally:
            env.pop()

    # ---- expressions ----------------------------------------------------

    def truthy(self, expr, env):
        v = self.eval(expr, env)
        if not isinstance(v, bool):
            raise Trap(UNSUPPORTED, "non-boolean condition")
        return v

    def eval(self, expr, env):
        self.tick()
        kind = expr.kind
        handler = getattr(self, f"_eval_{kind}", None)
        if handler is None:
            raise Trap(UNSUPPORTED, f"expression {kind}")
        return handler(expr, env)

    def _eval_paren(self, expr, env):
        return self.eval(expr.inner, env)

    def _eval_literal(self, expr, env):
        tok = expr.tok
        if tok.kind == lx.INT_LIT:
            text = tok.text
            is_long = text[-1] in "lL"
            if is_long:
                text = text[:-1]
            text = text.replace("_", "")
            if text.lower().startswith("0x"):
                v = int(text, 16)
            elif text.lower().startswith("0b"):
                v = int(text, 2)
            elif len(text) > 1 and text[0] == "0":
                v = int(text, 8)
            else:
                v = int(text)
            return JLong(v) if is_long else JInt(v)
        if tok.kind == lx.STRING_LIT:
            return _unescape(tok.text)
        if tok.kind == lx.BOOL_NULL_LIT:
            if tok.text == "true":
                return True
            if tok.text == "false":
                return False
            return None
        raise Trap(UNSUPPORTED, f"literal {tok.text!r}")

    def _eval_name(self, expr, env):
        name = expr.tok.text
        scope = self.lookup(env, name)
        if scope is None:
            raise Trap(UNSUPPORTED, f"unbound name {name}")
        value = scope[name]
        return value

    def _eval_field_access(self, expr, env):
        recv = expr.recv
        fname = expr.name_tok.text
        if isinstance(recv, Node) and recv.kind == "name":
            owner = recv.tok.text
            if self.lookup(env, owner) is None:
                consts = {
                    ("Integer", "MAX_VALUE"): JInt(INT_MAX),
                    ("Integer", "MIN_VALUE"): JInt(INT_MIN),
                    ("Long", "MAX_VALUE"): JLong(LONG_MAX),
                    ("Long", "MIN_VALUE"): JLong(LONG_MIN),
                }
                if (owner, fname) in consts:
                    return consts[(owner, fname)]
                raise Trap(UNSUPPORTED, f"field {owner}.{fname}")
        value = self.eval(recv, env)
        if isinstance(value, JArray) and fname == "length":
            return JInt(len(value.items))
        if isinstance(value, str) and fname == "length":
            raise Trap(UNSUPPORTED, "String.length is a method")
        raise Trap(UNSUPPORTED, f"field {fname}")

    def _eval_array_access(self, expr, env):
        arr = self.eval(expr.arr, env)
        idx = self.eval(expr.index, env)
        return JInt(self._array_get(arr, idx))

    def _array_get(self, arr, idx):
        if not isinstance(arr, JArray) or not isinstance(idx, JInt):
            raise Trap(UNSUPPORTED, "array access")
        i = idx.v
        if i < 0 or i >= len(arr.items):
            raise Trap(INDEX_OUT_OF_BOUNDS, str(i))
        return arr.items[i]

    def _eval_unary(self, expr, env):
        op = expr.op
        if op in ("++", "--"):
            return self._incdec(expr.operand, env, op, prefix=True)
        v = self.eval(expr.operand, env)
        if op == "!":
            if not isinstance(v, bool):
                raise Trap(UNSUPPORTED, "! on non-boolean")
            return not v
        if isinstance(v, JInt):
            if op == "-":
                return JInt(-v.v)
            if op == "+":
                return v
            if op == "~":
                return JInt(~v.v)
        if isinstance(v, JLong):
            if op == "-":
                return JLong(-v.v)
            if op == "+":
                return v
            if op == "~":
                return JLong(~v.v)
        raise Trap(UNSUPPORTED, f"unary {op}")

    def _eval_postfix(self, expr, env):
        return self._incdec(expr.operand, env, expr.op, prefix=False)

    def _incdec(self, target, env, op, prefix):
        delta = 1 if op == "++" else -1
        get, put = self._lvalue(target, env)
        old = get()
        if isinstance(old, JInt):
            new = JInt(old.v + delta)
        elif isinstance(old, JLong):
            new = JLong(old.v + delta)
        else:
            raise Trap(UNSUPPORTED, f"{op} on non-numeric")
        put(new)
        return new if prefix else old

    def _lvalue(self, target, env):
        if target.kind == "name":
            name = target.tok.text
            scope = self.lookup(env, name)
            if scope is None:
                raise Trap(UNSUPPORTED, f"unbound name {name}")
            return (lambda: scope[name]), (lambda v: scope.__setitem__(name, v))
        if target.kind == "array_access":
            arr = self.eval(target.arr, env)
            idx = self.eval(target.index, env)
            self._array_get(arr, idx)  # bounds check now, Java order
            i = idx.v

            def put(v):
                if isinstance(v, JLong):
                    raise Trap(UNSUPPORTED, "long into int[]")
                if not isinstance(v, JInt):
                    raise Trap(UNSUPPORTED, "array store")
                arr.items[i] = v.v
            return (lambda: JInt(arr.items[i])), put
        if target.kind == "paren":
            return self._lvalue(target.inner, env)
        raise Trap(UNSUPPORTED, f"assignment target {target.kind}")

    def _eval_assign(self, expr, env):
        get, put = self._lvalue(expr.target, env)
        if expr.op == "=":
            value = self.eval(expr.value, env)
        else:
            binop = expr.op[:-1]
            cur = get()
            rhs = self.eval(expr.value, env)
            value = self._binary_value(binop, cur, rhs)
            # compound assignment casts back to the target's type
            if isinstance(cur, JInt) and isinstance(value, JLong):
                value = JInt(value.v)
        put(value)
        return value

    def _eval_binary(self, expr, env):
        op = expr.op
        if op == "&&":
            return self.truthy(expr.left, env) and self.truthy(expr.right, env)
        if op == "||":
            return self.truthy(expr.left, env) or self.truthy(expr.right, env)
        left = self.eval(expr.left, env)
        right = self.eval(expr.right, env)
        return self._binary_value(op, left, right)

    def _binary_value(self, op, left, right):
        if op == "+" and (isinstance(left, str) or isinstance(right, str)):
            return _jstr(left) + _jstr(right)
        if op in ("==", "!="):
            eq = self._ref_eq(left, right)
            return eq if op == "==" else not eq
        if isinstance(left, bool) and isinstance(right, bool):
            if op == "&":
                return left and right
            if op == "|":
                return left or right
            if op == "^":
                return left != right
            raise Trap(UNSUPPORTED, f"boolean {op}")
        if isinstance(left, (JInt, JLong)) and isinstance(right, (JInt, JLong)):
            return self._numeric(op, left, right)
        raise Trap(UNSUPPORTED, f"binary {op}")

    def _ref_eq(self, left, right):
        if isinstance(left, (JInt, JLong)) and isinstance(right, (JInt, JLong)):
            return left.v == right.v
        if isinstance(left, bool) and isinstance(right, bool):
            return left == right
        if left is None or right is None:
            return left is None and right is None
        # String == compares references; snippets must not rely on it
        raise Trap(UNSUPPORTED, "reference ==")

    def _numeric(self, op, left, right):
        wide = isinstance(left, JLong) or isinstance(right, JLong)
        a, b = left.v, right.v
        if op in ("<", "<=", ">", ">="):
            return {"<": a < b, "<=": a <= b, ">": a > b, ">=": a >= b}[op]
        if op in ("<<", ">>", ">>>"):
            # shift width follows the LEFT operand in Java
            if isinstance(left, JLong):
                n = b & 63
                if op == "<<":
                    return JLong(a << n)
                if op == ">>":
                    return JLong(a >> n)
                return JLong((a & 2**64 - 1) >> n)
            n = b & 31
            if op == "<<":
                return JInt(a << n)
            if op == ">>":
                return JInt(a >> n)
            return JInt((a & 2**32 - 1) >> n)
        wrap = JLong if wide else JInt
        if op == "+":
            return wrap(a + b)
        if op == "-":
            return wrap(a - b)
        if op == "*":
            return wrap(a * b)
        if op in ("/", "%"):
            if b == 0:
                raise Trap(DIV_BY_ZERO)
            q = abs(a) // abs(b)
            if (a < 0) != (b < 0):
                q = -q
            if op == "/":
                return wrap(q)
            return wrap(a - q * b)
        if op == "&":
            return wrap(a & b)
        if op == "|":
            return wrap(a | b)
        if op == "^":
            return wrap(a ^ b)
        raise Trap(UNSUPPORTED, f"numeric {op}")

    def _eval_ternary(self, expr, env):
        if self.truthy(expr.cond, env):
            return self.eval(expr.then, env)
        return self.eval(expr.else_, env)

    def _eval_cast(self, expr, env):
        v = self.eval(expr.operand, env)
        t = expr.type
        if t.kind == "prim_type" and isinstance(v, (JInt, JLong)):
            if t.name == "int":
                return JInt(v.v)
            if t.name == "long":
                return JLong(v.v)
        raise Trap(UNSUPPORTED, "cast")

    def _eval_new_array(self, expr, env):
        if expr.init is not None:
            return self.eval_init(expr.init, env)
        if len(expr.dim_exprs) != 1:
            raise Trap(UNSUPPORTED, "multi-dim array")
        n = self.eval(expr.dim_exprs[0], env)
        if not isinstance(n, JInt):
            raise Trap(UNSUPPORTED, "array size")
        if n.v < 0:
            raise Trap(INDEX_OUT_OF_BOUNDS, "negative array size")
        return JArray([0] * n.v)

    def _eval_call(self, expr, env):
        name = expr.name_tok.text
        recv = expr.recv
        if recv is None:
            args = [self.eval(a, env) for a in expr.args]
            return self.call(name, args)
        if isinstance(recv, Node) and recv.kind == "name":
            owner = recv.tok.text
            if self.lookup(env, owner) is None:
                if owner == "Math":
                    args = [self.eval(a, env) for a in expr.args]
                    return self._math(name, args)
                raise Trap(UNSUPPORTED, f"call {owner}.{name}")
        value = self.eval(recv, env)
        args = [self.eval(a, env) for a in expr.args]
        return self._instance_call(value, name, args)

    def _math(self, name, args):
        nums = []
        wide = False
        for a in args:
            if isinstance(a, JLong):
                wide = True
            elif not isinstance(a, JInt):
                raise Trap(UNSUPPORTED, f"Math.{name} argument")
            nums.append(a.v)
        wrap = JLong if wide else JInt
        if name == "abs" and len(nums) == 1:
            return wrap(abs(nums[0]))
        if name == "max" and len(nums) == 2:
            return wrap(max(nums))
        if name == "min" and len(nums) == 2:
            return wrap(min(nums))
        raise Trap(UNSUPPORTED, f"Math.{name}")

    def _instance_call(self, value, name, args):
        if value is None:
            raise Trap(UNSUPPORTED, "call on null")
        if isinstance(value, str):
            return self._string_call(value, name, args)
        raise Trap(UNSUPPORTED, f"method {name} on {type(value).__name__}")

    def _string_call(self, s, name, args):
        def str_arg(i):
            a = args[i]
            if not isinstance(a, str):
                raise Trap(UNSUPPORTED, f"String.{name} argument")
            return a

        def int_arg(i):
            a = args[i]
            if not isinstance(a, JInt):
                raise Trap(UNSUPPORTED, f"String.{name} argument")
            return a.v

        if name == "equals" and len(args) == 1:
            return isinstance(args[0], str) and s == args[0]
        if name == "length" and not args:
            return JInt(len(s))
        if name == "isEmpty" and not args:
            return s == ""
        if name == "startsWith" and len(args) == 1:
            return s.startswith(str_arg(0))
        if name == "endsWith" and len(args) == 1:
            return s.endswith(str_arg(0))
        if name == "contains" and len(args) == 1:
            return str_arg(0) in s
        if name == "indexOf" and len(args) == 1:
            return JInt(s.find(str_arg(0)))
        if name == "concat" and len(args) == 1:
            return s + str_arg(0)
        if name == "compareTo" and len(args) == 1:
            other = str_arg(0)
            # Java compares char by char, then by length
            for a, b in zip(s, other):
                if a != b:
                    return JInt(ord(a) - ord(b))
            return JInt(len(s) - len(other))
        if name == "substring":
            if len(args) == 1:
                i = int_arg(0)
                if i < 0 or i > len(s):
                    raise Trap(INDEX_OUT_OF_BOUNDS, str(i))
                return s[i:]
            if len(args) == 2:
                i, j = int_arg(0), int_arg(1)
                if i < 0 or j > len(s) or i > j:
                    raise Trap(INDEX_OUT_OF_BOUNDS, f"{i}:{j}")
                return s[i:j]
        raise Trap(UNSUPPORTED, f"String.{name}")
