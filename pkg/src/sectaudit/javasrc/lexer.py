"""Lossless Java lexer.

Every byte of the input survives: whitespace and comments are attached as
leading trivia on the following token (the EOF token collects trailing
trivia), so concatenating ``token.trivia + token.text`` over the stream
reproduces the source exactly.

``>`` is always emitted as a lone token; the parser re-merges adjacent
``>`` / ``=`` tokens into shift and comparison operators where the grammar
calls for them.  This sidesteps the classic ``List<List<String>>`` lexing
ambiguity without lookahead hacks.
"""

from __future__ import annotations

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const
    continue default do double else enum extends final finally float for
    goto if implements import instanceof int interface long native new
    package private protected public return short static strictfp super
    switch synchronized this throw throws transient try void volatile
    while""".split()
)

# Multi-char operators, longest first.  No '>'-composites on purpose.
_OPERATORS = [
    "<<=", "...", "->", "::",
    "==", "!=", "<=", "&&", "||", "++", "--", "+=", "-=", "*=", "/=",
    "&=", "|=", "^=", "%=", "<<",
    "(", ")", "{", "}", "[", "]", ";", ",", ".", "=", "<", ">", "!", "~",
    "?", ":", "+", "-", "*", "/", "&", "|", "^", "%", "@",
]

IDENT = "ident"
KEYWORD = "keyword"
INT_LIT = "int_lit"
FLOAT_LIT = "float_lit"
CHAR_LIT = "char_lit"
STRING_LIT = "string_lit"
BOOL_NULL_LIT = "bool_null_lit"
OP = "op"
EOF = "eof"
ERROR = "error"


class LexError(ValueError):
    pass


class Token:
    __slots__ = ("kind", "text", "trivia", "start", "index")

    def __init__(self, kind, text, trivia="", start=-1, index=-1):
        self.kind = kind
        self.text = text
        self.trivia = trivia
        self.start = start  # offset of text (after trivia); -1 if synthetic
        self.index = index

    @property
    def end(self):
        return self.start + len(self.text)

    def is_op(self, text):
        return self.kind == OP and self.text == text

    def is_kw(self, text):
        return self.kind == KEYWORD and self.text == text

    def with_trivia(self, trivia):
        return Token(self.kind, self.text, trivia, self.start, self.index)

    def __repr__(self):
        return f"Token({self.kind!r}, {self.text!r})"


def synth(kind, text, trivia=""):
    """Make a synthetic token (no source position)."""
    return Token(kind, text, trivia)


def _is_ident_start(ch):
    return ch.isalpha() or ch in "_$"


def _is_ident_part(ch):
    return ch.isalnum() or ch in "_$"


def lex(text):
    """Tokenize Java source.  Returns a list of Tokens ending with EOF.

    Unrecognized characters become ERROR tokens instead of raising, so
    downstream feature extraction always succeeds.  Raises LexError only
    for input that is not text (handled by callers on decode).
    """
    tokens = []
    i = 0
    n = len(text)
    while True:
        triv_start = i
        # whitespace + comments
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif text.startswith("//", i):
                j = text.find("\n", i)
                i = n if j < 0 else j
            elif text.startswith("/*", i):
                j = text.find("*/", i + 2)
                i = n if j < 0 else j + 2
            else:
                break
        trivia = text[triv_start:i]
        if i >= n:
            tokens.append(Token(EOF, "", trivia, n, len(tokens)))
            return tokens
        start = i
        ch = text[i]
        if _is_ident_start(ch):
            while i < n and _is_ident_part(text[i]):
                i += 1
            word = text[start:i]
            if word in ("true", "false", "null"):
                kind = BOOL_NULL_LIT
            elif word in KEYWORDS:
                kind = KEYWORD
            else:
                kind = IDENT
            tokens.append(Token(kind, word, trivia, start, len(tokens)))
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            i, kind = _lex_number(text, i)
            tokens.append(Token(kind, text[start:i], trivia, start, len(tokens)))
            continue
        if ch == '"':
            i = _lex_quoted(text, i, '"')
            tokens.append(Token(STRING_LIT, text[start:i], trivia, start, len(tokens)))
            continue
        if ch == "'":
            i = _lex_quoted(text, i, "'")
            tokens.append(Token(CHAR_LIT, text[start:i], trivia, start, len(tokens)))
            continue
        for op in _OPERATORS:
            if text.startswith(op, i):
                i += len(op)
                tokens.append(Token(OP, op, trivia, start, len(tokens)))
                break
        else:
            i += 1
            tokens.append(Token(ERROR, ch, trivia, start, len(tokens)))


def _lex_number(text, i):
    n = len(text)
    start = i
    kind = INT_LIT
    if text.startswith(("0x", "0X", "0b", "0B"), i):
        i += 2
        while i < n and (text[i] in "0123456789abcdefABCDEF_"):
            i += 1
        if i < n and text[i] in "lL":
            i += 1
        return i, INT_LIT
    while i < n and (text[i].isdigit() or text[i] == "_"):
        i += 1
    if i < n and text[i] == "." and not text.startswith("..", i):
        kind = FLOAT_LIT
        i += 1
        while i < n and (text[i].isdigit() or text[i] == "_"):
            i += 1
    if i < n and text[i] in "eE":
        j = i + 1
        if j < n and text[j] in "+-":
            j += 1
        if j < n and text[j].isdigit():
            kind = FLOAT_LIT
            i = j
            while i < n and text[i].isdigit():
                i += 1
    if i < n and text[i] in "fFdD":
        kind = FLOAT_LIT
        i += 1
    elif i < n and text[i] in "lL":
        i += 1
    if i == start:
        i += 1
    return i, kind


def _lex_quoted(text, i, quote):
    n = len(text)
    i += 1
    while i < n:
        ch = text[i]
        if ch == "\\":
            i += 2
            continue
        i += 1
        if ch == quote or ch == "\n":
            break
    return i
