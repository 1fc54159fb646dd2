import importlib.resources as resources

import pytest
from hypothesis import given, strategies as st

from sectaudit.javasrc import (
    extract_features,
    lex,
    parse,
    print_tree,
    truncate_words,
    word_count,
)
from sectaudit.javasrc import lexer as lx
from sectaudit.javasrc.tree import structurally_equal


def corpus_texts(pool):
    base = resources.files("sectaudit") / "data" / "corpus" / pool
    return {p.name: p.read_text(encoding="utf-8")
            for p in sorted(base.iterdir(), key=lambda p: p.name)
            if p.name.endswith(".java")}


SAMPLE = """\
package demo.app;

import java.util.List;

public class Sample {
    // running total
    private int total;

    static int twice(int x) {
        return x * 2; /* doubled */
    }
}
"""


def test_roundtrip_is_byte_identical():
    assert print_tree(parse(SAMPLE)) == SAMPLE


def test_roundtrip_preserves_structure():
    tree = parse(SAMPLE)
    again = parse(print_tree(tree))
    assert structurally_equal(tree.root, again.root)


def test_generics_close_angle_tokens_roundtrip():
    src = "class G { java.util.Map<String, List<List<String>>> m; int x = a >>> 2; }"
    tree = parse(src)
    assert tree.error_count == 0
    assert print_tree(tree) == src


def test_shift_assign_ops_parse():
    src = "class G { void f(int x) { x >>= 1; x >>>= 2; x <<= 3; } }"
    tree = parse(src)
    assert tree.error_count == 0
    assert print_tree(tree) == src


def test_error_recovery_keeps_bytes_and_counts():
    src = "class A { int x = ; int ok = 1; }"
    tree = parse(src)
    assert tree.error_count == 1
    assert print_tree(tree) == src


def test_parse_rejects_empty_and_wrong_type():
    with pytest.raises(ValueError):
        parse("")
    with pytest.raises(TypeError):
        parse(42)
    with pytest.raises(UnicodeDecodeError):
        parse(b"\xff\xfe class")


def test_lexer_splits_generic_close():
    toks = [t.text for t in lex("List<List<String>> x;") if t.kind != lx.EOF]
    assert toks == ["List", "<", "List", "<", "String", ">", ">", "x", ";"]


def test_comment_attachment_is_leading_trivia():
    tree = parse("class A { // note\n int x; }")
    int_tok = next(t for t in tree.all_tokens if t.text == "int")
    assert "// note" in int_tok.trivia


def test_features_counts():
    src = """\
class F {
    int pick(int a, int b) {
        if (a > b && a > 0) {
            return a;
        }
        for (int i = 0; i < b; i++) {
            a += i;
        }
        return a > 0 ? a : b;
    }
}
"""
    feats = extract_features(parse(src))
    # 1 method + if + && + for + ternary
    assert feats.code_complexity == 5
    assert feats.nloc == 11
    assert feats.ast_error_count == 0
    assert feats.identifier_count > 0
    d = feats.as_dict()
    assert set(d) == {"nloc", "token_count", "ast_levels", "ast_nodes",
                      "identifier_count", "ast_error_count", "code_complexity"}


def test_nloc_ignores_comments_and_blanks():
    src = "class A {\n\n  // comment only\n  int x;\n  /* block\n     more */\n}\n"
    feats = extract_features(parse(src))
    assert feats.nloc == 3  # class line, field line, closing brace


def test_word_count_runs():
    assert word_count("") == 0
    assert word_count("  a\tb\nc  ") == 3


def test_truncate_preserves_internal_whitespace():
    text = "one  two\tthree\nfour five"
    assert truncate_words(text, 3) == "one  two\tthree"
    assert truncate_words(text, 99) == text


@given(st.text(alphabet=" \t\nabc", max_size=80), st.integers(1, 20))
def test_truncate_word_count_bound(text, n):
    out = truncate_words(text, n)
    assert word_count(out) == min(word_count(text), n)
    assert text.startswith(out)


def test_corpus_parses_clean_and_roundtrips():
    for pool in ("train", "test"):
        texts = corpus_texts(pool)
        assert len(texts) >= 50
        for name, text in texts.items():
            tree = parse(text)
            assert tree.error_count == 0, name
            assert print_tree(tree) == text, name
            assert word_count(text) > 100, name
