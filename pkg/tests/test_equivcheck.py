import pytest

from sectaudit.equivcheck import (
    DIV_BY_ZERO,
    INDEX_OUT_OF_BOUNDS,
    SNIPPETS,
    STEP_LIMIT,
    UNSUPPORTED,
    differential_test,
    gen_args,
    param_kinds,
    pick_entry,
    run_method,
)
from sectaudit.javasrc import parse


def run(src, *args, **kw):
    return run_method(src, "f", list(args), **kw)


def test_int_wraparound():
    src = "class S { static int f(int x) { return x + 1; } }"
    assert run(src, 2**31 - 1).value == -2**31


def test_long_wraparound_and_widening():
    src = "class S { static long f(int x) { long y = x; return y * 4; } }"
    assert run(src, 2**30).value == 2**32


def test_truncating_division_toward_zero():
    src = "class S { static int f(int a, int b) { return a / b; } }"
    assert run(src, -7, 2).value == -3
    assert run(src, 7, -2).value == -3
    src2 = "class S { static int f(int a, int b) { return a % b; } }"
    assert run(src2, -7, 2).value == -1


def test_div_by_zero_trap():
    src = "class S { static int f(int a) { return a / 0; } }"
    assert run(src, 1).status == DIV_BY_ZERO


def test_index_trap():
    src = "class S { static int f(int[] xs) { return xs[5]; } }"
    assert run(src, [1, 2]).status == INDEX_OUT_OF_BOUNDS


def test_step_limit_trap():
    src = "class S { static int f(int x) { while (true) { x++; } } }"
    assert run(src, 0, step_limit=500).status == STEP_LIMIT


def test_unsupported_trap():
    src = "class S { static int f(int x) { throw new RuntimeException(); } }"
    assert run(src, 0).status == UNSUPPORTED


def test_string_ops():
    src = 'class S { static String f(String s, int n) { return s + "-" + n; } }'
    assert run(src, "a", 3).value == "a-3"
    src2 = 'class S { static boolean f(String s) { return s.equals("x"); } }'
    assert run(src2, "x").value is True
    assert run(src2, "y").value is False


def test_switch_fall_through():
    src = """class S { static int f(int x) {
        int r = 0;
        switch (x) { case 1: r += 1; case 2: r += 2; break; default: r = 9; }
        return r; } }"""
    assert run(src, 1).value == 3
    assert run(src, 2).value == 2
    assert run(src, 5).value == 9


def test_shift_semantics():
    src = "class S { static int f(int x) { return x >>> 1; } }"
    assert run(src, -2).value == (2**32 - 2) >> 1


def test_recursion():
    src = """class S { static int f(int n) {
        if (n <= 1) { return 1; } return n * f(n - 1); } }"""
    assert run(src, 5).value == 120


def test_compound_assign_wraps_to_int():
    src = "class S { static int f(int x) { x += 1; return x; } }"
    assert run(src, 2**31 - 1).value == -2**31


def test_param_kinds_and_arg_gen():
    tree = parse("class S { static int f(int a, boolean b, String s, int[] xs) { return a; } }")
    entry = pick_entry(tree)
    kinds = param_kinds(entry)
    assert kinds == ["int", "boolean", "string", "int[]"]
    import random
    args = gen_args(kinds, random.Random(7))
    assert isinstance(args[0], int) and isinstance(args[1], bool)
    assert isinstance(args[2], str) and isinstance(args[3], list)


def test_differential_catches_behavior_change():
    # same shape as a rule-20 site but the guard's polarity matters:
    # verify the harness notices when we compare against an unrelated rule
    # rewrite that does apply but a hand-broken original would differ.
    src = "class S { static int f(int a, int b) { return a - b; } }"
    rep = differential_test(src, 23)  # a - b has no relational site
    assert not rep.applied


def test_differential_clean_on_known_good_rule():
    src = "class S { static boolean f(int a, int b) { return a < b; } }"
    rep = differential_test(src, 23, trials=50, seed=7)
    assert rep.clean and rep.matches == 50


def test_snippet_suite_shape():
    assert set(SNIPPETS) == set(range(1, 24))
    for rid, snippets in SNIPPETS.items():
        assert len(snippets) >= 5, f"rule {rid}"


def test_mismatch_detection_on_seeded_bug():
    # drive the harness through a deliberately wrong "transform" by
    # comparing two different sources directly at the interpreter level
    good = "class S { static int f(int x) { return x + 1; } }"
    bad = "class S { static int f(int x) { return x + 2; } }"
    assert run(good, 1).value != run(bad, 1).value


def test_run_method_missing_method():
    res = run_method("class S { static int g() { return 1; } }", "f", [])
    assert res.status == UNSUPPORTED
