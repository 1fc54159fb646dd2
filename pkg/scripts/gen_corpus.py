"""One-off generator for the bundled micro-corpus.

Produces deterministic Java files under src/sectaudit/data/corpus/.
Each file parses cleanly, exceeds 100 words, and the train pool covers
every rewrite rule.  Re-running regenerates identical files.
"""

import random
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
OUT = ROOT / "src" / "sectaudit" / "data" / "corpus"

NOUNS = ["order", "ticket", "record", "batch", "account", "invoice", "packet",
         "widget", "signal", "bucket", "report", "metric", "sensor", "ledger",
         "cursor", "bundle", "policy", "broker", "vector", "branch"]
VERBS = ["sum", "scan", "merge", "count", "filter", "rank", "shift", "trim",
         "split", "probe", "score", "index", "pack", "route", "audit"]
TAGS = ["alpha", "beta", "gamma", "delta", "omega", "prime", "minor", "major"]


def ident(rng, *pools):
    parts = [rng.choice(pool) for pool in pools]
    return parts[0] + "".join(p.capitalize() for p in parts[1:])


def m_forloop(rng, name):  # rules 2, 8, 9, 13, 20, 23
    acc, lim, i = ident(rng, NOUNS), ident(rng, NOUNS, TAGS), "i"
    skip = rng.randrange(2, 5)
    return f"""    static int {name}(int {lim}) {{
        int {acc} = 0;
        for (int {i} = 0; {i} < {lim}; {i}++) {{
            if ({i} % {skip} == 0) {{
                continue;
            }}
            {acc} += {i} * {rng.randrange(2, 9)};
        }}
        return {acc};
    }}"""


def m_whileloop(rng, name):  # rules 3, 8, 13, 21, 23
    cur, steps = ident(rng, NOUNS), ident(rng, VERBS, NOUNS)
    div = rng.randrange(2, 6)
    return f"""    static int {name}(int {cur}) {{
        int {steps} = 0;
        while ({cur} > {rng.randrange(5, 40)}) {{
            {cur} = {cur} / {div};
            {steps}++;
        }}
        if ({steps} == 0) {{
            return {cur};
        }}
        return {steps};
    }}"""


def m_dowhile(rng, name):  # rules 4, 9, 13, 23
    total, n = ident(rng, VERBS, NOUNS), ident(rng, NOUNS)
    return f"""    static int {name}(int {n}) {{
        int {total} = {rng.randrange(1, 9)};
        do {{
            {total} += {n} % {rng.randrange(3, 9)};
            {n} = {n} - 1;
        }} while ({n} > 0);
        return {total};
    }}"""


def m_chain(rng, name):  # rules 5, 13, 14, 23
    x = ident(rng, NOUNS)
    a, b = sorted(rng.sample(range(10, 400), 2))
    return f"""    static int {name}(int {x}) {{
        if ({x} > {b}) {{
            return {b};
        }} else if ({x} > {a}) {{
            return {x} - {a};
        }} else {{
            return {a};
        }}
    }}"""


def m_nested_else(rng, name):  # rules 6, 13, 14, 21
    x, r = ident(rng, NOUNS), ident(rng, VERBS, TAGS)
    m1, m2 = rng.randrange(2, 6), rng.randrange(6, 12)
    return f"""    static int {name}(int {x}) {{
        int {r} = 0;
        if ({x} % {m1} == 0) {{
            {r} = {m1};
        }} else {{
            if ({x} % {m2} == 0) {{
                {r} = {m2};
            }}
        }}
        return {r};
    }}"""


def m_switch(rng, name):  # rules 7, 13
    x = ident(rng, NOUNS)
    vals = rng.sample(range(1, 30), 3)
    outs = rng.sample(range(50, 900), 4)
    return f"""    static int {name}(int {x}) {{
        switch ({x}) {{
            case {vals[0]}:
                return {outs[0]};
            case {vals[1]}:
            case {vals[2]}:
                return {outs[1]};
            default:
                return {outs[2]} + {x};
        }}
    }}"""


def m_decls(rng, name):  # rules 10, 11, 12, 13, 17, 21
    a, b, c = (ident(rng, NOUNS), ident(rng, VERBS, NOUNS),
               ident(rng, NOUNS, TAGS))
    k1, k2 = rng.randrange(2, 9), rng.randrange(2, 9)
    return f"""    static int {name}(int seedValue) {{
        int {a} = seedValue * {k1}, remainder = seedValue % {k2};
        int {b} = {a} + remainder + {k2};
        int {c} = {b} * {b} - {a};
        if ({c} == 0) {{
            return 1;
        }}
        return {c};
    }}"""


def m_condexp(rng, name):  # rules 15, 16, 14, 23
    x, lo, hi = ident(rng, NOUNS), rng.randrange(1, 40), rng.randrange(50, 200)
    r, s = ident(rng, VERBS, TAGS), ident(rng, NOUNS, TAGS)
    return f"""    static int {name}(int {x}) {{
        int {r};
        if ({x} < {lo}) {{
            {r} = {lo};
        }} else {{
            {r} = {x};
        }}
        int {s} = 0;
        {s} = {r} > {hi} ? {hi} : {r};
        return {s};
    }}"""


def m_incdec(rng, name):  # rules 18, 8, 13
    x, y = ident(rng, NOUNS), ident(rng, VERBS, NOUNS)
    return f"""    static int {name}(int {x}) {{
        int {y} = {x}++;
        int next = ++{x};
        {y} += next * {rng.randrange(2, 7)};
        return {y} + {x};
    }}"""


def m_guards(rng, name):  # rules 19, 21, 23, 13
    a, b = ident(rng, NOUNS), ident(rng, NOUNS, TAGS)
    lim = rng.randrange(100, 500)
    return f"""    static int {name}(int {a}, int {b}) {{
        if ({a} > 0 && {b} > 0 && {a} + {b} < {lim}) {{
            return {a} * {b};
        }}
        if ({a} != {b}) {{
            return {a} - {b};
        }}
        return {lim};
    }}"""


def m_strings(rng, name):  # rules 22, 9, 14
    s, label = ident(rng, NOUNS), rng.choice(TAGS)
    return f"""    static String {name}(String {s}) {{
        String prefix = "{label}:";
        if ({s}.equals("{label}")) {{
            return prefix;
        }}
        prefix += {s};
        if (prefix.length() > {rng.randrange(10, 30)}) {{
            return prefix.substring(0, 5);
        }} else {{
            return prefix;
        }}
    }}"""


def m_array(rng, name):  # rules 2, 9, 20, 23
    xs, best = ident(rng, NOUNS) + "Items", ident(rng, VERBS, TAGS)
    return f"""    static int {name}(int[] {xs}) {{
        int {best} = 0;
        for (int idx = 0; idx < {xs}.length; idx++) {{
            if ({xs}[idx] < 0) {{
                continue;
            }}
            {best} += {xs}[idx];
        }}
        return {best};
    }}"""


def m_plainloop(rng, name):  # rules 2, 12, 11, 9, 13
    left, right = ident(rng, NOUNS), ident(rng, NOUNS, TAGS)
    k1, k2 = rng.randrange(2, 7), rng.randrange(2, 7)
    return f"""    static int {name}(int p, int q) {{
        int {left} = p * {k1};
        int {right} = q * {k2};
        int total = 0;
        for (int step = 0; step < {left} + {right}; step++) {{
            total += step % {rng.randrange(3, 11)};
        }}
        return total;
    }}"""


MAKERS = [m_forloop, m_whileloop, m_dowhile, m_chain, m_nested_else, m_switch,
          m_decls, m_condexp, m_incdec, m_guards, m_strings, m_array,
          m_plainloop]


def make_file(rng, cls_name, forced):
    """forced: indices into MAKERS that must appear."""
    picks = list(forced)
    extra = [i for i in range(len(MAKERS)) if i not in picks]
    rng.shuffle(extra)
    want = rng.randrange(5, 8)
    while len(picks) < want and extra:
        picks.append(extra.pop())
    rng.shuffle(picks)
    methods = []
    for j, mi in enumerate(picks):
        methods.append(MAKERS[mi](rng, f"{VERBS[mi % len(VERBS)]}Step{j}"))
    body = "\n\n".join(methods)
    return f"""public class {cls_name} {{

{body}
}}
"""


def gen_pool(label, count, seed_base):
    out_dir = OUT / label
    out_dir.mkdir(parents=True, exist_ok=True)
    for old in out_dir.glob("*.java"):
        old.unlink()
    for i in range(count):
        rng = random.Random(seed_base + i)
        # round-robin forcing keeps every maker well represented
        forced = [(i + k) % len(MAKERS) for k in range(3)]
        cls = f"{label.capitalize()}Case{i:02d}"
        text = make_file(rng, cls, forced)
        (out_dir / f"{cls}.java").write_text(text, encoding="utf-8")


def main():
    gen_pool("train", 60, 1000)
    gen_pool("test", 60, 2000)
    print("wrote", len(list((OUT / 'train').glob('*.java'))), "train and",
          len(list((OUT / 'test').glob('*.java'))), "test files")


if __name__ == "__main__":
    main()
