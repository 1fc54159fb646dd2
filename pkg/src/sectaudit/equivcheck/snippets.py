"""Curated differential-test snippets, five per rewrite rule.

Every snippet stays inside the interpreter's Java subset, and the rule it
is listed under matches at least one site in it.
"""

SNIPPETS = {
    1: [  # RenameVariable
        "class S { static int f(int a, int b) { int t = a * b; int u = t - a; return u + b; } }",
        "class S { static int f(int n) { int acc = 0; for (int i = 0; i < n; i++) { acc += i; } return acc; } }",
        "class S { static int f(int[] xs) { int total = 0; for (int x : xs) { total = total + x; } return total; } }",
        "class S { static boolean f(String s, String t) { boolean same = s.equals(t); int len = s.length(); return same || len == 0; } }",
        "class S { static int f(int x) { int y = x; while (y > 10) { y = y - 3; } return y; } }",
    ],
    2: [  # For2While
        "class S { static int f(int n) { int s = 0; for (int i = 0; i < n; i++) { s += i; } return s; } }",
        "class S { static int f(int n) { int s = 1; for (int i = n; i > 0; i--) { s = s * 2; if (s > 1000) { break; } } return s; } }",
        "class S { static int f(int[] xs) { int m = 0; for (int i = 0; i < xs.length; i = i + 1) { m = Math.max(m, xs[i]); } return m; } }",
        "class S { static int f(int a, int b) { int c = 0; for (int i = a, j = b; i < j; i++, j--) { c++; } return c; } }",
        "class S { static int f(int n) { int k = 0; for (; k * k < n; k++) { } return k; } }",
    ],
    3: [  # While2For
        "class S { static int f(int n) { int i = 0; while (i < n) { i += 2; } return i; } }",
        "class S { static int f(int x) { while (x > 100) { x = x / 2; } return x; } }",
        "class S { static int f(int[] xs) { int i = 0; int s = 0; while (i < xs.length) { s += xs[i]; i++; } return s; } }",
        "class S { static int f(int n) { int c = 0; while (n != 0) { n = n / 10; c++; } return c; } }",
        "class S { static String f(String s) { while (s.length() > 3) { s = s.substring(1); } return s; } }",
    ],
    4: [  # Do2While
        "class S { static int f(int n) { int i = 0; do { i++; } while (i < n); return i; } }",
        "class S { static int f(int x) { int s = 0; do { s += x; x--; } while (x > 0); return s; } }",
        "class S { static int f(int n) { int d = 0; do { n = n / 10; d++; } while (n != 0); return d; } }",
        "class S { static int f(int a, int b) { int t = 0; do { t = t + a; a = a - 1; } while (a > b); return t; } }",
        "class S { static int f(int n) { int v = 1; do { v = v * 3 + 1; } while (v < n); return v; } }",
    ],
    5: [  # IfElseIf2IfElse
        "class S { static int f(int x) { if (x > 0) { return 1; } else if (x < 0) { return -1; } else { return 0; } } }",
        "class S { static int f(int x) { int r; if (x > 100) { r = 3; } else if (x > 10) { r = 2; } else if (x > 1) { r = 1; } else { r = 0; } return r; } }",
        "class S { static String f(int x) { if (x == 1) { return \"one\"; } else if (x == 2) { return \"two\"; } return \"many\"; } }",
        "class S { static int f(int a, int b) { if (a == b) { return 0; } else if (a < b) { return b - a; } else { return a - b; } } }",
        "class S { static int f(boolean p, int x) { if (p) { x++; } else if (x > 5) { x--; } return x; } }",
    ],
    6: [  # IfElse2IfElseIf
        "class S { static int f(int x) { if (x > 0) { return 1; } else { if (x < 0) { return -1; } } return 0; } }",
        "class S { static int f(int x) { int r = 0; if (x % 2 == 0) { r = 2; } else { if (x % 3 == 0) { r = 3; } } return r; } }",
        "class S { static int f(int a, int b) { if (a > b) { return a; } else { if (a < b) { return b; } else { return a + 1; } } } }",
        "class S { static String f(String s) { if (s.isEmpty()) { return \"empty\"; } else { if (s.length() > 3) { return \"long\"; } } return s; } }",
        "class S { static int f(int x) { if (x < 10) { x += 1; } else { if (x < 100) { x += 2; } } return x; } }",
    ],
    7: [  # Switch2If
        "class S { static int f(int x) { switch (x) { case 1: return 10; case 2: return 20; default: return 0; } } }",
        "class S { static int f(int x) { int r = 0; switch (x) { case 0: case 1: r = 5; break; case 2: r = 7; break; default: r = -1; break; } return r; } }",
        "class S { static int f(String s) { switch (s) { case \"a\": return 1; case \"ab\": return 2; default: return 0; } } }",
        "class S { static int f(int x) { int r = 9; switch (x) { case 3: r = 33; break; case 4: r = 44; break; } return r; } }",
        "class S { static int f(int x) { switch (x) { case -1: return 100; case 0: return 200; case 1: return 300; default: return x * 2; } } }",
    ],
    8: [  # Unary2Add
        "class S { static int f(int x) { x++; x++; return x; } }",
        "class S { static int f(int n) { int i = 0; while (i < n) { i++; } return i; } }",
        "class S { static int f(int x) { --x; return x * 2; } }",
        "class S { static int f(int[] xs) { int c = 0; for (int x : xs) { if (x > 0) { c++; } } return c; } }",
        "class S { static int f(int a) { a--; a++; a--; return a; } }",
    ],
    9: [  # Add2Equal
        "class S { static int f(int x) { x += 5; return x; } }",
        "class S { static int f(int n) { int s = 0; for (int i = 0; i < n; i++) { s += i * i; } return s; } }",
        "class S { static String f(String s) { s += \"!\"; return s; } }",
        "class S { static int f(int[] xs) { if (xs.length > 0) { xs[0] += 7; } int s = 0; for (int x : xs) { s += x; } return s; } }",
        "class S { static int f(int a, int b) { a += b; a += a; return a; } }",
    ],
    10: [  # DivideVarDecl
        "class S { static int f(int x) { int a = 1, b = 2, c = 3; return a + b * c + x; } }",
        "class S { static int f(int n) { int lo = 0, hi = n; while (lo < hi) { lo++; hi--; } return lo; } }",
        "class S { static int f(int x) { int p = x, q = p + 1; return p * q; } }",
        "class S { static int f(int[] xs) { int i = 0, s = 0; while (i < xs.length) { s += xs[i]; i++; } return s; } }",
        "class S { static long f(int x) { long a = 2L, b = 3L; return a * b + x; } }",
    ],
    11: [  # MergeVarDecl
        "class S { static int f(int x) { int a = 1; int b = 2; return a + b + x; } }",
        "class S { static int f(int n) { int s = 0; int i = 0; int j = n; while (i < j) { s++; i++; j--; } return s; } }",
        "class S { static String f(String x) { String p = \"<\"; String q = \">\"; return p + x + q; } }",
        "class S { static int f(int a) { int u = a * 2; int v = u + 1; int w = v * v; return w; } }",
        "class S { static boolean f(int x) { boolean even = x % 2 == 0; boolean small = x < 10; return even && small; } }",
    ],
    12: [  # SwapStatement
        "class S { static int f(int x) { int a = 1; int b = 2; return a + b * x; } }",
        "class S { static int f(int p, int q) { int u = p * p; int v = q * q; return u - v; } }",
        "class S { static int f(int x) { int a; int b; a = x + 1; b = x - 1; return a * b; } }",
        "class S { static String f(String s) { String head = \"[\"; String tail = \"]\"; return head + s + tail; } }",
        "class S { static int f(int n) { int twice = n * 2; int thrice = n * 3; return twice + thrice; } }",
    ],
    13: [  # ModifyConstant
        "class S { static int f(int x) { return x * 42; } }",
        "class S { static int f(int n) { int s = 0; for (int i = 0; i < n; i++) { s += 7; } return s; } }",
        "class S { static int f(int x) { if (x > 1000) { return 1000; } return x; } }",
        "class S { static long f(int x) { long big = 5000000000L; return big + x; } }",
        "class S { static int f(int x) { int r = x % 10; return r * 100 + 5; } }",
    ],
    14: [  # ReverseIf
        "class S { static int f(int x) { if (x > 0) { return 1; } else { return -1; } } }",
        "class S { static int f(int a, int b) { int m; if (a < b) { m = a; } else { m = b; } return m; } }",
        "class S { static String f(boolean p) { if (p) { return \"yes\"; } else { return \"no\"; } } }",
        "class S { static int f(int x) { if (x % 2 == 0) { x = x / 2; } else { x = 3 * x + 1; } return x; } }",
        "class S { static int f(int[] xs, int i) { if (i >= 0 && i < xs.length) { return xs[i]; } else { return -1; } } }",
    ],
    15: [  # If2CondExp
        "class S { static int f(int x) { int r; if (x > 0) { r = x; } else { r = -x; } return r; } }",
        "class S { static int f(int a, int b) { int m; if (a < b) { m = a; } else { m = b; } return m; } }",
        "class S { static String f(boolean p) { String s; if (p) { s = \"t\"; } else { s = \"f\"; } return s; } }",
        "class S { static int f(int x) { int sign; if (x >= 0) { sign = 1; } else { sign = -1; } return sign * x; } }",
        "class S { static int f(int n) { int step; if (n % 2 == 0) { step = n / 2; } else { step = n + 1; } return step; } }",
    ],
    16: [  # ConfExp2If
        "class S { static int f(int x) { int r; r = x > 0 ? x : -x; return r; } }",
        "class S { static int f(int a, int b) { int m; m = a < b ? a : b; return m; } }",
        "class S { static String f(boolean p) { String s; s = p ? \"t\" : \"f\"; return s; } }",
        "class S { static int f(int x) { int y = 0; y = x % 2 == 0 ? x / 2 : 3 * x + 1; return y; } }",
        "class S { static int f(int n) { int c = 0; c = n > 100 ? 100 : n; return c + 1; } }",
    ],
    17: [  # InfixDividing
        "class S { static int f(int a, int b, int c) { int r = a + b + c; return r; } }",
        "class S { static int f(int x) { int y = x * 2 + x / 3 - 1; return y; } }",
        "class S { static String f(String s, int n) { String out = \"n=\" + n + s; return out; } }",
        "class S { static int f(int a, int b) { int z = a * a - 2 * a * b + b * b; return z; } }",
        "class S { static long f(int x) { long v = 1L * x * x + 7; return v; } }",
    ],
    18: [  # DividePrePostFix
        "class S { static int f(int x) { int y = x++; return y * 10 + x; } }",
        "class S { static int f(int x) { int y = ++x; return y * 10 + x; } }",
        "class S { static int f(int a) { int b = a--; int c = --a; return b * 100 + c * 10 + a; } }",
        "class S { static int f(int x) { int y; y = x++; return y + x; } }",
        "class S { static int f(int n) { int i = 0; int last = 0; while (i < n) { last = i++; } return last; } }",
    ],
    19: [  # DividingComposedIf
        "class S { static int f(int x, int y) { if (x > 0 && y > 0) { return x + y; } return 0; } }",
        "class S { static int f(int a, int b, int c) { if (a < b && b < c && a < c) { return 1; } return 0; } }",
        "class S { static boolean f(int[] xs, int i) { if (i >= 0 && i < xs.length && xs[i] > 0) { return true; } return false; } }",
        "class S { static int f(String s) { if (!s.isEmpty() && s.length() < 5) { return s.length(); } return -1; } }",
        "class S { static int f(int x) { int r = 0; if (x % 2 == 0 && x % 3 == 0) { r = x / 6; } return r; } }",
    ],
    20: [  # LoopIfContinue2Else
        "class S { static int f(int n) { int s = 0; for (int i = 0; i < n; i++) { if (i % 2 == 0) { continue; } s += i; } return s; } }",
        "class S { static int f(int[] xs) { int s = 0; for (int x : xs) { if (x < 0) { continue; } s += x; } return s; } }",
        "class S { static int f(int n) { int c = 0; for (int i = 1; i < n; i++) { if (i % 3 == 0) { continue; } c++; } return c; } }",
        "class S { static int f(int[] xs) { int p = 1; for (int x : xs) { if (x == 0) { continue; } p = p * x; } return p; } }",
        "class S { static int f(int n) { int s = 0; for (int i = 1; i <= n; i++) { if (n % i != 0) { continue; } s += i; } return s; } }",
    ],
    21: [  # SwitchEqualExp
        "class S { static boolean f(int x) { return x == 3; } }",
        "class S { static int f(int a, int b) { if (a != b) { return a - b; } return 0; } }",
        "class S { static boolean f(int[] xs, int i) { if (i < xs.length) { return xs[i] == 0; } return false; } }",
        "class S { static int f(int x) { int c = 0; while (x != 1) { x = x % 2 == 0 ? x / 2 : 3 * x + 1; c++; if (c > 50) { break; } } return c; } }",
        "class S { static boolean f(boolean p, boolean q) { return p == q; } }",
    ],
    22: [  # SwitchStringEqual
        "class S { static boolean f(String s) { return s.equals(\"hello\"); } }",
        "class S { static int f(String s) { if (s.equals(\"a\")) { return 1; } if (s.equals(\"b\")) { return 2; } return 0; } }",
        "class S { static int f(String s, int x) { if (s.equals(\"neg\")) { return -x; } return x; } }",
        "class S { static boolean f(String a, String b) { return a.concat(b).equals(\"ab\"); } }",
        "class S { static int f(String s) { int c = 0; while (!s.equals(\"\")) { s = s.substring(1); c++; } return c; } }",
    ],
    23: [  # SwitchRelation
        "class S { static boolean f(int a, int b) { return a < b; } }",
        "class S { static int f(int x) { if (x >= 10) { return 10; } return x; } }",
        "class S { static int f(int a, int b) { int m = 0; if (a + 1 <= b - 1) { m = 1; } return m; } }",
        "class S { static int f(int[] xs) { int c = 0; for (int x : xs) { if (x > 50) { c++; } } return c; } }",
        "class S { static int f(int n) { int i = 0; while (i * i < n) { i++; } return i; } }",
    ],
}
