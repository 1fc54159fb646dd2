"""Behavioral equivalence checking for rewritten Java sources."""

from .diff import DiffReport, differential_test, gen_args, param_kinds, pick_entry
from .interp import (
    DIV_BY_ZERO,
    INDEX_OUT_OF_BOUNDS,
    OK,
    STEP_LIMIT,
    UNSUPPORTED,
    ExecResult,
    Interpreter,
    Trap,
    run_method,
)
from .snippets import SNIPPETS

__all__ = [
    "DIV_BY_ZERO", "INDEX_OUT_OF_BOUNDS", "OK", "STEP_LIMIT", "UNSUPPORTED",
    "DiffReport", "ExecResult", "Interpreter", "SNIPPETS", "Trap",
    "differential_test", "gen_args", "param_kinds", "pick_entry", "run_method",
]
