from .lexer import Token, lex, LexError
from .tree import Node, SyntaxTree, print_tree
from .parser import parse
from .features import CodeFeatures, extract_features
from .units import SourceUnit, word_count, truncate_words

__all__ = [
    "Token",
    "lex",
    "LexError",
    "Node",
    "SyntaxTree",
    "print_tree",
    "parse",
    "CodeFeatures",
    "extract_features",
    "SourceUnit",
    "word_count",
    "truncate_words",
]
