"""Toolkit for semantics-preserving Java rewriting, membership-inference
scoring, and causal effect estimation of rewrite rules on MI success."""

__version__ = "0.1.0"
