"""Quantifier elimination and decision toolkit for quasi-real closed fields
with a compatible valuation, with computable models and independent oracles."""
from .formula import normalize, render
from .parser import parse
from .qe import EliminationConfig, decide_sentence, eliminate, eliminate_guarded
from .theory import Branch, CompletionConfig

__version__ = "0.1.0"

__all__ = [
    "Branch", "CompletionConfig", "EliminationConfig", "decide_sentence", "eliminate",
    "eliminate_guarded", "normalize", "parse", "render",
]
