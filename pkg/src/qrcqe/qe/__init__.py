"""Quantifier elimination for the supported fragments of each branch."""
from .atoms import atomize, negate
from .engine import (
    EliminationConfig, EliminationStats, GuardedResult, decide_sentence, eliminate,
    eliminate_guarded, eliminate_with_stats, evaluate_ground,
)
from .simplify import simplify
from .testpoints import (
    BallPoint, EpsilonAbove, EpsilonBelow, FiniteTerm, MinusInfinity, PlusInfinity, Radius,
    RootExpression, substitute_virtual,
)

__all__ = [
    "BallPoint", "EliminationConfig", "EliminationStats", "EpsilonAbove", "EpsilonBelow",
    "FiniteTerm", "GuardedResult", "MinusInfinity", "PlusInfinity", "Radius", "RootExpression",
    "atomize", "decide_sentence", "eliminate", "eliminate_guarded", "eliminate_with_stats",
    "evaluate_ground", "negate", "simplify", "substitute_virtual",
]
