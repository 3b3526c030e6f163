"""Computable quasi-ordered valued fields: Q(t) ordered and Laurent series."""
from .conformance import (
    AxiomReport, AxiomResult, NamedCheck, WitnessRegistry, check_axioms_sampled,
    default_witnesses, has_square_root, natural_valuation_check, prenex_universal,
)
from .core import (
    M_A, M_R, Dichotomy, ModelDescriptor, ModelTag, TruthValue, classify_dichotomy, draw,
    eval_qf, model_by_name, sample, sample_series, special_elements,
)
from .laurent import DEFAULT_PRECISION, LaurentElem, series_sqrt, value_le, value_lt
from .ratfunc import RatFuncElem

__all__ = [
    "AxiomReport", "AxiomResult", "DEFAULT_PRECISION", "Dichotomy", "LaurentElem", "M_A", "M_R",
    "ModelDescriptor", "ModelTag", "NamedCheck", "RatFuncElem", "TruthValue", "WitnessRegistry",
    "check_axioms_sampled", "classify_dichotomy", "default_witnesses", "draw", "eval_qf",
    "has_square_root", "model_by_name", "natural_valuation_check", "prenex_universal", "sample",
    "sample_series", "series_sqrt", "special_elements", "value_le", "value_lt",
]
