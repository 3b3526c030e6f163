"""Independent decision procedures used to validate elimination results."""
from .acf import decide_exists_acf
from .equivalence import EquivalenceResult, qf_equiv_sample
from .newton import NewtonPolygon, hensel_lift, newton_polygon, series_poly
from .sturm import (
    Base, SturmData, decide_exists_order, isolate_roots, sign_conditions,
    signed_remainder_sequence, sturm_tarski, tarski_query,
)

__all__ = [
    "Base", "EquivalenceResult", "NewtonPolygon", "SturmData", "decide_exists_acf",
    "decide_exists_order", "hensel_lift", "isolate_roots", "newton_polygon", "qf_equiv_sample",
    "series_poly", "sign_conditions", "signed_remainder_sequence", "sturm_tarski", "tarski_query",
]
