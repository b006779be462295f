"""Exact and numeric tools for hypergeometric summation identities.

The exact layer (:mod:`hypersum.exact`) works in the ring Q[sqrt2, sqrt(pi)]
with gamma values at half- and quarter-integers; the numeric layer
(:mod:`hypersum.numeric`) sums pFq series to a few hundred bits, with
Levin or Wynn acceleration at z = 1.  On top sit the classical summation
theorems, their identity families, a verified catalog of worked examples
and PSLQ-based recognition of constants.
"""
from .errors import (
    BudgetExceededError,
    DivergentError,
    DomainError,
    HypersumError,
    NonInvertibleError,
    NumericalBreakdownError,
    PoleError,
    PrecisionTooLowError,
)
from .exact import ExactValue, exact_gamma, gamma_ratio, pochhammer
from .numeric import BigFloat, NumericValue, SeriesSpec, ev_to_numeric, num_gamma, pfq_eval
from .closed_forms import (
    bailey,
    bailey_ext,
    closed_form,
    closed_form_numeric,
    gauss,
    gauss_ext,
    gauss_second,
    gauss_second_ext,
    watson,
    watson_ext,
)
from .families import Identity, generate
from .catalog import CatalogEntry, catalog
from .verify import VerifyReport, verify, verify_all
from .recognition import RelationResult, find_relation, recognize

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError", "DivergentError", "DomainError", "HypersumError", "NonInvertibleError",
    "NumericalBreakdownError", "PoleError", "PrecisionTooLowError",
    "ExactValue", "exact_gamma", "gamma_ratio", "pochhammer",
    "BigFloat", "NumericValue", "SeriesSpec", "ev_to_numeric", "num_gamma", "pfq_eval",
    "bailey", "bailey_ext", "closed_form", "closed_form_numeric", "gauss", "gauss_ext",
    "gauss_second", "gauss_second_ext", "watson", "watson_ext",
    "Identity", "generate", "CatalogEntry", "catalog",
    "VerifyReport", "verify", "verify_all",
    "RelationResult", "find_relation", "recognize",
]
