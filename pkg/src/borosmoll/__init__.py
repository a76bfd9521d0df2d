"""Exact verification of Briggs-type inequalities for Boros-Moll sequences."""

from .core import BMTable, BMValue, bm_closed_form, bm_normalized, eval_P
from .exact import ExtElem, MPoly, Rat, RatFunc, SurdExpr, surd_sign
from .seqprops import CheckReport, Seq

__all__ = [
    "BMTable",
    "BMValue",
    "CheckReport",
    "ExtElem",
    "MPoly",
    "Rat",
    "RatFunc",
    "Seq",
    "SurdExpr",
    "bm_closed_form",
    "bm_normalized",
    "eval_P",
    "surd_sign",
]
