"""Conjugation and Dehn quandles of Baumslag-Solitar groups."""

from .bs import (
    AbelianImage,
    AffineMap,
    BsPresentation,
    ConjugacyVerdict,
    ResourceLimitError,
    abelian_image,
    affine_eval,
    conjugacy_obstruction,
    equal,
    is_identity,
    normal_form,
    pinch_reduce,
)
from .classify import (
    Classification,
    HopfStatus,
    Route,
    bs_hopfian,
    bs_residually_finite,
    classify,
    conj_bs_hopf_status,
    conj_bs_residually_finite,
    prime_support,
    route_case,
)
from .terms import QuandleTerm, expand_term, parse_term, render_term
from .words import Word, WordSyntaxError, concat, free_reduce, invert, parse_word, render_word

__version__ = "0.1.0"
