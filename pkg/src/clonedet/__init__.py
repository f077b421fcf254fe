"""Cloned-account detection from incomplete social profiles.

The pipeline pairs accounts by name similarity, fuses per-account views
into a compact embedding, imputes missing feature values with a Gaussian
copula model, and classifies candidate pairs with gradient-boosted trees.
"""

__version__ = "0.1.0"

from .records import (
    AccountRecord,
    AccountTable,
    LabeledPair,
    SingleAccountFeatures,
    ViewMatrix,
    load_accounts,
    load_pair_labels,
    load_view_matrix,
)
from .text import jaro_winkler, normalize_text, tfidf_cosine, tfidf_fit
from .pairs import CandidatePair, generate_candidate_pairs

__all__ = [
    "AccountRecord",
    "AccountTable",
    "LabeledPair",
    "SingleAccountFeatures",
    "ViewMatrix",
    "load_accounts",
    "load_pair_labels",
    "load_view_matrix",
    "jaro_winkler",
    "normalize_text",
    "tfidf_fit",
    "tfidf_cosine",
    "CandidatePair",
    "generate_candidate_pairs",
]
