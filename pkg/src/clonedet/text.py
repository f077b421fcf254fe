"""Text normalization and string similarity primitives.

Provides the Jaro and Jaro-Winkler scores used for name comparison, a
deterministic text normalizer (lowercase, punctuation stripping, stop-word
removal) and a small TF-IDF model for description similarity.
"""
from __future__ import annotations

import math
import string
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

__all__ = [
    "jaro_similarity",
    "jaro_winkler",
    "normalize_text",
    "stop_words",
    "TfidfModel",
    "tfidf_fit",
    "tfidf_cosine",
]

_PUNCT_TABLE = str.maketrans({c: " " for c in string.punctuation})

JW_PREFIX_SCALE = 0.1
JW_MAX_PREFIX = 4


@lru_cache(maxsize=1)
def stop_words() -> frozenset[str]:
    """Return the stop-word list shipped with the package."""
    text = resources.files(__package__).joinpath("resources/stopwords.txt").read_text("utf-8")
    return frozenset(w for w in text.split() if w)


def normalize_text(s: str) -> str:
    """Lowercase, strip punctuation, drop stop words, collapse whitespace."""
    tokens = s.lower().translate(_PUNCT_TABLE).split()
    stops = stop_words()
    return " ".join(t for t in tokens if t not in stops)


def jaro_similarity(s1: str, s2: str) -> float:
    """Jaro score in [0, 1].

    Characters match when equal and within a window of
    floor(max(len1, len2) / 2) - 1 positions (never negative); the score is
    zero when no characters match, including when either string is empty.
    """
    if s1 == s2:
        return 1.0 if s1 else 0.0
    len1 = len(s1)
    len2 = len(s2)
    if len1 == 0 or len2 == 0:
        return 0.0

    window = max((len1 if len1 > len2 else len2) // 2 - 1, 0)
    matched2 = bytearray(len2)
    hits: list[int] = []
    append = hits.append
    find = s2.find
    for i, c in enumerate(s1):
        start = i - window
        if start < 0:
            start = 0
        end = i + window + 1
        if end > len2:
            end = len2
        j = find(c, start, end)
        while j != -1 and matched2[j]:
            j = find(c, j + 1, end)
        if j != -1:
            matched2[j] = 1
            append(i)
    matches = len(hits)
    if matches == 0:
        return 0.0

    # half-transpositions: matched characters out of sequence
    half = 0
    k = 0
    for i in hits:
        while not matched2[k]:
            k += 1
        if s1[i] != s2[k]:
            half += 1
        k += 1
    t = half / 2.0
    return (matches / len1 + matches / len2 + (matches - t) / matches) / 3.0


def jaro_winkler(s1: str, s2: str) -> float:
    """Jaro-Winkler score: Jaro boosted by common-prefix length.

    Uses prefix scale 0.1 and a prefix cap of 4 characters, so the result
    stays in [0, 1].
    """
    js = jaro_similarity(s1, s2)
    if js >= 1.0:
        return 1.0
    prefix = 0
    for c1, c2 in zip(s1, s2):
        if c1 != c2 or prefix == JW_MAX_PREFIX:
            break
        prefix += 1
    return js + prefix * JW_PREFIX_SCALE * (1.0 - js)


@dataclass(frozen=True)
class TfidfModel:
    """Fitted TF-IDF statistics over a description corpus.

    vocabulary maps each term to a dense column index; ``idf[i]`` is the
    smoothed inverse document frequency of the term at index ``i``.
    """

    vocabulary: dict[str, int]
    idf: np.ndarray
    corpus_size: int


def tfidf_fit(corpus: list[str]) -> TfidfModel:
    """Fit TF-IDF statistics on a corpus of normalized documents.

    Vocabulary order is lexicographic, so fitting is deterministic. The IDF
    is smoothed: idf = ln((1 + N) / (1 + df)) + 1.
    """
    if not corpus:
        raise ValueError("TF-IDF corpus must be nonempty")
    df: dict[str, int] = {}
    for doc in corpus:
        for term in set(doc.split()):
            df[term] = df.get(term, 0) + 1
    vocab = {term: i for i, term in enumerate(sorted(df))}
    n = len(corpus)
    idf = np.array(
        [math.log((1 + n) / (1 + df[term])) + 1.0 for term in sorted(df)],
        dtype=np.float64,
    )
    return TfidfModel(vocabulary=vocab, idf=idf, corpus_size=n)


def _tfidf_vector(model: TfidfModel, doc: str) -> np.ndarray:
    vec = np.zeros(len(model.vocabulary), dtype=np.float64)
    for term in doc.split():
        idx = model.vocabulary.get(term)
        if idx is not None:
            vec[idx] += 1.0
    return vec * model.idf


def tfidf_cosine(model: TfidfModel, d1: str, d2: str) -> float:
    """Cosine similarity of the TF-IDF vectors of two normalized documents.

    Returns 0.0 when either vector is all-zero (all terms unseen or empty).
    """
    v1 = _tfidf_vector(model, d1)
    v2 = _tfidf_vector(model, d2)
    n1 = float(np.linalg.norm(v1))
    n2 = float(np.linalg.norm(v2))
    if n1 == 0.0 or n2 == 0.0:
        return 0.0
    value = float(np.dot(v1, v2) / (n1 * n2))
    return min(max(value, 0.0), 1.0)
