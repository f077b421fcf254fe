"""Candidate account-pair generation by name similarity.

Pairs whose usernames or screen names score at least the threshold under
Jaro-Winkler are candidates for clone/victim classification. A character
trigram inverted index keeps the search well below all-pairs cost; an
exhaustive mode bypasses the index for audits. Blocking is an accelerator
only: the output set must match the exhaustive filter.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .records import AccountRecord, AccountTable
from .text import jaro_winkler

__all__ = ["CandidatePair", "generate_candidate_pairs"]

_MIN_TRIGRAM_LEN = 3


@dataclass(frozen=True)
class CandidatePair:
    """An unordered candidate pair with its best name similarity."""

    id_a: str
    id_b: str
    name_score: float

    def __post_init__(self) -> None:
        if self.id_b < self.id_a:
            a, b = self.id_a, self.id_b
            object.__setattr__(self, "id_a", b)
            object.__setattr__(self, "id_b", a)


def _pair_score(a: AccountRecord, b: AccountRecord, threshold: float) -> float:
    score = jaro_winkler(a.username, b.username)
    if score < threshold:
        other = jaro_winkler(a.screen_name, b.screen_name)
        if other > score:
            score = other
    return score


def _trigrams(name: str) -> set[str]:
    lowered = name.lower()
    return {lowered[i : i + 3] for i in range(len(lowered) - 2)}


def _candidate_index_pairs(records: list[AccountRecord]) -> Iterable[tuple[int, int]]:
    """Yield index pairs sharing a name trigram, deduplicated.

    Accounts whose username or screen name is shorter than three characters
    cannot be blocked soundly and are paired with everyone.
    """
    buckets: dict[str, list[int]] = {}
    short: list[int] = []
    for idx, rec in enumerate(records):
        grams = set()
        is_short = False
        for name in (rec.username, rec.screen_name):
            if len(name) < _MIN_TRIGRAM_LEN:
                is_short = True
            else:
                grams |= _trigrams(name)
        if is_short:
            short.append(idx)
        for gram in grams:
            buckets.setdefault(gram, []).append(idx)

    seen: set[tuple[int, int]] = set()
    for members in buckets.values():
        if len(members) < 2:
            continue
        for i, j in itertools.combinations(members, 2):
            key = (i, j) if i < j else (j, i)
            if key not in seen:
                seen.add(key)
                yield key
    short_set = set(short)
    for i in short:
        for j in range(len(records)):
            if i == j or (j in short_set and j <= i):
                continue
            key = (i, j) if i < j else (j, i)
            if key not in seen:
                seen.add(key)
                yield key


def generate_candidate_pairs(
    accounts: AccountTable,
    threshold: float = 0.8,
    exhaustive: bool = False,
) -> list[CandidatePair]:
    """Return every unordered pair whose name similarity reaches the threshold.

    The score of a pair is the larger of the username and screen-name
    Jaro-Winkler similarities. Output is sorted by canonical id order and is
    identical with and without blocking.
    """
    if not 0.0 < threshold <= 1.0:
        raise ValueError(f"threshold must be in (0, 1], got {threshold}")
    records = list(accounts)
    if exhaustive:
        index_pairs: Iterable[tuple[int, int]] = itertools.combinations(range(len(records)), 2)
    else:
        index_pairs = _candidate_index_pairs(records)

    out = []
    for i, j in index_pairs:
        a, b = records[i], records[j]
        score = _pair_score(a, b, threshold)
        if score >= threshold:
            out.append(CandidatePair(a.account_id, b.account_id, score))
    out.sort(key=lambda p: (p.id_a, p.id_b))
    return out
