"""Domain records, file ingestion and profile feature extraction.

File formats
------------
accounts
    JSON Lines, one account object per line. Required keys: ``account_id``,
    ``username``, ``screen_name`` and either ``created_at_months`` (integer)
    or ``created_at`` (``YYYY-MM-DD``, converted against a fixed reference
    date). Optional keys (omitted when absent): ``description``,
    ``location``, ``friend_count``, ``follower_count``, ``tweet_count``,
    ``list_count``, ``favorite_count``. Boolean keys ``has_url``,
    ``has_profile_image``, ``has_profile_background`` default to false.
views
    UTF-8 text, one row per line: an account id followed by ``dim``
    decimal floats, whitespace separated.
labels
    CSV triples ``id_a,id_b,label`` with label in {cloned, genuine}.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from datetime import date
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "DataError",
    "AccountRecord",
    "AccountTable",
    "ViewMatrix",
    "ViewLoadReport",
    "SingleAccountFeatures",
    "LabeledPair",
    "VIEW_IDS",
    "VIEW_DIMS",
    "FEATURE_NAMES",
    "N_FEATURES",
    "MASKABLE_FEATURES",
    "ALWAYS_OBSERVED_FEATURES",
    "LABEL_CLONED",
    "LABEL_GENUINE",
    "REFERENCE_DATE",
    "load_accounts",
    "write_accounts",
    "load_view_matrix",
    "write_view_matrix",
    "load_pair_labels",
    "write_pair_labels",
    "extract_profile_features",
]


class DataError(ValueError):
    """Raised for malformed or inconsistent input data."""


# Fixed anchor for converting registration dates to an age in months, so
# ingestion does not depend on the wall clock.
REFERENCE_DATE = date(2024, 1, 1)

LABEL_CLONED = "cloned"
LABEL_GENUINE = "genuine"

VIEW_IDS = ("post", "friend_net", "follower_net", "profile")
VIEW_DIMS = {"post": 385, "friend_net": 128, "follower_net": 128, "profile": 12}

FEATURE_NAMES = (
    "friend_count",
    "follower_count",
    "account_age_months",
    "tweet_count",
    "list_count",
    "favorite_count",
    "has_url",
    "has_profile_image",
    "has_profile_background",
    "has_description",
    "description_length",
    "screen_name_length",
    "fused_view_a",
    "fused_view_b",
    "fused_view_c",
    "fused_view_d",
)
N_FEATURES = len(FEATURE_NAMES)

# Indices that may carry missing values (counters, description length and
# the four fused-view components); the remaining six are always observed.
MASKABLE_FEATURES = (0, 1, 3, 4, 5, 10, 12, 13, 14, 15)
ALWAYS_OBSERVED_FEATURES = (2, 6, 7, 8, 9, 11)

_COUNTER_FIELDS = (
    "friend_count",
    "follower_count",
    "tweet_count",
    "list_count",
    "favorite_count",
)


@dataclass(frozen=True)
class AccountRecord:
    """One social account as exposed by a public profile API."""

    account_id: str
    username: str
    screen_name: str
    created_at_months: int
    description: str | None = None
    location: str | None = None
    friend_count: int | None = None
    follower_count: int | None = None
    tweet_count: int | None = None
    list_count: int | None = None
    favorite_count: int | None = None
    has_url: bool = False
    has_profile_image: bool = False
    has_profile_background: bool = False
    has_description: bool = field(init=False)

    def __post_init__(self) -> None:
        if not self.account_id:
            raise DataError("account_id must be nonempty")
        if self.created_at_months < 0:
            raise DataError(f"negative account age for {self.account_id!r}")
        for name in _COUNTER_FIELDS:
            value = getattr(self, name)
            if value is not None and value < 0:
                raise DataError(f"negative {name} for {self.account_id!r}")
        object.__setattr__(self, "has_description", bool(self.description))


class AccountTable:
    """Immutable collection of accounts keyed by account_id."""

    def __init__(self, records: Iterable[AccountRecord]):
        self._by_id: dict[str, AccountRecord] = {}
        for rec in records:
            if rec.account_id in self._by_id:
                raise DataError(f"duplicate account_id {rec.account_id!r}")
            self._by_id[rec.account_id] = rec

    def __len__(self) -> int:
        return len(self._by_id)

    def __iter__(self):
        return iter(self._by_id.values())

    def __contains__(self, account_id: str) -> bool:
        return account_id in self._by_id

    def __getitem__(self, account_id: str) -> AccountRecord:
        return self._by_id[account_id]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AccountTable) and self._by_id == other._by_id

    def ids(self) -> list[str]:
        return list(self._by_id)


@dataclass
class ViewLoadReport:
    """Ingestion summary for one view file."""

    view_id: str
    n_rows: int
    unknown_ids: list[str]


class ViewMatrix:
    """Per-view embedding rows keyed by account_id.

    An account is available in the view exactly when a row is stored for it;
    every stored row has ``dim`` finite entries.
    """

    def __init__(self, view_id: str, dim: int, rows: Mapping[str, np.ndarray] | None = None):
        if dim <= 0:
            raise DataError("view dimension must be positive")
        self.view_id = view_id
        self.dim = dim
        self._rows: dict[str, np.ndarray] = {}
        for account_id, vec in (rows or {}).items():
            self.add_row(account_id, vec)

    def add_row(self, account_id: str, vec) -> None:
        arr = np.asarray(vec, dtype=np.float64)
        if arr.shape != (self.dim,):
            raise DataError(
                f"view {self.view_id!r} row for {account_id!r} has length "
                f"{arr.shape[0] if arr.ndim == 1 else arr.shape}, expected {self.dim}"
            )
        if not np.all(np.isfinite(arr)):
            raise DataError(f"non-finite entry in view {self.view_id!r} row {account_id!r}")
        self._rows[account_id] = arr

    def available(self, account_id: str) -> bool:
        return account_id in self._rows

    def row(self, account_id: str) -> np.ndarray:
        return self._rows[account_id]

    def ids(self) -> list[str]:
        return list(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def matrix(self, account_ids: Iterable[str]) -> np.ndarray:
        """Stack rows for the given ids (all must be available)."""
        return np.stack([self._rows[i] for i in account_ids])


@dataclass(frozen=True)
class SingleAccountFeatures:
    """The 16-entry single-account feature vector with its observation mask.

    Masked entries hold NaN and must only be consumed through the mask.
    """

    values: np.ndarray
    mask: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        mask = np.asarray(self.mask, dtype=bool)
        if values.shape != mask.shape:
            raise DataError("feature values and mask shapes differ")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "mask", mask)


@dataclass(frozen=True)
class LabeledPair:
    """An unordered account pair with its cloned/genuine label."""

    id_a: str
    id_b: str
    label: str

    def __post_init__(self) -> None:
        if self.id_a == self.id_b:
            raise DataError(f"self-pair {self.id_a!r}")
        if self.label not in (LABEL_CLONED, LABEL_GENUINE):
            raise DataError(f"unknown label {self.label!r}")
        if self.id_b < self.id_a:
            object.__setattr__(self, "id_a", self.id_b)
            object.__setattr__(self, "id_b", self.id_a)


def _months_between(created: date, reference: date) -> int:
    months = (reference.year - created.year) * 12 + (reference.month - created.month)
    return max(months, 0)


def _parse_account(obj: dict, line_no: int) -> AccountRecord:
    try:
        account_id = obj["account_id"]
        username = obj["username"]
        screen_name = obj["screen_name"]
    except KeyError as exc:
        raise DataError(f"line {line_no}: missing required field {exc.args[0]!r}") from None
    if "created_at_months" in obj:
        months = int(obj["created_at_months"])
    elif "created_at" in obj:
        try:
            created = date.fromisoformat(obj["created_at"])
        except ValueError as exc:
            raise DataError(f"line {line_no}: bad created_at: {exc}") from None
        months = _months_between(created, REFERENCE_DATE)
    else:
        raise DataError(f"line {line_no}: missing created_at_months/created_at")
    kwargs = {}
    for name in ("description", "location"):
        if obj.get(name):
            kwargs[name] = str(obj[name])
    for name in _COUNTER_FIELDS:
        if name in obj and obj[name] is not None:
            kwargs[name] = int(obj[name])
    for name in ("has_url", "has_profile_image", "has_profile_background"):
        kwargs[name] = bool(obj.get(name, False))
    try:
        return AccountRecord(
            account_id=str(account_id),
            username=str(username),
            screen_name=str(screen_name),
            created_at_months=months,
            **kwargs,
        )
    except DataError as exc:
        raise DataError(f"line {line_no}: {exc}") from None


def load_accounts(path: str | Path) -> AccountTable:
    """Load an account table from a JSON Lines file."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"line {line_no}: malformed record: {exc}") from None
            if not isinstance(obj, dict):
                raise DataError(f"line {line_no}: record is not an object")
            records.append(_parse_account(obj, line_no))
    return AccountTable(records)


def write_accounts(table: AccountTable, path: str | Path) -> None:
    """Write an account table in the format read by :func:`load_accounts`."""
    with open(path, "w", encoding="utf-8") as fh:
        for rec in table:
            obj: dict = {
                "account_id": rec.account_id,
                "username": rec.username,
                "screen_name": rec.screen_name,
                "created_at_months": rec.created_at_months,
            }
            if rec.description:
                obj["description"] = rec.description
            if rec.location:
                obj["location"] = rec.location
            for name in _COUNTER_FIELDS:
                value = getattr(rec, name)
                if value is not None:
                    obj[name] = value
            for name in ("has_url", "has_profile_image", "has_profile_background"):
                obj[name] = getattr(rec, name)
            fh.write(json.dumps(obj, sort_keys=True) + "\n")


def load_view_matrix(
    path: str | Path,
    view_id: str,
    expected_dim: int,
    known_ids: Iterable[str] | None = None,
) -> tuple[ViewMatrix, ViewLoadReport]:
    """Load one view file.

    Ids absent from ``known_ids`` (when given) are kept in the matrix but
    listed in the load report; views may be built from a superset crawl.
    """
    if expected_dim <= 0:
        raise DataError("expected_dim must be positive")
    known = set(known_ids) if known_ids is not None else None
    view = ViewMatrix(view_id, expected_dim)
    unknown: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            parts = line.split()
            if not parts:
                continue
            account_id = parts[0]
            if len(parts) - 1 != expected_dim:
                raise DataError(
                    f"{view_id} line {line_no}: row has {len(parts) - 1} values, "
                    f"expected {expected_dim}"
                )
            try:
                vec = np.array([float(v) for v in parts[1:]], dtype=np.float64)
            except ValueError as exc:
                raise DataError(f"{view_id} line {line_no}: {exc}") from None
            if not np.all(np.isfinite(vec)):
                raise DataError(f"{view_id} line {line_no}: non-finite entry")
            if account_id in view._rows:
                raise DataError(f"{view_id} line {line_no}: duplicate id {account_id!r}")
            view.add_row(account_id, vec)
            if known is not None and account_id not in known:
                unknown.append(account_id)
    return view, ViewLoadReport(view_id=view_id, n_rows=len(view), unknown_ids=unknown)


def write_view_matrix(view: ViewMatrix, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for account_id in view.ids():
            values = " ".join(repr(float(v)) for v in view.row(account_id))
            fh.write(f"{account_id} {values}\n")


def load_pair_labels(path: str | Path) -> list[LabeledPair]:
    """Load labeled pairs from a CSV of ``id_a,id_b,label`` triples."""
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 3:
                raise DataError(f"labels line {line_no}: expected 3 fields, got {len(parts)}")
            try:
                pairs.append(LabeledPair(parts[0].strip(), parts[1].strip(), parts[2].strip()))
            except DataError as exc:
                raise DataError(f"labels line {line_no}: {exc}") from None
    return pairs


def write_pair_labels(pairs: Iterable[LabeledPair], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for pair in pairs:
            fh.write(f"{pair.id_a},{pair.id_b},{pair.label}\n")


def extract_profile_features(account: AccountRecord) -> SingleAccountFeatures:
    """Extract the 12 profile-based entries of the single-account vector.

    Entries 13-16 (the fused-view components) are left masked; booleans are
    encoded as 0.0/1.0 and absent counters (or an absent description length)
    are masked. The always-observed entries are never masked.
    """
    values = np.full(N_FEATURES, np.nan, dtype=np.float64)
    mask = np.zeros(N_FEATURES, dtype=bool)

    def put(idx: int, value: float | None) -> None:
        if value is not None:
            values[idx] = float(value)
            mask[idx] = True

    put(0, account.friend_count)
    put(1, account.follower_count)
    put(2, account.created_at_months)
    put(3, account.tweet_count)
    put(4, account.list_count)
    put(5, account.favorite_count)
    put(6, 1.0 if account.has_url else 0.0)
    put(7, 1.0 if account.has_profile_image else 0.0)
    put(8, 1.0 if account.has_profile_background else 0.0)
    put(9, 1.0 if account.has_description else 0.0)
    if account.has_description:
        put(10, len(account.description))
    put(11, len(account.screen_name))
    return SingleAccountFeatures(values=values, mask=mask)
