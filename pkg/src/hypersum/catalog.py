"""The golden catalog: every worked example of the five identity families.

Each entry pairs the generated :class:`~hypersum.families.Identity` with a
hand-transcribed expected value and the left-hand series exactly as it is
typeset (after the cancellation of equal parameter pairs).  The two are
kept apart on purpose: tests check that the generator reproduces the
transcription bit for bit.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from functools import lru_cache

from .exact import PI, SQRT2, ExactValue
from .families import Identity, generate
from .numeric.series import SeriesSpec

__all__ = ["CatalogEntry", "catalog", "catalog_ids", "get_entry", "SUSPECTED_TYPO", "REDUCES_TO_2F1"]

SUSPECTED_TYPO = "suspected_typo"
REDUCES_TO_2F1 = "reduces_to_2f1"

h = F(1, 2)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    identity: Identity
    expected: ExactValue
    flags: frozenset
    typeset_lhs: SeriesSpec

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "family": self.identity.family,
            "params": {k: str(v) for k, v in self.identity.params},
            "lhs": self.identity.lhs.normalized().to_json(),
            "typeset_lhs": self.typeset_lhs.to_json(),
            "expected": str(self.expected),
            "expected_terms": self.expected.to_json(),
            "flags": sorted(self.flags),
        }


def _pi(c):
    return PI * F(c)


def _pi2(c, r):
    return PI * PI * F(c) + F(r)


def _sqrt2pi(c):
    return SQRT2 * PI * F(c)


# (family, params, expected, typeset numerator, typeset denominator, z, flags)
_RAW = [
    ("T2.1", {"m": 0}, _pi(h), [h, h], [3 * h], 1),
    ("T2.1", {"m": 1}, _pi(F(3, 16)), [3 * h, -h], [5 * h], 1),
    ("T2.1", {"m": 2}, _pi(F(15, 256)), [5 * h, -3 * h], [7 * h], 1),
    ("T2.1", {"m": 3}, _pi(F(35, 2048)), [7 * h, -5 * h], [9 * h], 1),
    ("T2.1", {"m": 4}, _pi(F(315, 65536)), [9 * h, -7 * h], [11 * h], 1),
    ("T2.2", {"m": 0, "d": 1}, _pi(F(9, 16)), [h, h, 2], [5 * h, 1], 1),
    ("T2.2", {"m": 0, "d": 2}, _pi(F(15, 32)), [h, h, 3], [5 * h, 2], 1),
    ("T2.2", {"m": 0, "d": 3}, _pi(F(7, 16)), [h, h, 4], [5 * h, 3], 1),
    ("T2.2", {"m": 1, "d": 1}, _pi(F(15, 128)), [3 * h, -h, 2], [7 * h, 1], 1),
    ("T2.2", {"m": 1, "d": 2}, _pi(F(45, 256)), [3 * h, -h, 3], [7 * h, 2], 1),
    # typeset with lower parameter 9/2; the corollary it instantiates has 7/2
    ("T2.2", {"m": 1, "d": 3}, _pi(F(75, 384)), [3 * h, -h, 4], [9 * h, 3], 1, {SUSPECTED_TYPO}),
    ("T2.2", {"m": 2, "d": 2}, _pi(F(105, 4096)), [5 * h, -3 * h, 3], [9 * h, 2], 1),
    ("T2.2", {"m": 2, "d": 3}, _pi(F(105, 2048)), [5 * h, -3 * h, 4], [9 * h, 3], 1),
    ("T2.2", {"m": 2, "d": 4}, _pi(F(525, 8192)), [5 * h, -3 * h, 5], [9 * h, 4], 1),
    ("T2.3", {"m": 0, "n": 0, "d": 2}, ExactValue.rational(F(3, 2)), [1, 1, 3], [5 * h, 2], h),
    ("T2.3", {"m": 0, "n": 0, "d": 3 * h}, _pi(h), [1, 1], [3 * h], h),
    ("T2.3", {"m": 1, "n": 0, "d": 2}, ExactValue.rational(F(5, 2)), [3, 1, 3], [7 * h, 2], h),
    ("T2.3", {"m": 1, "n": 0, "d": 5 * h}, _pi(F(3, 4)), [3, 1], [5 * h], h),
    ("T2.3", {"m": 1, "n": 1, "d": 7 * h}, _pi(F(15, 8)), [3, 3], [7 * h], h),
    ("T2.3", {"m": 2, "n": 0, "d": 2}, ExactValue.rational(F(7, 2)), [5, 1, 3], [9 * h, 2], h),
    ("T2.3", {"m": 2, "n": 0, "d": 7 * h}, _pi(F(15, 16)), [5, 1], [7 * h], h),
    ("T2.4", {"m": 0, "n": 0, "d": 3 * h}, _sqrt2pi(F(1, 4)), [h, h], [3 * h], h),
    ("T2.4", {"m": 1, "n": 0, "d": 5 * h}, _sqrt2pi(F(3, 16)), [3 * h, -h], [5 * h], h),
    ("T2.4", {"m": 2, "n": 0, "d": 7 * h}, _sqrt2pi(F(15, 128)), [5 * h, -3 * h], [7 * h], h),
    ("T2.4", {"m": 3, "n": 0, "d": 9 * h}, _sqrt2pi(F(35, 512)), [7 * h, -5 * h], [9 * h], h),
    ("T2.5", {"m": 0, "d": 1}, _pi2(F(1, 4), 1), [1, 1, 2], [3 * h, 3], 1),
    ("T2.5", {"m": 0, "d": 2}, _pi2(F(1, 4), 0), [1, 1, 1], [3 * h, 2], 1),
    ("T2.5", {"m": 0, "d": 3}, _pi2(F(1, 4), F(-1, 3)), [1, 1, 1, 4], [3 * h, 3, 3], 1),
    ("T2.5", {"m": 1, "d": 1}, _pi2(F(9, 16), 9), [3, 2, 2], [5 * h, 5], 1),
    ("T2.5", {"m": 1, "d": 2}, _pi2(F(9, 16), 3), [3, 1, 3], [5 * h, 5], 1),
    ("T2.5", {"m": 1, "d": 3}, _pi2(F(9, 16), 1), [1, 2, 4], [5 * h, 5], 1),
    ("T2.5", {"m": 1, "d": 4}, _pi2(F(9, 16), 0), [3, 1, 2], [5 * h, 4], 1),
    ("T2.5", {"m": 1, "d": 5}, _pi2(F(9, 16), F(-3, 5)), [3, 1, 2, 6], [5 * h, 5, 5], 1),
    ("T2.5", {"m": 2, "d": 1}, _pi2(F(225, 256), 25), [5, 3, 2], [7 * h, 7], 1),
    ("T2.5", {"m": 2, "d": 2}, _pi2(F(225, 256), 10), [5, 1, 3, 3], [7 * h, 7, 2], 1),
    ("T2.5", {"m": 2, "d": 3}, _pi2(F(225, 256), 5), [5, 1, 4], [7 * h, 7], 1),
    ("T2.5", {"m": 2, "d": 4}, _pi2(F(225, 256), F(5, 2)), [5, 1, 3, 5], [7 * h, 7, 4], 1),
    ("T2.5", {"m": 2, "d": 5}, _pi2(F(225, 256), 1), [1, 3, 6], [7 * h, 7], 1),
    ("T2.5", {"m": 2, "d": 6}, _pi2(F(225, 256), 0), [5, 1, 3], [7 * h, 6], 1),
    ("T2.5", {"m": 2, "d": 7}, _pi2(F(225, 256), F(-5, 7)), [5, 1, 3, 8], [7 * h, 7, 7], 1),
]


def _entry_id(family: str, params: dict) -> str:
    parts = [family[1:]]
    parts.append(f"m={params['m']}")
    for k in ("n", "s"):
        if params.get(k):
            parts.append(f"{k}={params[k]}")
    if "d" in params:
        parts.append(f"d={params['d']}")
    return "/".join(parts)


@lru_cache(maxsize=1)
def _build() -> tuple:
    out = []
    for row in _RAW:
        family, params, expected, num, den, z = row[:6]
        flags = set(row[6]) if len(row) > 6 else set()
        ident = generate(family, **params)
        lhs = ident.lhs.normalized()
        if lhs.p == 2 and lhs.q == 1 and ident.lhs.p > 2:
            flags.add(REDUCES_TO_2F1)
        out.append(
            CatalogEntry(
                id=_entry_id(family, params),
                identity=ident,
                expected=expected,
                flags=frozenset(flags),
                typeset_lhs=SeriesSpec(num, den, z),
            )
        )
    return tuple(out)


def catalog() -> list[CatalogEntry]:
    """All catalog entries, in the order the examples appear."""
    return list(_build())


def catalog_ids() -> list[str]:
    return [e.id for e in _build()]


def get_entry(entry_id: str) -> CatalogEntry:
    for e in _build():
        if e.id == entry_id:
            return e
    raise KeyError(f"no catalog entry {entry_id!r}")
