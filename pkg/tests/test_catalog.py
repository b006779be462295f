from collections import Counter
from fractions import Fraction as F
import json
from pathlib import Path

import pytest

from hypersum.catalog import REDUCES_TO_2F1, SUSPECTED_TYPO, catalog, catalog_ids, get_entry
from hypersum.exact import PI

MANIFEST = json.loads((Path(__file__).parent / "data" / "catalog_manifest.json").read_text())


def test_matches_manifest():
    entries = catalog()
    assert [e.id for e in entries] == [m["id"] for m in MANIFEST["entries"]]
    for e, m in zip(entries, MANIFEST["entries"]):
        assert str(e.expected) == m["expected"]
        assert sorted(e.flags) == m["flags"]
        assert str(e.typeset_lhs) == m["typeset_lhs"]


def test_every_example_display_has_an_entry():
    per_section = Counter(e.id.split("/")[0] for e in catalog())
    for sec, counts in MANIFEST["displays"].items():
        assert per_section[sec] == counts["examples"], sec
    assert len(catalog()) == 40


def test_ids_unique_and_deterministic():
    ids = catalog_ids()
    assert len(set(ids)) == len(ids)
    assert ids == catalog_ids()


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.id)
def test_generator_reproduces_expected(entry):
    assert entry.identity.rhs == entry.expected


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.id)
def test_typeset_lhs_matches_generated(entry):
    gen = entry.identity.lhs.normalized()
    typ = entry.typeset_lhs.normalized()
    same = Counter(gen.numerator) == Counter(typ.numerator) and Counter(gen.denominator) == Counter(typ.denominator)
    assert same == (SUSPECTED_TYPO not in entry.flags)
    assert gen.argument == typ.argument


def test_examples():
    assert get_entry("2.1/m=1").expected == PI * F(3, 16)
    assert get_entry("2.5/m=2/d=6").expected == PI * PI * F(225, 256)
    typo = get_entry("2.2/m=1/d=3")
    assert typo.expected == PI * F(75, 384)
    assert typo.flags == {SUSPECTED_TYPO}
    assert typo.typeset_lhs.denominator[0] == F(9, 2)
    assert typo.identity.lhs.denominator[0] == F(7, 2)


def test_reduction_flags():
    flagged = [e.id for e in catalog() if REDUCES_TO_2F1 in e.flags]
    assert flagged == [
        "2.3/m=0/d=3/2", "2.3/m=1/d=5/2", "2.3/m=1/n=1/d=7/2", "2.3/m=2/d=7/2",
        "2.4/m=0/d=3/2", "2.4/m=1/d=5/2", "2.4/m=2/d=7/2", "2.4/m=3/d=9/2",
    ]
    for e in catalog():
        if REDUCES_TO_2F1 in e.flags:
            assert e.identity.lhs.p == 3 and e.identity.lhs.normalized().p == 2


def test_get_entry_unknown():
    with pytest.raises(KeyError):
        get_entry("2.9/m=0")


def test_to_json_roundtrips_through_json():
    d = get_entry("2.3/m=1/n=1/d=7/2").to_json()
    assert json.loads(json.dumps(d)) == d
    assert d["params"] == {"m": "1", "n": "1", "d": "7/2"}
    assert d["lhs"]["numerator"] == ["3", "3"]
    assert d["expected"] == "15*pi/8"
