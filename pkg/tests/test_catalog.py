from __future__ import annotations

import json

import pytest
from reference_values import REFERENCE_ROWS

from embedcount import catalog
from embedcount.catalog import (
    ALIASES,
    OEIS_IDS,
    REGISTRY,
    canonical_tokens,
    evaluate,
    format_record,
    parse_family,
    table,
    verify,
)


def test_registry_has_58_sequences():
    assert len(canonical_tokens()) == 58
    assert set(canonical_tokens()) == set(REFERENCE_ROWS)


def test_aliases_resolve_to_equal_values():
    for alias, target in ALIASES.items():
        assert alias not in REGISTRY
        for n in range(30):
            assert evaluate(alias, n) == evaluate(target, n)
    # the alias pair formulas are also evaluated directly by the formula module
    from embedcount.dipole import dipole_split

    for n in range(30):
        assert dipole_split("D3/D4", n)[0] == evaluate("D1/D2:S", n)
        assert dipole_split("D1/D7", n)[0] == evaluate("D3/D5:S", n)
        assert dipole_split("D7/D5", n)[1] == evaluate("D2/D4:AP", n)


@pytest.mark.parametrize("token, n, k, expected", [("D2", 9, None, 2393), ("B2", 8, 1, 65346), ("A9", 3, 1, 11)])
def test_evaluate_examples(token, n, k, expected):
    assert evaluate(token, n, k) == expected


def test_table_examples():
    rec = table("D6", 12)
    assert len(rec.values) == 13 and rec.values[-1] == 420948
    assert rec.offset == 0 and rec.oeis == "A006841" and rec.k is None
    rec = table("A1/A2:S", 12)
    assert all(v == 0 for v in rec.values[2::2])
    assert table("B4", 0).values == [0]


def test_reference_rows():
    for token, row in REFERENCE_ROWS.items():
        assert table(token, 12).values == row, token


def test_first_value_convention():
    # S and base families start at 1 except those built as differences, which start at 0
    zero_start = {"B4", "A7", "A9", "A7/A9:S"}
    for token in canonical_tokens():
        first = evaluate(token, 0)
        if token.endswith(":AP") or token in zero_start:
            assert first == 0, token
        else:
            assert first == 1, token


def test_k_rules():
    with pytest.raises(ValueError):
        evaluate("D1", 3, 2)
    with pytest.raises(ValueError):
        evaluate("B1", 3, 0)
    assert evaluate("B1", 3) == evaluate("B1", 3, 1)
    with pytest.raises(KeyError):
        parse_family("D9")


def test_family_id_fields():
    fid = parse_family("A5/A4:S")
    assert (fid.family, fid.base, fid.part, fid.colored) == ("dirbouquet", "A5/A4", "S", True)
    assert str(parse_family("D3/D4:S")) == "D3/D4:S"


def test_formats():
    rec = table("D1", 6)
    assert format_record(rec, "plain") == "1\n1\n1\n2\n3\n8\n24\n"
    assert format_record(rec, "bfile", start=5) == "5 8\n6 24\n"
    assert format_record(rec, "csv").splitlines()[:2] == ["n,value", "0,1"]
    obj = json.loads(format_record(rec, "json"))
    assert obj == {"family": "D1", "offset": 0, "values": [1, 1, 1, 2, 3, 8, 24], "k": None, "oeis": "A002619"}
    obj = json.loads(format_record(rec, "json", start=2))
    assert obj["offset"] == 2 and obj["values"][0] == 1
    with pytest.raises(ValueError):
        format_record(rec, "xml")


def test_big_values_are_full_decimal():
    rec = table("B3", 40)
    text = format_record(rec, "bfile")
    assert "e" not in text.lower()
    assert text.splitlines()[-1] == f"40 {rec.values[-1]}"
    assert json.loads(format_record(rec, "json"))["values"][-1] == rec.values[-1]


def test_table_output_is_deterministic():
    for fmt in catalog.FORMATS:
        assert format_record(table("A8", 20, 2), fmt) == format_record(table("A8", 20, 2), fmt)


def test_oeis_metadata():
    for token, oeis in OEIS_IDS.items():
        rec = table(token, 12)
        assert rec.oeis == oeis
        assert rec.values == REFERENCE_ROWS[token]


def test_verify_small_scope():
    report = verify(["D1"], max_n=5)
    assert report.passed
    burnside = [c.got for c in report.cells if c.check.startswith("burnside")]
    assert burnside == [1, 1, 1, 2, 3, 8]


def test_verify_splits_and_doubled_families():
    report = verify(["D1/D3:S", "D7/D5:AP", "B1/B2:AP", "B4", "A9", "A7/A9:S"], max_n=4, max_k=1)
    assert report.passed
    assert len(report.cells) > 0


def test_verify_injected_fault():
    report = verify(["D1"], max_n=3, inject_fault=True)
    assert not report.passed
    bad = report.mismatches[0]
    assert (bad.family, bad.n) == ("D1", 0)
    assert "MISMATCH" in bad.describe()
