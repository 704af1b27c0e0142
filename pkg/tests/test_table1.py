"""The catalog of optimal pure MDS subsystem codes must reproduce exactly."""

import csv
import io
import json

import pytest

from subsystem_codes.table1 import (Table1Row, _ROWS, generate_table,
                                    rows_to_csv, rows_to_json)


@pytest.fixture(scope="module")
def rows_q3():
    return generate_table(3)


def test_q3_block_fully_verified(rows_q3):
    assert [r.subsystem for r in rows_q3] == [
        (8, 1, 5, 2), (8, 4, 2, 2), (8, 5, 1, 2),
        (9, 1, 4, 3), (9, 4, 1, 3)]
    for row in rows_q3:
        assert set(row.verification.values()) == {"verified_exhaustive"}
        assert row.code is not None
        n, k, r, d = row.subsystem
        m = row.code.field.m
        assert (row.code.n, row.code.k_exp, row.code.r_exp) == (n, k * m, r * m)
        assert row.code.d == d


def test_q3_marks_and_parents(rows_q3):
    marks = [r.mark for r in rows_q3]
    assert marks == ["", "", "", "extended", "extended"]
    for row in rows_q3:
        n, kappa, dist = row.parent
        assert dist == n - kappa + 1                # parent is MDS
        iota = kappa - row.subsystem[2]
        assert row.subsystem[3] == iota + 1


@pytest.mark.parametrize("q,count", [(4, 4), (5, 7), (7, 1)])
def test_large_q_blocks(q, count):
    rows = generate_table(q)
    assert len(rows) == count
    for row in rows:
        v = row.verification
        assert v["parent_distance"] in ("verified_exhaustive",
                                        "witness_consistent")
        assert v["radical_self_orthogonal"] == "verified_exhaustive"
        assert v["dimensions"] == "verified_exhaustive"
        assert v["distance"] in ("verified_exhaustive", "witness_consistent")
        assert v["mds_slack_zero"] == "verified_exhaustive"


def test_unknown_q_rejected():
    with pytest.raises(ValueError):
        generate_table(11)


def test_row_count_matches_catalog():
    assert sum(len(v) for v in _ROWS.values()) == 17


def test_csv_shape(rows_q3):
    text = rows_to_csv(rows_q3)
    parsed = list(csv.reader(io.StringIO(text)))
    assert parsed[0] == ["subsystem", "parent", "mark", "offset",
                         "verification"]
    assert len(parsed) == 1 + len(rows_q3)
    assert parsed[1][0] == "[[8,1,5,2]]_3"
    assert parsed[1][1] == "[8,6,3]_3^2"


def test_json_shape(rows_q3):
    data = rows_to_json(rows_q3)
    json.dumps(data)                                 # serializable
    assert data[0]["subsystem"] == "[[8,1,5,2]]_3"
    assert set(data[0]) == {"q", "subsystem", "parent", "mark", "offset",
                            "verification"}


def test_rows_deterministic(rows_q3):
    again = generate_table(3)
    assert rows_to_json(again) == rows_to_json(rows_q3)
