from fractions import Fraction as F
import json

import pytest

from floorsq import golden


def test_table1_shape():
    t = golden.table1()
    order = [F(1, 2), F(11, 20), F(3, 5), F(13, 20), F(7, 10), F(3, 4), F(4, 5), F(17, 20),
             F(9, 10), F(19, 20), F(1)]
    assert sorted(t) == sorted(order)
    assert [len(t[a]) for a in order] == [15, 12, 9, 9, 9, 15, 9, 9, 9, 9, 0]
    assert golden.table1_labels()[F(11, 20)] == "0.55"


def test_table1_rows_sorted_and_canonical():
    for rows in golden.table1().values():
        assert rows == sorted(rows)
        assert all(a <= b <= c for a, b, c in rows)


def test_table1_known_entries():
    half = golden.table1()[F(1, 2)]
    assert half[:3] == [(3, 3, 3), (5, 5, 11), (12, 12, 71)] and half[-1] == (2449, 3433, 6439)


def test_v46300():
    v = golden.v46300()
    assert len(v) == 7 and v[0] == (23, 29, 29) and v[-1] == (3095, 18880, 20351)


def test_golden_files_carry_schema_and_checksum():
    for ident in ("table1", "v46300"):
        g = golden.load(ident)
        assert g.identifier == ident and g.source
        assert g.checksum == golden.payload_checksum(g.payload)


def test_corruption_detected(monkeypatch):
    real = golden.load("v46300")
    doc = {"identifier": "v46300", "source": real.source, "checksum": real.checksum,
           "payload": {**real.payload, "index_triples": real.payload["index_triples"][:-1]}}

    class FakeFile:
        def joinpath(self, *parts):
            return self

        def read_text(self):
            return json.dumps(doc)

    monkeypatch.setattr(golden.resources, "files", lambda pkg: FakeFile())
    with pytest.raises(golden.GoldenCorrupted):
        golden.load("v46300")
