import csv
import json

import numpy as np
import pytest

from monochrome.tools.records import (
    FIELDS,
    RecordSink,
    RunRecord,
    read_records,
    write_table,
)
from monochrome.tools.summary import fit_exponent, summarize


def record(n, trial, max_component, **fields):
    return RunRecord(
        kind="coloring",
        model="kout",
        r=2,
        n=n,
        trial=trial,
        seed=trial,
        max_component=max_component,
        **fields,
    )


class TestRunRecord:
    def test_every_field_is_serialized(self):
        line = json.loads(record(100, 0, 7).to_json())
        assert set(line) == set(FIELDS)
        assert line["estar_size"] is None

    def test_numpy_values_become_plain(self):
        rec = record(100, 0, np.int64(7), max_components=np.array([7, 3]))
        assert rec.max_components == [7, 3]
        assert type(rec.max_component) is int
        assert RunRecord.from_json(rec.to_json()) == rec

    def test_unknown_fields(self):
        with pytest.raises(ValueError):
            record(100, 0, 7, colour=1)
        with pytest.raises(ValueError):
            record(100, 0, 7).update(colour=1)
        with pytest.raises(AttributeError):
            record(100, 0, 7).colour


class TestSink:
    def test_streams_and_reads_back(self, tmp_path):
        path = tmp_path / "out" / "records.jsonl"
        records = [record(100, t, 5 + t) for t in range(3)]
        with RecordSink(path) as sink:
            for rec in records:
                sink.write(rec)
            assert len(path.read_text().splitlines()) == 3
        assert sink.count == 3
        assert read_records(path) == records

    def test_truncated_last_line(self, tmp_path):
        path = tmp_path / "records.jsonl"
        path.write_text(record(100, 0, 5).to_json() + "\n" + '{"kind": "col')
        assert len(read_records(path)) == 1

    def test_tables(self, tmp_path):
        rows = [{"n": 100, "median": 4.0}, {"n": 200, "median": None}]
        write_table(rows, tmp_path / "t.csv")
        with open(tmp_path / "t.csv") as file:
            assert list(csv.DictReader(file))[0] == {"n": "100", "median": "4.0"}
        write_table(rows, tmp_path / "t.json", "json")
        assert json.loads((tmp_path / "t.json").read_text()) == rows
        with pytest.raises(ValueError):
            write_table(rows, tmp_path / "t.xml", "xml")


class TestSummary:
    def test_fit_recovers_power_law(self):
        ns = [1000, 10000, 100000]
        slope, intercept, r2 = fit_exponent(ns, [3 * n ** 0.5 for n in ns])
        assert slope == pytest.approx(0.5)
        assert intercept == pytest.approx(np.log(3))
        assert r2 == pytest.approx(1.0)

    def test_medians_and_rates(self):
        records = [
            record(100, 0, 10, estar_ok=True),
            record(100, 1, 20, estar_ok=False),
            record(100, 2, 40, estar_ok=None),
            record(400, 0, 40, estar_ok=True),
        ]
        summary = summarize(records)
        first, second = summary.rows
        assert (first["n"], first["trials"]) == (100, 3)
        assert first["median_max_component"] == 20.0
        assert first["estar_ok_rate"] == 0.5
        assert first["path_ok_rate"] is None
        assert second["median_max_component"] == 40.0
        assert summary.exponent("kout", 2) == pytest.approx(0.5)

    def test_single_size_has_no_fit(self):
        summary = summarize([record(100, 0, 10), record(100, 1, 12)])
        assert summary.fits == {}
        assert summary.table()[0]["exponent"] is None
        assert summary.as_dict()["fits"] == []
