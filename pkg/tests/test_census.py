import csv

import pytest

from fspace.census import CSV_COLUMNS, CensusReport, census_for_size, census_row, run_census
from fspace.census.runner import class_file_name, write_census
from fspace.enumeration import enumerate_posets
from fspace.errors import FspaceError
from fspace.families import chain
from fspace.loader import FspaceLoader


@pytest.fixture(scope="module")
def census3():
    return census_for_size(3)


class TestCensusRow:
    def test_s1(self, s1):
        row = census_row(s1, 7)
        assert row.index == 7
        assert (row.abs_det, row.det, row.rank_bar) == (1, 1, 0)
        assert (row.width, row.height, row.reduced_euler) == (2, 1, -1)
        assert (row.a2, row.a3, row.l32) == (2, 0, 0)
        assert row.det_plus_i == 0
        assert not row.contractible
        assert row.beat_points == 0
        assert row.euler_consistent

    def test_to_dict_uses_csv_columns(self):
        data = census_row(chain(2), 1).to_dict()
        assert tuple(data) == CSV_COLUMNS
        assert data["contractible"] is True
        assert data["beatPoints"] == 2


class TestCensusReport:
    def test_three_points(self, census3):
        assert len(census3) == 5
        assert census3.contractible_count == 3
        assert census3.euler_consistent
        assert [row.index for row in census3.rows] == [1, 2, 3, 4, 5]

    def test_to_dict(self, census3):
        data = census3.to_dict()
        assert (data["count"], data["contractible"], data["eulerConsistent"]) == (5, 3, True)
        assert len(data["rows"]) == 5

    def test_csv_rows_use_integers(self, census3):
        rows = census3.to_csv_rows()
        assert all(len(row) == len(CSV_COLUMNS) for row in rows)
        contractible = CSV_COLUMNS.index("contractible")
        assert sorted(row[contractible] for row in rows) == [0, 0, 1, 1, 1]
        assert all(type(row[contractible]) is int for row in rows)

    def test_str(self, census3):
        text = str(census3)
        assert text.splitlines()[0] == "Census (5 posets, 3 contractible)"
        assert "throughout: yes" in text

    def test_empty(self):
        report = run_census([])
        assert len(report) == 0
        assert report.euler_consistent
        assert report.to_dict()["rows"] == []


class TestWriteCensus:
    def test_files(self, tmp_path):
        posets = enumerate_posets(3)
        report = run_census(posets)
        written = write_census(report, posets, tmp_path / "out")
        assert [path.name for path in written] == [
            "class_0001.poset",
            "class_0002.poset",
            "class_0003.poset",
            "class_0004.poset",
            "class_0005.poset",
            "invariants.csv",
        ]
        loader = FspaceLoader()
        assert [loader.load(path) for path in written[:-1]] == posets

        with open(written[-1], encoding="utf-8", newline="") as f:
            rows = list(csv.reader(f))
        assert tuple(rows[0]) == CSV_COLUMNS
        assert len(rows) == 6
        assert rows[1][0] == "1"

    def test_length_mismatch(self, tmp_path):
        posets = enumerate_posets(2)
        with pytest.raises(FspaceError):
            write_census(run_census(posets), posets[:1], tmp_path)

    def test_class_file_name(self):
        assert class_file_name(12) == "class_0012.poset"
