import json

import pytest

from fuzzyedm.published import TABLES
from fuzzyedm.reproduce import (
    TABLE_IDS,
    IoError,
    _Suites,
    compare_table,
    format_diff,
    reproduce_paper_tables,
)


def test_empty_selection():
    s = reproduce_paper_tables([])
    assert s.cells == () and s.ok


@pytest.mark.parametrize("tid", [2, 3, 4, 7, 8, 9, 11, 12])
def test_fully_reproduced_tables(tid):
    s = reproduce_paper_tables([tid])
    assert s.ok, format_diff(s.failures)
    assert len(s.cells) == len(TABLES[tid].cells)


def test_table2_writes_file(tmp_path):
    s = reproduce_paper_tables([2], tmp_path, "csv")
    # 8 rows (vector + rpcf cell each) and 2 averages
    assert s.counts() == {"pass": 18, "fail": 0, "disputed": 0}
    assert len({c.key[:4] for c in s.cells if c.key[0] in ("vector", "rpcf")}) == 16
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["diff_report.csv", "table_2.csv"]


def test_table13_edm_row():
    _, cells = compare_table(13, _Suites("incremental"))
    edm = [c for c in cells if c.key == ("family_total", "edm")]
    assert edm and edm[0].status == "pass"
    assert edm[0].computed == pytest.approx(87.865, abs=0.3)


def test_disputed_case9_matches_an_alternative():
    _, cells = compare_table(5, _Suites("incremental"))
    row = [c for c in cells if c.key[0] == "rpcf" and c.key[-1] == 9]
    assert row and all(c.status == "pass" for c in row)


def test_disputed_cells_never_count_as_failures():
    s = reproduce_paper_tables([9, 10])
    assert s.counts()["disputed"] >= 1
    failing_keys = {c.key for c in s.failures}
    disputed_keys = {cell.key for t in (9, 10) for cell in TABLES[t].cells if cell.disputed}
    assert not failing_keys & disputed_keys


def test_json_diff_report(tmp_path):
    reproduce_paper_tables([3], tmp_path, "json")
    rows = json.loads((tmp_path / "diff_report.json").read_text())
    assert rows and set(rows[0]) == {"table", "cell", "published", "computed", "status", "note"}


def test_bad_inputs(tmp_path):
    with pytest.raises(ValueError):
        reproduce_paper_tables([1])
    with pytest.raises(ValueError):
        reproduce_paper_tables([2], fmt="xml")
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(IoError):
        reproduce_paper_tables([2], blocker / "sub")


def test_every_table_has_cells():
    assert set(TABLES) == set(TABLE_IDS)
    assert all(TABLES[t].cells for t in TABLE_IDS)
