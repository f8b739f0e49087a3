import csv

import pytest

from revq.report import CSV_COLUMNS, build_report, write_csv, write_figures


def _row(rows, structure, ladder, n):
    return next(r for r in rows if (r.structure, r.ladder, r.n) == (structure, ladder, n))


def test_width8_lookahead_row():
    rows = build_report(8, 8)
    assert len(rows) == 6
    row = _row(rows, "optimized", "carrylog", 8)
    assert row.metrics.counts["ccx"] == 39
    assert row.metrics.ancilla_count == 4
    assert row.metrics.depth["ccx"] <= 14
    assert row.provenance == "new"
    assert row.passed


def test_width8_ripple_row():
    row = _row(build_report(8, 8), "optimized", "linear", 8)
    assert row.metrics.counts["ccx"] == 15
    assert row.metrics.depth["ccx"] == 15
    assert row.metrics.ancilla_count == 0
    assert row.passed


def test_vbe_vicinity_is_recorded_not_failed():
    row = _row(build_report(8, 8), "original", "linear", 8)
    assert row.metrics.counts["ccx"] == 28  # 4n-4
    assert row.passed
    assert "4n-2" in row.notes


def test_row_cardinality():
    assert len(build_report(2, 4)) == 18


def test_all_checks_pass_small_range():
    for row in build_report(2, 24):
        assert row.passed, (row.structure, row.ladder, row.n)


def test_bad_range_rejected():
    with pytest.raises(ValueError):
        build_report(1, 4)
    with pytest.raises(ValueError):
        build_report(6, 2)


def test_csv_shape_and_determinism(tmp_path):
    rows = build_report(2, 3)
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    write_csv(rows, p1)
    write_csv(rows, p2)
    assert p1.read_bytes() == p2.read_bytes()
    with p1.open() as fh:
        reader = csv.reader(fh)
        header = next(reader)
        body = list(reader)
    assert header == CSV_COLUMNS
    assert len(body) == 12 + 2
    lit = [r for r in body if r[0] == "literature"]
    assert len(lit) == 2
    # measured cells are integers or flags, never floats
    for r in body:
        for cell in r:
            assert "." not in cell or not cell.replace(".", "").isdigit()


def test_figures_written(tmp_path):
    rows = build_report(2, 5)
    csv_path = tmp_path / "adders.csv"
    write_csv(rows, csv_path)
    paths = write_figures(rows, csv_path)
    assert [p.name for p in paths] == [
        "adders_toffoli_count.png",
        "adders_toffoli_depth.png",
        "adders_ancillas.png",
    ]
    assert all(p.stat().st_size > 0 for p in paths)
