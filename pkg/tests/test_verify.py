import csv
import io

import pytest

from zdmd.verify import CSV_FIELDS, verify_theorem


def rows(rep, prefix):
    return [r for r in rep.rows if r.check.startswith(prefix)]


def test_fast_z77():
    rep = verify_theorem(7, 11, "fast")
    assert rep.ok
    assert len(rows(rep, "example[")) == 76
    assert len(rows(rep, "code[")) == 66
    assert all(r.status == "pass" for r in rows(rep, "code["))


def test_full_3_7():
    rep = verify_theorem(3, 7, "full")
    assert rep.ok
    (search,) = rows(rep, "search_dimension")
    assert search.status == "pass" and "dim = 5" in search.detail


def test_full_5_7_scan():
    rep = verify_theorem(5, 7, "full")
    assert rep.ok
    (scan,) = rows(rep, "scan_size_5")
    assert scan.status == "pass"
    assert scan.detail.startswith("278256 subsets")


def test_tree_regime():
    rep = verify_theorem(2, 13, "full")
    assert rep.ok
    assert rows(rep, "tree_formula")[0].status == "pass"


def test_strict_regime_fast_is_certificate_only():
    rep = verify_theorem(11, 13, "fast")
    assert rep.ok
    assert rows(rep, "family_bound_A")[0].detail.endswith("(expect 11)")
    assert rows(rep, "strict_inequality")[0].status == "skip"


def test_q_split_rows():
    for p, q in [(3, 5), (5, 11), (7, 13)]:
        (r,) = rows(verify_theorem(p, q), "q_split")
        assert r.status == "pass"


def test_csv_schema():
    text = verify_theorem(3, 5).to_csv()
    reader = csv.reader(io.StringIO(text))
    assert tuple(next(reader)) == CSV_FIELDS
    assert all(len(r) == 5 for r in reader)


def test_bad_inputs():
    with pytest.raises(ValueError):
        verify_theorem(4, 7)
    with pytest.raises(ValueError):
        verify_theorem(3, 5, mode="slow")


def test_budget_rows_fail_the_report():
    rep = verify_theorem(3, 7, "full", budget=3)
    assert not rep.ok
    assert any(r.status == "budget" for r in rep.rows)
